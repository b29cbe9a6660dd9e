#pragma once

/**
 * @file error.hpp
 * @brief Error kinds shared by every ecdga module.
 *
 * All failures are reported by throwing ecdga::Error. The kind tells the
 * CLI which exit code to use: domain errors exit with 2, resource caps
 * with 3.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecdga {

enum class ErrorKind {
    // arith
    Overflow,
    NotCoprime,
    FactorizationBudgetExceeded,
    TooManyDivisors,
    // abgroup
    ElementShapeMismatch,
    GroupTooLarge,
    InvalidGroup,
    // orbits
    NotSemisimple,
    PredicateMismatch,
    // ffield
    DivisionByZero,
    NoSuchRoot,
    InvalidField,
    // galgebra
    AlgebraMismatch,
    NotIdempotent,
    CoefficientNotRational,
    DimensionExceedsP,
    // classify
    NotASplittingDegree,
    InvalidRequest,
    // parsing
    ParseError,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::FactorizationBudgetExceeded: return "FactorizationBudgetExceeded";
        case ErrorKind::TooManyDivisors: return "TooManyDivisors";
        case ErrorKind::ElementShapeMismatch: return "ElementShapeMismatch";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::InvalidGroup: return "InvalidGroup";
        case ErrorKind::NotSemisimple: return "NotSemisimple";
        case ErrorKind::PredicateMismatch: return "PredicateMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NoSuchRoot: return "NoSuchRoot";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NotIdempotent: return "NotIdempotent";
        case ErrorKind::CoefficientNotRational: return "CoefficientNotRational";
        case ErrorKind::DimensionExceedsP: return "DimensionExceedsP";
        case ErrorKind::NotASplittingDegree: return "NotASplittingDegree";
        case ErrorKind::InvalidRequest: return "InvalidRequest";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// True for errors caused by a configured resource cap rather than bad input.
constexpr bool is_resource_cap(ErrorKind k) {
    return k == ErrorKind::FactorizationBudgetExceeded || k == ErrorKind::TooManyDivisors ||
           k == ErrorKind::GroupTooLarge || k == ErrorKind::Overflow;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ecdga
