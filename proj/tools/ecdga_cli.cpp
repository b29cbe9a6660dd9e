// ecdga: command-line front end for the group-algebra library.
//
//   ecdga orbits      --q 13 --group C2669
//   ecdga classify    --q 5^6 --group 2x16x9x3
//   ecdga idempotents --q 2 --group C3
//   ecdga construct   --p 5 --alpha 6 --t 4 --max-order 3000
//   ecdga paper-examples [--criterion N]
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 resource cap.
// Every error prints one line of JSON on stderr.

#include <algorithm>
#include <charconv>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecdga/acceptance.hpp"
#include "ecdga/classify.hpp"
#include "ecdga/galgebra.hpp"
#include "ecdga/orbits.hpp"

namespace {

using namespace ecdga;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kCap = 3 };

struct RunConfig {
    std::string q_spec;
    std::string group_spec;
    u64 t = 0;
    std::string format = "table";
    u64 seed = kDefaultSeed;
    u64 p = 0;
    unsigned alpha = 1;
    u64 max_order = 10000;
    u64 max_results = 10000;
    u64 enum_cap = kDefaultEnumerationCap;
    u64 rank_cap = kDefaultRankCap;
    u64 rho_cap = arith::kDefaultRhoIterations;
    int criterion = 0;
};

/// A command's result: JSON for machines, summary lines plus a table for people.
struct Output {
    json doc;
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

void print_error(const std::string& kind, const std::string& message, int code) {
    json e;
    e["error"] = kind;
    e["message"] = message;
    e["exit_code"] = code;
    std::cerr << e.dump() << "\n";
}

u64 parse_u64(std::string_view s, const std::string& what) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        fail(ErrorKind::ParseError, "bad " + what + " '" + std::string(s) + "'");
    return v;
}

/// "p^alpha" or a plain prime power.
PrimePowerQ parse_q(const std::string& spec) {
    if (spec.empty()) fail(ErrorKind::ParseError, "--q is required");
    if (auto caret = spec.find('^'); caret != std::string::npos) {
        const u64 p = parse_u64(std::string_view(spec).substr(0, caret), "prime");
        const u64 a = parse_u64(std::string_view(spec).substr(caret + 1), "exponent");
        if (a == 0 || a > 127) fail(ErrorKind::InvalidField, "alpha must lie in 1..127");
        return PrimePowerQ::from(p, static_cast<unsigned>(a));
    }
    return PrimePowerQ::from(parse_u64(spec, "q"));
}

AbelianGroup require_group(const RunConfig& cfg) {
    if (cfg.group_spec.empty()) fail(ErrorKind::ParseError, "--group is required");
    return parse_group(cfg.group_spec);
}

json element_json(const GroupElement& g) { return g.exponents; }

std::string element_string(const GroupElement& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(g.exponents[i]);
    return s + ")";
}

json field_json(const BaseField& F, u64 seed) {
    json f;
    f["p"] = F.characteristic();
    f["alpha"] = F.alpha();
    f["q"] = F.order();
    f["modulus"] = F.modulus();
    f["seed"] = seed;
    return f;
}

json tower_json(const FieldTower& T) {
    const auto d = T.desc();
    json f;
    f["p"] = d.p;
    f["alpha"] = d.alpha;
    f["t"] = d.t;
    f["base_modulus"] = d.base_modulus;
    f["ext_modulus"] = d.ext_modulus;
    f["seed"] = d.seed;
    return f;
}

/// {"group", "field", "coeffs"}, each coefficient as its F_p digit vector.
json algebra_element_json(const AlgebraElement& e, u64 seed) {
    json j;
    j["group"] = e.group().spec();
    j["field"] = field_json(e.field(), seed);
    json coeffs = json::array();
    for (u64 c : e.coeffs) coeffs.push_back(e.field().decode(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

std::string coeffs_string(const AlgebraElement& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        if (i) s += ",";
        const auto d = e.field().decode(e.coeffs[i]);
        s += d.size() == 1 ? std::to_string(d[0]) : format_poly(d);
    }
    return s + "]";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Output cmd_orbits(const RunConfig& cfg) {
    const auto qq = parse_q(cfg.q_spec);
    const auto G = require_group(cfg);
    require_semisimple(qq.q, G);
    const auto part = orbit_partition(qq.q, G, cfg.enum_cap);
    const u64 l = global_l(qq.q, G);

    // Orbits grouped by element order; every orbit of elements of order d has size ord_d(q).
    std::map<u64, std::pair<u64, u64>> by_order;  // order -> (elements, orbits)
    std::map<u64, GroupElement> example;
    for (const auto& o : part.orbits) {
        auto& e = by_order[o.element_order];
        e.first += o.size;
        e.second += 1;
        if (!example.count(o.element_order)) example.emplace(o.element_order, o.representative);
    }

    Output out;
    auto& j = out.doc;
    j["command"] = "orbits";
    j["q"] = qq.q;
    j["p"] = qq.p;
    j["alpha"] = qq.alpha;
    j["group"] = G.spec();
    j["canonical"] = G.canonical_spec();
    j["order"] = G.order();
    j["exponent"] = G.exponent();
    j["l"] = l;
    j["orbit_count"] = part.orbits.size();
    json hist = json::object();
    for (const auto& [size, count] : part.histogram()) hist[std::to_string(size)] = count;
    j["histogram"] = hist;
    json rows = json::array();
    for (const auto& [order, counts] : by_order) {
        const u64 t = t_of(qq.q, G, example.at(order));
        rows.push_back({{"element_order", order},
                        {"t", t},
                        {"elements", counts.first},
                        {"orbits", counts.second},
                        {"example", element_json(example.at(order))}});
        out.rows.push_back({std::to_string(order), std::to_string(t), std::to_string(counts.first),
                            std::to_string(counts.second), element_string(example.at(order))});
    }
    j["by_element_order"] = rows;

    std::string h;
    for (const auto& [size, count] : part.histogram()) h += (h.empty() ? "" : " ") + std::to_string(size) + ":" + std::to_string(count);
    out.summary = {{"q", std::to_string(qq.q)}, {"group", G.spec()},         {"order", std::to_string(G.order())},
                   {"exponent", std::to_string(G.exponent())}, {"l", std::to_string(l)},
                   {"orbit sizes (size:count)", h}};
    out.headers = {"element_order", "t", "elements", "orbits", "example"};
    return out;
}

Output cmd_classify(const RunConfig& cfg) {
    const auto qq = parse_q(cfg.q_spec);
    const auto G = require_group(cfg);
    std::optional<u64> t;
    if (cfg.t) t = cfg.t;
    const auto r = is_minimal_ecd(qq.q, G, t);

    Output out;
    auto& j = out.doc;
    j["command"] = "classify";
    j["p"] = r.p;
    j["q"] = r.q;
    j["group"] = r.group_spec;
    j["canonical"] = r.canonical_spec;
    j["order"] = r.order;
    j["exponent"] = r.exponent;
    j["l"] = r.l;
    j["phi_exp"] = r.phi_exp;
    j["splitting_degree"] = r.splitting_degree;
    j["is_semisimple"] = r.is_semisimple;
    j["ecd_algebra"] = r.is_ecd_algebra;
    j["minimal_ecd"] = r.is_minimal_ecd;
    json fired = json::array();
    for (auto c : r.sufficient_conditions_fired) fired.push_back(std::string(to_string(c)));
    j["sufficient_conditions_fired"] = fired;
    j["splitting_degree_condition"] = r.fired(SufficientCondition::SplittingDegreeLeP);
    j["totient_condition"] = r.fired(SufficientCondition::TotientLeP);
    j["elementary_abelian_condition"] = r.fired(SufficientCondition::ElementaryAbelianBound);
    j["witness"] = {{"element", element_json(r.witness)}, {"order", r.exponent}, {"t", r.witness_t}};

    std::string fired_s;
    for (auto c : r.sufficient_conditions_fired) fired_s += (fired_s.empty() ? "" : ",") + std::string(to_string(c));
    out.headers = {"field", "value"};
    out.rows = {{"p", std::to_string(r.p)},
                {"q", std::to_string(r.q)},
                {"group", r.group_spec},
                {"canonical", r.canonical_spec},
                {"order", std::to_string(r.order)},
                {"exponent", std::to_string(r.exponent)},
                {"l", std::to_string(r.l)},
                {"phi_exp", std::to_string(r.phi_exp)},
                {"splitting_degree", std::to_string(r.splitting_degree)},
                {"ecd_algebra", yes_no(r.is_ecd_algebra)},
                {"minimal_ecd", yes_no(r.is_minimal_ecd)},
                {"totient_condition", yes_no(r.fired(SufficientCondition::TotientLeP))},
                {"sufficient_conditions_fired", fired_s.empty() ? "-" : fired_s},
                {"witness", element_string(r.witness) + " t=" + std::to_string(r.witness_t)}};
    return out;
}

Output cmd_idempotents(const RunConfig& cfg) {
    const auto qq = parse_q(cfg.q_spec);
    const auto G = require_group(cfg);
    require_semisimple(qq.q, G);
    check_enumerable(G, cfg.enum_cap);
    if (G.order() > cfg.rank_cap)
        fail(ErrorKind::GroupTooLarge, "|G| = " + std::to_string(G.order()) + " exceeds rank cap " +
                                           std::to_string(cfg.rank_cap));
    GroupAlgebra A(qq.q, G, cfg.seed);
    const u64 l = global_l(qq.q, G);
    FieldTower Fl(A.field_ptr(), static_cast<unsigned>(l), cfg.seed);
    const auto ideals = primitive_idempotents(A, Fl, cfg.rank_cap, cfg.seed);

    Output out;
    auto& j = out.doc;
    j["command"] = "idempotents";
    j["q"] = qq.q;
    j["group"] = G.spec();
    j["field"] = field_json(A.field(), cfg.seed);
    j["splitting_field"] = tower_json(Fl);
    json list = json::array();
    u64 total = 0;
    std::string dims;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const auto& r = ideals[i];
        const u64 oracle = ideal_dimension_oracle(r.idempotent, cfg.rank_cap);
        total += oracle;
        dims += (dims.empty() ? "" : ",") + std::to_string(r.dimension);
        std::optional<u64> shortcut;
        if (r.dimension <= A.p()) shortcut = ecd_dimension(r.idempotent);
        json item;
        item["index"] = i;
        item["dual_orbit_representative"] = element_json(r.orbit.representative);
        item["dual_orbit_size"] = r.orbit.size;
        item["dimension"] = r.dimension;
        item["oracle_dimension"] = oracle;
        item["oracle_verified"] = oracle == r.dimension;
        item["ecd_dimension"] = shortcut ? json(*shortcut) : json(nullptr);
        item["idempotent"] = algebra_element_json(r.idempotent, cfg.seed);
        list.push_back(std::move(item));
        out.rows.push_back({std::to_string(i), element_string(r.orbit.representative), std::to_string(r.dimension),
                            std::to_string(oracle), yes_no(oracle == r.dimension),
                            shortcut ? std::to_string(*shortcut) : "-", coeffs_string(r.idempotent)});
    }
    j["idempotents"] = list;
    j["dimension_sum"] = total;
    out.summary = {{"q", std::to_string(qq.q)},
                   {"group", G.spec()},
                   {"splitting degree l", std::to_string(l)},
                   {"ideals", std::to_string(ideals.size())},
                   {"dimensions", dims},
                   {"dimension sum", std::to_string(total)}};
    out.headers = {"index", "dual_rep", "dimension", "oracle", "verified", "ecd_dimension", "coeffs"};
    return out;
}

Output cmd_construct(const RunConfig& cfg) {
    if (cfg.p == 0) fail(ErrorKind::ParseError, "--p is required");
    if (cfg.t == 0) fail(ErrorKind::ParseError, "--t is required");
    ConstructionRequest req{cfg.p, cfg.alpha, cfg.t, cfg.max_order, static_cast<std::size_t>(cfg.max_results)};
    arith::FactorizeOptions opts{cfg.rho_cap};
    const auto built = construct_minimal_ecd(req, opts);
    const auto qq = PrimePowerQ::from(cfg.p, cfg.alpha);
    const u128 qt1 = arith::checked_pow(qq.q, static_cast<unsigned>(cfg.t)) - 1;

    Output out;
    auto& j = out.doc;
    j["command"] = "construct";
    j["p"] = cfg.p;
    j["alpha"] = cfg.alpha;
    j["q"] = qq.q;
    j["t"] = cfg.t;
    j["q_pow_t_minus_1"] = arith::to_string(qt1);
    j["factorization"] = arith::factorize(qt1, opts).to_string();
    j["max_group_order"] = cfg.max_order;
    j["max_results"] = cfg.max_results;
    json list = json::array();
    for (const auto& c : built) {
        json cert;
        cert["n"] = c.certificate.n;
        cert["t"] = c.certificate.t;
        cert["p"] = c.certificate.p;
        cert["divides"] = c.certificate.divides;
        cert["condition"] = c.certificate.condition;
        list.push_back({{"group", c.group.spec()},
                        {"order", c.group.order()},
                        {"exponent", c.group.exponent()},
                        {"l", c.report.l},
                        {"minimal_ecd", c.report.is_minimal_ecd},
                        {"certificate", cert}});
        out.rows.push_back({c.group.spec(), std::to_string(c.group.order()), std::to_string(c.certificate.n),
                            std::to_string(c.report.l), yes_no(c.report.is_minimal_ecd)});
    }
    j["count"] = built.size();
    j["groups"] = list;
    out.summary = {{"q", std::to_string(qq.q)},
                   {"t", std::to_string(cfg.t)},
                   {"q^t - 1", arith::to_string(qt1) + " = " + arith::factorize(qt1, opts).to_string()},
                   {"groups", std::to_string(built.size())}};
    out.headers = {"group", "order", "exponent", "l", "minimal_ecd"};
    return out;
}

Output cmd_paper_examples(const RunConfig& cfg, bool& all_passed) {
    std::optional<int> only;
    if (cfg.criterion) {
        if (cfg.criterion < 1 || cfg.criterion > static_cast<int>(acceptance::criteria().size()))
            fail(ErrorKind::InvalidRequest, "no criterion " + std::to_string(cfg.criterion));
        only = cfg.criterion;
    }
    const auto results = acceptance::run_all(only);
    all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });

    Output out;
    out.doc["command"] = "paper-examples";
    json list = json::array();
    for (const auto& r : results) {
        list.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        out.rows.push_back({std::to_string(r.id), r.passed ? "PASS" : "FAIL", r.title, r.detail});
    }
    out.doc["results"] = list;
    out.doc["all_passed"] = all_passed;
    out.headers = {"criterion", "status", "title", "detail"};
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

void render(const Output& out, const std::string& format) {
    if (format == "json") {
        std::cout << out.doc.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < out.headers.size(); ++i) std::cout << (i ? "," : "") << csv_field(out.headers[i]);
        std::cout << "\n";
        for (const auto& row : out.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
            std::cout << "\n";
        }
        return;
    }
    for (const auto& [k, v] : out.summary) std::cout << k << ": " << v << "\n";
    if (!out.summary.empty()) std::cout << "\n";
    std::vector<std::size_t> width(out.headers.size());
    for (std::size_t i = 0; i < out.headers.size(); ++i) width[i] = out.headers[i].size();
    for (const auto& row : out.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        std::cout << s << "\n";
    };
    line(out.headers);
    for (const auto& row : out.rows) line(row);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Orbits, idempotents and ECD classification of semisimple group algebras F_q[G]"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
    };
    auto add_qg = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q_spec, "Field size, as p^alpha or a prime power")->required();
        sub->add_option("--group", cfg.group_spec, "Group, e.g. C2669 or 2x16x9x3")->required();
        sub->add_option("--seed", cfg.seed, "Seed for irreducible and root-of-unity searches")->capture_default_str();
        sub->add_option("--enum-cap", cfg.enum_cap, "Largest group to enumerate")->capture_default_str();
        add_format(sub);
    };

    auto* orbits = app.add_subcommand("orbits", "q-orbit sizes, t-values and l");
    add_qg(orbits);
    auto* classify = app.add_subcommand("classify", "ECD and minimal ECD classification");
    add_qg(classify);
    classify->add_option("--t", cfg.t, "Splitting degree to test against p (default l)");
    auto* idem = app.add_subcommand("idempotents", "Primitive idempotents with oracle-checked dimensions");
    add_qg(idem);
    idem->add_option("--rank-cap", cfg.rank_cap, "Largest |G| for the rank oracle")->capture_default_str();

    auto* construct = app.add_subcommand("construct", "Minimal ECD algebras from divisors of q^t - 1");
    construct->add_option("--p", cfg.p, "Characteristic")->required();
    construct->add_option("--alpha", cfg.alpha, "q = p^alpha")->capture_default_str();
    construct->add_option("--t", cfg.t, "Extension degree, 1 <= t <= p")->required();
    construct->add_option("--max-order", cfg.max_order, "Largest group order emitted")->capture_default_str();
    construct->add_option("--max-results", cfg.max_results, "Largest number of groups emitted")->capture_default_str();
    construct->add_option("--rho-cap", cfg.rho_cap, "Pollard rho iteration budget per cofactor")->capture_default_str();
    add_format(construct);

    auto* paper = app.add_subcommand("paper-examples", "Run the pinned acceptance checks");
    paper->add_option("--criterion", cfg.criterion, "Run only this criterion (1-9)");
    add_format(paper);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("UsageError", e.what(), kUsage);
        return kUsage;
    }

    try {
        Output out;
        bool passed = true;
        if (*orbits) out = cmd_orbits(cfg);
        else if (*classify) out = cmd_classify(cfg);
        else if (*idem) out = cmd_idempotents(cfg);
        else if (*construct) out = cmd_construct(cfg);
        else out = cmd_paper_examples(cfg, passed);
        render(out, cfg.format);
        if (!passed) {
            print_error("AcceptanceFailure", "one or more criteria failed", kDomain);
            return kDomain;
        }
        return kOk;
    } catch (const Error& e) {
        const int code = e.kind() == ErrorKind::ParseError ? kUsage : is_resource_cap(e.kind()) ? kCap : kDomain;
        print_error(std::string(to_string(e.kind())), e.what(), code);
        return code;
    } catch (const std::exception& e) {
        print_error("InternalError", e.what(), kDomain);
        return kDomain;
    }
}
