// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>

#include "ecdga/acceptance.hpp"

int main(int argc, char** argv) {
    std::optional<int> only;
    if (argc > 1) only = std::atoi(argv[1]);
    int failed = 0;
    for (const auto& r : ecdga::acceptance::run_all(only)) {
        std::printf("%s criterion %d: %s (%.2fs) -- %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                    r.detail.c_str());
        if (!r.passed) ++failed;
    }
    std::printf("%d criteria failed\n", failed);
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
