// Acceptance suite runner: one pass/fail line per criterion.
// Usage: ordmatch_acceptance [id-or-name ...]; no arguments runs everything.

#include <cstdio>

#include "ordmatch/verify.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> only;
    for (int i = 1; i < argc; ++i) only.push_back(argv[i]);
    auto results = ordmatch::verify::run_all(only);
    if (results.empty()) {
        std::fprintf(stderr, "no matching criterion\n");
        return 2;
    }
    int failures = 0;
    for (const auto& res : results) {
        std::printf("%s  criterion %-2s %-22s (%.2fs)%s%s\n", res.pass ? "PASS" : "FAIL",
                    res.id.c_str(), res.name.c_str(), res.seconds,
                    res.detail.empty() ? "" : "  ", res.detail.c_str());
        if (!res.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
