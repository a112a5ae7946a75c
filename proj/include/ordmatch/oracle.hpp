#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ordmatch/matching.hpp"
#include "ordmatch/rational.hpp"

namespace ordmatch {

inline constexpr long long kDefaultEnumGuard = 10'000'000;  // matchings
inline constexpr int kDefaultCliqueGuard = 64;              // edges

// Number of ordered r-matchings of size n: (rn)! / ((r!)^n n!).
BigInt alpha(int r, int n);

// Visit every matching of M_n^{(r)} exactly once, in lexicographic order of
// the canonical word. The visitor returns false to stop early. The matching
// reference is only valid during the call.
void for_each_matching(int r, int n, const std::function<bool(const Matching&)>& visit,
                       long long guard = kDefaultEnumGuard);

std::vector<Matching> all_matchings(int r, int n, long long guard = kDefaultEnumGuard);

// Exact maximum P-clique via branch and bound on the pairwise compatibility
// graph; ties go to the lexicographically least edge-index set.
CliqueCertificate max_clique(const Matching& m, const Pattern& p,
                             int guard = kDefaultCliqueGuard);

// Longest chain of edges with max(e_i) < min(e_{i+1}); works for every r and
// agrees with max_clique on the alignment.
CliqueCertificate max_line_fast(const Matching& m);

// r = 2 only. Stack: longest decreasing subsequence of right ends. Wave:
// for each gap between consecutive vertices, the edges straddling it admit
// no nesting/alignment among LIS-of-right-ends picks, and every wave
// straddles a common gap, so scanning all gaps is exact.
CliqueCertificate max_stack_fast(const Matching& m);
CliqueCertificate max_wave_fast(const Matching& m);

struct StackWave {
    CliqueCertificate stack;
    CliqueCertificate wave;
};
StackWave max_stack_wave_fast(const Matching& m);

// Pattern -> number of edge pairs forming it; counts sum to n(n-1)/2.
using PatternCensus = std::map<Pattern, long long>;
PatternCensus census(const Matching& m);

// Every pair of edges forms a collectable pattern.
bool is_clean(const Matching& m);

// Longest strictly monotone subsequences with witness indices.
std::vector<int> longest_increasing_indices(const std::vector<int>& values);
std::vector<int> longest_decreasing_indices(const std::vector<int>& values);

}  // namespace ordmatch
