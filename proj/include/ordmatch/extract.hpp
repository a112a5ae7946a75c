#pragma once

#include <vector>

#include "ordmatch/matching.hpp"
#include "ordmatch/pattern_algebra.hpp"
#include "ordmatch/rational.hpp"

namespace ordmatch {

// The positive parameters x_1..x_{3^{r-1}} driving the extraction guarantee,
// in collectable_index order. The guarantee needs product(values) < n.
struct ParamVector {
    int r = 0;
    std::vector<Rational> values;

    static ParamVector of(int r, std::vector<Rational> values);
    static ParamVector uniform(int r, const Rational& x);
    static ParamVector integers(int r, const std::vector<long long>& a);
    Rational product() const;
};

struct ExtractionResult {
    int pattern_index = 0;  // 1-based, collectable_index order
    CliqueCertificate certificate;
    Rational guarantee;  // certificate.size() > guarantee always holds
};

// Base case: every 2-matching with n > x1*x2*x3 contains a line of size > x1,
// a stack of size > x2, or a wave of size > x3. Tries the stack first (via a
// longest decreasing subsequence of right ends), then decomposes a landscape
// greedily into waves whose leftmost edges form a line.
ExtractionResult es_base2(const Matching& m, const Rational& x1, const Rational& x2,
                          const Rational& x3);

// Inductive extraction: recurse on the matching with last vertices dropped,
// then run the base case on the pairs of last two vertices of the winning
// clique, halving through the family when the big-brother branch fires.
// Yields, for some i, a P_i-clique of size > x_i * 2^{-m(P_i)}.
ExtractionResult extract_clique(const Matching& m, const ParamVector& xs);

// Variant for clean matchings (every pair collectable): a P_i-clique of size
// at least a_i + 1 whenever n >= product(a) + 1, with no maturity losses.
ExtractionResult extract_clean(const Matching& m, const std::vector<long long>& a);

// Odd-position edges of a P-family-clique form a pure P-clique of size
// ceil(k/2), P the family's big brother.
CliqueCertificate halve_family(const Matching& m, const std::vector<int>& family_indices,
                               const Pattern& big_brother);

// Sharper r = 3 extraction: drop middle vertices, split the resulting
// 2-matching by the base case, then classify nesting/crossing cliques by
// midpoint position and recurse on the clean halves. Needs
// n >= a1(a2+a4)a6a8(a3+a7)a5a9 + 1 and yields a P_i-clique of size a_i + 1.
ExtractionResult extract3_improved(const Matching& m, const std::vector<long long>& a);

}  // namespace ordmatch
