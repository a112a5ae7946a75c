#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordmatch/matching.hpp"

namespace ordmatch {

// One block X^t Y^t of a splittable pattern; `leader` is the block's first
// letter and `half_length` its t.
struct SplitBlock {
    char leader;      // 'A' or 'B'
    int half_length;  // >= 1
    friend bool operator==(const SplitBlock& a, const SplitBlock& b) {
        return a.leader == b.leader && a.half_length == b.half_length;
    }
};

struct SplitDecomposition {
    std::vector<SplitBlock> blocks;
    std::string reassemble() const;  // the pattern word the blocks spell
};

// All canonical patterns of the given uniformity, lexicographic; there are
// C(2r,r)/2 of them.
std::vector<Pattern> enumerate_patterns(int r);

// The unique block decomposition when the pattern is splittable. The greedy
// scan is forced: inside a block X^t Y^t the first letter change is at
// offset exactly t, so each block either matches or the scan fails.
std::optional<SplitDecomposition> split(const Pattern& p);

bool is_collectable(const Pattern& p);

// Length of the last maximal run minus 2, floored at 0. Only defined for
// collectable patterns.
int maturity(const Pattern& p);

// Splittable with every block of half-length 1; 2^{r-1} such patterns per r.
bool is_r_partite(const Pattern& p);

// Left parent: the pattern of the first r-1 A's and B's. Right parent: the
// 2-pattern of the last two A's and last two B's, normalized to its A-first
// form (BBAA/BAAB/BABA read as AABB/ABBA/ABAB).
std::pair<Pattern, Pattern> decompose(const Pattern& p);

// Same, but the right parent keeps its literal (possibly dual) spelling.
std::pair<Pattern, std::string> decompose_raw(const Pattern& p);

// Right-parent selector: 1 = AABB, 2 = ABBA, 3 = ABAB.
int right_parent_selector(const Pattern& right);
Pattern right_parent(int j, int r = 2);

// All patterns P with decompose(P) == (q, R_j), siblings ordered by how deep
// the inserted letter sits in q's trailing run (the collectable child first).
// Valid for any q; `children` additionally requires q collectable.
std::vector<Pattern> dec_inverse(const Pattern& q, int j);
std::vector<Pattern> children(const Pattern& q, int j);

// Collectable patterns that have at least one sibling; 3^{r-3} of them.
std::vector<Pattern> big_brothers(int r);

// Canonical numbering P_1..P_{3^{r-1}} of the collectable patterns, built so
// that decompose(P_{3(i-1)+j}) == (Q_i, R_j) over the level-(r-1) table.
struct PatternIndex {
    int r = 0;
    std::vector<Pattern> table;                 // size 3^{r-1}
    int index_of(const Pattern& p) const;       // 1-based; throws if absent
    const Pattern& at(int index_1based) const;  // P_i
};

PatternIndex collectable_index(int r);

// Sum of maturities over all collectable r-patterns: (3^{r-2}-1)/2.
long long total_maturity(int r);

// The block-replacement clique: A-led blocks X^tY^t become A_1^t...A_k^t,
// B-led blocks become A_k^t...A_1^t. Every pair of edges forms p.
Matching canonical_clique(const Pattern& p, int k);

// One row of the pattern table emitted by the CLI.
struct AtlasRow {
    std::string word;
    std::string dec_left;
    std::string dec_right;  // literal spelling, duals kept
    bool collectable = false;
    bool big_brother = false;
    int index = 0;      // 1-based among collectable patterns, 0 otherwise
    int maturity = -1;  // -1 for non-collectable
    std::string split_blocks;  // "A2|B1|..." or ""
};

// Full table for one uniformity: families grouped by left parent in index
// order, the collectable child first and siblings after; the trailing group
// with non-collectable left parents is sorted lexicographically.
std::vector<AtlasRow> pattern_atlas(int r);

}  // namespace ordmatch
