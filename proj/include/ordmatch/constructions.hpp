#pragma once

#include <utility>
#include <vector>

#include "ordmatch/matching.hpp"
#include "ordmatch/pattern_algebra.hpp"

namespace ordmatch {

// N-blow-up M[N]: every vertex of m becomes a block of |n| consecutive
// vertices and every edge of m carries an order-isomorphic copy of n on the
// union of its blocks. Inner pairs always inherit their n-pattern; outer
// pairs inherit m's pattern only under extra conditions (inheritance_check).
Matching blow_up(const Matching& m, const Matching& n);

// True iff every pair of edges from different copies in blow_up(m, n) forms
// the pattern of its outer pair; checked directly on the construction.
bool inheritance_check(const Matching& m, const Matching& n);

// Sufficient condition for the above when both sides are clean: every block
// partition of a pattern of n refines every block partition of a pattern of
// m. Alignments (no cuts) are refined by everything; r-partite patterns
// (all cuts) refine everything.
bool refines(const Matching& m, const Matching& n);

// Iterated blow-up of canonical cliques, outermost first in `spec`.
// Each adjacent pair must satisfy the refinement condition on the patterns
// themselves; the offending pair is reported otherwise.
Matching layered_construction(int r, const std::vector<std::pair<Pattern, int>>& spec);

// Consecutive edges (by left end) form p, all other pairs align. Possible
// exactly when the first A-run of p is at least as long as the number of B's
// before its last A; the alignment itself is excluded as degenerate.
bool is_chainable(const Pattern& p);
Matching chain(const Pattern& p, int n);

// The r = 3 chain of the non-collectable pattern AABABB: consecutive edges
// form AABABB, all other pairs align, so the odd edges are a line of size
// ceil(n/2).
Matching p1star_chain(int n);

}  // namespace ordmatch
