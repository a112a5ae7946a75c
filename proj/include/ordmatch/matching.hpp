#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordmatch {

// Thrown when an operation would exceed a size guard (CLI exit code 3).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal self-check fails; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

using Edge = std::vector<int>;  // strictly increasing vertices, 1-based

// The order-isomorphism type of two intertwined r-edges, stored as the
// canonical word over {A,B}: length 2r, starts with A, r of each letter.
class Pattern {
public:
    Pattern() = default;
    static Pattern from_word(const std::string& word);
    static Pattern alignment(int r);  // A^r B^r

    const std::string& word() const { return word_; }
    int uniformity() const { return static_cast<int>(word_.size() / 2); }

    friend bool operator==(const Pattern& a, const Pattern& b) { return a.word_ == b.word_; }
    friend bool operator!=(const Pattern& a, const Pattern& b) { return a.word_ != b.word_; }
    friend bool operator<(const Pattern& a, const Pattern& b) { return a.word_ < b.word_; }

private:
    std::string word_;
};

// An ordered r-uniform matching of size n on vertex set {1,...,rn}.
// Edges are strictly increasing tuples, listed in order of their left ends,
// so equal matchings compare equal element-wise and share one canonical word.
class Matching {
public:
    Matching() = default;

    static Matching from_edges(int r, std::vector<Edge> edges);
    // Trusted constructor for enumerators/constructions that produce valid
    // matchings by design; skips the partition check.
    static Matching unchecked(int r, std::vector<Edge> edges);

    int uniformity() const { return r_; }
    int size() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return r_ * size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_.at(static_cast<size_t>(i)); }

    // Canonical representing word: symbols labeled by first occurrence.
    // Single letters A-Z,a-z for n <= 52, space-separated numbers beyond.
    std::string word() const;

    Pattern pair_pattern(int i, int j) const;

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.r_ == b.r_ && a.edges_ == b.edges_;
    }

private:
    int r_ = 0;
    std::vector<Edge> edges_;
};

// A word with every symbol repeated r times; symbols may be single characters
// ("AABB") or a whitespace/comma-delimited token list ("A1 A1 A2 A2").
Matching parse_word(const std::string& text);
std::string to_word(const Matching& m);

Pattern pattern_of_pair(const Matching& m, int i, int j);

// A claimed homogeneous sub-matching, independently checkable.
struct CliqueCertificate {
    Pattern pattern;
    std::vector<int> edge_indices;  // strictly increasing, into the host

    int size() const { return static_cast<int>(edge_indices.size()); }
};

// True iff every pair of referenced edges forms exactly cert.pattern.
// Out-of-range or non-increasing indices are an error, mismatches are false.
bool check_certificate(const Matching& m, const CliqueCertificate& cert);

// --- sub-matching helpers ------------------------------------------------

// Restriction to a subset of edges, vertices relabeled to {1,...,r*k}.
// Edge order is inherited from the host; `indices` must be strictly increasing.
Matching sub_matching(const Matching& m, const std::vector<int>& indices);

// Delete the last vertex of every edge and relabel; edge order is unchanged.
Matching drop_last_vertex(const Matching& m);

// Delete the middle vertex of every edge (r = 3 only).
Matching drop_middle_vertex(const Matching& m);

// 2-matching of the last two vertices of the selected edges, relabeled.
// Returns the matching plus the map from its edge index to the host index.
std::pair<Matching, std::vector<int>> last_two_matching(const Matching& m,
                                                        const std::vector<int>& indices);

}  // namespace ordmatch
