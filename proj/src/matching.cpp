#include "ordmatch/matching.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ordmatch {

Pattern Pattern::from_word(const std::string& word) {
    if (word.size() < 4 || word.size() % 2 != 0)
        throw std::invalid_argument("pattern word must have even length >= 4: " + word);
    size_t a = 0, b = 0;
    for (char c : word) {
        if (c == 'A') ++a;
        else if (c == 'B') ++b;
        else throw std::invalid_argument("pattern word must be over {A,B}: " + word);
    }
    if (a != b) throw std::invalid_argument("pattern word needs equal letter counts: " + word);
    if (word[0] != 'A') throw std::invalid_argument("pattern word must start with A: " + word);
    Pattern p;
    p.word_ = word;
    return p;
}

Pattern Pattern::alignment(int r) {
    return from_word(std::string(static_cast<size_t>(r), 'A') +
                     std::string(static_cast<size_t>(r), 'B'));
}

Matching Matching::from_edges(int r, std::vector<Edge> edges) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    const int n = static_cast<int>(edges.size());
    std::vector<char> seen(static_cast<size_t>(r) * n + 1, 0);
    for (const Edge& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("edge size differs from uniformity");
        for (size_t k = 0; k < e.size(); ++k) {
            int v = e[k];
            if (v < 1 || v > r * n) throw std::invalid_argument("vertex out of range");
            if (k > 0 && e[k - 1] >= v)
                throw std::invalid_argument("edge vertices must be strictly increasing");
            if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("repeated vertex");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a[0] < b[0]; });
    return unchecked(r, std::move(edges));
}

Matching Matching::unchecked(int r, std::vector<Edge> edges) {
    Matching m;
    m.r_ = r;
    m.edges_ = std::move(edges);
    return m;
}

std::string Matching::word() const {
    const int n = size();
    std::vector<int> label(static_cast<size_t>(r_) * n + 1, 0);
    for (int i = 0; i < n; ++i)
        for (int v : edges_[static_cast<size_t>(i)]) label[static_cast<size_t>(v)] = i;
    static const char* kLetters =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    if (n <= 52) {
        std::string out(static_cast<size_t>(r_) * n, '?');
        for (int v = 1; v <= r_ * n; ++v)
            out[static_cast<size_t>(v - 1)] = kLetters[label[static_cast<size_t>(v)]];
        return out;
    }
    std::ostringstream out;
    for (int v = 1; v <= r_ * n; ++v) {
        if (v > 1) out << ' ';
        out << label[static_cast<size_t>(v)] + 1;
    }
    return out.str();
}

Matching parse_word(const std::string& text) {
    std::vector<std::string> tokens;
    if (text.find_first_of(" \t\n,") != std::string::npos) {
        std::string cur;
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == '\n' || c == ',') {
                if (!cur.empty()) tokens.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) tokens.push_back(cur);
    } else {
        for (char c : text) tokens.emplace_back(1, c);
    }
    if (tokens.empty()) throw std::invalid_argument("empty word");

    std::map<std::string, int> id;  // symbol -> edge index by first occurrence
    std::vector<Edge> edges;
    for (size_t pos = 0; pos < tokens.size(); ++pos) {
        auto [it, fresh] = id.emplace(tokens[pos], static_cast<int>(edges.size()));
        if (fresh) edges.emplace_back();
        edges[static_cast<size_t>(it->second)].push_back(static_cast<int>(pos) + 1);
    }
    const size_t r = edges.front().size();
    for (const Edge& e : edges)
        if (e.size() != r)
            throw std::invalid_argument("symbols occur with unequal multiplicities");
    if (r < 2) throw std::invalid_argument("each symbol must occur at least twice");
    return Matching::unchecked(static_cast<int>(r), std::move(edges));
}

std::string to_word(const Matching& m) { return m.word(); }

Pattern Matching::pair_pattern(int i, int j) const {
    if (i == j) throw std::invalid_argument("pair_pattern needs two distinct edges");
    if (i < 0 || j < 0 || i >= size() || j >= size())
        throw std::invalid_argument("edge index out of range");
    const Edge& a = edges_[static_cast<size_t>(std::min(i, j))];
    const Edge& b = edges_[static_cast<size_t>(std::max(i, j))];
    std::string w;
    w.reserve(2 * a.size());
    size_t pa = 0, pb = 0;
    while (pa < a.size() || pb < b.size()) {
        if (pb == b.size() || (pa < a.size() && a[pa] < b[pb])) {
            w.push_back('A');
            ++pa;
        } else {
            w.push_back('B');
            ++pb;
        }
    }
    return Pattern::from_word(w);
}

Pattern pattern_of_pair(const Matching& m, int i, int j) { return m.pair_pattern(i, j); }

bool check_certificate(const Matching& m, const CliqueCertificate& cert) {
    const auto& idx = cert.edge_indices;
    for (size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= m.size())
            throw std::invalid_argument("certificate index out of range");
        if (k > 0 && idx[k - 1] >= idx[k])
            throw std::invalid_argument("certificate indices must be strictly increasing");
    }
    if (cert.pattern.uniformity() != m.uniformity() && idx.size() >= 2) return false;
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (m.pair_pattern(idx[a], idx[b]) != cert.pattern) return false;
    return true;
}

namespace {

// Order-preserving relabel of the vertices used by `edges` to {1,...,k}.
std::vector<Edge> relabel(std::vector<Edge> edges) {
    std::vector<int> all;
    for (const Edge& e : edges) all.insert(all.end(), e.begin(), e.end());
    std::sort(all.begin(), all.end());
    for (Edge& e : edges)
        for (int& v : e)
            v = static_cast<int>(std::lower_bound(all.begin(), all.end(), v) - all.begin()) + 1;
    return edges;
}

}  // namespace

Matching sub_matching(const Matching& m, const std::vector<int>& indices) {
    std::vector<Edge> edges;
    edges.reserve(indices.size());
    for (size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] >= m.size())
            throw std::invalid_argument("sub_matching index out of range");
        if (k > 0 && indices[k - 1] >= indices[k])
            throw std::invalid_argument("sub_matching indices must be strictly increasing");
        edges.push_back(m.edge(indices[k]));
    }
    return Matching::unchecked(m.uniformity(), relabel(std::move(edges)));
}

Matching drop_last_vertex(const Matching& m) {
    if (m.uniformity() < 3)
        throw std::invalid_argument("drop_last_vertex needs uniformity >= 3");
    std::vector<Edge> edges = m.edges();
    for (Edge& e : edges) e.pop_back();
    return Matching::unchecked(m.uniformity() - 1, relabel(std::move(edges)));
}

Matching drop_middle_vertex(const Matching& m) {
    if (m.uniformity() != 3)
        throw std::invalid_argument("drop_middle_vertex is defined for uniformity 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m.size()));
    for (const Edge& e : m.edges()) edges.push_back({e[0], e[2]});
    return Matching::unchecked(2, relabel(std::move(edges)));
}

std::pair<Matching, std::vector<int>> last_two_matching(const Matching& m,
                                                        const std::vector<int>& indices) {
    const int r = m.uniformity();
    std::vector<std::pair<Edge, int>> tagged;
    tagged.reserve(indices.size());
    for (int i : indices) {
        const Edge& e = m.edge(i);
        tagged.push_back({{e[static_cast<size_t>(r - 2)], e[static_cast<size_t>(r - 1)]}, i});
    }
    std::sort(tagged.begin(), tagged.end());
    std::vector<Edge> edges;
    std::vector<int> host_index;
    for (auto& [e, i] : tagged) {
        edges.push_back(std::move(e));
        host_index.push_back(i);
    }
    return {Matching::unchecked(2, relabel(std::move(edges))), std::move(host_index)};
}

}  // namespace ordmatch
