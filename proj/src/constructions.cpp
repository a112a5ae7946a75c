#include "ordmatch/constructions.hpp"

#include <algorithm>
#include <set>

#include "ordmatch/oracle.hpp"

namespace ordmatch {

Matching blow_up(const Matching& m, const Matching& n) {
    if (m.uniformity() != n.uniformity())
        throw std::invalid_argument("blow-up needs equal uniformities");
    const int r = m.uniformity();
    const int t = n.size();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m.size()) * t);
    for (const Edge& outer : m.edges()) {
        // inner vertex u sits in chunk (u-1)/t, which lands in the block of
        // the outer edge's ((u-1)/t)-th vertex, offset (u-1)%t
        for (const Edge& inner : n.edges()) {
            Edge e;
            e.reserve(static_cast<size_t>(r));
            for (int u : inner) {
                int chunk = (u - 1) / t;
                int offset = (u - 1) % t;
                e.push_back((outer[static_cast<size_t>(chunk)] - 1) * t + offset + 1);
            }
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
        }
    }
    return Matching::from_edges(r, std::move(edges));
}

bool inheritance_check(const Matching& m, const Matching& n) {
    Matching big = blow_up(m, n);
    const int t = n.size();
    // owner of each new edge = the outer edge whose blocks it lives in
    std::vector<int> outer_of_block(static_cast<size_t>(m.vertex_count()) + 1, -1);
    for (int e = 0; e < m.size(); ++e)
        for (int v : m.edge(e)) outer_of_block[static_cast<size_t>(v)] = e;
    std::vector<std::vector<int>> copies(static_cast<size_t>(m.size()));
    for (int k = 0; k < big.size(); ++k) {
        int block = (big.edge(k)[0] - 1) / t + 1;
        copies[static_cast<size_t>(outer_of_block[static_cast<size_t>(block)])].push_back(k);
    }
    for (int a = 0; a < m.size(); ++a)
        for (int b = a + 1; b < m.size(); ++b) {
            Pattern outer = m.pair_pattern(a, b);
            for (int ka : copies[static_cast<size_t>(a)])
                for (int kb : copies[static_cast<size_t>(b)])
                    if (big.pair_pattern(ka, kb) != outer) return false;
        }
    return true;
}

namespace {

// Cut set of a splittable pattern's block partition of r, as partial sums.
std::set<int> partition_cuts(const Pattern& p) {
    auto d = split(p);
    if (!d) throw std::invalid_argument("pattern has no block partition: " + p.word());
    std::set<int> cuts;
    int acc = 0;
    for (size_t k = 0; k + 1 < d->blocks.size(); ++k) {
        acc += d->blocks[k].half_length;
        cuts.insert(acc);
    }
    return cuts;
}

bool cuts_refine(const std::set<int>& inner, const std::set<int>& outer) {
    return std::includes(inner.begin(), inner.end(), outer.begin(), outer.end());
}

}  // namespace

bool refines(const Matching& m, const Matching& n) {
    for (const auto& [pm, cm] : census(m)) {
        if (!is_collectable(pm)) return false;
        for (const auto& [pn, cn] : census(n)) {
            if (!is_collectable(pn)) return false;
            if (!cuts_refine(partition_cuts(pn), partition_cuts(pm))) return false;
        }
    }
    return true;
}

Matching layered_construction(int r, const std::vector<std::pair<Pattern, int>>& spec) {
    if (spec.empty()) throw std::invalid_argument("layered construction needs at least one layer");
    for (const auto& [p, k] : spec) {
        if (p.uniformity() != r)
            throw std::invalid_argument("layer uniformity mismatch: " + p.word());
        if (!is_collectable(p))
            throw std::invalid_argument("layer pattern not collectable: " + p.word());
        if (k < 1) throw std::invalid_argument("layer size must be positive");
    }
    for (size_t i = 0; i + 1 < spec.size(); ++i)
        if (!cuts_refine(partition_cuts(spec[i + 1].first), partition_cuts(spec[i].first)))
            throw std::invalid_argument("refinement fails between " + spec[i].first.word() +
                                        " and " + spec[i + 1].first.word());
    Matching cur = canonical_clique(spec.back().first, spec.back().second);
    for (size_t i = spec.size() - 1; i-- > 0;)
        cur = blow_up(canonical_clique(spec[i].first, spec[i].second), cur);
    return cur;
}

namespace {

int first_run(const std::string& w) {
    size_t k = 1;
    while (k < w.size() && w[k] == w[0]) ++k;
    return static_cast<int>(k);
}

// number of B's before the last A = r minus the trailing B-run
int blockers(const std::string& w) {
    size_t last_a = w.rfind('A');
    int count = 0;
    for (size_t i = 0; i < last_a; ++i)
        if (w[i] == 'B') ++count;
    return count;
}

}  // namespace

bool is_chainable(const Pattern& p) {
    const std::string& w = p.word();
    if (w == Pattern::alignment(p.uniformity()).word()) return false;  // just a line
    return first_run(w) >= blockers(w);
}

Matching chain(const Pattern& p, int n) {
    if (n < 2) throw std::invalid_argument("chains need size at least 2");
    if (!is_chainable(p)) throw std::invalid_argument("pattern is not chainable: " + p.word());
    const std::string& w = p.word();
    const int r = p.uniformity();

    // A-counts before each B of the pattern: the k-th vertex of the incoming
    // edge goes right after that many vertices of the previous edge.
    std::vector<int> after(static_cast<size_t>(r));
    {
        int seen_a = 0, k = 0;
        for (char c : w) {
            if (c == 'A')
                ++seen_a;
            else
                after[static_cast<size_t>(k++)] = seen_a;
        }
    }

    std::vector<int> word;  // edge id per position, 1-based ids
    for (char c : w) word.push_back(c == 'A' ? 1 : 2);

    auto positions_of = [&](int id) {
        std::vector<int> pos;
        for (size_t k = 0; k < word.size(); ++k)
            if (word[k] == id) pos.push_back(static_cast<int>(k) + 1);
        return pos;
    };

    for (int id = 3; id <= n; ++id) {
        std::vector<int> prev = positions_of(id - 1);
        int floor_pos = positions_of(id - 2).back();  // stay clear of edge id-2
        int inserted_at = 0;
        for (int k = 0; k < r; ++k) {
            int at = std::max({prev[static_cast<size_t>(after[static_cast<size_t>(k)] - 1)],
                               floor_pos, inserted_at});
            word.insert(word.begin() + at, id);
            inserted_at = at + 1;
            for (int& pp : prev)
                if (pp >= at + 1) ++pp;
            // floor_pos never moves: edge id-2 ends before every insertion
        }
    }

    std::vector<Edge> edges(static_cast<size_t>(n));
    for (size_t k = 0; k < word.size(); ++k)
        edges[static_cast<size_t>(word[k] - 1)].push_back(static_cast<int>(k) + 1);
    return Matching::from_edges(r, std::move(edges));
}

Matching p1star_chain(int n) {
    if (n < 2) throw std::invalid_argument("chains need size at least 2");
    // triples (1,1,2), (i-1,i,i+1) for 1 < i < n, (n-1,n,n)
    std::vector<int> word;
    word.reserve(static_cast<size_t>(3 * n));
    word.insert(word.end(), {1, 1, 2});
    for (int i = 2; i <= n - 1; ++i) word.insert(word.end(), {i - 1, i, i + 1});
    word.insert(word.end(), {n - 1, n, n});
    std::vector<Edge> edges(static_cast<size_t>(n));
    for (size_t k = 0; k < word.size(); ++k)
        edges[static_cast<size_t>(word[k] - 1)].push_back(static_cast<int>(k) + 1);
    return Matching::from_edges(3, std::move(edges));
}

}  // namespace ordmatch
