#include "ordmatch/oracle.hpp"

#include <algorithm>
#include <bit>

#include "ordmatch/pattern_algebra.hpp"

namespace ordmatch {

BigInt alpha(int r, int n) {
    if (r < 2 || n < 0) throw std::invalid_argument("alpha needs r >= 2, n >= 0");
    BigInt num = 1;
    for (int i = 2; i <= r * n; ++i) num *= i;
    BigInt rfact = 1;
    for (int i = 2; i <= r; ++i) rfact *= i;
    BigInt den = 1;
    for (int i = 0; i < n; ++i) den *= rfact;
    for (int i = 2; i <= n; ++i) den *= i;
    return num / den;
}

void for_each_matching(int r, int n, const std::function<bool(const Matching&)>& visit,
                       long long guard) {
    if (r < 2 || n < 1) throw std::invalid_argument("enumeration needs r >= 2, n >= 1");
    if (alpha(r, n) > guard)
        throw GuardError("enumeration of " + alpha(r, n).str() +
                         " matchings exceeds the guard of " + std::to_string(guard));

    const int total = r * n;
    std::vector<Edge> edges(static_cast<size_t>(n));
    for (Edge& e : edges) e.reserve(static_cast<size_t>(r));
    // Reusable matching; edges stay sorted by first vertex because letters
    // are introduced in first-occurrence order.
    bool stop = false;
    auto rec = [&](auto&& self, int pos, int introduced) -> void {
        if (stop) return;
        if (pos == total) {
            if (!visit(Matching::unchecked(r, edges))) stop = true;
            return;
        }
        int limit = std::min(introduced + 1, n);
        for (int letter = 0; letter < limit && !stop; ++letter) {
            Edge& e = edges[static_cast<size_t>(letter)];
            if (letter < introduced && static_cast<int>(e.size()) >= r) continue;
            e.push_back(pos + 1);
            self(self, pos + 1, std::max(introduced, letter + 1));
            e.pop_back();
        }
    };
    rec(rec, 0, 0);
}

std::vector<Matching> all_matchings(int r, int n, long long guard) {
    std::vector<Matching> out;
    for_each_matching(r, n,
                      [&](const Matching& m) {
                          out.push_back(m);
                          return true;
                      },
                      guard);
    return out;
}

// --- exact maximum clique --------------------------------------------------

namespace {

struct CliqueSolver {
    int n;
    std::vector<uint64_t> adj;

    int color_bound(uint64_t cand) const {
        int classes = 0;
        while (cand) {
            ++classes;
            uint64_t avail = cand;
            while (avail) {
                int v = std::countr_zero(avail);
                cand &= ~(uint64_t{1} << v);
                avail &= ~(uint64_t{1} << v);
                avail &= ~adj[static_cast<size_t>(v)];
            }
        }
        return classes;
    }

    int best = 0;
    void grow(int depth, uint64_t cand) {
        if (!cand) {
            best = std::max(best, depth);
            return;
        }
        // order candidates by greedy color class, highest class first
        std::vector<std::pair<int, int>> order;  // (color, vertex)
        {
            int color = 0;
            uint64_t rest = cand;
            while (rest) {
                ++color;
                uint64_t avail = rest;
                while (avail) {
                    int v = std::countr_zero(avail);
                    order.push_back({color, v});
                    rest &= ~(uint64_t{1} << v);
                    avail &= ~(uint64_t{1} << v);
                    avail &= ~adj[static_cast<size_t>(v)];
                }
            }
        }
        for (size_t k = order.size(); k-- > 0;) {
            auto [color, v] = order[k];
            if (depth + color <= best) return;
            grow(depth + 1, cand & adj[static_cast<size_t>(v)]);
            cand &= ~(uint64_t{1} << v);
        }
    }

    // Lexicographically least clique of exactly `target` vertices; the DFS
    // visits index sets in lexicographic order and the color bound only cuts
    // branches that cannot reach the target.
    std::vector<int> witness;
    bool lex_find(int target, int depth, uint64_t cand) {
        if (depth == target) return true;
        uint64_t rest = cand;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= ~(uint64_t{1} << v);
            uint64_t next = cand & adj[static_cast<size_t>(v)] &
                            ~((uint64_t{2} << v) - 1);  // only vertices > v
            if (depth + 1 + color_bound(next) < target) continue;
            witness.push_back(v);
            if (lex_find(target, depth + 1, next)) return true;
            witness.pop_back();
        }
        return false;
    }
};

}  // namespace

CliqueCertificate max_clique(const Matching& m, const Pattern& p, int guard) {
    if (p.uniformity() != m.uniformity())
        throw std::invalid_argument("pattern uniformity differs from the matching");
    const int n = m.size();
    if (n > guard)
        throw GuardError("max_clique guard: " + std::to_string(n) + " edges > " +
                         std::to_string(guard));
    if (n == 0) return {p, {}};

    CliqueSolver solver;
    solver.n = n;
    solver.adj.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.pair_pattern(i, j) == p) {
                solver.adj[static_cast<size_t>(i)] |= uint64_t{1} << j;
                solver.adj[static_cast<size_t>(j)] |= uint64_t{1} << i;
            }
    uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    solver.best = 1;
    solver.grow(0, all);
    if (!solver.lex_find(solver.best, 0, all))
        throw InternalError("clique reconstruction failed");
    return {p, solver.witness};
}

// --- fast special cases ------------------------------------------------

std::vector<int> longest_increasing_indices(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<int> tails;       // index of the smallest tail of each length
    std::vector<int> parent(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        auto it = std::lower_bound(tails.begin(), tails.end(), values[static_cast<size_t>(i)],
                                   [&](int idx, int v) { return values[static_cast<size_t>(idx)] < v; });
        if (it != tails.begin()) parent[static_cast<size_t>(i)] = *(it - 1);
        if (it == tails.end())
            tails.push_back(i);
        else
            *it = i;
    }
    std::vector<int> out;
    if (tails.empty()) return out;
    for (int k = tails.back(); k != -1; k = parent[static_cast<size_t>(k)]) out.push_back(k);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> longest_decreasing_indices(const std::vector<int>& values) {
    std::vector<int> negated(values.size());
    for (size_t i = 0; i < values.size(); ++i) negated[i] = -values[i];
    return longest_increasing_indices(negated);
}

CliqueCertificate max_line_fast(const Matching& m) {
    const int n = m.size();
    const Pattern p = Pattern::alignment(m.uniformity());
    if (n == 0) return {p, {}};
    // process edges by right end; prefix-max over right-end coordinates
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return m.edge(a).back() < m.edge(b).back(); });
    const int V = m.vertex_count();
    std::vector<std::pair<int, int>> tree(static_cast<size_t>(V) + 1, {0, -1});  // (len, idx)
    auto update = [&](int pos, std::pair<int, int> val) {
        for (; pos <= V; pos += pos & -pos)
            if (val > tree[static_cast<size_t>(pos)]) tree[static_cast<size_t>(pos)] = val;
    };
    auto query = [&](int pos) {
        std::pair<int, int> best{0, -1};
        for (; pos > 0; pos -= pos & -pos)
            if (tree[static_cast<size_t>(pos)] > best) best = tree[static_cast<size_t>(pos)];
        return best;
    };
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::pair<int, int> overall{0, -1};
    for (int i : order) {
        auto [len, prev] = query(m.edge(i).front() - 1);
        parent[static_cast<size_t>(i)] = prev;
        std::pair<int, int> mine{len + 1, i};
        update(m.edge(i).back(), mine);
        if (mine > overall) overall = mine;
    }
    std::vector<int> chain;
    for (int k = overall.second; k != -1; k = parent[static_cast<size_t>(k)]) chain.push_back(k);
    std::sort(chain.begin(), chain.end());
    return {p, chain};
}

CliqueCertificate max_stack_fast(const Matching& m) {
    if (m.uniformity() != 2) throw std::invalid_argument("max_stack_fast needs uniformity 2");
    std::vector<int> rights(static_cast<size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) rights[static_cast<size_t>(i)] = m.edge(i)[1];
    return {Pattern::from_word("ABBA"), longest_decreasing_indices(rights)};
}

CliqueCertificate max_wave_fast(const Matching& m) {
    if (m.uniformity() != 2) throw std::invalid_argument("max_wave_fast needs uniformity 2");
    const int n = m.size();
    const Pattern p = Pattern::from_word("ABAB");
    if (n == 0) return {p, {}};
    std::vector<int> best;
    std::vector<int> straddlers, rights;
    for (int cut = 1; cut < 2 * n; ++cut) {
        straddlers.clear();
        rights.clear();
        for (int i = 0; i < n; ++i)
            if (m.edge(i)[0] <= cut && m.edge(i)[1] > cut) {
                straddlers.push_back(i);
                rights.push_back(m.edge(i)[1]);
            }
        if (static_cast<int>(straddlers.size()) <= static_cast<int>(best.size())) continue;
        std::vector<int> lis = longest_increasing_indices(rights);
        if (lis.size() > best.size()) {
            best.clear();
            for (int k : lis) best.push_back(straddlers[static_cast<size_t>(k)]);
        }
    }
    if (best.empty()) best.push_back(0);
    return {p, best};
}

StackWave max_stack_wave_fast(const Matching& m) {
    return {max_stack_fast(m), max_wave_fast(m)};
}

PatternCensus census(const Matching& m) {
    PatternCensus out;
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j) ++out[m.pair_pattern(i, j)];
    return out;
}

bool is_clean(const Matching& m) {
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (!is_collectable(m.pair_pattern(i, j))) return false;
    return true;
}

}  // namespace ordmatch
