#include "ordmatch/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ordmatch/pattern_algebra.hpp"

namespace ordmatch {

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

namespace {

uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t seed, uint64_t stream, uint64_t trial) {
    return splitmix(splitmix(seed ^ splitmix(stream)) ^ trial);
}

Matching sample_permutational(int r, int n, uint64_t seed) {
    if (r < 2 || n < 1) throw std::invalid_argument("sampling needs r >= 2, n >= 1");
    Rng rng(seed);
    std::vector<int> perm(static_cast<size_t>(r) * n);
    std::iota(perm.begin(), perm.end(), 1);
    for (size_t k = perm.size(); k > 1; --k)
        std::swap(perm[k - 1], perm[rng.below(k)]);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Edge e(perm.begin() + static_cast<long>(i) * r, perm.begin() + static_cast<long>(i + 1) * r);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a[0] < b[0]; });
    return Matching::unchecked(r, std::move(edges));
}

Matching sample_online(int r, int n, uint64_t seed) {
    if (r < 2 || n < 1) throw std::invalid_argument("sampling needs r >= 2, n >= 1");
    Rng rng(seed);
    std::vector<int> pool(static_cast<size_t>(r) * n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    while (!pool.empty()) {
        // the first uncovered vertex is the smallest remaining one
        auto smallest = std::min_element(pool.begin(), pool.end());
        std::swap(*smallest, pool.back());
        Edge e{pool.back()};
        pool.pop_back();
        for (int k = 1; k < r; ++k) {
            size_t pick = rng.below(pool.size());
            e.push_back(pool[pick]);
            std::swap(pool[pick], pool.back());
            pool.pop_back();
        }
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a[0] < b[0]; });
    return Matching::unchecked(r, std::move(edges));
}

namespace {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

}  // namespace

BigInt f_count(int r, int s, int n, int m) {
    if (r < 2 || n < 1) throw std::invalid_argument("f_count needs r >= 2, n >= 1");
    if (s < 2) throw std::invalid_argument("f_count needs s >= 2");
    if (m < s - 1 || m > r * n - 1)
        throw std::invalid_argument("f_count needs s-1 <= m <= rn-1");
    return BigInt(r) * n * binomial(m, s - 1) - BigInt(s - 1) * binomial(m + 1, s);
}

Rational expected_cliques(int r, int n, int k, const Pattern& p) {
    if (k < 0 || k > n) throw std::invalid_argument("clique size must satisfy 0 <= k <= n");
    if (p.uniformity() != r) throw std::invalid_argument("pattern uniformity mismatch");
    if (!is_collectable(p))
        throw std::invalid_argument("expected_cliques needs a collectable pattern");
    return Rational(binomial(static_cast<long long>(r) * n, static_cast<long long>(r) * k) *
                        alpha(r, n - k),
                    alpha(r, n));
}

CliqueCertificate short_edge_line(const Matching& m, int max_len) {
    std::vector<int> alive;
    for (int i = 0; i < m.size(); ++i)
        if (m.edge(i).back() - m.edge(i).front() <= max_len) alive.push_back(i);

    auto nonliner = [&](int i, int j) {
        const Edge& a = m.edge(std::min(i, j));
        const Edge& b = m.edge(std::max(i, j));
        return b.front() < a.back();  // anything but an alignment
    };
    // degree-driven deletion: always drop the edge in the most nonliners
    while (true) {
        std::vector<int> degree(alive.size(), 0);
        bool any = false;
        for (size_t x = 0; x < alive.size(); ++x)
            for (size_t y = x + 1; y < alive.size(); ++y)
                if (nonliner(alive[x], alive[y])) {
                    ++degree[x];
                    ++degree[y];
                    any = true;
                }
        if (!any) break;
        size_t worst = 0;
        for (size_t x = 1; x < alive.size(); ++x) {
            if (degree[x] > degree[worst] ||
                (degree[x] == degree[worst] &&
                 m.edge(alive[x]).front() > m.edge(alive[worst]).front()))
                worst = x;
        }
        alive.erase(alive.begin() + static_cast<long>(worst));
    }
    return {Pattern::alignment(m.uniformity()), alive};
}

CliqueCertificate template_clique(const Matching& m, const Pattern& p, int k, int t) {
    const int r = m.uniformity();
    if (t < 1 || k < 1) throw std::invalid_argument("block width and size must be positive");
    if (static_cast<long long>(r) * k * t > static_cast<long long>(r) * m.size())
        throw std::invalid_argument("template geometry infeasible: r*k*t > r*n");
    Matching tmpl = canonical_clique(p, k);  // vertices are block ids 1..rk

    // map sorted block tuple -> template edge
    std::vector<std::vector<int>> block_edge(static_cast<size_t>(r) * k + 1);
    std::vector<int> chosen(static_cast<size_t>(k), -1);
    auto block_of = [&](int v) { return (v - 1) / t + 1; };  // 1-based, may exceed rk
    for (int i = 0; i < m.size(); ++i) {
        const Edge& e = m.edge(i);
        if (block_of(e.back()) > r * k) continue;
        bool distinct = true;
        for (size_t a = 1; a < e.size(); ++a)
            if (block_of(e[a]) == block_of(e[a - 1])) distinct = false;
        if (!distinct) continue;
        // candidate spanning edge: blocks must equal some template edge
        for (int ti = 0; ti < k; ++ti) {
            const Edge& te = tmpl.edge(ti);
            bool match = true;
            for (int a = 0; a < r; ++a)
                if (block_of(e[static_cast<size_t>(a)]) != te[static_cast<size_t>(a)]) {
                    match = false;
                    break;
                }
            if (match) {
                if (chosen[static_cast<size_t>(ti)] == -1) chosen[static_cast<size_t>(ti)] = i;
                break;
            }
        }
    }
    std::vector<int> picked;
    for (int ti = 0; ti < k; ++ti)
        if (chosen[static_cast<size_t>(ti)] != -1) picked.push_back(chosen[static_cast<size_t>(ti)]);
    std::sort(picked.begin(), picked.end());
    return {p, picked};
}

Method parse_method(const std::string& name) {
    if (name == "exact") return Method::exact;
    if (name == "template") return Method::template_spanning;
    if (name == "short_edge") return Method::short_edge;
    throw std::invalid_argument("unknown method: " + name);
}

namespace {

int measure(const Matching& m, const Pattern& p, Method method, int clique_guard,
            uint64_t /*seed*/) {
    switch (method) {
        case Method::exact: {
            if (m.uniformity() == 2) {
                if (p.word() == "AABB") return max_line_fast(m).size();
                if (p.word() == "ABBA") return max_stack_fast(m).size();
                if (p.word() == "ABAB") return max_wave_fast(m).size();
            }
            if (p == Pattern::alignment(m.uniformity())) return max_line_fast(m).size();
            return max_clique(m, p, clique_guard).size();
        }
        case Method::template_spanning: {
            double nn = m.size();
            int t = std::max<int>(1, static_cast<int>(std::llround(
                                         std::pow(nn, 1.0 - 1.0 / m.uniformity()))));
            int k = std::max(1, m.size() / t);
            CliqueCertificate c = template_clique(m, p, k, t);
            if (!check_certificate(m, c)) throw InternalError("template certificate invalid");
            return c.size();
        }
        case Method::short_edge: {
            if (p != Pattern::alignment(m.uniformity()))
                throw std::invalid_argument("short_edge measures lines only");
            double nn = m.size();
            int bound = std::max<int>(1, static_cast<int>(std::llround(
                                             std::pow(nn, 1.0 - 1.0 / m.uniformity()))));
            CliqueCertificate c = short_edge_line(m, bound);
            if (!check_certificate(m, c)) throw InternalError("short-edge certificate invalid");
            return c.size();
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ExperimentReport run_experiment(int r, const Pattern& p, const std::vector<int>& n_grid,
                                int trials, uint64_t seed, Method method, int clique_guard) {
    if (p.uniformity() != r) throw std::invalid_argument("pattern uniformity mismatch");
    if (trials < 1 || n_grid.empty())
        throw std::invalid_argument("experiment needs trials >= 1 and a nonempty grid");
    ExperimentReport rep;
    rep.r = r;
    rep.pattern = p;
    rep.seed = seed;
    rep.trials = trials;
    rep.n_grid = n_grid;
    rep.method = method == Method::exact
                     ? "exact"
                     : (method == Method::template_spanning ? "template" : "short_edge");

    double rfact = 1;
    for (int i = 2; i <= r; ++i) rfact *= i;
    const double e_const = std::exp(1.0);

    for (size_t g = 0; g < n_grid.size(); ++g) {
        int n = n_grid[g];
        std::vector<int> sizes;
        sizes.reserve(static_cast<size_t>(trials));
        double cap = 1.5 * e_const * std::pow(rfact, 1.0 / r) * std::pow(n, 1.0 / r) / r;
        for (int t = 0; t < trials; ++t) {
            uint64_t s = derive_seed(seed, static_cast<uint64_t>(n), static_cast<uint64_t>(t));
            Matching m = sample_permutational(r, n, s);
            int size = measure(m, p, method, clique_guard, s);
            if (size > cap) ++rep.upper_violations;
            sizes.push_back(size);
        }
        double mean = std::accumulate(sizes.begin(), sizes.end(), 0.0) / trials;
        double var = 0;
        for (int s : sizes) var += (s - mean) * (s - mean);
        rep.mean.push_back(mean);
        rep.stddev.push_back(trials > 1 ? std::sqrt(var / (trials - 1)) : 0.0);
        rep.sizes.push_back(std::move(sizes));
    }

    // least-squares slope of log(mean) against log(n)
    const size_t g = n_grid.size();
    if (g >= 2) {
        double sx = 0, sy = 0;
        std::vector<double> xs(g), ys(g);
        for (size_t i = 0; i < g; ++i) {
            xs[i] = std::log(static_cast<double>(n_grid[i]));
            ys[i] = std::log(std::max(rep.mean[i], 1e-9));
            sx += xs[i];
            sy += ys[i];
        }
        double mx = sx / g, my = sy / g, sxx = 0, sxy = 0;
        for (size_t i = 0; i < g; ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        rep.slope = sxy / sxx;
        double ss_res = 0;
        for (size_t i = 0; i < g; ++i) {
            double fit = my + rep.slope * (xs[i] - mx);
            ss_res += (ys[i] - fit) * (ys[i] - fit);
        }
        rep.slope_stderr = g > 2 ? std::sqrt(ss_res / (g - 2) / sxx) : 0.0;
    }
    return rep;
}

}  // namespace ordmatch
