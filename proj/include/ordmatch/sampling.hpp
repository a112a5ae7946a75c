#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ordmatch/matching.hpp"
#include "ordmatch/oracle.hpp"
#include "ordmatch/rational.hpp"

namespace ordmatch {

// Deterministic cross-platform generator: the std::mt19937_64 engine is
// fully specified by the standard; bounded draws use rejection sampling
// because uniform_int_distribution is not portable.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}
    uint64_t next() { return engine_(); }
    uint64_t below(uint64_t bound);  // uniform in [0, bound)

private:
    std::mt19937_64 engine_;
};

// Stable per-trial seed derivation (splitmix64 over the mixed inputs).
uint64_t derive_seed(uint64_t seed, uint64_t stream, uint64_t trial);

// Uniform over M_n^{(r)}: shuffle [rn], cut into n consecutive r-blocks.
Matching sample_permutational(int r, int n, uint64_t seed);

// Uniform via the online scheme: repeatedly match the first uncovered vertex
// with a uniform (r-1)-subset of the rest.
Matching sample_online(int r, int n, uint64_t seed);

// Number of s-subsets of [rn] with max - min <= m:
// rn*C(m, s-1) - (s-1)*C(m+1, s).
BigInt f_count(int r, int s, int n, int m);

// Expected number of P-clique placements of size k in a uniform random
// matching: C(rn, rk) * alpha(r, n-k) / alpha(r, n), for collectable P.
Rational expected_cliques(int r, int n, int k, const Pattern& p);

// Keep edges of length <= max_len, then repeatedly delete the edge meeting
// the most non-alignments (ties to the larger left end) until a line remains.
CliqueCertificate short_edge_line(const Matching& m, int max_len);

// Plant canonical_clique(p, k) on rk consecutive width-t blocks and collect,
// per template edge, the matching edge spanning its blocks (smallest left
// endpoint wins). Spanning edges pairwise form p by the block structure.
CliqueCertificate template_clique(const Matching& m, const Pattern& p, int k, int t);

enum class Method { exact, template_spanning, short_edge };
Method parse_method(const std::string& name);

struct ExperimentReport {
    int r = 0;
    Pattern pattern;
    std::string method;
    uint64_t seed = 0;
    int trials = 0;
    std::vector<int> n_grid;
    std::vector<std::vector<int>> sizes;  // [grid point][trial]
    std::vector<double> mean, stddev;
    double slope = 0, slope_stderr = 0;
    long long upper_violations = 0;  // sizes above 1.5 * e (r!)^{1/r} n^{1/r} / r
};

// Largest P-clique sizes in random matchings across an n-grid, with a
// log-log fit of mean size against n. Every certificate is validated.
ExperimentReport run_experiment(int r, const Pattern& p, const std::vector<int>& n_grid,
                                int trials, uint64_t seed, Method method,
                                int clique_guard = kDefaultCliqueGuard);

}  // namespace ordmatch
