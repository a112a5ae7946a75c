#include "ordmatch/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "ordmatch/constructions.hpp"
#include "ordmatch/extract.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/oracle.hpp"
#include "ordmatch/pattern_algebra.hpp"
#include "ordmatch/sampling.hpp"

namespace ordmatch::verify {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream log;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << (log.tellp() > 0 ? "; " : "") << what;
        }
    }
};

long long pow_ll(long long b, int e) {
    long long v = 1;
    while (e-- > 0) v *= b;
    return v;
}

// --- criterion 1: pattern censuses -------------------------------------

void c1(Check& c) {
    const long long pattern_counts[] = {3, 10, 35, 126};
    const long long gamma[] = {0, 1, 4, 13};
    for (int r = 2; r <= 5; ++r) {
        auto pats = enumerate_patterns(r);
        c.expect(static_cast<long long>(pats.size()) == pattern_counts[r - 2],
                 "pattern count r=" + std::to_string(r));
        long long coll = 0, partite = 0;
        for (const Pattern& p : pats) {
            if (is_collectable(p)) ++coll;
            if (is_r_partite(p)) ++partite;
        }
        c.expect(coll == pow_ll(3, r - 1), "collectable count r=" + std::to_string(r));
        c.expect(static_cast<long long>(collectable_index(r).table.size()) == coll,
                 "index size r=" + std::to_string(r));
        c.expect(partite == pow_ll(2, r - 1), "r-partite count r=" + std::to_string(r));
        if (r >= 3)
            c.expect(static_cast<long long>(big_brothers(r).size()) == pow_ll(3, r - 3),
                     "big-brother count r=" + std::to_string(r));
        c.expect(total_maturity(r) == gamma[r - 2], "gamma r=" + std::to_string(r));
    }
}

// --- criterion 2: table reproduction ------------------------------------

struct TableRow {
    const char* word;
    const char* left;
    const char* right;
    bool collectable;
    bool bb;
};

const TableRow kTable3[] = {
    {"AAABBB", "AABB", "AABB", true, true},   {"AABABB", "AABB", "AABB", false, false},
    {"AABBBA", "AABB", "ABBA", true, false},  {"AABBAB", "AABB", "ABAB", true, false},
    {"ABBBAA", "ABBA", "BBAA", true, false},  {"ABBAAB", "ABBA", "BAAB", true, false},
    {"ABBABA", "ABBA", "BABA", true, false},  {"ABAABB", "ABAB", "AABB", true, false},
    {"ABABBA", "ABAB", "ABBA", true, false},  {"ABABAB", "ABAB", "ABAB", true, false},
};

const TableRow kTable4[] = {
    {"AAAABBBB", "AAABBB", "AABB", true, true},
    {"AAABABBB", "AAABBB", "AABB", false, false},
    {"AAABBABB", "AAABBB", "AABB", false, false},
    {"AAABBBBA", "AAABBB", "ABBA", true, false},
    {"AAABBBAB", "AAABBB", "ABAB", true, false},
    {"AABBBBAA", "AABBBA", "BBAA", true, false},
    {"AABBBAAB", "AABBBA", "BAAB", true, false},
    {"AABBBABA", "AABBBA", "BABA", true, false},
    {"AABBAABB", "AABBAB", "AABB", true, false},
    {"AABBABBA", "AABBAB", "ABBA", true, false},
    {"AABBABAB", "AABBAB", "ABAB", true, false},
    {"ABBBBAAA", "ABBBAA", "BBAA", true, true},
    {"ABBBABAA", "ABBBAA", "BBAA", false, false},
    {"ABBBAAAB", "ABBBAA", "BAAB", true, false},
    {"ABBBAABA", "ABBBAA", "BABA", true, false},
    {"ABBAAABB", "ABBAAB", "AABB", true, false},
    {"ABBAABBA", "ABBAAB", "ABBA", true, false},
    {"ABBAABAB", "ABBAAB", "ABAB", true, false},
    {"ABBABBAA", "ABBABA", "BBAA", true, false},
    {"ABBABAAB", "ABBABA", "BAAB", true, false},
    {"ABBABABA", "ABBABA", "BABA", true, false},
    {"ABAAABBB", "ABAABB", "AABB", true, true},
    {"ABAABABB", "ABAABB", "AABB", false, false},
    {"ABAABBBA", "ABAABB", "ABBA", true, false},
    {"ABAABBAB", "ABAABB", "ABAB", true, false},
    {"ABABBBAA", "ABABBA", "BBAA", true, false},
    {"ABABBAAB", "ABABBA", "BAAB", true, false},
    {"ABABBABA", "ABABBA", "BABA", true, false},
    {"ABABAABB", "ABABAB", "AABB", true, false},
    {"ABABABBA", "ABABAB", "ABBA", true, false},
    {"ABABABAB", "ABABAB", "ABAB", true, false},
    {"AABAABBB", "AABABB", "AABB", false, false},
    {"AABABABB", "AABABB", "AABB", false, false},
    {"AABABBAB", "AABABB", "ABAB", false, false},
    {"AABABBBA", "AABABB", "ABBA", false, false},
};

void check_table(Check& c, int r, const TableRow* fixture, size_t rows) {
    auto atlas = pattern_atlas(r);
    c.expect(atlas.size() == rows, "row count r=" + std::to_string(r));
    if (atlas.size() != rows) return;
    for (size_t k = 0; k < rows; ++k) {
        const AtlasRow& a = atlas[k];
        const TableRow& f = fixture[k];
        c.expect(a.word == f.word, "row " + std::to_string(k + 1) + " word " + a.word +
                                       " != " + f.word);
        c.expect(a.dec_left == f.left && a.dec_right == f.right,
                 std::string("row dec mismatch at ") + f.word);
        c.expect(a.collectable == f.collectable, std::string("collectability at ") + f.word);
        c.expect(a.big_brother == f.bb, std::string("bb marker at ") + f.word);
    }
}

void c2(Check& c) {
    check_table(c, 3, kTable3, std::size(kTable3));
    check_table(c, 4, kTable4, std::size(kTable4));
}

// --- criterion 3: collectable <=> 3-clique exists, exhaustively ---------

void c3(Check& c) {
    for (int r : {3, 4}) {
        std::map<std::string, bool> has_triple;
        for (const Pattern& p : enumerate_patterns(r)) has_triple[p.word()] = false;
        for_each_matching(r, 3, [&](const Matching& m) {
            Pattern p01 = m.pair_pattern(0, 1);
            if (p01 == m.pair_pattern(0, 2) && p01 == m.pair_pattern(1, 2))
                has_triple[p01.word()] = true;
            return true;
        });
        for (const Pattern& p : enumerate_patterns(r)) {
            bool splittable = is_collectable(p);
            c.expect(has_triple[p.word()] == splittable,
                     "3-clique dichotomy fails at " + p.word() + " r=" + std::to_string(r));
            if (splittable) {
                Matching k3 = canonical_clique(p, 3);
                c.expect(check_certificate(k3, {p, {0, 1, 2}}),
                         "canonical 3-clique invalid for " + p.word());
            }
        }
    }
}

// --- criterion 4: base-case sharpness ------------------------------------

void c4(Check& c) {
    std::vector<std::array<int, 3>> triples;
    for (int l = 1; l <= 3; ++l)
        for (int s = 1; s <= 3; ++s)
            for (int w = 1; w <= 3; ++w)
                if (l * s * w <= 8) triples.push_back({l, s, w});

    std::map<int, std::vector<std::array<int, 3>>> by_n;
    for (auto& t : triples) by_n[t[0] * t[1] * t[2] + 1].push_back(t);

    for (auto& [n, group] : by_n) {
        long long count = 0;
        for_each_matching(2, n,
                          [&](const Matching& m) {
                              ++count;
                              for (auto& t : group)
                                  es_base2(m, t[0], t[1], t[2]);  // self-checks or throws
                              return true;
                          },
                          40'000'000);
        c.expect(count == alpha(2, n), "enumeration count at n=" + std::to_string(n));
    }

    for (auto& t : triples) {
        int l = t[0], s = t[1], w = t[2];
        Matching host = layered_construction(
            2, {{Pattern::from_word("AABB"), l},
                {Pattern::from_word("ABBA"), s},
                {Pattern::from_word("ABAB"), w}});
        c.expect(host.size() == l * s * w, "construction size");
        c.expect(max_line_fast(host).size() == l, "line max in L[S[W]]");
        c.expect(max_stack_fast(host).size() == s, "stack max in L[S[W]]");
        c.expect(max_wave_fast(host).size() == w, "wave max in L[S[W]]");
        c.expect(max_clique(host, Pattern::from_word("AABB")).size() == l, "oracle line");
        c.expect(max_clique(host, Pattern::from_word("ABBA")).size() == s, "oracle stack");
        c.expect(max_clique(host, Pattern::from_word("ABAB")).size() == w, "oracle wave");
        bool threw = false;
        try {
            es_base2(host, l, s, w);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        c.expect(threw, "precondition must fail at n = l*s*w");
    }
}

// --- criterion 5: extractor soundness on random hosts --------------------

void c5(Check& c) {
    const uint64_t seed = 20240817;
    long long failures = 0, runs = 0;
    auto random_params = [&](Rng& rng, int r) {
        long long slots = pow_ll(3, r - 1);
        std::vector<Rational> xs(static_cast<size_t>(slots), Rational(1));
        int boosted = static_cast<int>(rng.below(3)) + 1;
        for (int b = 0; b < boosted; ++b) {
            size_t at = static_cast<size_t>(rng.below(static_cast<uint64_t>(slots)));
            xs[at] = Rational(static_cast<long long>(rng.below(7)) + 4, 4);  // 1..10/4
        }
        return xs;
    };
    struct Case {
        int r;
        int trials;
    };
    for (Case cs : {Case{2, 4000}, Case{3, 3000}, Case{4, 3000}}) {
        for (int t = 0; t < cs.trials; ++t) {
            Rng rng(derive_seed(seed, static_cast<uint64_t>(cs.r), static_cast<uint64_t>(t)));
            auto xs = random_params(rng, cs.r);
            ParamVector pv = ParamVector::of(cs.r, xs);
            Rational prod = pv.product();
            long long floor_prod =
                static_cast<long long>(boost::multiprecision::numerator(prod) /
                                       boost::multiprecision::denominator(prod));
            int n = static_cast<int>(floor_prod) + 1 + static_cast<int>(rng.below(6));
            Matching host;
            if (cs.r == 3 && t % 50 == 17)
                host = p1star_chain(n);
            else if (cs.r == 2 && t % 50 == 17)
                host = layered_construction(2, {{Pattern::from_word("AABB"), (n + 2) / 3 + 1},
                                                {Pattern::from_word("ABBA"), 2},
                                                {Pattern::from_word("ABAB"), 2}});
            else
                host = sample_permutational(cs.r, n, rng.next());
            if (!(Rational(host.size()) > prod)) continue;
            ++runs;
            try {
                ExtractionResult res = extract_clique(host, pv);
                if (!check_certificate(host, res.certificate) ||
                    !(Rational(res.certificate.size()) > res.guarantee))
                    ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    c.expect(runs >= 9000, "expected ~10^4 extraction runs, got " + std::to_string(runs));
    c.expect(failures == 0, std::to_string(failures) + " soundness failures");
    c.log << (c.log.tellp() > 0 ? "; " : "") << runs << " extractions";
}

// --- criterion 6: exhaustive diagonal check at (3,4) ---------------------

void c6(Check& c) {
    long long count = 0;
    bool all_have = true;
    for_each_matching(3, 4, [&](const Matching& m) {
        ++count;
        for (int i = 0; i < 4 && all_have; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (is_collectable(m.pair_pattern(i, j))) return true;
        all_have = false;
        return false;
    });
    c.expect(all_have, "a matching of M_4^(3) lacks a collectable pair");
    c.expect(!all_have || count == 15400, "expected 15400 matchings, saw " + std::to_string(count));
}

// --- criterion 7: counting formulas ---------------------------------------

void c7(Check& c) {
    for (int r = 2; r <= 6; ++r)
        for (int n = 1; r * n <= 12; ++n) {
            int V = r * n;
            for (int s = 2; s <= V; ++s) {
                // count subsets of each span bound by brute force
                std::vector<long long> by_span(static_cast<size_t>(V), 0);  // d(S) index
                std::vector<int> comb(static_cast<size_t>(s));
                auto rec = [&](auto&& self, int start, int depth) -> void {
                    if (depth == s) {
                        by_span[static_cast<size_t>(comb[static_cast<size_t>(s - 1)] -
                                                    comb[0])] += 1;
                        return;
                    }
                    for (int v = start; v <= V; ++v) {
                        comb[static_cast<size_t>(depth)] = v;
                        self(self, v + 1, depth + 1);
                    }
                };
                rec(rec, 1, 0);
                long long acc = 0;
                for (int m = s - 1; m <= V - 1; ++m) {
                    acc += by_span[static_cast<size_t>(m)];
                    c.expect(f_count(r, s, n, m) == acc,
                             "f_count mismatch at r=" + std::to_string(r) + " s=" +
                                 std::to_string(s) + " m=" + std::to_string(m));
                }
            }
        }

    // expectation formula against exhaustive censuses
    {
        std::map<std::string, long long> totals;
        long long hosts = 0;
        for_each_matching(2, 3, [&](const Matching& m) {
            ++hosts;
            for (auto& [p, cnt] : census(m)) totals[p.word()] += cnt;
            return true;
        });
        for (const Pattern& p : collectable_index(2).table) {
            Rational expected = expected_cliques(2, 3, 2, p);
            c.expect(expected == 1, "expected_cliques(2,3,2) must be 1");
            c.expect(Rational(totals[p.word()]) == expected * hosts,
                     "census mean mismatch at " + p.word());
        }
    }
    {
        std::map<std::string, long long> totals;
        long long hosts = 0;
        for_each_matching(3, 4, [&](const Matching& m) {
            ++hosts;
            for (auto& [p, cnt] : census(m)) totals[p.word()] += cnt;
            return true;
        });
        c.expect(hosts == 15400, "alpha(3,4)");
        for (const Pattern& p : collectable_index(3).table)
            c.expect(Rational(totals[p.word()]) == expected_cliques(3, 4, 2, p) * hosts,
                     "census mean mismatch at " + p.word());
    }
}

// --- criterion 8: sampler uniformity --------------------------------------

double chi2_critical(int df, double z = 3.090232306) {
    double a = 2.0 / (9.0 * df);
    double v = 1.0 - a + z * std::sqrt(a);
    return df * v * v * v;
}

void c8(Check& c) {
    const int draws = 30000;
    const uint64_t seed = 777;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        std::map<std::string, int> cell;
        int cells = 0;
        for_each_matching(r, n, [&](const Matching& m) {
            cell[m.word()] = cells++;
            return true;
        });
        std::vector<long long> counts_perm(static_cast<size_t>(cells), 0);
        std::vector<long long> counts_online(static_cast<size_t>(cells), 0);
        for (int t = 0; t < draws; ++t) {
            uint64_t s1 = derive_seed(seed, static_cast<uint64_t>(100 * r + n), static_cast<uint64_t>(t));
            uint64_t s2 = derive_seed(seed + 1, static_cast<uint64_t>(100 * r + n), static_cast<uint64_t>(t));
            ++counts_perm[static_cast<size_t>(cell.at(sample_permutational(r, n, s1).word()))];
            ++counts_online[static_cast<size_t>(cell.at(sample_online(r, n, s2).word()))];
        }
        double expected = static_cast<double>(draws) / cells;
        double chi_p = 0, chi_o = 0, chi_two = 0;
        for (int k = 0; k < cells; ++k) {
            double dp = counts_perm[static_cast<size_t>(k)] - expected;
            double dn = counts_online[static_cast<size_t>(k)] - expected;
            chi_p += dp * dp / expected;
            chi_o += dn * dn / expected;
            double a = static_cast<double>(counts_perm[static_cast<size_t>(k)]);
            double b = static_cast<double>(counts_online[static_cast<size_t>(k)]);
            if (a + b > 0) chi_two += (a - b) * (a - b) / (a + b);
        }
        double crit = chi2_critical(cells - 1);
        std::string at = " at (" + std::to_string(r) + "," + std::to_string(n) + ")";
        c.expect(chi_p < crit, "permutational sampler fails chi-square" + at);
        c.expect(chi_o < crit, "online sampler fails chi-square" + at);
        c.expect(chi_two < crit, "schemes disagree" + at);
    }
}

// --- criterion 9: random scaling -------------------------------------------

void c9(Check& c) {
    const uint64_t seed = 424242;
    struct Target {
        const char* word;
        double reference;  // expected mean at n=400
    };
    const double root800 = std::sqrt(800.0);
    const double line_ref = 2.0 * std::sqrt(400.0 / 3.14159265358979323846);
    for (Target tg : {Target{"AABB", line_ref}, Target{"ABBA", root800}, Target{"ABAB", root800}}) {
        ExperimentReport rep = run_experiment(2, Pattern::from_word(tg.word),
                                              {50, 100, 200, 400}, 200, seed, Method::exact);
        c.expect(std::abs(rep.slope - 0.5) <= 0.1,
                 std::string(tg.word) + " slope " + std::to_string(rep.slope));
        double mean400 = rep.mean.back();
        c.expect(std::abs(mean400 - tg.reference) <= 0.15 * tg.reference,
                 std::string(tg.word) + " mean at n=400 is " + std::to_string(mean400) +
                     " vs " + std::to_string(tg.reference));
        c.expect(rep.upper_violations == 0, std::string(tg.word) + " upper-bound violations");
    }
    ExperimentReport rep3 = run_experiment(3, Pattern::from_word("ABABAB"),
                                           {1000, 10000, 100000}, 100, seed,
                                           Method::template_spanning);
    c.expect(std::abs(rep3.slope - 1.0 / 3.0) <= 0.1,
             "template slope " + std::to_string(rep3.slope));
}

// --- criterion 10: blow-up fidelity ---------------------------------------

void c10(Check& c) {
    Matching M = parse_word("ABACCBABC");
    Matching N = parse_word("XYZYZXZXY");
    Matching MN = blow_up(M, N);
    // the 6th block reads HIG: the copy over each outer edge is order
    // isomorphic to N, which pins every letter
    c.expect(MN.word() == "ABCDEFBCAGHIHIGEFDCABFDEIGH",
             "blow-up word is " + MN.word());
    c.expect(MN.size() == M.size() * N.size(), "size multiplicativity on the example");
    c.expect(inheritance_check(M, N), "M[N] must be M-inheritable (N is 3-partite)");

    Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        int r = 2 + static_cast<int>(rng.below(2));
        int a = 1 + static_cast<int>(rng.below(4));
        int b = 1 + static_cast<int>(rng.below(4));
        Matching m1 = sample_permutational(r, a, rng.next());
        Matching m2 = sample_permutational(r, b, rng.next());
        c.expect(blow_up(m1, m2).size() == a * b, "random multiplicativity");
    }

    std::vector<std::pair<Pattern, int>> layers = {
        {Pattern::from_word("AAABBB"), 2}, {Pattern::from_word("AABBBA"), 2},
        {Pattern::from_word("ABBAAB"), 2}, {Pattern::from_word("ABBABA"), 2},
        {Pattern::from_word("ABABBA"), 2}, {Pattern::from_word("ABABAB"), 2}};
    Matching tower = layered_construction(3, layers);
    c.expect(tower.size() == 64, "six-factor tower size");
    for (auto& [p, k] : layers)
        c.expect(max_clique(tower, p).size() == k,
                 "tower max for " + p.word() + " must be " + std::to_string(k));
}

// --- criterion 11: chains ---------------------------------------------------

void c11(Check& c) {
    Matching p3chain = chain(Pattern::from_word("AABBAB"), 7);
    c.expect(p3chain.word() == "AABBACCBDDCEEDFFEGGFG",
             "P3-chain word is " + p3chain.word());
    for (int n : {4, 5, 6}) {
        Matching m = p1star_chain(n);
        PatternCensus cs = census(m);
        c.expect(cs.size() == 2 && cs.count(Pattern::from_word("AAABBB")) &&
                     cs.count(Pattern::from_word("AABABB")),
                 "chain census at n=" + std::to_string(n));
        c.expect(max_line_fast(m).size() == (n + 1) / 2,
                 "chain max line at n=" + std::to_string(n));
        c.expect(max_clique(m, Pattern::from_word("AAABBB")).size() == (n + 1) / 2,
                 "oracle max line at n=" + std::to_string(n));
    }
}

struct Entry {
    const char* id;
    const char* name;
    void (*fn)(Check&);
};

const Entry kEntries[] = {
    {"1", "pattern_censuses", c1},  {"2", "tables", c2},
    {"3", "clique_dichotomy", c3},  {"4", "base2_sharpness", c4},
    {"5", "extractor_soundness", c5}, {"6", "diagonal_exhaustive", c6},
    {"7", "counting_formulas", c7}, {"8", "sampler_uniformity", c8},
    {"9", "random_scaling", c9},    {"10", "blowup_fidelity", c10},
    {"11", "chains", c11},
};

}  // namespace

std::vector<std::string> criterion_names() {
    std::vector<std::string> out;
    for (const Entry& e : kEntries) out.push_back(e.name);
    return out;
}

CriterionResult run_criterion(const std::string& id_or_name) {
    for (const Entry& e : kEntries) {
        if (id_or_name != e.id && id_or_name != e.name) continue;
        CriterionResult res;
        res.id = e.id;
        res.name = e.name;
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            e.fn(check);
        } catch (const std::exception& ex) {
            check.ok = false;
            check.log << (check.log.tellp() > 0 ? "; " : "") << "exception: " << ex.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        res.pass = check.ok;
        res.detail = check.log.str();
        return res;
    }
    throw std::invalid_argument("unknown criterion: " + id_or_name);
}

std::vector<CriterionResult> run_all(const std::vector<std::string>& only) {
    std::vector<CriterionResult> out;
    for (const Entry& e : kEntries) {
        if (!only.empty() &&
            std::find(only.begin(), only.end(), std::string(e.id)) == only.end() &&
            std::find(only.begin(), only.end(), std::string(e.name)) == only.end())
            continue;
        out.push_back(run_criterion(e.id));
    }
    return out;
}

}  // namespace ordmatch::verify
