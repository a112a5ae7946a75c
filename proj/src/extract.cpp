#include "ordmatch/extract.hpp"

#include <algorithm>

#include "ordmatch/oracle.hpp"

namespace ordmatch {

namespace {

long long pow3(int e) {
    long long v = 1;
    while (e-- > 0) v *= 3;
    return v;
}

int trailing_run(const std::string& w) {
    size_t k = w.size();
    while (k > 1 && w[k - 2] == w[k - 1]) --k;
    return static_cast<int>(w.size() - k + 1);
}

void self_check(const Matching& m, const ExtractionResult& res) {
    if (!check_certificate(m, res.certificate))
        throw InternalError("extraction produced an invalid certificate");
    if (!(Rational(res.certificate.size()) > res.guarantee))
        throw InternalError("extraction missed its guarantee");
}

}  // namespace

ParamVector ParamVector::of(int r, std::vector<Rational> values) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (static_cast<long long>(values.size()) != pow3(r - 1))
        throw std::invalid_argument("parameter vector needs 3^(r-1) entries");
    for (const Rational& v : values)
        if (!(v > 0)) throw std::invalid_argument("parameters must be positive");
    return {r, std::move(values)};
}

ParamVector ParamVector::uniform(int r, const Rational& x) {
    return of(r, std::vector<Rational>(static_cast<size_t>(pow3(r - 1)), x));
}

ParamVector ParamVector::integers(int r, const std::vector<long long>& a) {
    std::vector<Rational> values(a.begin(), a.end());
    return of(r, std::move(values));
}

Rational ParamVector::product() const {
    Rational p = 1;
    for (const Rational& v : values) p *= v;
    return p;
}

ExtractionResult es_base2(const Matching& m, const Rational& x1, const Rational& x2,
                          const Rational& x3) {
    if (m.uniformity() != 2) throw std::invalid_argument("es_base2 needs uniformity 2");
    const int n = m.size();
    if (!(Rational(n) > x1 * x2 * x3))
        throw std::invalid_argument("es_base2 precondition n > x1*x2*x3 violated");

    std::vector<int> rights(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rights[static_cast<size_t>(i)] = m.edge(i)[1];

    ExtractionResult res;
    std::vector<int> lds = longest_decreasing_indices(rights);
    if (Rational(static_cast<long long>(lds.size())) > x2) {
        res = {2, {Pattern::from_word("ABBA"), std::move(lds)}, x2};
        self_check(m, res);
        return res;
    }

    std::vector<int> landscape = longest_increasing_indices(rights);
    // Greedy wave decomposition: each wave is the leftmost remaining edge
    // plus the edges whose left ends fall strictly inside it.
    std::vector<std::vector<int>> waves;
    for (size_t pos = 0; pos < landscape.size();) {
        int head = landscape[pos];
        std::vector<int> wave{head};
        size_t next = pos + 1;
        while (next < landscape.size() && m.edge(landscape[next])[0] < m.edge(head)[1])
            wave.push_back(landscape[next++]);
        waves.push_back(std::move(wave));
        pos = next;
    }
    if (Rational(static_cast<long long>(waves.size())) > x1) {
        std::vector<int> line;
        for (const auto& w : waves) line.push_back(w.front());
        res = {1, {Pattern::from_word("AABB"), std::move(line)}, x1};
    } else {
        size_t widest = 0;
        for (size_t k = 1; k < waves.size(); ++k)
            if (waves[k].size() > waves[widest].size()) widest = k;
        res = {3, {Pattern::from_word("ABAB"), waves[widest]}, x3};
    }
    self_check(m, res);
    return res;
}

CliqueCertificate halve_family(const Matching& m, const std::vector<int>& family_indices,
                               const Pattern& big_brother) {
    auto [q, right] = decompose(big_brother);
    if (right_parent_selector(right) != 1 || dec_inverse(q, 1).size() < 2 ||
        dec_inverse(q, 1).front() != big_brother)
        throw std::invalid_argument("pattern is not a big brother: " + big_brother.word());
    std::vector<Pattern> family = dec_inverse(q, 1);
    for (size_t a = 0; a < family_indices.size(); ++a)
        for (size_t b = a + 1; b < family_indices.size(); ++b) {
            Pattern p = m.pair_pattern(family_indices[a], family_indices[b]);
            if (std::find(family.begin(), family.end(), p) == family.end())
                throw std::invalid_argument("not a family clique: pair forms " + p.word());
        }
    std::vector<int> odd;
    for (size_t k = 0; k < family_indices.size(); k += 2) odd.push_back(family_indices[k]);
    CliqueCertificate cert{big_brother, std::move(odd)};
    if (!check_certificate(m, cert))
        throw InternalError("family halving left a mixed clique");
    return cert;
}

ExtractionResult extract_clique(const Matching& m, const ParamVector& xs) {
    if (xs.r != m.uniformity())
        throw std::invalid_argument("parameter vector uniformity differs from the matching");
    const int n = m.size();
    if (!(Rational(n) > xs.product()))
        throw std::invalid_argument("extract_clique precondition n > product(x) violated");
    const int r = m.uniformity();
    if (r == 2) return es_base2(m, xs.values[0], xs.values[1], xs.values[2]);

    ParamVector ys;
    ys.r = r - 1;
    for (size_t i = 0; i + 2 < xs.values.size(); i += 3)
        ys.values.push_back(xs.values[i] * xs.values[i + 1] * xs.values[i + 2]);

    // Levels share edge indices: dropping last vertices keeps left ends.
    Matching m1 = drop_last_vertex(m);
    ExtractionResult inner = extract_clique(m1, ys);
    const int i = inner.pattern_index;
    const Pattern q = collectable_index(r - 1).at(i);
    const int m_q = maturity(q);

    auto [m2, host_index] = last_two_matching(m, inner.certificate.edge_indices);
    const size_t base = static_cast<size_t>(3 * (i - 1));
    Rational z1 = xs.values[base] / pow2(m_q);
    ExtractionResult tail = es_base2(m2, z1, xs.values[base + 1], xs.values[base + 2]);
    const int j = tail.pattern_index;

    std::vector<int> chosen;
    for (int idx : tail.certificate.edge_indices)
        chosen.push_back(host_index[static_cast<size_t>(idx)]);
    std::sort(chosen.begin(), chosen.end());

    const Pattern p = collectable_index(r).at(3 * (i - 1) + j);
    ExtractionResult res;
    res.pattern_index = 3 * (i - 1) + j;
    if (j == 1 && trailing_run(q.word()) >= 2) {
        // family clique; halve unless it happens to be pure already
        if (check_certificate(m, {p, chosen}))
            res.certificate = {p, std::move(chosen)};
        else
            res.certificate = halve_family(m, chosen, p);
        res.guarantee = xs.values[base] / pow2(m_q + 1);
        if (maturity(p) != m_q + 1) throw InternalError("big-brother maturity mismatch");
    } else {
        res.certificate = {p, std::move(chosen)};
        res.guarantee = xs.values[base + static_cast<size_t>(j) - 1];
        if (maturity(p) != 0) throw InternalError("only-child maturity must be zero");
    }
    self_check(m, res);
    return res;
}

namespace {

ExtractionResult extract_clean_rec(const Matching& m, const std::vector<long long>& a) {
    const int r = m.uniformity();
    if (!is_clean(m)) throw InternalError("clean recursion reached a non-clean matching");
    if (r == 2) return es_base2(m, Rational(a[0]), Rational(a[1]), Rational(a[2]));

    std::vector<long long> b;
    for (size_t i = 0; i + 2 < a.size(); i += 3) b.push_back(a[i] * a[i + 1] * a[i + 2]);

    Matching m1 = drop_last_vertex(m);
    ExtractionResult inner = extract_clean_rec(m1, b);
    const int i = inner.pattern_index;

    auto [m2, host_index] = last_two_matching(m, inner.certificate.edge_indices);
    const size_t base = static_cast<size_t>(3 * (i - 1));
    ExtractionResult tail = es_base2(m2, Rational(a[base]), Rational(a[base + 1]),
                                     Rational(a[base + 2]));
    const int j = tail.pattern_index;

    std::vector<int> chosen;
    for (int idx : tail.certificate.edge_indices)
        chosen.push_back(host_index[static_cast<size_t>(idx)]);
    std::sort(chosen.begin(), chosen.end());

    // In a clean matching the big-brother branch cannot produce siblings, so
    // every pair already equals the unique collectable child.
    ExtractionResult res;
    res.pattern_index = 3 * (i - 1) + j;
    res.certificate = {collectable_index(r).at(res.pattern_index), std::move(chosen)};
    res.guarantee = Rational(a[base + static_cast<size_t>(j) - 1]);
    self_check(m, res);
    return res;
}

}  // namespace

ExtractionResult extract_clean(const Matching& m, const std::vector<long long>& a) {
    const int r = m.uniformity();
    if (static_cast<long long>(a.size()) != pow3(r - 1))
        throw std::invalid_argument("clean extraction needs 3^(r-1) integer parameters");
    for (long long v : a)
        if (v < 1) throw std::invalid_argument("parameters must be positive integers");
    if (!is_clean(m)) throw std::invalid_argument("matching is not clean");
    Rational prod = 1;
    for (long long v : a) prod *= v;
    if (!(Rational(m.size()) >= prod + 1))
        throw std::invalid_argument("extract_clean precondition n >= product(a)+1 violated");
    return extract_clean_rec(m, a);
}

namespace {

// Midpoint-side classification shared by the nesting and crossing branches of
// the improved r=3 extraction. Edges whose midpoint every other edge covers
// can go either way; they land on the left.
enum class Side { left, right };

std::vector<Side> classify_by_midpoint(const Matching& m, const std::vector<int>& clique) {
    std::vector<Side> side(clique.size(), Side::left);
    for (size_t k = 0; k < clique.size(); ++k) {
        int mid = m.edge(clique[k])[1];
        for (size_t h = 0; h < clique.size(); ++h) {
            if (h == k) continue;
            const Edge& e = m.edge(clique[h]);
            if (e[0] < mid && mid < e[2]) continue;  // covered
            side[k] = mid < e[0] ? Side::left : Side::right;
            break;  // all non-covering edges lie on the same side
        }
    }
    return side;
}

ExtractionResult lift_from_subset(const Matching& m, const std::vector<int>& subset,
                                  const std::vector<long long>& a,
                                  const std::vector<int>& allowed) {
    Matching sub = sub_matching(m, subset);
    ExtractionResult res = extract_clean(sub, a);
    if (std::find(allowed.begin(), allowed.end(), res.pattern_index) == allowed.end())
        throw InternalError("improved extraction fell outside its pattern class");
    for (int& idx : res.certificate.edge_indices) idx = subset[static_cast<size_t>(idx)];
    return res;
}

}  // namespace

ExtractionResult extract3_improved(const Matching& m, const std::vector<long long>& a) {
    if (m.uniformity() != 3) throw std::invalid_argument("extract3_improved needs uniformity 3");
    if (a.size() != 9) throw std::invalid_argument("extract3_improved needs 9 parameters");
    for (long long v : a)
        if (v < 1) throw std::invalid_argument("parameters must be positive integers");
    const long long lines = a[0];
    const long long stacks = (a[1] + a[3]) * a[5] * a[7];
    const long long waves = (a[2] + a[6]) * a[4] * a[8];
    if (static_cast<long long>(m.size()) < lines * stacks * waves + 1)
        throw std::invalid_argument("extract3_improved precondition on n violated");

    Matching shadow = drop_middle_vertex(m);
    ExtractionResult base = es_base2(shadow, Rational(lines), Rational(stacks), Rational(waves));
    const std::vector<int>& picked = base.certificate.edge_indices;

    ExtractionResult res;
    if (base.pattern_index == 1) {
        // Aligned extremes align the full triples.
        res.pattern_index = 1;
        res.certificate = {Pattern::alignment(3), picked};
        res.guarantee = Rational(a[0]);
    } else if (base.pattern_index == 2) {
        // Nested extremes: each pair forms one of AABBBA, ABBBAA, ABBABA,
        // ABABBA. Left edges exclude ABBBAA, right edges exclude AABBBA.
        std::vector<Side> side = classify_by_midpoint(m, picked);
        std::vector<int> left, right;
        for (size_t k = 0; k < picked.size(); ++k)
            (side[k] == Side::left ? left : right).push_back(picked[k]);
        if (static_cast<long long>(left.size()) >= a[1] * a[5] * a[7] + 1)
            res = lift_from_subset(m, left, {1, a[1], 1, 1, 1, a[5], 1, a[7], 1}, {2, 6, 8});
        else if (static_cast<long long>(right.size()) >= a[3] * a[5] * a[7] + 1)
            res = lift_from_subset(m, right, {1, 1, 1, a[3], 1, a[5], 1, a[7], 1}, {4, 6, 8});
        else
            throw InternalError("nesting clique split smaller than both pigeonholes");
    } else {
        // Crossing extremes: pairs form AABABB, AABBAB, ABBAAB, ABAABB or
        // ABABAB. Left edges exclude ABAABB and AABABB, right edges exclude
        // AABBAB and AABABB, so both classes are clean.
        std::vector<Side> side = classify_by_midpoint(m, picked);
        std::vector<int> left, right;
        for (size_t k = 0; k < picked.size(); ++k)
            (side[k] == Side::left ? left : right).push_back(picked[k]);
        if (static_cast<long long>(left.size()) >= a[2] * a[4] * a[8] + 1)
            res = lift_from_subset(m, left, {1, 1, a[2], 1, a[4], 1, 1, 1, a[8]}, {3, 5, 9});
        else if (static_cast<long long>(right.size()) >= a[6] * a[4] * a[8] + 1)
            res = lift_from_subset(m, right, {1, 1, 1, 1, a[4], 1, a[6], 1, a[8]}, {5, 7, 9});
        else
            throw InternalError("crossing clique split smaller than both pigeonholes");
    }
    res.guarantee = Rational(a[static_cast<size_t>(res.pattern_index) - 1]);
    self_check(m, res);
    return res;
}

}  // namespace ordmatch
