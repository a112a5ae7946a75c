#include "ordmatch/pattern_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ordmatch {

std::string SplitDecomposition::reassemble() const {
    std::string w;
    for (const SplitBlock& b : blocks) {
        char other = b.leader == 'A' ? 'B' : 'A';
        w.append(static_cast<size_t>(b.half_length), b.leader);
        w.append(static_cast<size_t>(b.half_length), other);
    }
    return w;
}

std::vector<Pattern> enumerate_patterns(int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    std::vector<Pattern> out;
    std::string w(1, 'A');
    // lexicographic backtracking over balanced words starting with A
    auto rec = [&](auto&& self, int used_a, int used_b) -> void {
        if (used_a + used_b == 2 * r) {
            out.push_back(Pattern::from_word(w));
            return;
        }
        if (used_a < r) {
            w.push_back('A');
            self(self, used_a + 1, used_b);
            w.pop_back();
        }
        if (used_b < r) {
            w.push_back('B');
            self(self, used_a, used_b + 1);
            w.pop_back();
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::optional<SplitDecomposition> split(const Pattern& p) {
    const std::string& w = p.word();
    SplitDecomposition d;
    size_t pos = 0;
    while (pos < w.size()) {
        char c = w[pos];
        size_t q = pos;
        while (q < w.size() && w[q] == c) ++q;
        size_t t = q - pos;  // forced: first letter change inside X^tY^t is at t
        if (pos + 2 * t > w.size()) return std::nullopt;
        char other = c == 'A' ? 'B' : 'A';
        for (size_t k = pos + t; k < pos + 2 * t; ++k)
            if (w[k] != other) return std::nullopt;
        d.blocks.push_back({c, static_cast<int>(t)});
        pos += 2 * t;
    }
    return d;
}

bool is_collectable(const Pattern& p) { return split(p).has_value(); }

namespace {

int last_run_length(const std::string& w) {
    size_t k = w.size();
    while (k > 1 && w[k - 2] == w[k - 1]) --k;
    return static_cast<int>(w.size() - k + 1);
}

std::string swap_letters(std::string w) {
    for (char& c : w) c = (c == 'A') ? 'B' : 'A';
    return w;
}

}  // namespace

int maturity(const Pattern& p) {
    if (!is_collectable(p))
        throw std::invalid_argument("maturity is defined for collectable patterns only: " +
                                    p.word());
    return std::max(last_run_length(p.word()) - 2, 0);
}

bool is_r_partite(const Pattern& p) {
    auto d = split(p);
    if (!d) return false;
    for (const SplitBlock& b : d->blocks)
        if (b.half_length != 1) return false;
    return true;
}

namespace {

// Positions (0-based) of the k-th occurrence of each letter.
std::vector<size_t> letter_positions(const std::string& w, char c) {
    std::vector<size_t> pos;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == c) pos.push_back(i);
    return pos;
}

std::string right_parent_literal(const std::string& w) {
    auto as = letter_positions(w, 'A');
    auto bs = letter_positions(w, 'B');
    const size_t r = as.size();
    std::vector<std::pair<size_t, char>> four = {{as[r - 2], 'A'},
                                                 {as[r - 1], 'A'},
                                                 {bs[r - 2], 'B'},
                                                 {bs[r - 1], 'B'}};
    std::sort(four.begin(), four.end());
    std::string out;
    for (auto& [pos, c] : four) out.push_back(c);
    return out;
}

}  // namespace

std::pair<Pattern, std::string> decompose_raw(const Pattern& p) {
    if (p.uniformity() < 3)
        throw std::invalid_argument("decompose needs uniformity >= 3");
    const std::string& w = p.word();
    auto as = letter_positions(w, 'A');
    auto bs = letter_positions(w, 'B');
    std::string left;
    size_t last_a = as.back(), last_b = bs.back();
    for (size_t i = 0; i < w.size(); ++i)
        if (i != last_a && i != last_b) left.push_back(w[i]);
    return {Pattern::from_word(left), right_parent_literal(w)};
}

std::pair<Pattern, Pattern> decompose(const Pattern& p) {
    auto [left, raw] = decompose_raw(p);
    std::string right = raw[0] == 'A' ? raw : swap_letters(raw);
    return {left, Pattern::from_word(right)};
}

int right_parent_selector(const Pattern& right) {
    if (right.word() == "AABB") return 1;
    if (right.word() == "ABBA") return 2;
    if (right.word() == "ABAB") return 3;
    throw std::invalid_argument("not a 2-pattern: " + right.word());
}

Pattern right_parent(int j, int r) {
    if (r != 2) throw std::invalid_argument("right parents have uniformity 2");
    switch (j) {
        case 1: return Pattern::from_word("AABB");
        case 2: return Pattern::from_word("ABBA");
        case 3: return Pattern::from_word("ABAB");
        default: throw std::invalid_argument("right-parent selector must be 1, 2 or 3");
    }
}

std::vector<Pattern> dec_inverse(const Pattern& q, int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("right-parent selector must be 1, 2 or 3");
    const std::string& w = q.word();
    if (j == 2 || j == 3) {
        // The new A and new B are appended; which order yields R_2 versus R_3
        // depends on q's last letter, so select by decomposing back.
        for (const char* tail : {"AB", "BA"}) {
            Pattern cand = Pattern::from_word(w + tail);
            if (right_parent_selector(decompose(cand).second) == j) return {cand};
        }
        throw InternalError("no child found for selector " + std::to_string(j));
    }
    // j == 1: the new partner letter is inserted into q's trailing run, the
    // new last letter appended; t insertion depths give the t children.
    char c = w.back();
    char other = c == 'A' ? 'B' : 'A';
    int t = last_run_length(w);
    std::string stem = w.substr(0, w.size() - static_cast<size_t>(t));
    std::vector<Pattern> out;
    for (int t1 = 0; t1 <= t - 1; ++t1) {
        std::string child = stem + std::string(static_cast<size_t>(t1), c) + other +
                            std::string(static_cast<size_t>(t - t1 + 1), c);
        out.push_back(Pattern::from_word(child));
    }
    return out;
}

std::vector<Pattern> children(const Pattern& q, int j) {
    if (!is_collectable(q))
        throw std::invalid_argument("children requires a collectable parent: " + q.word());
    return dec_inverse(q, j);
}

std::vector<Pattern> big_brothers(int r) {
    if (r < 3) throw std::invalid_argument("big brothers need uniformity >= 3");
    std::vector<Pattern> out;
    for (const Pattern& q : collectable_index(r - 1).table)
        if (last_run_length(q.word()) >= 2) out.push_back(dec_inverse(q, 1).front());
    std::sort(out.begin(), out.end());
    return out;
}

int PatternIndex::index_of(const Pattern& p) const {
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] == p) return static_cast<int>(i) + 1;
    throw std::invalid_argument("pattern is not collectable at this uniformity: " + p.word());
}

const Pattern& PatternIndex::at(int index_1based) const {
    if (index_1based < 1 || index_1based > static_cast<int>(table.size()))
        throw std::invalid_argument("pattern index out of range");
    return table[static_cast<size_t>(index_1based - 1)];
}

PatternIndex collectable_index(int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    static std::mutex mu;
    static std::map<int, PatternIndex> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        PatternIndex base;
        base.r = 2;
        base.table = {Pattern::from_word("AABB"), Pattern::from_word("ABBA"),
                      Pattern::from_word("ABAB")};
        cache[2] = base;
    }
    for (int level = 3; level <= r; ++level) {
        if (cache.count(level)) continue;
        PatternIndex idx;
        idx.r = level;
        for (const Pattern& q : cache[level - 1].table)
            for (int j = 1; j <= 3; ++j)
                idx.table.push_back(dec_inverse(q, j).front());  // collectable child first
        cache[level] = idx;
    }
    return cache[r];
}

long long total_maturity(int r) {
    long long sum = 0;
    for (const Pattern& p : collectable_index(r).table) sum += maturity(p);
    return sum;
}

Matching canonical_clique(const Pattern& p, int k) {
    if (k < 1) throw std::invalid_argument("clique size must be positive");
    auto d = split(p);
    if (!d)
        throw std::invalid_argument("canonical_clique requires a collectable pattern: " +
                                    p.word());
    const int r = p.uniformity();
    std::vector<Edge> edges(static_cast<size_t>(k));
    int pos = 0;
    for (const SplitBlock& b : d->blocks) {
        for (int step = 0; step < k; ++step) {
            int edge = b.leader == 'A' ? step : k - 1 - step;
            for (int t = 0; t < b.half_length; ++t)
                edges[static_cast<size_t>(edge)].push_back(++pos);
        }
    }
    for (Edge& e : edges)
        if (static_cast<int>(e.size()) != r) throw InternalError("clique construction bug");
    return Matching::from_edges(r, std::move(edges));
}

std::vector<AtlasRow> pattern_atlas(int r) {
    PatternIndex idx = collectable_index(r);
    std::map<std::string, int> number;
    for (size_t i = 0; i < idx.table.size(); ++i) number[idx.table[i].word()] = static_cast<int>(i) + 1;

    auto make_row = [&](const Pattern& p) {
        AtlasRow row;
        row.word = p.word();
        auto [left, right] = decompose_raw(p);
        row.dec_left = left.word();
        row.dec_right = right;
        row.collectable = is_collectable(p);
        if (row.collectable) {
            row.index = number.at(p.word());
            row.maturity = maturity(p);
            std::string blocks;
            auto dec = split(p);
            for (const SplitBlock& b : dec->blocks) {
                if (!blocks.empty()) blocks.push_back('|');
                blocks.push_back(b.leader);
                blocks += std::to_string(b.half_length);
            }
            row.split_blocks = blocks;
        }
        return row;
    };

    std::vector<AtlasRow> rows;
    if (r == 2) {
        for (const Pattern& p : idx.table) {
            AtlasRow row;
            row.word = p.word();
            row.collectable = true;
            row.index = number.at(p.word());
            row.maturity = maturity(p);
            rows.push_back(row);
        }
        return rows;
    }

    PatternIndex prev = collectable_index(r - 1);
    std::vector<std::string> covered;
    for (const Pattern& q : prev.table) {
        auto family = dec_inverse(q, 1);
        bool bb = family.size() > 1;
        for (size_t s = 0; s < family.size(); ++s) {
            AtlasRow row = make_row(family[s]);
            row.big_brother = bb && s == 0;
            rows.push_back(row);
            covered.push_back(family[s].word());
        }
        for (int j : {2, 3}) {
            rows.push_back(make_row(dec_inverse(q, j).front()));
            covered.push_back(rows.back().word);
        }
    }
    // leftovers have non-collectable left parents; list them lexicographically
    std::vector<AtlasRow> tail;
    std::sort(covered.begin(), covered.end());
    for (const Pattern& p : enumerate_patterns(r))
        if (!std::binary_search(covered.begin(), covered.end(), p.word()))
            tail.push_back(make_row(p));
    std::sort(tail.begin(), tail.end(),
              [](const AtlasRow& a, const AtlasRow& b) { return a.word < b.word; });
    rows.insert(rows.end(), tail.begin(), tail.end());
    return rows;
}

}  // namespace ordmatch
