#ifndef DLAB_WLP_HPP
#define DLAB_WLP_HPP

// Wordlength patterns, resolution, the power-moment identity and the two
// comparison orders (minimum aberration and the complementary sequential key).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dlab/design.hpp"
#include "dlab/errors.hpp"
#include "dlab/gf2core.hpp"

namespace dlab {

/// (A_0, A_1, ..., A_n) with A_0 = 1. Indexing past the end reads zero.
struct WordlengthPattern {
    std::vector<Integer> a;

    int factors() const { return static_cast<int>(a.size()) - 1; }
    Integer operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(a.size())) ? a[i] : Integer(0);
    }
    Integer total() const {
        Integer s = 0;
        for (const auto& v : a) s += v;
        return s;
    }
    friend bool operator==(const WordlengthPattern&, const WordlengthPattern&) = default;
};

/// Dual-transform WLP: A_i = 2^-r * sum_j B_j K_i(j; n), B the weight
/// distribution of the 2^r distinct codewords spanned by the label matrix.
inline WordlengthPattern wordlength_pattern(const Design& d) {
    const int n = d.factors();
    const auto cw = codeword_weight_distribution(d);
    const auto kt = krawtchouk_table(n);
    const Integer size = pow2(cw.rank);
    WordlengthPattern w{std::vector<Integer>(n + 1, 0)};
    for (int i = 0; i <= n; ++i) {
        Integer acc = 0;
        for (int j = 0; j <= n; ++j)
            if (cw.counts[j] != 0) acc += Integer(cw.counts[j]) * kt[i][j];
        if (acc < 0 || acc % size != 0)
            throw InternalFault("dual transform produced a non-integral or negative A_" +
                                std::to_string(i));
        w.a[i] = acc / size;
    }
    if (w.a[0] != 1) throw InternalFault("dual transform produced A_0 != 1");
    return w;
}

namespace detail {

// Counts zero-sum subsets of size 1..max_len. Subsets of size s are found
// by walking (s-1)-prefixes and looking up the closing column by label.
struct SubsetWordCounter {
    std::span<const std::uint64_t> labels;
    int max_len;
    std::unordered_map<std::uint64_t, std::vector<int>> by_label;
    std::vector<Integer>* counts;
    std::vector<std::uint64_t>* per_column = nullptr;  // incidence counts for one length
    int per_column_len = 0;
    std::vector<int> stack;

    void build_index() {
        for (int j = 0; j < static_cast<int>(labels.size()); ++j) by_label[labels[j]].push_back(j);
    }

    void close(std::uint64_t acc, int next) {
        // Completion with a single column of index >= next equal to acc.
        auto it = by_label.find(acc);
        if (it == by_label.end()) return;
        const auto& cols = it->second;
        const int len = static_cast<int>(stack.size()) + 1;
        for (auto p = std::lower_bound(cols.begin(), cols.end(), next); p != cols.end(); ++p) {
            ++(*counts)[len];
            if (per_column && len == per_column_len) {
                for (int c : stack) ++(*per_column)[c];
                ++(*per_column)[*p];
            }
        }
    }

    void walk(int next, std::uint64_t acc) {
        close(acc, next);
        if (static_cast<int>(stack.size()) + 1 >= max_len) return;
        for (int j = next; j < static_cast<int>(labels.size()); ++j) {
            stack.push_back(j);
            walk(j + 1, acc ^ labels[j]);
            stack.pop_back();
        }
    }
};

inline Integer subset_budget(int n, int max_len) {
    Integer total = 0;
    for (int s = 0; s < max_len; ++s) total += binomial(n, s);
    return total;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultEnumBudget = 200'000'000;

/// A_1..A_max_len by direct subset enumeration. Entries above max_len are
/// left out (the returned vector has size max_len + 1, A_0 = 1).
inline WordlengthPattern wordlength_pattern_enum(const Design& d, int max_len,
                                                 std::uint64_t budget = kDefaultEnumBudget) {
    const int n = d.factors();
    if (max_len < 0 || max_len > n) throw InputError("max_len outside 0..n");
    if (detail::subset_budget(n, max_len) > budget)
        throw CapacityError("subset enumeration for max_len " + std::to_string(max_len) +
                            " exceeds the budget");
    WordlengthPattern w{std::vector<Integer>(max_len + 1, 0)};
    w.a[0] = 1;
    if (max_len == 0) return w;
    detail::SubsetWordCounter counter{d.labels(), max_len, {}, &w.a, nullptr, 0, {}};
    counter.build_index();
    counter.walk(0, 0);
    return w;
}

/// Smallest i >= 1 with A_i > 0; nullopt means infinite resolution.
inline std::optional<int> resolution(const WordlengthPattern& w) {
    for (int i = 1; i <= w.factors(); ++i)
        if (w.a[i] > 0) return i;
    return std::nullopt;
}

inline std::optional<int> resolution(const Design& d) { return resolution(wordlength_pattern(d)); }

/// N * sum_{i=0}^{min(n,k)} Q_k(i; n) A_i.
inline Rational pless_rhs(const WordlengthPattern& w, const Integer& runs, int n, int k) {
    if (k < 1) throw InputError("moment order must be >= 1");
    Rational acc = 0;
    for (int i = 0; i <= std::min(n, k); ++i) {
        const Integer a = w[i];
        if (a != 0) acc += q_coefficient(k, i, n) * a;
    }
    return acc * runs;
}

struct PlessRow {
    int k = 0;
    Integer moment;
    Rational rhs;
    bool pass = false;
};

struct PlessReport {
    std::vector<PlessRow> rows;
    bool all_pass() const {
        return std::all_of(rows.begin(), rows.end(), [](const PlessRow& r) { return r.pass; });
    }
};

/// Checks the moment identity for k = 1..k_max. Mismatches are reported in
/// the rows; callers decide whether to raise.
inline PlessReport verify_pless(const Design& d, int k_max) {
    if (k_max < 1) throw InputError("k_max must be >= 1");
    const auto w = wordlength_pattern(d);
    const auto dist = row_weight_distribution(d);
    PlessReport rep;
    for (int k = 1; k <= k_max; ++k) {
        PlessRow row;
        row.k = k;
        for (std::size_t x = 0; x < dist.size(); ++x)
            if (dist[x] != 0) row.moment += dist[x] * boost::multiprecision::pow(Integer(x), k);
        row.rhs = pless_rhs(w, d.runs(), d.factors(), k);
        row.pass = Rational(row.moment) == row.rhs;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

/// Lexicographic order on (A_1, A_2, ...) with zero padding; less is better.
inline std::strong_ordering ma_compare(const WordlengthPattern& a, const WordlengthPattern& b) {
    const int n = std::max(a.factors(), b.factors());
    for (int i = 1; i <= n; ++i) {
        const Integer x = a[i], y = b[i];
        if (x < y) return std::strong_ordering::less;
        if (y < x) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

/// (A_4, -A_5, A_6, -A_7, ...), minimized lexicographically. `max_len`
/// truncates the key (0 = through A_n).
struct SeqKey {
    std::vector<Integer> key;
    friend auto operator<=>(const SeqKey& a, const SeqKey& b) {
        const std::size_t n = std::max(a.key.size(), b.key.size());
        for (std::size_t i = 0; i < n; ++i) {
            const Integer x = i < a.key.size() ? a.key[i] : Integer(0);
            const Integer y = i < b.key.size() ? b.key[i] : Integer(0);
            if (x < y) return std::strong_ordering::less;
            if (y < x) return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const SeqKey& a, const SeqKey& b) { return (a <=> b) == 0; }
};

inline SeqKey seq_key(const WordlengthPattern& w, int max_len = 0) {
    const int last = max_len > 0 ? max_len : std::max(w.factors(), 4);
    SeqKey k;
    for (int i = 4; i <= last; ++i) k.key.push_back(i % 2 ? Integer(-w[i]) : w[i]);
    return k;
}

}  // namespace dlab

#endif  // DLAB_WLP_HPP
