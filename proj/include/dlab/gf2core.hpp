#ifndef DLAB_GF2CORE_HPP
#define DLAB_GF2CORE_HPP

// Bit-level GF(2) helpers and the exact combinatorial arithmetic used by the
// rest of the library. Everything here is a pure function of its arguments.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dlab/errors.hpp"

namespace dlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Widest label a column may carry (one machine word).
inline constexpr int kMaxWidth = 64;

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

inline std::uint64_t width_mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

/// A GF(2)^width vector packed into one word. XOR is vector addition.
struct BitLabel {
    std::uint64_t mask = 0;
    int width = 0;

    static BitLabel make(std::uint64_t mask, int width) {
        if (width < 0 || width > kMaxWidth)
            throw CapacityError("label width " + std::to_string(width) + " exceeds " +
                                std::to_string(kMaxWidth));
        if ((mask & ~width_mask(width)) != 0)
            throw InputError("label " + std::to_string(mask) + " does not fit in " +
                             std::to_string(width) + " bits");
        return BitLabel{mask, width};
    }

    friend BitLabel operator^(BitLabel a, BitLabel b) {
        if (a.width != b.width) throw InputError("XOR of labels with different widths");
        return BitLabel{a.mask ^ b.mask, a.width};
    }

    friend bool operator==(const BitLabel&, const BitLabel&) = default;
};

/// Dimension of the span of single-word vectors (Gaussian elimination on the
/// leading bit).
inline int gf2_rank(std::span<const std::uint64_t> vectors) {
    std::vector<std::uint64_t> basis;  // pivots kept with distinct leading bits
    for (std::uint64_t v : vectors) {
        for (std::uint64_t b : basis)
            v = std::min(v, v ^ b);
        if (v != 0) {
            basis.push_back(v);
            std::sort(basis.rbegin(), basis.rend());
        }
    }
    return static_cast<int>(basis.size());
}

inline int gf2_rank(std::span<const BitLabel> labels, int width) {
    std::vector<std::uint64_t> masks;
    masks.reserve(labels.size());
    for (const BitLabel& l : labels) {
        if (l.width != width)
            throw InputError("label width " + std::to_string(l.width) + " differs from " +
                             std::to_string(width));
        masks.push_back(l.mask);
    }
    return gf2_rank(masks);
}

/// Basis of { x in GF(2)^ncols : parity(x & row) = 0 for every row }.
/// Rows must be independent when `require_independent` is set; the index of
/// the first dependent row is reported otherwise.
inline std::vector<std::uint64_t> gf2_nullspace(std::span<const std::uint64_t> rows, int ncols,
                                                bool require_independent = false) {
    if (ncols < 0 || ncols > kMaxWidth) throw CapacityError("nullspace width out of range");
    // Reduced row echelon form with pivot columns.
    std::vector<std::uint64_t> echelon;
    std::vector<int> pivot_col;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint64_t v = rows[r];
        if ((v & ~width_mask(ncols)) != 0) throw InputError("row exceeds the column count");
        for (std::size_t e = 0; e < echelon.size(); ++e)
            if ((v >> pivot_col[e]) & 1) v ^= echelon[e];
        if (v == 0) {
            if (require_independent)
                throw InputError("row " + std::to_string(r + 1) +
                                 " is a GF(2) combination of the preceding rows");
            continue;
        }
        int p = std::countr_zero(v);
        for (auto& e : echelon)
            if ((e >> p) & 1) e ^= v;
        echelon.push_back(v);
        pivot_col.push_back(p);
    }
    std::uint64_t pivots = 0;
    for (int p : pivot_col) pivots |= std::uint64_t{1} << p;

    std::vector<std::uint64_t> basis;
    for (int free = 0; free < ncols; ++free) {
        if ((pivots >> free) & 1) continue;
        std::uint64_t x = std::uint64_t{1} << free;
        for (std::size_t e = 0; e < echelon.size(); ++e)
            if ((echelon[e] >> free) & 1) x |= std::uint64_t{1} << pivot_col[e];
        basis.push_back(x);
    }
    return basis;
}

/// Arbitrary-length GF(2) row, used for codewords when a design has more
/// than 64 columns.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

    BitRow& operator^=(const BitRow& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    int popcount() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
    }
    // Index of the lowest set bit; size() when empty.
    std::size_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
        return bits_;
    }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

namespace detail {

inline constexpr long kBinomialCap = 600;
inline constexpr int kStirlingCap = 64;

inline const std::vector<std::vector<Integer>>& pascal_table() {
    static const std::vector<std::vector<Integer>> table = [] {
        std::vector<std::vector<Integer>> t(kBinomialCap + 1);
        for (long n = 0; n <= kBinomialCap; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1;
            for (long r = 1; r < n; ++r) t[n][r] = t[n - 1][r - 1] + t[n - 1][r];
        }
        return t;
    }();
    return table;
}

inline const std::vector<std::vector<Integer>>& stirling_table() {
    static const std::vector<std::vector<Integer>> table = [] {
        std::vector<std::vector<Integer>> s(kStirlingCap + 1,
                                            std::vector<Integer>(kStirlingCap + 1, 0));
        s[0][0] = 1;
        for (int k = 1; k <= kStirlingCap; ++k)
            for (int j = 1; j <= k; ++j) s[k][j] = j * s[k - 1][j] + s[k - 1][j - 1];
        return s;
    }();
    return table;
}

}  // namespace detail

inline Integer pow2(long e) {
    if (e < 0) throw InputError("negative power of two requested as an integer");
    Integer r = 1;
    r <<= static_cast<unsigned>(e);
    return r;
}

/// 2^e as an exact rational; e may be negative.
inline Rational pow2_rational(long e) {
    return e >= 0 ? Rational(pow2(e)) : Rational(Integer(1), pow2(-e));
}

/// C(n, r); zero outside 0 <= r <= n (including negative n).
inline Integer binomial(long n, long r) {
    if (n < 0 || r < 0 || r > n) return 0;
    if (n <= detail::kBinomialCap) return detail::pascal_table()[n][r];
    r = std::min(r, n - r);
    Integer acc = 1;
    for (long i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

inline Integer factorial(long n) {
    if (n < 0) throw InputError("factorial of a negative number");
    Integer acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

/// Stirling number of the second kind S(k, j).
inline Integer stirling2(int k, int j) {
    if (k < 0 || j < 0) throw InputError("stirling2 requires k, j >= 0");
    if (j > k) return 0;
    if (k <= detail::kStirlingCap) return detail::stirling_table()[k][j];
    // Explicit alternating sum; exact division by j!.
    Integer acc = 0;
    for (int i = 0; i <= j; ++i) {
        Integer term = binomial(j, i) * boost::multiprecision::pow(Integer(i), k);
        if ((j - i) % 2) acc -= term; else acc += term;
    }
    return acc / factorial(j);
}

/// Q_k(i; n) = (-1)^i * sum_{j=0}^{k} j! S(k,j) 2^{-j} C(n-i, j-i).
inline Rational q_coefficient(int k, int i, long n) {
    if (k < 0 || i < 0) throw InputError("q_coefficient requires k, i >= 0");
    Rational acc = 0;
    for (int j = i; j <= k; ++j) {
        Integer c = binomial(n - i, j - i);
        if (c == 0) continue;
        acc += Rational(factorial(j) * stirling2(k, j) * c, pow2(j));
    }
    return (i % 2) ? Rational(-acc) : acc;
}

/// Binary Krawtchouk value K_i(j; n) = sum_s (-1)^s C(j,s) C(n-j,i-s).
inline Integer krawtchouk(int i, int j, int n) {
    if (i < 0 || j < 0 || i > n || j > n) throw InputError("krawtchouk arguments out of range");
    Integer acc = 0;
    for (int s = 0; s <= std::min(i, j); ++s) {
        Integer term = binomial(j, s) * binomial(n - j, i - s);
        if (s % 2) acc -= term; else acc += term;
    }
    return acc;
}

/// Full table K[i][j] for 0 <= i, j <= n via the three-term recurrence
/// (i+1) K_{i+1}(j) = (n-2j) K_i(j) - (n-i+1) K_{i-1}(j).
inline std::vector<std::vector<Integer>> krawtchouk_table(int n) {
    if (n < 0) throw InputError("krawtchouk_table requires n >= 0");
    std::vector<std::vector<Integer>> k(n + 1, std::vector<Integer>(n + 1));
    for (int j = 0; j <= n; ++j) {
        k[0][j] = 1;
        if (n >= 1) k[1][j] = n - 2 * j;
        for (int i = 1; i < n; ++i)
            k[i + 1][j] = ((n - 2 * j) * k[i][j] - (n - i + 1) * k[i - 1][j]) / (i + 1);
    }
    return k;
}

}  // namespace dlab

#endif  // DLAB_GF2CORE_HPP
