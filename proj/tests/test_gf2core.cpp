#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "dlab/gf2core.hpp"

using namespace dlab;

namespace {

// Span size by walking every subset; rank = log2 of it.
int brute_rank(const std::vector<std::uint64_t>& v) {
    std::set<std::uint64_t> span;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << v.size()); ++s) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if ((s >> j) & 1) acc ^= v[j];
        span.insert(acc);
    }
    return std::countr_zero(span.size());
}

}  // namespace

TEST(Gf2Rank, Examples) {
    EXPECT_EQ(gf2_rank(std::vector<BitLabel>{}, 4), 0);
    std::vector<BitLabel> resv;
    for (std::uint64_t l : {0b0001, 0b0010, 0b0100, 0b1000, 0b1111}) resv.push_back(BitLabel::make(l, 4));
    EXPECT_EQ(gf2_rank(resv, 4), 4);
    std::vector<BitLabel> dup{BitLabel::make(0b0011, 4), BitLabel::make(0b0011, 4)};
    EXPECT_EQ(gf2_rank(dup, 4), 1);
}

TEST(Gf2Rank, WidthMismatchIsInputError) {
    std::vector<BitLabel> mixed{BitLabel::make(1, 4), BitLabel::make(1, 5)};
    EXPECT_THROW(gf2_rank(mixed, 4), InputError);
    EXPECT_THROW(BitLabel::make(1, 4) ^ BitLabel::make(1, 5), InputError);
    EXPECT_THROW(BitLabel::make(16, 4), InputError);
    EXPECT_THROW(BitLabel::make(0, 65), CapacityError);
}

TEST(Gf2Rank, MatchesSpanEnumeration) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int width = 1 + trial % 8;
        const int count = trial % 11;
        std::vector<std::uint64_t> v(count);
        for (auto& x : v) x = rng() & width_mask(width);
        const int r = gf2_rank(v);
        EXPECT_EQ(r, brute_rank(v));
        EXPECT_LE(r, width);
    }
}

TEST(Gf2Nullspace, BasisIsKernel) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int ncols = 1 + trial % 12;
        std::vector<std::uint64_t> rows(trial % 6);
        for (auto& r : rows) r = rng() & width_mask(ncols);
        const auto basis = gf2_nullspace(rows, ncols);
        EXPECT_EQ(static_cast<int>(basis.size()), ncols - gf2_rank(rows));
        EXPECT_EQ(gf2_rank(basis), static_cast<int>(basis.size()));
        for (auto x : basis)
            for (auto r : rows) EXPECT_EQ(parity(x & r), 0);
    }
}

TEST(Gf2Nullspace, DependentRowsRejectedWhenRequired) {
    std::vector<std::uint64_t> rows{0b011, 0b110, 0b101};
    EXPECT_NO_THROW(gf2_nullspace(rows, 3));
    EXPECT_THROW(gf2_nullspace(rows, 3, true), InputError);
}

TEST(BitRow, Operations) {
    BitRow a(130), b(130);
    EXPECT_FALSE(a.any());
    EXPECT_EQ(a.lowest(), 130u);
    a.set(3);
    a.set(129);
    b.set(129);
    b.set(70);
    a ^= b;
    EXPECT_TRUE(a.test(3));
    EXPECT_TRUE(a.test(70));
    EXPECT_FALSE(a.test(129));
    EXPECT_EQ(a.popcount(), 2);
    EXPECT_EQ(a.lowest(), 3u);
}

TEST(Binomial, Examples) {
    EXPECT_EQ(binomial(10, 4), 210);
    EXPECT_EQ(binomial(8, 4), 70);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
}

TEST(Binomial, PascalRule) {
    for (long n = 1; n <= 80; ++n)
        for (long r = 0; r <= n; ++r) EXPECT_EQ(binomial(n, r), binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST(Stirling2, Examples) {
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(stirling2(k, k), 1);
    EXPECT_EQ(stirling2(3, 2), 3);
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(stirling2(4, 0), 0);
    EXPECT_EQ(stirling2(0, 0), 1);
}

TEST(Stirling2, RecurrenceAndPowerSums) {
    for (int k = 1; k <= 12; ++k)
        for (int j = 1; j <= k; ++j)
            EXPECT_EQ(stirling2(k, j), j * stirling2(k - 1, j) + stirling2(k - 1, j - 1));
    // x^k = sum_j S(k,j) x(x-1)...(x-j+1)
    for (int k = 0; k <= 12; ++k)
        for (int x = 0; x <= 9; ++x) {
            Integer sum = 0;
            for (int j = 0; j <= k; ++j) {
                Integer falling = 1;
                for (int s = 0; s < j; ++s) falling *= (x - s);
                sum += stirling2(k, j) * falling;
            }
            EXPECT_EQ(sum, boost::multiprecision::pow(Integer(x), k));
        }
}

TEST(QCoefficient, Examples) {
    for (int k = 1; k <= 10; ++k)
        for (int n = k; n <= k + 4; ++n) {
            const Rational expect = Rational(factorial(k) * (k % 2 ? -1 : 1)) / Rational(pow2(k));
            EXPECT_EQ(q_coefficient(k, k, n), expect);
        }
    for (int n = 1; n <= 20; ++n) EXPECT_EQ(q_coefficient(1, 0, n), Rational(n, 2));
    EXPECT_EQ(q_coefficient(2, 1, 10), -5);
}

TEST(QCoefficient, DenominatorDividesPowerOfTwo) {
    for (int k = 1; k <= 10; ++k)
        for (int n = 1; n <= 16; ++n)
            for (int i = 0; i <= std::min(n, k); ++i) {
                const Rational q = q_coefficient(k, i, n);
                EXPECT_EQ(pow2(k) % boost::multiprecision::denominator(q), 0);
            }
}

TEST(QCoefficient, FullFactorialMoments) {
    // An n-column full factorial has only the empty word, so its k-th moment
    // is 2^n Q_k(0; n) = sum_w C(n,w) w^k.
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= 8; ++k) {
            Integer m = 0;
            for (int w = 0; w <= n; ++w) m += binomial(n, w) * boost::multiprecision::pow(Integer(w), k);
            EXPECT_EQ(Rational(pow2(n)) * q_coefficient(k, 0, n), Rational(m));
        }
}

TEST(Krawtchouk, Examples) {
    for (int n = 0; n <= 8; ++n)
        for (int j = 0; j <= n; ++j) EXPECT_EQ(krawtchouk(0, j, n), 1);
    for (int n = 0; n <= 8; ++n)
        for (int i = 0; i <= n; ++i) EXPECT_EQ(krawtchouk(i, 0, n), binomial(n, i));
    EXPECT_EQ(krawtchouk(1, 1, 4), 2);
}

TEST(Krawtchouk, TableMatchesDirectSum) {
    for (int n = 0; n <= 20; ++n) {
        const auto tab = krawtchouk_table(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) EXPECT_EQ(tab[i][j], krawtchouk(i, j, n)) << n << ' ' << i << ' ' << j;
    }
}

TEST(Krawtchouk, Orthogonality) {
    for (int n = 0; n <= 12; ++n)
        for (int i = 0; i <= n; ++i)
            for (int l = 0; l <= n; ++l) {
                Integer s = 0;
                for (int j = 0; j <= n; ++j) s += binomial(n, j) * krawtchouk(i, j, n) * krawtchouk(l, j, n);
                EXPECT_EQ(s, i == l ? pow2(n) * binomial(n, i) : Integer(0));
            }
}

TEST(Pow2, RationalHandlesNegativeExponent) {
    EXPECT_EQ(pow2_rational(-3), Rational(1, 8));
    EXPECT_EQ(pow2_rational(5), 32);
    EXPECT_EQ(pow2(70), Integer(1) << 70);
}
