#include <gtest/gtest.h>

#include <random>

#include "dlab/catalog.hpp"
#include "dlab/complementary.hpp"
#include "support.hpp"

using namespace dlab;
using dlab::testing::random_subset;

namespace {

ComplementSplit split(const DoubledDesign& x, std::vector<int> cols) { return complement_split(x, cols); }

// A concrete complement realising frequency vector f (copies 0..f_i-1 of each group).
std::vector<int> realise(const DoublingPedigree& p, const std::vector<int>& f, std::mt19937_64* rng = nullptr) {
    std::vector<int> cols;
    const int copies = 1 << p.t;
    for (int g = 0; g < static_cast<int>(f.size()); ++g) {
        std::vector<int> pick(copies);
        for (int c = 0; c < copies; ++c) pick[c] = c;
        if (rng) std::shuffle(pick.begin(), pick.end(), *rng);
        for (int c = 0; c < f[g]; ++c) cols.push_back(p.column_of(g + 1, pick[c]));
    }
    return cols;
}

std::vector<int> random_frequencies(std::mt19937_64& rng, int parts, int cap) {
    std::vector<int> f(parts);
    for (auto& v : f) v = static_cast<int>(rng() % (cap + 1));
    return f;
}

}  // namespace

TEST(Delta, CorollaryValuesForSmallSplit) {
    const auto x = maximal_5n16(1);
    const auto ctx = DeltaContext::from(x.pedigree);
    const auto s = split(x, {1, 2});
    EXPECT_EQ(delta_k(s, ctx, 1), 0);
    EXPECT_EQ(delta_k(s, ctx, 2), 48);
    EXPECT_EQ(delta_k(s, ctx, 3), 576);
}

TEST(Delta, InconsistentSplitRejected) {
    const auto x = maximal_5n16(1);
    const auto ctx = DeltaContext::from(x.pedigree);
    const auto s = split(x, {1, 2});
    EXPECT_THROW(delta_k(s.kept, project(s.removed, {1}), ctx, 2), InputError);
    EXPECT_THROW(delta_k(x0_resV(), Design(4, {}), ctx, 2), InputError);
    EXPECT_THROW(delta_k(s, ctx, 0), InputError);
}

TEST(Delta, HalfIntegerFactorCountAtZeroDoublings) {
    // m = 5 is odd when t = 0, so Delta_k is a genuine rational.
    const auto x = maximal_5n16(0);
    const auto ctx = DeltaContext::from(x.pedigree);
    const Rational d = delta_k(split(x, {1}), ctx, 1);
    EXPECT_EQ(d, delta_closed_5n16(FrequencyVector{{1, 0, 0, 0, 0}}, 0, 1));
    EXPECT_EQ(theorem1_residual(split(x, {1}).kept, split(x, {1}).removed, ctx, 4), 0);
}

TEST(Theorem1, ResidualVanishesOn5n16) {
    std::mt19937_64 rng(101);
    for (int t = 1; t <= 2; ++t) {
        const auto x = maximal_5n16(t);
        const auto ctx = DeltaContext::from(x.pedigree);
        for (int trial = 0; trial < 30; ++trial) {
            const auto s = complement_split(x, random_subset(rng, x.design.factors(), trial % (x.design.factors() + 1)));
            const auto res = theorem1_residuals(s.kept, s.removed, wordlength_pattern(s.kept),
                                                wordlength_pattern(s.removed), ctx, 8);
            for (const auto& r : res) EXPECT_EQ(r, 0);
        }
    }
}

TEST(Theorem1, EmptyComplement) {
    const auto x = maximal_5n16(2);
    const auto ctx = DeltaContext::from(x.pedigree);
    const auto s = split(x, {});
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(theorem1_residual(s.kept, s.removed, ctx, k), 0);
}

TEST(Theorem1, ResidualVanishesOn9n32AndExamples) {
    std::mt19937_64 rng(103);
    const auto families = {maximal_9n32(1), maximal_even(3), saturated_base_double(3)};
    for (const auto& x : families) {
        const auto ctx = DeltaContext::from(x.pedigree);
        for (int trial = 0; trial < 15; ++trial) {
            const auto s = complement_split(x, random_subset(rng, x.design.factors(), trial % (x.design.factors() + 1)));
            const auto res = theorem1_residuals(s.kept, s.removed, wordlength_pattern(s.kept),
                                                wordlength_pattern(s.removed), ctx, 6);
            for (const auto& r : res) EXPECT_EQ(r, 0);
        }
    }
}

TEST(Theorem1, DetectsWrongPattern) {
    const auto x = maximal_5n16(1);
    const auto ctx = DeltaContext::from(x.pedigree);
    const auto s = split(x, {1, 7});
    auto wd = wordlength_pattern(s.kept);
    wd.a[4] += 1;
    const auto res = theorem1_residuals(s.kept, s.removed, wd, wordlength_pattern(s.removed), ctx, 4);
    EXPECT_NE(res[3], 0);
}

TEST(Corollary1, FullDesignReproducesA4) {
    for (int t = 1; t <= 4; ++t) {
        const auto x = maximal_5n16(t);
        const auto ctx = DeltaContext::from(x.pedigree);
        const auto s = split(x, {});
        const auto rep = corollary1_check(s.kept, s.removed, ctx);
        EXPECT_TRUE(rep.all_pass());
        const Integer T = pow2(t);
        const Integer expect = (65 * T * T * T - 75 * T * T + 10 * T) / 24;
        EXPECT_EQ(wordlength_pattern(x.design)[4], expect);
    }
}

TEST(Corollary1, RandomSplits) {
    std::mt19937_64 rng(107);
    for (const auto& x : {maximal_5n16(1), maximal_5n16(2), maximal_9n32(1)}) {
        const auto ctx = DeltaContext::from(x.pedigree);
        for (int trial = 0; trial < 25; ++trial) {
            const auto s = complement_split(x, random_subset(rng, x.design.factors(), trial % (x.design.factors() + 1)));
            const auto rep = corollary1_check(s.kept, s.removed, ctx);
            ASSERT_EQ(rep.lines.size(), 4u);
            EXPECT_TRUE(rep.all_pass());
        }
    }
}

TEST(Corollary1, BalancedHalfSplitHasZeroDelta2) {
    const auto x = maximal_5n16(2);
    const auto ctx = DeltaContext::from(x.pedigree);
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = complement_split(x, random_subset(rng, 20, 10));
        EXPECT_EQ(delta_k(s, ctx, 2), 0);
    }
}

TEST(Delta, LowOrdersConstantForFixedU) {
    std::mt19937_64 rng(113);
    const auto x = maximal_5n16(2);
    const auto ctx = DeltaContext::from(x.pedigree);
    for (int u = 0; u <= 20; ++u) {
        const auto base = complement_split(x, random_subset(rng, 20, u));
        for (int trial = 0; trial < 5; ++trial) {
            const auto s = complement_split(x, random_subset(rng, 20, u));
            for (int k = 1; k <= 3; ++k) EXPECT_EQ(delta_k(s, ctx, k), delta_k(base, ctx, k));
        }
    }
}

TEST(DeltaClosed5n16, Examples) {
    for (int t = 0; t <= 4; ++t) {
        const Integer T = pow2(t);
        EXPECT_EQ(delta_closed_5n16(FrequencyVector{{0, 0, 0, 0, 0}}, t, 2), Rational(20 * T * T));
        EXPECT_EQ(delta_closed_5n16(FrequencyVector{{0, 0, 0, 0, 0}}, t, 4), Rational(815 * T * T * T * T));
    }
    EXPECT_EQ(delta_closed_5n16(FrequencyVector{{1, 1, 0, 0, 0}}, 1, 2), 48);
    EXPECT_THROW(delta_closed_5n16(FrequencyVector{{3, 0, 0, 0, 0}}, 1, 2), InputError);
    EXPECT_THROW(delta_closed_5n16(FrequencyVector{{0, 0, 0, 0}}, 1, 2), InputError);
}

TEST(DeltaClosed5n16, AgreesWithDirectAndIgnoresCopies) {
    std::mt19937_64 rng(127);
    for (int t = 0; t <= 3; ++t) {
        const auto x = maximal_5n16(t);
        const auto ctx = DeltaContext::from(x.pedigree);
        for (int trial = 0; trial < 30; ++trial) {
            const auto f = random_frequencies(rng, 5, 1 << t);
            const auto s1 = complement_split(x, realise(x.pedigree, f));
            const auto s2 = complement_split(x, realise(x.pedigree, f, &rng));
            for (int k = 1; k <= 6; ++k) {
                const Rational closed = delta_closed_5n16(FrequencyVector{f}, t, k);
                EXPECT_EQ(delta_k(s1, ctx, k), closed);
                EXPECT_EQ(delta_k(s2, ctx, k), closed);
            }
        }
    }
}

TEST(DeltaClosed9n32, Examples) {
    for (int t = 0; t <= 4; ++t) {
        const Integer T = pow2(t);
        EXPECT_EQ(delta4_closed_9n32(FrequencyVector{std::vector<int>(9, 0)}, t), 9534 * T * T * T * T);
    }
    const auto x = maximal_9n32(1);
    const auto ctx = DeltaContext::from(x.pedigree);
    EXPECT_EQ(Rational(delta4_closed_9n32(FrequencyVector{{1, 0, 0, 0, 0, 0, 0, 0, 0}}, 1)),
              delta_k(split(x, {1}), ctx, 4));
    EXPECT_THROW(delta4_closed_9n32(FrequencyVector{{1}}, 1), InputError);
}

TEST(DeltaClosed9n32, AgreesWithDirect) {
    std::mt19937_64 rng(131);
    for (int t = 0; t <= 2; ++t) {
        const auto x = maximal_9n32(t);
        const auto ctx = DeltaContext::from(x.pedigree);
        for (int trial = 0; trial < 40; ++trial) {
            const auto f = random_frequencies(rng, 9, 1 << t);
            const auto s = complement_split(x, realise(x.pedigree, f, &rng));
            EXPECT_EQ(Rational(delta4_closed_9n32(FrequencyVector{f}, t)), delta_k(s, ctx, 4));
        }
    }
}

TEST(DeltaClosed9n32, CyclicAndSwapSymmetry) {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 100; ++trial) {
        const int t = trial % 3;
        auto f = random_frequencies(rng, 9, 1 << t);
        const Integer v = delta4_closed_9n32(FrequencyVector{f}, t);
        auto shifted = f;
        std::rotate(shifted.begin(), shifted.begin() + 1, shifted.begin() + 7);
        EXPECT_EQ(delta4_closed_9n32(FrequencyVector{shifted}, t), v);
        std::swap(f[7], f[8]);
        EXPECT_EQ(delta4_closed_9n32(FrequencyVector{f}, t), v);
    }
}

TEST(Lemma2, Examples) {
    const auto a = lemma2_minimizers(3, 11);
    EXPECT_TRUE(a.in_range);
    EXPECT_EQ(a.argmin, (std::vector<std::vector<int>>{{3, 2, 2, 2, 2}}));
    EXPECT_TRUE(a.argmin_is_balanced);

    const auto b = lemma2_minimizers(2, 8);
    EXPECT_FALSE(b.in_range);
    EXPECT_EQ(b.argmin, (std::vector<std::vector<int>>{{2, 2, 2, 2, 0}, {2, 2, 2, 1, 1}}));

    for (int t = 0; t <= 3; ++t) EXPECT_EQ(lemma2_minimizers(t, 0).argmin, (std::vector<std::vector<int>>{{0, 0, 0, 0, 0}}));
    EXPECT_THROW(lemma2_minimizers(1, 11), InputError);
}

TEST(Lemma2, BalancedInRange) {
    for (int t = 0; t <= 3; ++t)
        for (int u = 0; 8 * u <= 15 * (1 << t); ++u) EXPECT_TRUE(lemma2_minimizers(t, u).argmin_is_balanced) << t << ' ' << u;
}

TEST(Lemma3, Examples) {
    for (int t = 0; t <= 2; ++t) {
        const Integer T = pow2(t);
        EXPECT_EQ(lemma3_bound(9 * (1 << t), t), Rational(9534 * T * T * T * T));
        const auto r = lemma3_check(t, 0);
        EXPECT_TRUE(r.bound_attained);
        EXPECT_TRUE(r.pass());
    }
    const auto r = lemma3_check(1, 3);
    EXPECT_TRUE(r.in_range);
    EXPECT_TRUE(r.argmin_conditions);
    EXPECT_TRUE(r.bound_holds);
    EXPECT_EQ(r.scanned, 156u);
}

TEST(Lemma3, InRangeScans) {
    for (int t = 0; t <= 1; ++t)
        for (int u = 0; 2 * u <= 3 * (1 << t); ++u) {
            const auto r = lemma3_check(t, u);
            EXPECT_TRUE(r.pass()) << t << ' ' << u;
            if (r.bound_attained) { EXPECT_EQ(u % 7, 0); }
        }
}

TEST(Lemma4, Examples) {
    EXPECT_EQ(lemma4_lower_bound(9, 0), 7);
    EXPECT_EQ(wordlength_pattern(x0_9f())[4], 7);
    EXPECT_LE(lemma4_lower_bound(18, 1), 92);
    EXPECT_THROW(lemma4_lower_bound(7, 0), InputError);
    EXPECT_THROW(lemma4_lower_bound(10, 0), InputError);
}

TEST(Lemma4, IncreasingOverRange) {
    for (int t = 0; t <= 4; ++t) {
        const int T = 1 << t;
        for (int n = (15 * T + 1) / 2; n < 9 * T; ++n)
            EXPECT_LT(lemma4_lower_bound(n, t), lemma4_lower_bound(n + 1, t)) << t << ' ' << n;
    }
}

TEST(Lemma4, BoundsEveryProjectionAtSmallScale) {
    // t = 1: n = 15..18, all projections of the 18-factor design.
    const auto x = maximal_9n32(1);
    for (int u = 0; u <= 3; ++u) {
        std::vector<bool> mask(18, false);
        std::fill(mask.begin(), mask.begin() + u, true);
        Integer best = -1;
        do {
            std::vector<int> keep;
            for (int c = 0; c < 18; ++c)
                if (!mask[c]) keep.push_back(c + 1);
            const Integer a4 = wordlength_pattern(project(x.design, keep))[4];
            if (best < 0 || a4 < best) best = a4;
        } while (std::prev_permutation(mask.begin(), mask.end()));
        EXPECT_GE(Rational(best), lemma4_lower_bound(18 - u, 1)) << u;
    }
}

TEST(ExampleDeltas, Examples) {
    for (int u = 0; u <= 8; ++u) EXPECT_EQ(example_deltas(ExampleKind::saturated, 3, u, 2), -64);
    for (int k = 1; k <= 6; ++k) {
        const Rational T = 8, h = 4;
        EXPECT_EQ(example_deltas(ExampleKind::even, 3, 0, k),
                  detail::rational_pow(T, k) - 2 * detail::rational_pow(h, k));
    }
    EXPECT_EQ(example_deltas(ExampleKind::even, 2, 2, 4), 0);
    EXPECT_THROW(example_deltas(ExampleKind::even, 2, 5, 4), InputError);
}

TEST(ExampleDeltas, AgreeWithDirect) {
    std::mt19937_64 rng(139);
    for (int t = 1; t <= 4; ++t) {
        const auto sat = saturated_base_double(t);
        const auto even = maximal_even(t);
        const auto cs = DeltaContext::from(sat.pedigree);
        const auto ce = DeltaContext::from(even.pedigree);
        for (int trial = 0; trial < 15; ++trial) {
            const auto a = complement_split(sat, random_subset(rng, sat.design.factors(), trial % (sat.design.factors() + 1)));
            const auto b = complement_split(even, random_subset(rng, even.design.factors(), trial % (even.design.factors() + 1)));
            for (int k = 1; k <= 6; ++k) {
                EXPECT_EQ(delta_k(a, cs, k), example_deltas(ExampleKind::saturated, t, a.f.total(), k));
                EXPECT_EQ(delta_k(b, ce, k), example_deltas(ExampleKind::even, t, b.f.total(), k));
            }
        }
    }
}
