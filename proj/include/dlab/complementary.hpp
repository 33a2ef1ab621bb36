#ifndef DLAB_COMPLEMENTARY_HPP
#define DLAB_COMPLEMENTARY_HPP

// Identities linking a projection D of a doubled design X to its complement
// D-bar: the correction term Delta_k, the general wordlength identity, the
// resolution-IV specialisation, and the frequency-only closed forms for the
// 5N/16 and 9N/32 families together with their minimisation results.

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "dlab/design.hpp"
#include "dlab/errors.hpp"
#include "dlab/gf2core.hpp"
#include "dlab/wlp.hpp"

namespace dlab {

struct DeltaContext {
    Design base;
    int t = 0;

    static DeltaContext from(const DoublingPedigree& p) { return {p.base, p.t}; }

    int base_factors() const { return base.factors(); }
    int factors() const { return base.factors() << t; }                // m
    int log2_runs() const { return base.log2_runs() + t; }
    Integer runs() const { return pow2(log2_runs()); }                  // N
    Rational half_factors() const { return Rational(factors(), 2); }   // m/2
};

namespace detail {

inline void check_split(const Design& kept, const Design& removed, const DeltaContext& ctx) {
    if (kept.log2_runs() != ctx.log2_runs() || removed.log2_runs() != ctx.log2_runs())
        throw InputError("split run size does not match the doubling context");
    if (kept.factors() + removed.factors() != ctx.factors())
        throw InputError("split has " + std::to_string(kept.factors() + removed.factors()) +
                         " columns, context expects " + std::to_string(ctx.factors()));
}

inline Rational rational_pow(const Rational& base, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

}  // namespace detail

/// Delta_k = sum over the first N0 runs of w(D)^k - (m/2 - w(D-bar))^k.
inline Rational delta_k(const Design& kept, const Design& removed, const DeltaContext& ctx, int k) {
    if (k < 1) throw InputError("delta order must be >= 1");
    detail::check_split(kept, removed, ctx);
    const Rational half = ctx.half_factors();
    const std::uint64_t base_runs = std::uint64_t{1} << ctx.base.log2_runs();
    Rational acc = 0;
    for (std::uint64_t x = 0; x < base_runs; ++x) {
        const Integer wd = row_weight(kept, x);
        const Rational wr = half - row_weight(removed, x);
        acc += Rational(boost::multiprecision::pow(wd, k)) - detail::rational_pow(wr, k);
    }
    return acc;
}

inline Rational delta_k(const ComplementSplit& s, const DeltaContext& ctx, int k) {
    return delta_k(s.kept, s.removed, ctx, k);
}

/// Coefficient of A_i(D-bar) in the complementary identity:
/// sum_{j=i}^{k} C(k,j) (m/2)^(k-j) (-1)^j Q_j(i; u).
inline Rational complement_coefficient(int k, int i, int m, int u) {
    const Rational half(m, 2);
    Rational acc = 0;
    for (int j = i; j <= k; ++j) {
        Rational term = Rational(binomial(k, j)) * detail::rational_pow(half, k - j) *
                        q_coefficient(j, i, u);
        if (j % 2) acc -= term; else acc += term;
    }
    return acc;
}

/// LHS - RHS of the complementary wordlength identity for orders 1..k_max,
/// given the two patterns. Index 0 of the result is order 1.
inline std::vector<Rational> theorem1_residuals(const Design& kept, const Design& removed,
                                                const WordlengthPattern& wd,
                                                const WordlengthPattern& wr,
                                                const DeltaContext& ctx, int k_max) {
    detail::check_split(kept, removed, ctx);
    const int n = kept.factors();
    const int u = removed.factors();
    const int m = ctx.factors();
    const Integer big_n = ctx.runs();
    std::vector<Rational> out;
    for (int k = 1; k <= k_max; ++k) {
        Rational lhs = 0, rhs = 0;
        for (int i = 0; i <= k; ++i) {
            if (wd[i] != 0) lhs += q_coefficient(k, i, n) * wd[i];
            if (wr[i] != 0) rhs += complement_coefficient(k, i, m, u) * wr[i];
        }
        rhs += delta_k(kept, removed, ctx, k) / big_n;
        out.push_back(lhs - rhs);
    }
    return out;
}

inline Rational theorem1_residual(const Design& kept, const Design& removed,
                                  const DeltaContext& ctx, int k) {
    if (k < 1) throw InputError("order must be >= 1");
    const auto r = theorem1_residuals(kept, removed, wordlength_pattern(kept),
                                      wordlength_pattern(removed), ctx, k);
    return r.back();
}

struct CheckLine {
    std::string name;
    Rational expected;
    Rational actual;
    bool pass = false;
};

struct Corollary1Report {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
    }
};

/// Delta_1..3 closed forms and the A_4 relation for a resolution >= IV
/// ambient design.
inline Corollary1Report corollary1_check(const Design& kept, const Design& removed,
                                         const DeltaContext& ctx, const WordlengthPattern& wd,
                                         const WordlengthPattern& wr) {
    detail::check_split(kept, removed, ctx);
    const Rational n = kept.factors();
    const Rational m = ctx.factors();
    const Rational big_n(ctx.runs());
    Corollary1Report rep;
    auto add = [&](std::string name, Rational expected, Rational actual) {
        const bool ok = expected == actual;
        rep.lines.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    };
    add("delta1", 0, delta_k(kept, removed, ctx, 1));
    add("delta2", big_n * (2 * n - m) / 4, delta_k(kept, removed, ctx, 2));
    add("delta3", 3 * big_n * n * (2 * n - m) / 8, delta_k(kept, removed, ctx, 3));
    const Rational d4 = delta_k(kept, removed, ctx, 4);
    add("a4_relation",
        Rational(wr[4]) - (2 * n - m) * (6 * n * n + 3 * m - 2) / 24 + 2 * d4 / (3 * big_n),
        Rational(wd[4]));
    return rep;
}

inline Corollary1Report corollary1_check(const Design& kept, const Design& removed,
                                         const DeltaContext& ctx) {
    return corollary1_check(kept, removed, ctx, wordlength_pattern(kept),
                            wordlength_pattern(removed));
}

/// Frequency-only Delta_k for the 5N/16 family (m0 = 5, m = 5 * 2^t).
inline Rational delta_closed_5n16(const FrequencyVector& fv, int t, int k) {
    if (fv.f.size() != 5) throw InputError("5N/16 family needs five frequencies");
    if (t < 0 || k < 1) throw InputError("need t >= 0 and k >= 1");
    const Integer big_t = pow2(t);
    for (int f : fv.f)
        if (f < 0 || f > big_t) throw InputError("frequency outside 0..2^t");
    const Rational u = fv.total();
    const Rational half = Rational(5 * big_t, 2);
    const Rational four_t = Rational(4 * big_t), two_t = Rational(2 * big_t);
    using detail::rational_pow;
    Rational acc = 0;
    for (int i = 0; i < 5; ++i)
        acc += rational_pow(four_t - u + fv.f[i], k) - rational_pow(half - u + fv.f[i], k);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            const int s = fv.f[i] + fv.f[j];
            acc += rational_pow(two_t - s, k) - rational_pow(half - s, k);
        }
    return acc - rational_pow(half, k);
}

struct Delta4Aggregates {
    Integer big_t, f1, f2, g1, g2, g3;

    static Delta4Aggregates from(const std::vector<int>& f, int t) {
        Delta4Aggregates a;
        a.big_t = pow2(t);
        for (int i = 0; i < 7; ++i) {
            a.f1 += f[i];
            a.f2 += f[i] * f[i];
        }
        for (int i = 7; i < 9; ++i) {
            a.g1 += f[i];
            a.g2 += f[i] * f[i];
            a.g3 += f[i] * f[i] * f[i];
        }
        return a;
    }
};

/// Frequency-only Delta_4 for the 9N/32 family.
inline Integer delta4_closed_9n32(const FrequencyVector& fv, int t) {
    if (fv.f.size() != 9) throw InputError("9N/32 family needs nine frequencies");
    if (t < 0) throw InputError("t must be nonnegative");
    const auto& f = fv.f;
    for (int v : f)
        if (v < 0 || v > (1 << t)) throw InputError("frequency outside 0..2^t");
    const auto a = Delta4Aggregates::from(f, t);
    const Integer& T = a.big_t;
    const Integer T2 = T * T, T3 = T2 * T, T4 = T3 * T;
    Integer cyc = 0;
    // f_i f_{i+2} f_{i+3}, indices mod 7 (1-based in the published form).
    for (int i = 0; i < 7; ++i) cyc += Integer(f[i]) * f[(i + 2) % 7] * f[(i + 3) % 7];
    Integer v = 9534 * T4;
    v -= 8 * T3 * (535 * a.f1 + 511 * a.g1);
    v += 12 * T2 * (51 * a.f1 * a.f1 + 3 * a.f2 + 94 * a.f1 * a.g1 + 47 * a.g1 * a.g1 + 7 * a.g2);
    v -= 8 * T *
         (4 * a.f1 * a.f1 * a.f1 + 9 * a.f1 * a.f1 * a.g1 + 3 * a.f2 * a.g1 + 12 * a.g1 * a.g2 +
          9 * a.f1 * a.g1 * a.g1 + 3 * a.f1 * a.g2 - 8 * a.g3);
    v += 48 * T * cyc;
    return v;
}

namespace detail {

/// Calls fn(f) for every vector of `parts` entries in [0, cap] summing to
/// `total`, in lexicographic order.
inline void for_each_composition(int parts, int total, int cap,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> f(parts, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == parts - 1) {
            if (left <= cap) {
                f[idx] = left;
                fn(f);
            }
            return;
        }
        for (int v = 0; v <= std::min(cap, left); ++v) {
            f[idx] = v;
            rec(idx + 1, left - v);
        }
    };
    if (parts > 0) rec(0, total);
}

/// Nonincreasing vectors (multisets) of `parts` entries in [0, cap] summing to `total`.
inline void for_each_multiset(int parts, int total, int cap,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> f(parts, 0);
    std::function<void(int, int, int)> rec = [&](int idx, int left, int hi) {
        if (idx == parts) {
            if (left == 0) fn(f);
            return;
        }
        const int slots = parts - idx;
        for (int v = std::min(hi, left); v >= 0; --v) {
            if (v * slots < left) break;
            f[idx] = v;
            rec(idx + 1, left - v, v);
        }
    };
    rec(0, total, cap);
}

inline bool near_balanced(const std::vector<int>& f, std::size_t first, std::size_t last) {
    const auto [lo, hi] = std::minmax_element(f.begin() + first, f.begin() + last);
    return *hi - *lo <= 1;
}

}  // namespace detail

struct Lemma2Result {
    int t = 0;
    int u = 0;
    bool in_range = false;                 // u <= 15 * 2^(t-3)
    Rational minimum;
    std::vector<std::vector<int>> argmin;  // nonincreasing multisets, descending order
    bool argmin_is_balanced = false;       // argmin == {balanced multiset}
};

/// Brute-force argmin of Delta_4 over all 5N/16 frequency multisets with sum u.
inline Lemma2Result lemma2_minimizers(int t, int u) {
    if (t < 0 || t > 20) throw InputError("t out of range");
    const int cap = 1 << t;
    if (u < 0 || u > 5 * cap) throw InputError("u outside 0..5*2^t");
    Lemma2Result r{t, u, 8 * u <= 15 * cap, 0, {}, false};
    bool first = true;
    detail::for_each_multiset(5, u, cap, [&](const std::vector<int>& f) {
        const Rational v = delta_closed_5n16(FrequencyVector{f}, t, 4);
        if (first || v < r.minimum) {
            r.minimum = v;
            r.argmin.clear();
            first = false;
        }
        if (v == r.minimum) r.argmin.push_back(f);
    });
    std::sort(r.argmin.rbegin(), r.argmin.rend());
    r.argmin_is_balanced = r.argmin.size() == 1 && detail::near_balanced(r.argmin[0], 0, 5);
    return r;
}

/// Lower bound 2^(t+1) (760 n^3 - 5400 n^2 2^t + 17380 n 2^2t - 39477 2^3t) / 49.
inline Rational lemma3_bound(int n, int t) {
    const Integer T = pow2(t);
    const Integer nn = n;
    const Integer poly = 760 * nn * nn * nn - 5400 * nn * nn * T + 17380 * nn * T * T -
                         39477 * T * T * T;
    return Rational(2 * T * poly, 49);
}

struct Lemma3Report {
    int t = 0;
    int u = 0;
    bool in_range = false;                  // u <= 3 * 2^(t-1)
    Integer minimum;
    std::vector<std::vector<int>> argmin;   // full 9-vectors, lexicographic
    bool argmin_conditions = false;         // f8 = f9 = 0 and near balance on 1..7
    Rational bound;
    bool bound_holds = false;               // every scanned value >= bound
    bool bound_attained = false;
    std::size_t scanned = 0;
    bool pass() const { return !in_range || (argmin_conditions && bound_holds); }
};

inline Lemma3Report lemma3_check(int t, int u) {
    if (t < 0 || t > 12) throw InputError("t out of range");
    const int cap = 1 << t;
    if (u < 0 || u > 9 * cap) throw InputError("u outside 0..9*2^t");
    Lemma3Report r;
    r.t = t;
    r.u = u;
    r.in_range = 2 * u <= 3 * cap;
    r.bound = lemma3_bound(9 * cap - u, t);
    r.bound_holds = true;
    bool first = true;
    detail::for_each_composition(9, u, cap, [&](const std::vector<int>& f) {
        const Integer v = delta4_closed_9n32(FrequencyVector{f}, t);
        ++r.scanned;
        if (Rational(v) < r.bound) r.bound_holds = false;
        if (Rational(v) == r.bound) r.bound_attained = true;
        if (first || v < r.minimum) {
            r.minimum = v;
            r.argmin.clear();
            first = false;
        }
        if (v == r.minimum) r.argmin.push_back(f);
    });
    r.argmin_conditions = std::all_of(r.argmin.begin(), r.argmin.end(), [](const auto& f) {
        return f[7] == 0 && f[8] == 0 && detail::near_balanced(f, 0, 7);
    });
    return r;
}

/// L(n) = [a(n) - b(n) 2^t + c(n) 2^2t - 39477 2^3t] / 1176 for
/// 15N/64 <= n <= 9N/32, N = 32 * 2^t.
inline Rational lemma4_lower_bound(int n, int t) {
    if (t < 0 || t > 20) throw InputError("t out of range");
    const Integer T = pow2(t);
    if (2 * Integer(n) < 15 * T || Integer(n) > 9 * T)
        throw InputError("n = " + std::to_string(n) + " outside [15N/64, 9N/32] for t = " +
                         std::to_string(t));
    const Integer nn = n;
    const Integer a = 196 * nn + 172 * nn * nn * nn;
    const Integer b = 882 + 2646 * nn + 2754 * nn * nn;
    const Integer c = 11907 + 17380 * nn;
    return Rational(a - b * T + c * T * T - 39477 * T * T * T, 1176);
}

enum class ExampleKind { saturated, even };

/// Closed-form Delta_k of the two classical special cases: the saturated
/// resolution III construction (-2^{tk}) and the maximal even design.
inline Rational example_deltas(ExampleKind kind, int t, int u, int k) {
    if (t < 0 || k < 1) throw InputError("need t >= 0 and k >= 1");
    if (kind == ExampleKind::saturated) return -Rational(pow2(static_cast<long>(t) * k));
    if (u < 0 || u > (1 << t)) throw InputError("u outside 0..2^t");
    const Rational big_t(pow2(t));
    const Rational half = big_t / 2;
    using detail::rational_pow;
    return rational_pow(big_t - u, k) - rational_pow(half, k) - rational_pow(half - u, k);
}

}  // namespace dlab

#endif  // DLAB_COMPLEMENTARY_HPP
