#ifndef DLAB_SEARCH_HPP
#define DLAB_SEARCH_HPP

// Minimum-aberration machinery over projections of a doubled design:
// exhaustive complement search under the sequential key, greedy deletion,
// and the upper/lower bound inequalities that separate the maximal families.

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "dlab/catalog.hpp"
#include "dlab/complementary.hpp"
#include "dlab/design.hpp"
#include "dlab/errors.hpp"
#include "dlab/gf2core.hpp"
#include "dlab/wlp.hpp"

namespace dlab {

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

struct SearchConstraints {
    bool balanced_only = true;       // |f_i - f_j| <= 1
    int depth = 8;                   // key runs over A_4..A_depth
    std::uint64_t budget = kDefaultSearchBudget;
    // Fix copy 0 in every group whose base label is independent of the
    // earlier ones; valid because x -> (b, c + phi(b)) is an automorphism.
    bool symmetry_reduction = false;
    bool unconstrained_check = true;  // compare against all f within budget
    int threads = 1;
    int max_ties = 64;                // column sets retained per class

    void validate() const {
        if (budget == 0) throw InputError("search budget must be positive");
        if (depth < 4) throw InputError("search depth must be >= 4");
        if (threads < 1) throw InputError("thread count must be >= 1");
        if (max_ties < 1) throw InputError("max_ties must be >= 1");
    }
};

/// Candidates sharing one complete wordlength pattern.
struct WlpClass {
    WordlengthPattern wlp;
    std::uint64_t count = 0;
    std::vector<std::vector<int>> column_sets;  // lexicographically smallest, capped
};

struct UnconstrainedCheck {
    bool performed = false;
    bool complete = false;
    std::uint64_t examined = 0;
    Integer space_size = 0;
    std::optional<WlpClass> best;     // best class found (representatives under reduction)
    bool beats_balanced = false;
};

struct SearchResult {
    int u = 0;
    int depth = 0;
    bool balanced_only = true;
    bool symmetry_reduction = false;
    Integer space_size = 0;
    std::uint64_t examined = 0;
    bool budget_exhausted = false;

    WordlengthPattern best_wlp;
    std::uint64_t winner_count = 0;                // all candidates tied at the best key
    std::vector<std::vector<int>> winners;         // ascending column sets, capped
    std::vector<FrequencyVector> winner_frequencies;
    // Distinct patterns among candidates that minimise (A_4, -A_5); sorted by key.
    std::vector<WlpClass> stage_classes;

    UnconstrainedCheck unconstrained;
    std::optional<bool> conditions_satisfiable;    // nullopt: not decided within budget

    std::vector<int> canonical_winner() const { return winners.empty() ? std::vector<int>{} : winners.front(); }
};

namespace detail {

struct ClassAcc {
    std::uint64_t count = 0;
    std::set<std::vector<int>> ties;
};

struct SearchAcc {
    bool any = false;
    std::vector<std::int64_t> prefix;
    std::map<std::vector<std::uint64_t>, ClassAcc> classes;
    std::uint64_t examined = 0;
    bool truncated = false;

    // -1 better, 0 equal, 1 worse than the current best prefix.
    int against(const std::vector<std::int64_t>& p) const {
        if (!any) return -1;
        return p < prefix ? -1 : (p == prefix ? 0 : 1);
    }

    static void add_tie(ClassAcc& c, std::vector<int> cols, std::size_t cap) {
        if (c.ties.size() >= cap && !(cols < *c.ties.rbegin())) return;
        c.ties.insert(std::move(cols));
        if (c.ties.size() > cap) c.ties.erase(std::prev(c.ties.end()));
    }

    void merge(SearchAcc&& o, std::size_t cap) {
        examined += o.examined;
        truncated = truncated || o.truncated;
        if (!o.any) return;
        const int cmp = against(o.prefix);
        if (cmp > 0) return;
        if (cmp < 0) {
            any = true;
            prefix = std::move(o.prefix);
            classes = std::move(o.classes);
            return;
        }
        for (auto& [wlp, oc] : o.classes) {
            auto& c = classes[wlp];
            c.count += oc.count;
            for (auto& s : oc.ties) add_tie(c, s, cap);
        }
    }
};

// One enumeration unit: a fixed frequency vector, copies chosen per group in
// increasing order. Subset-XOR histograms H[v * S + s] (S = u + 1) count
// subsets of the chosen prefix by XOR value v and size s; the last few
// columns are folded in at the leaf by lookup instead of a full update.
class UnitEnumerator {
public:
    UnitEnumerator(const DoublingPedigree& ped, const std::vector<int>& f,
                   const std::vector<bool>& free_group, bool reduce, int depth,
                   std::size_t max_ties, std::uint64_t limit, SearchAcc& acc)
        : base_(ped.base.labels().begin(), ped.base.labels().end()),
          k0_(ped.base.log2_runs()),
          copies_(1 << ped.t),
          m0_(ped.base_factors()),
          depth_(depth),
          max_ties_(max_ties),
          limit_(limit),
          acc_(acc) {
        for (int g = 0; g < m0_; ++g)
            for (int i = 0; i < f[g]; ++i) {
                slot_group_.push_back(g);
                slot_first_.push_back(i == 0);
                slot_left_.push_back(f[g] - 1 - i);
                slot_fixed_.push_back(i == 0 && reduce && free_group[g]);
            }
        u_ = static_cast<int>(slot_group_.size());
        sizes_ = u_ + 1;
        deferred_ = std::min(3, u_);
        values_ = std::size_t{1} << (k0_ + ped.t);
        hist_.assign(u_ - deferred_ + 1, std::vector<std::uint64_t>(values_ * sizes_, 0));
        hist_[0][0] = 1;
        copy_.assign(u_, 0);
        wlp_.assign(sizes_, 0);
    }

    void run() { descend(0); }

private:
    std::uint64_t label(int slot) const {
        return base_[slot_group_[slot]] | (std::uint64_t(copy_[slot]) << k0_);
    }

    void descend(int s) {
        if (stopped_) return;
        if (s == u_) {
            leaf();
            return;
        }
        const int lo = slot_first_[s] ? 0 : copy_[s - 1] + 1;
        const int hi = slot_fixed_[s] ? 0 : copies_ - 1 - slot_left_[s];
        for (int c = lo; c <= hi && !stopped_; ++c) {
            copy_[s] = c;
            if (s < u_ - deferred_) extend(s, label(s));
            descend(s + 1);
        }
    }

    void extend(int s, std::uint64_t c) {
        const auto& src = hist_[s];
        auto& dst = hist_[s + 1];
        dst = src;
        const int top = std::min(s + 1, u_);
        for (std::size_t v = 0; v < values_; ++v) {
            const std::uint64_t* from = &src[(v ^ c) * sizes_];
            std::uint64_t* to = &dst[v * sizes_];
            for (int z = 1; z <= top; ++z) to[z] += from[z - 1];
        }
    }

    std::uint64_t count_len(int len) const {
        if (len > u_) return 0;
        const auto& h = hist_[u_ - deferred_];
        std::uint64_t total = h[len];  // words inside the prefix (XOR value 0)
        for (int mask = 1; mask < (1 << deferred_); ++mask) {
            const int size = std::popcount(static_cast<unsigned>(mask));
            if (size > len) continue;
            total += h[dxor_[mask] * sizes_ + (len - size)];
        }
        return total;
    }

    void leaf() {
        if (acc_.examined >= limit_) {
            stopped_ = true;
            acc_.truncated = true;
            return;
        }
        ++acc_.examined;
        const int base_slot = u_ - deferred_;
        dxor_[0] = 0;
        for (int mask = 1; mask < (1 << deferred_); ++mask) {
            const int low = std::countr_zero(static_cast<unsigned>(mask));
            dxor_[mask] = dxor_[mask & (mask - 1)] ^ label(base_slot + low);
        }
        prefix_.clear();
        prefix_.push_back(static_cast<std::int64_t>(count_len(4)));
        if (depth_ >= 5) prefix_.push_back(-static_cast<std::int64_t>(count_len(5)));
        const int cmp = acc_.against(prefix_);
        if (cmp > 0) return;
        for (int len = 0; len <= u_; ++len) wlp_[len] = count_len(len);
        if (cmp < 0) {
            acc_.any = true;
            acc_.prefix = prefix_;
            acc_.classes.clear();
        }
        auto& cls = acc_.classes[wlp_];
        ++cls.count;
        std::vector<int> cols(u_);
        for (int s = 0; s < u_; ++s) cols[s] = m0_ * copy_[s] + slot_group_[s] + 1;
        std::sort(cols.begin(), cols.end());
        SearchAcc::add_tie(cls, std::move(cols), max_ties_);
    }

    std::vector<std::uint64_t> base_;
    int k0_;
    int copies_;
    int m0_;
    int depth_;
    std::size_t max_ties_;
    std::uint64_t limit_;
    SearchAcc& acc_;

    std::vector<int> slot_group_;
    std::vector<bool> slot_first_;
    std::vector<int> slot_left_;
    std::vector<bool> slot_fixed_;
    int u_ = 0;
    int sizes_ = 1;
    int deferred_ = 0;
    std::size_t values_ = 1;
    std::vector<std::vector<std::uint64_t>> hist_;
    std::vector<int> copy_;
    std::uint64_t dxor_[8] = {};
    std::vector<std::int64_t> prefix_;
    std::vector<std::uint64_t> wlp_;
    bool stopped_ = false;
};

inline std::vector<bool> free_groups(const Design& base) {
    std::vector<bool> out;
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t l : base.labels()) {
        chosen.push_back(l);
        const bool independent = gf2_rank(chosen) == static_cast<int>(chosen.size());
        if (!independent) chosen.pop_back();
        out.push_back(independent);
    }
    return out;
}

inline Integer unit_size(const std::vector<int>& f, int copies, const std::vector<bool>& free_g,
                         bool reduce) {
    Integer s = 1;
    for (std::size_t g = 0; g < f.size(); ++g) {
        if (f[g] == 0) continue;
        s *= (reduce && free_g[g]) ? binomial(copies - 1, f[g] - 1) : binomial(copies, f[g]);
    }
    return s;
}

inline std::vector<std::vector<int>> balanced_frequencies(int m0, int u, int copies) {
    std::vector<std::vector<int>> out;
    const int q = u / m0, r = u % m0;
    if (q + (r ? 1 : 0) > copies) return out;
    // Choose which r groups carry q + 1, in lexicographic order of the vector.
    std::vector<int> pick(m0, 0);
    std::fill(pick.begin(), pick.begin() + r, 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> f(m0);
        for (int g = 0; g < m0; ++g) f[g] = q + pick[g];
        out.push_back(std::move(f));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

inline std::vector<std::vector<int>> all_frequencies(int m0, int u, int copies) {
    std::vector<std::vector<int>> out;
    for_each_composition(m0, u, copies, [&](const std::vector<int>& f) { out.push_back(f); });
    return out;
}

struct SpaceRun {
    SearchAcc acc;
    Integer space_size = 0;
};

inline SpaceRun enumerate_space(const DoublingPedigree& ped,
                                const std::vector<std::vector<int>>& units, bool reduce,
                                int depth, std::size_t max_ties, std::uint64_t budget,
                                int threads) {
    const int copies = 1 << ped.t;
    const auto free_g = free_groups(ped.base);
    SpaceRun out;
    std::vector<std::uint64_t> limits;
    for (const auto& f : units) {
        const Integer size = unit_size(f, copies, free_g, reduce);
        const Integer left = Integer(budget) > out.space_size ? Integer(budget) - out.space_size
                                                              : Integer(0);
        limits.push_back(static_cast<std::uint64_t>(std::min(size, left)));
        out.space_size += size;
    }
    std::vector<SearchAcc> parts(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < units.size(); i = next++) {
            if (limits[i] == 0) {
                parts[i].truncated = true;
                continue;
            }
            UnitEnumerator e(ped, units[i], free_g, reduce, depth, max_ties, limits[i], parts[i]);
            e.run();
        }
    };
    const int n_threads = std::max(1, std::min<int>(threads, static_cast<int>(units.size())));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& p : parts) out.acc.merge(std::move(p), max_ties);
    // A unit whose limit was exactly its size finished without truncation.
    out.acc.truncated = Integer(out.acc.examined) < out.space_size;
    return out;
}

inline WordlengthPattern to_wlp(const std::vector<std::uint64_t>& v) {
    WordlengthPattern w;
    for (auto x : v) w.a.emplace_back(x);
    return w;
}

inline std::vector<WlpClass> ordered_classes(const SearchAcc& acc, int depth) {
    std::vector<WlpClass> out;
    for (const auto& [wlp, c] : acc.classes)
        out.push_back({to_wlp(wlp), c.count, {c.ties.begin(), c.ties.end()}});
    std::stable_sort(out.begin(), out.end(), [depth](const WlpClass& a, const WlpClass& b) {
        return seq_key(a.wlp, depth) < seq_key(b.wlp, depth);
    });
    return out;
}

inline void check_pedigree(const DoubledDesign& x) {
    if (double_iter(x.pedigree.base, x.pedigree.t).design != x.design)
        throw InputError("design does not match its doubling pedigree");
}

}  // namespace detail

/// Exhaustive search for complements D-bar of size u minimising
/// (A_4, -A_5, A_6, ...) of D-bar. Ties are all kept (counted; the
/// lexicographically smallest column sets are listed).
inline SearchResult complement_search(const DoubledDesign& x, int u, const SearchConstraints& c) {
    c.validate();
    detail::check_pedigree(x);
    const auto& ped = x.pedigree;
    const int m = x.design.factors();
    if (u < 0 || u > m) throw InputError("u outside 0..m");
    if (u > 31) throw CapacityError("complement search supports u <= 31");
    const int copies = 1 << ped.t;
    const int m0 = ped.base_factors();

    SearchResult r;
    r.u = u;
    r.depth = c.depth;
    r.balanced_only = c.balanced_only;
    r.symmetry_reduction = c.symmetry_reduction;

    const auto units = c.balanced_only ? detail::balanced_frequencies(m0, u, copies)
                                       : detail::all_frequencies(m0, u, copies);
    auto run = detail::enumerate_space(ped, units, c.symmetry_reduction, c.depth,
                                       static_cast<std::size_t>(c.max_ties), c.budget, c.threads);
    r.space_size = run.space_size;
    r.examined = run.acc.examined;
    r.budget_exhausted = run.acc.truncated;
    if (!run.acc.any) return r;

    r.stage_classes = detail::ordered_classes(run.acc, c.depth);
    const SeqKey best = seq_key(r.stage_classes.front().wlp, c.depth);
    r.best_wlp = r.stage_classes.front().wlp;
    std::set<std::vector<int>> ties;
    for (const auto& cls : r.stage_classes) {
        if (seq_key(cls.wlp, c.depth) != best) continue;
        r.winner_count += cls.count;
        ties.insert(cls.column_sets.begin(), cls.column_sets.end());
    }
    for (const auto& s : ties) {
        if (static_cast<int>(r.winners.size()) >= c.max_ties) break;
        r.winners.push_back(s);
    }
    // Pattern of the canonical winner decides best_wlp among tied classes.
    for (const auto& cls : r.stage_classes)
        if (std::find(cls.column_sets.begin(), cls.column_sets.end(), r.winners.front()) !=
            cls.column_sets.end())
            r.best_wlp = cls.wlp;
    for (const auto& s : r.winners) {
        r.winner_frequencies.push_back(frequency_vector(ped, s));
        const auto check = wordlength_pattern(project(x.design, s));
        if (seq_key(check, c.depth) != best)
            throw InternalFault("search winner pattern does not recompute");
    }
    for (const auto& cls : r.stage_classes)
        if (wordlength_pattern(project(x.design, cls.column_sets.front())) != cls.wlp)
            throw InternalFault("stage class pattern does not recompute");

    if (c.balanced_only && c.unconstrained_check) {
        auto free_run = detail::enumerate_space(ped, detail::all_frequencies(m0, u, copies), true,
                                                c.depth, 1, c.budget, c.threads);
        auto& uc = r.unconstrained;
        uc.performed = true;
        uc.examined = free_run.acc.examined;
        uc.space_size = free_run.space_size;
        uc.complete = !free_run.acc.truncated;
        if (free_run.acc.any) {
            uc.best = detail::ordered_classes(free_run.acc, c.depth).front();
            uc.beats_balanced = seq_key(uc.best->wlp, c.depth) < best;
        }
        if (uc.beats_balanced)
            r.conditions_satisfiable = false;
        else if (uc.complete && !r.budget_exhausted)
            r.conditions_satisfiable = true;
    }
    return r;
}

/// Number of length-r words containing each column (index 0 = column 1).
inline std::vector<std::uint64_t> word_count_per_factor(const Design& d, int r,
                                                        std::uint64_t budget = kDefaultEnumBudget) {
    const int n = d.factors();
    if (r < 1 || r > n) throw InputError("word length outside 1..n");
    if (detail::subset_budget(n, r) > budget)
        throw CapacityError("word incidence enumeration exceeds the budget");
    std::vector<Integer> counts(r + 1, 0);
    std::vector<std::uint64_t> per(n, 0);
    detail::SubsetWordCounter counter{d.labels(), r, {}, &counts, &per, r, {}};
    counter.build_index();
    counter.walk(0, 0);
    return per;
}

struct GreedyProjection {
    Design design;
    std::vector<int> kept;      // columns of the input design, ascending
    std::vector<int> deleted;   // in deletion order
    Integer achieved;           // A_r of the result
    Rational bound;             // A_r(X) C(n,r) / C(m,r)
};

/// Deletes, one at a time, a factor lying in the most length-r words
/// (smallest index on ties) until n factors remain.
inline GreedyProjection greedy_projection(const Design& x, int n, int r) {
    const int m = x.factors();
    if (r < 1 || n < r || n > m) throw InputError("greedy projection needs r <= n <= m");
    GreedyProjection g;
    for (int c = 1; c <= m; ++c) g.kept.push_back(c);
    Design cur = x;
    while (cur.factors() > n) {
        const auto per = word_count_per_factor(cur, r);
        const auto it = std::max_element(per.begin(), per.end());  // first maximum
        const int pos = static_cast<int>(it - per.begin());
        g.deleted.push_back(g.kept[pos]);
        g.kept.erase(g.kept.begin() + pos);
        cur = project(x, g.kept);
    }
    g.design = cur;
    g.achieved = wordlength_pattern(cur)[r];
    g.bound = Rational(wordlength_pattern(x)[r] * binomial(n, r), binomial(m, r));
    return g;
}

/// Existence bound on A_4 for n-factor projections of the 5 * 2^t factor
/// maximal design.
inline Rational corollary2_bound(int n, int t) {
    if (t < 0 || t > 20) throw InputError("t out of range");
    const int m = 5 << t;
    if (n < 0 || n > m) throw InputError("n outside 0..5*2^t");
    const Rational lead = (65 * pow2_rational(3 * t - 2) - 75 * pow2_rational(2 * t - 2) +
                           5 * pow2_rational(t - 1)) /
                          6;
    return lead * Rational(binomial(n, 4), binomial(m, 4));
}

/// Lower bound on A_4 for projections of the N/2-factor maximal even design.
inline Rational even_design_lower_bound(int n, int t) {
    const Rational c2(binomial(n, 2));
    return (c2 * c2 / Rational(pow2(t + 3) - 1) - c2) / 6;
}

struct InequalityRow {
    int n = 0;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

struct InequalityReport {
    std::string name;
    int t = 0;
    std::vector<InequalityRow> rows;
    std::vector<CheckLine> conditions;
    bool all_pass() const {
        return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; }) &&
               std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.pass; });
    }
};

/// For every n in [4*2^t + 1, 5*2^t]: the quadratic inequality (5N/16 bound
/// numerator vs even-design bound, cleared of denominators) and the direct
/// comparison of the two bounds.
inline InequalityReport lemma6_check(int t) {
    if (t < 0 || t > 16) throw InputError("t out of range");
    const int big_t = 1 << t;
    InequalityReport rep{"lemma6", t, {}, {}};
    const Rational k6 = 65 * pow2_rational(3 * t - 2) - 75 * pow2_rational(2 * t - 2) +
                        5 * pow2_rational(t - 1);
    const Rational c5 = Rational(binomial(5 * big_t, 4));
    for (int n = 4 * big_t + 1; n <= 5 * big_t; ++n) {
        const Rational lhs = k6 * (n - 2) * (n - 3);
        const Rational rhs = (Rational(6 * n * (n - 1)) / Rational(pow2(t + 3) - 1) - 12) * c5;
        rep.rows.push_back({n, lhs, rhs, lhs < rhs});
        const Rational up = corollary2_bound(n, t), lo = even_design_lower_bound(n, t);
        rep.conditions.push_back({"bound_gap_n" + std::to_string(n), lo, up, up < lo});
    }
    return rep;
}

/// Dense polynomial with exact rational coefficients (index = degree).
struct RationalPolynomial {
    std::vector<Rational> c;

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    RationalPolynomial derivative() const {
        RationalPolynomial d;
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * static_cast<int>(i));
        return d;
    }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
        if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), 0);
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
        return a;
    }
};

/// L(n) as a polynomial in n.
inline RationalPolynomial lemma4_polynomial(int t) {
    const Integer T = pow2(t);
    const Rational d = 1176;
    return {{Rational(-882 * T + 11907 * T * T - 39477 * T * T * T) / d,
             Rational(196 - 2646 * T + 17380 * T * T) / d, Rational(-2754 * T) / d,
             Rational(172) / d}};
}

/// Corollary-2 bound at 2^(t+1), i.e. K * n(n-1)(n-2)(n-3) / (24 C(10T, 4)).
inline RationalPolynomial lemma7_upper_polynomial(int t) {
    const Rational k = (65 * pow2_rational(3 * t + 1) - 75 * pow2_rational(2 * t) +
                        5 * pow2_rational(t)) /
                       6;
    const Rational scale = k / (24 * Rational(binomial(10 << t, 4)));
    // n(n-1)(n-2)(n-3) = n^4 - 6n^3 + 11n^2 - 6n
    return {{0, -6 * scale, 11 * scale, -6 * scale, scale}};
}

/// Sign conditions on F = L - U and its derivatives over [8T, 9T], strict
/// integer monotonicity, F(8T+1) > 0, and U(n) < L(n) for n in [8T+1, 9T].
inline InequalityReport lemma7_check(int t) {
    if (t < 0 || t > 16) throw InputError("t out of range");
    const int big_t = 1 << t;
    const auto lower = lemma4_polynomial(t);
    const auto upper = lemma7_upper_polynomial(t);
    const auto f = lower - upper;
    const auto f1 = f.derivative(), f2 = f1.derivative(), f3 = f2.derivative(),
               f4 = f3.derivative();
    InequalityReport rep{"lemma7", t, {}, {}};
    const Rational lo = 8 * big_t, hi = 9 * big_t;
    auto positive = [&](std::string name, const Rational& v) {
        rep.conditions.push_back({std::move(name), 0, v, v > 0});
    };
    positive("F3(9T)", f3(hi));
    rep.conditions.push_back({"F4<0", 0, f4(lo), f4(lo) < 0 && f4(hi) < 0});
    positive("F2(8T)", f2(lo));
    positive("F1(8T)", f1(lo));
    positive("F(8T+1)", f(lo + 1));
    for (int n = 8 * big_t; n < 9 * big_t; ++n)
        rep.conditions.push_back({"increase_n" + std::to_string(n), f(n), f(n + 1), f(n + 1) > f(n)});
    for (int n = 8 * big_t + 1; n <= 9 * big_t; ++n)
        rep.rows.push_back({n, upper(n), lower(n), upper(n) < lower(n)});
    return rep;
}

struct MaProjection {
    Design design;
    std::vector<int> deleted;
    WordlengthPattern wlp;
    bool catalog_choice = false;  // deleted set is the catalogued complement
    SearchResult search;
};

/// Deletes the best complement of size m - n. When the ambient design is the
/// 5N/16 family and the catalogued complement ties the search optimum, that
/// complement is the one deleted.
inline MaProjection ma_project(const DoubledDesign& x, int n, const SearchConstraints& c) {
    const int m = x.design.factors();
    if (n < 0 || n > m) throw InputError("n outside 0..m");
    const int u = m - n;
    MaProjection p;
    p.search = complement_search(x, u, c);
    p.deleted = p.search.canonical_winner();
    if (u >= 1 && u <= 11 && x.pedigree.base == x0_resV() && (u <= 5 || x.pedigree.t >= 3)) {
        const auto cat = preferred_complement(u, x.pedigree.t);
        const auto w = wordlength_pattern(project(x.design, cat));
        if (!p.search.budget_exhausted &&
            seq_key(w, c.depth) == seq_key(p.search.best_wlp, c.depth)) {
            p.deleted = cat;
            p.catalog_choice = true;
        }
    }
    p.design = project(x.design, complement_columns(m, p.deleted));
    p.wlp = wordlength_pattern(p.design);
    return p;
}

}  // namespace dlab

#endif  // DLAB_SEARCH_HPP
