#ifndef DLAB_DESIGN_HPP
#define DLAB_DESIGN_HPP

// Regular two-level designs as ordered lists of GF(2) column labels.
//
// A design with log2_runs = k has N = 2^k runs indexed by x in [0, 2^k).
// Entry (x, j) of the implicit N x n matrix is parity(x & labels[j]); the
// matrix itself is never materialized. Column indices in the public API are
// 1-based.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dlab/errors.hpp"
#include "dlab/gf2core.hpp"

namespace dlab {

class Design {
public:
    Design() = default;

    Design(int log2_runs, std::vector<std::uint64_t> labels)
        : log2_runs_(log2_runs), labels_(std::move(labels)) {
        if (log2_runs_ < 0 || log2_runs_ > kMaxWidth)
            throw CapacityError("log2_runs " + std::to_string(log2_runs_) + " exceeds " +
                                std::to_string(kMaxWidth));
        const std::uint64_t mask = width_mask(log2_runs_);
        for (std::size_t j = 0; j < labels_.size(); ++j)
            if ((labels_[j] & ~mask) != 0)
                throw InputError("label of column " + std::to_string(j + 1) +
                                 " does not fit in " + std::to_string(log2_runs_) + " bits");
    }

    int log2_runs() const { return log2_runs_; }
    int factors() const { return static_cast<int>(labels_.size()); }
    Integer runs() const { return pow2(log2_runs_); }

    std::span<const std::uint64_t> labels() const { return labels_; }
    // 1-based.
    std::uint64_t label(int column) const { return labels_.at(column - 1); }

    /// Entry of the implicit design matrix.
    int entry(std::uint64_t run, int column) const { return parity(run & label(column)); }

    bool has_zero_label() const {
        return std::find(labels_.begin(), labels_.end(), 0) != labels_.end();
    }

    friend bool operator==(const Design&, const Design&) = default;

private:
    int log2_runs_ = 0;
    std::vector<std::uint64_t> labels_;
};

/// Provenance of a t-fold double: column j = m0 * c + i (1-based i) is a copy
/// of base column i whose label carries c in the t appended high bits.
struct DoublingPedigree {
    Design base;
    int t = 0;

    int base_factors() const { return base.factors(); }
    int factors() const { return base_factors() << t; }
    int column_group(int j) const { return (j - 1) % base_factors() + 1; }
    int column_copy(int j) const { return (j - 1) / base_factors(); }
    /// Inverse of (column_group, column_copy).
    int column_of(int group, int copy) const { return base_factors() * copy + group; }

    friend bool operator==(const DoublingPedigree&, const DoublingPedigree&) = default;
};

/// A design together with the doubling history that produced it.
struct DoubledDesign {
    Design design;
    DoublingPedigree pedigree;
};

struct FrequencyVector {
    std::vector<int> f;
    int total() const { return std::accumulate(f.begin(), f.end(), 0); }
    friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
};

inline Design design_from_labels(int log2_runs, std::vector<std::uint64_t> labels) {
    if (labels.empty()) throw InputError("a design needs at least one column");
    return Design(log2_runs, std::move(labels));
}

/// Builds a 2^(n-p) design whose defining contrast subgroup is generated by
/// the given words (1-based column subsets). Labels are read off a basis of
/// the null space of the generator matrix.
inline Design design_from_defining_words(int n, const std::vector<std::vector<int>>& words) {
    if (n < 1 || n > kMaxWidth) throw InputError("factor count out of range");
    std::vector<std::uint64_t> rows;
    for (const auto& w : words) {
        std::uint64_t r = 0;
        for (int c : w) {
            if (c < 1 || c > n) throw InputError("defining word names column " + std::to_string(c));
            r ^= std::uint64_t{1} << (c - 1);
        }
        rows.push_back(r);
    }
    const auto basis = gf2_nullspace(rows, n, /*require_independent=*/true);
    const int k = static_cast<int>(basis.size());
    std::vector<std::uint64_t> labels(n, 0);
    for (int s = 0; s < k; ++s)
        for (int j = 0; j < n; ++j)
            if ((basis[s] >> j) & 1) labels[j] |= std::uint64_t{1} << s;
    return Design(k, std::move(labels));
}

/// The 2N x 2n double [[X, X], [X, X+1]]: the new run bit is the highest label
/// bit and the second column block carries it.
inline Design double_design(const Design& d) {
    if (d.log2_runs() + 1 > kMaxWidth) throw CapacityError("doubling exceeds the label width cap");
    const std::uint64_t top = std::uint64_t{1} << d.log2_runs();
    std::vector<std::uint64_t> labels(d.labels().begin(), d.labels().end());
    for (std::uint64_t l : d.labels()) labels.push_back(l | top);
    return Design(d.log2_runs() + 1, std::move(labels));
}

inline DoubledDesign double_iter(const Design& d, int t) {
    if (t < 0) throw InputError("doubling count must be nonnegative");
    if (d.log2_runs() + t > kMaxWidth) throw CapacityError("doubling exceeds the label width cap");
    Design x = d;
    for (int s = 0; s < t; ++s) x = double_design(x);
    return {std::move(x), DoublingPedigree{d, t}};
}

inline void check_columns(const Design& d, std::span<const int> cols) {
    std::set<int> seen;
    for (int c : cols) {
        if (c < 1 || c > d.factors())
            throw InputError("column index " + std::to_string(c) + " outside 1.." +
                             std::to_string(d.factors()));
        if (!seen.insert(c).second) throw InputError("column " + std::to_string(c) + " repeated");
    }
}

/// Columns `keep` (1-based, in the given order). An empty selection is allowed
/// and yields the zero-factor design.
inline Design project(const Design& d, std::span<const int> keep) {
    check_columns(d, keep);
    std::vector<std::uint64_t> labels;
    labels.reserve(keep.size());
    for (int c : keep) labels.push_back(d.label(c));
    return Design(d.log2_runs(), std::move(labels));
}

inline Design project(const Design& d, std::initializer_list<int> keep) {
    return project(d, std::span<const int>(keep.begin(), keep.size()));
}

/// Complement of `cols` in 1..n, ascending.
inline std::vector<int> complement_columns(int n, std::span<const int> cols) {
    std::vector<bool> drop(n + 1, false);
    for (int c : cols) drop.at(c) = true;
    std::vector<int> rest;
    for (int c = 1; c <= n; ++c)
        if (!drop[c]) rest.push_back(c);
    return rest;
}

inline FrequencyVector frequency_vector(const DoublingPedigree& p, std::span<const int> cols) {
    FrequencyVector fv{std::vector<int>(p.base_factors(), 0)};
    for (int c : cols) ++fv.f[p.column_group(c) - 1];
    return fv;
}

struct ComplementSplit {
    Design kept;      // D
    Design removed;   // D-bar
    std::vector<int> kept_columns;
    std::vector<int> removed_columns;
    FrequencyVector f;
};

/// Splits a doubled design into the kept design D and the complement D-bar
/// given by `complement_cols` (kept in ascending order, complement in the
/// given order).
inline ComplementSplit complement_split(const DoubledDesign& x, std::span<const int> complement_cols) {
    check_columns(x.design, complement_cols);
    ComplementSplit s;
    s.removed_columns.assign(complement_cols.begin(), complement_cols.end());
    s.kept_columns = complement_columns(x.design.factors(), complement_cols);
    s.kept = project(x.design, s.kept_columns);
    s.removed = project(x.design, s.removed_columns);
    s.f = frequency_vector(x.pedigree, complement_cols);
    return s;
}

inline int row_weight(const Design& d, std::uint64_t run) {
    int w = 0;
    for (std::uint64_t l : d.labels()) w += parity(run & l);
    return w;
}

/// Weight distribution of the 2^rank distinct rows (codewords) together with
/// the rank. Each codeword occurs 2^(k - rank) times among the N runs.
struct CodewordWeights {
    std::vector<std::uint64_t> counts;  // index = Hamming weight, 0..n
    int rank = 0;
};

inline CodewordWeights codeword_weight_distribution(const Design& d) {
    const int n = d.factors();
    const int k = d.log2_runs();
    // Bit-plane s of the label matrix is the codeword of the unit run e_s.
    std::vector<BitRow> planes;
    for (int s = 0; s < k; ++s) {
        BitRow row(n);
        for (int j = 0; j < n; ++j)
            if ((d.labels()[j] >> s) & 1) row.set(j);
        planes.push_back(std::move(row));
    }
    // Row-reduce to an independent generator set.
    std::vector<BitRow> basis;
    for (auto& p : planes) {
        for (const auto& b : basis)
            if (p.test(b.lowest())) p ^= b;
        if (!p.any()) continue;
        const std::size_t lead = p.lowest();
        for (auto& b : basis)
            if (b.test(lead)) b ^= p;
        basis.push_back(p);
    }
    const int r = static_cast<int>(basis.size());
    if (r > 40) throw CapacityError("design rank " + std::to_string(r) + " too large to sweep");

    CodewordWeights out{std::vector<std::uint64_t>(n + 1, 0), r};
    BitRow word(n);
    ++out.counts[0];
    // Gray-code walk over all 2^r combinations.
    const std::uint64_t total = std::uint64_t{1} << r;
    for (std::uint64_t g = 1; g < total; ++g) {
        word ^= basis[std::countr_zero(g)];
        ++out.counts[word.popcount()];
    }
    return out;
}

/// Number of runs with each row weight; entries sum to N.
inline std::vector<Integer> row_weight_distribution(const Design& d) {
    const auto cw = codeword_weight_distribution(d);
    const Integer mult = pow2(d.log2_runs() - cw.rank);
    std::vector<Integer> out(cw.counts.size());
    for (std::size_t w = 0; w < cw.counts.size(); ++w) out[w] = Integer(cw.counts[w]) * mult;
    return out;
}

/// M_k = sum over runs of (row weight)^k.
inline Integer moment(const Design& d, int k) {
    if (k < 1) throw InputError("moment order must be >= 1");
    const auto dist = row_weight_distribution(d);
    Integer acc = 0;
    for (std::size_t w = 0; w < dist.size(); ++w)
        if (dist[w] != 0) acc += dist[w] * boost::multiprecision::pow(Integer(w), k);
    return acc;
}

}  // namespace dlab

#endif  // DLAB_DESIGN_HPP
