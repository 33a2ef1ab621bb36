#ifndef DLAB_TESTS_SUPPORT_HPP
#define DLAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dlab/design.hpp"
#include "dlab/wlp.hpp"

namespace dlab::testing {

inline Design random_design(std::mt19937_64& rng, int k, int n) {
    std::vector<std::uint64_t> labels(n);
    std::uniform_int_distribution<std::uint64_t> pick(0, width_mask(k));
    for (auto& l : labels) l = pick(rng);
    return Design(k, std::move(labels));
}

/// WLP by walking every column subset; the reference for small n.
inline WordlengthPattern brute_wlp(const Design& d) {
    const int n = d.factors();
    WordlengthPattern w{std::vector<Integer>(n + 1, 0)};
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        std::uint64_t acc = 0;
        for (int j = 0; j < n; ++j)
            if ((s >> j) & 1) acc ^= d.labels()[j];
        if (acc == 0) w.a[std::popcount(s)] += 1;
    }
    return w;
}

/// M_k by summing over all runs.
inline Integer brute_moment(const Design& d, int k) {
    Integer acc = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << d.log2_runs()); ++x)
        acc += boost::multiprecision::pow(Integer(row_weight(d, x)), k);
    return acc;
}

inline std::vector<int> random_subset(std::mt19937_64& rng, int m, int size) {
    std::vector<int> cols(m);
    for (int i = 0; i < m; ++i) cols[i] = i + 1;
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(size);
    return cols;
}

}  // namespace dlab::testing

#endif  // DLAB_TESTS_SUPPORT_HPP
