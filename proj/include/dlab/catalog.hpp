#ifndef DLAB_CATALOG_HPP
#define DLAB_CATALOG_HPP

// Named base designs and the maximal designs obtained from them by repeated
// doubling, with the column numbering the complement sets below rely on.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dlab/design.hpp"
#include "dlab/errors.hpp"
#include "dlab/wlp.hpp"

namespace dlab {

/// All nonempty zero-sum column subsets (1-based, ascending), i.e. the
/// defining contrast subgroup minus the identity. Exponential in n.
inline std::set<std::vector<int>> defining_words(const Design& d) {
    const int n = d.factors();
    if (n > 26) throw CapacityError("defining word listing limited to 26 factors");
    std::set<std::vector<int>> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        std::uint64_t acc = 0;
        for (int j = 0; j < n; ++j)
            if ((s >> j) & 1) acc ^= d.labels()[j];
        if (acc != 0) continue;
        std::vector<int> w;
        for (int j = 0; j < n; ++j)
            if ((s >> j) & 1) w.push_back(j + 1);
        out.insert(std::move(w));
    }
    return out;
}

/// 16-run resolution V base, I = ABCDE.
inline Design x0_resV() { return Design(4, {1, 2, 4, 8, 15}); }

inline DoubledDesign maximal_5n16(int t) { return double_iter(x0_resV(), t); }

/// The fifteen words of the 32-run, 9-factor base.
inline std::set<std::vector<int>> x0_9f_defining_words() {
    const std::vector<std::string> listed = {
        "1235",  "2346",  "3457",  "4561",  "5672",  "6713",  "7124", "123456789",
        "13489", "24589", "35689", "46789", "57189", "61289", "72389"};
    std::set<std::vector<int>> out;
    for (const auto& s : listed) {
        std::vector<int> w;
        for (char c : s) w.push_back(c - '0');
        std::sort(w.begin(), w.end());
        out.insert(std::move(w));
    }
    return out;
}

/// 32-run, 9-factor base; factors 1,2,3,4,8 are the independent run bits.
inline Design x0_9f() {
    Design d(5, {1, 2, 4, 8, 1 ^ 2 ^ 4, 2 ^ 4 ^ 8, 4 ^ 8 ^ 7, 16, 1 ^ 4 ^ 8 ^ 16});
    if (defining_words(d) != x0_9f_defining_words())
        throw InternalFault("x0_9f labels do not reproduce the listed defining subgroup");
    return d;
}

inline DoubledDesign maximal_9n32(int t) { return double_iter(x0_9f(), t); }

/// Doubles of the single column (0,1)^T: N = 2^(t+1), m = 2^t, all words even.
inline DoubledDesign maximal_even(int t) { return double_iter(Design(1, {1}), t); }

/// Doubles of [[0,0],[0,1]] before the zero column is deleted (column 1 is
/// the all-zero column).
inline DoubledDesign saturated_base_double(int t) { return double_iter(Design(1, {0, 1}), t); }

/// Saturated resolution III design with 2^(t+1) runs and 2^(t+1) - 1 factors.
inline Design saturated_resIII(int t) {
    if (t < 1) throw InputError("saturated_resIII requires t >= 1");
    const Design full = saturated_base_double(t).design;
    std::vector<std::uint64_t> labels(full.labels().begin() + 1, full.labels().end());
    return Design(full.log2_runs(), std::move(labels));
}

/// Columns deleted from maximal_5n16(t) to obtain the u-factor complement:
/// the first u columns for u <= 5, else the first u entries of
/// {1,2,3,4,5,6,12,18,24,30,31} (which needs N >= 128, i.e. t >= 3).
inline std::vector<int> s_complement(int u, int t) {
    static const std::vector<int> kS = {1, 2, 3, 4, 5, 6, 12, 18, 24, 30, 31};
    if (u < 1 || u > 11) throw InputError("s_complement defined for 1 <= u <= 11");
    if (t < 0) throw InputError("t must be nonnegative");
    if (u > 5 * (1 << t)) throw InputError("u exceeds the number of factors");
    if (u >= 6 && t < 3) throw InputError("s_complement for u >= 6 needs N >= 128 (t >= 3)");
    return {kS.begin(), kS.begin() + u};
}

/// The two u = 9 complements with A_4 = 0 and A_5 = 2; the second has the
/// smaller A_6 and is preferred.
inline std::pair<std::vector<int>, std::vector<int>> u9_pair(int t) {
    if (t < 3) throw InputError("u9_pair needs N >= 128 (t >= 3)");
    return {{1, 2, 3, 4, 5, 6, 12, 18, 24}, {1, 2, 3, 4, 5, 6, 12, 23, 39}};
}

/// Preferred complement for the Theorem-4 style construction at size u:
/// s_complement except at u = 9 where the second u9 design is used.
inline std::vector<int> preferred_complement(int u, int t) {
    if (u == 9) return u9_pair(t).second;
    return s_complement(u, t);
}

enum class Family { x0_5, max_5n16, x0_9, max_9n32, max_even, saturated };

inline Family parse_family(const std::string& s) {
    if (s == "x0-5") return Family::x0_5;
    if (s == "max-5n16") return Family::max_5n16;
    if (s == "x0-9") return Family::x0_9;
    if (s == "max-9n32") return Family::max_9n32;
    if (s == "max-even") return Family::max_even;
    if (s == "saturated") return Family::saturated;
    throw InputError("unknown family '" + s + "'");
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::x0_5: return "x0-5";
        case Family::max_5n16: return "max-5n16";
        case Family::x0_9: return "x0-9";
        case Family::max_9n32: return "max-9n32";
        case Family::max_even: return "max-even";
        case Family::saturated: return "saturated";
    }
    return "?";
}

/// Catalog design with pedigree. The saturated family is returned before the
/// zero column is deleted so the pedigree stays valid; base designs come back
/// as a 0-fold double.
inline DoubledDesign construct_family(Family f, int t) {
    switch (f) {
        case Family::x0_5: return double_iter(x0_resV(), 0);
        case Family::max_5n16: return maximal_5n16(t);
        case Family::x0_9: return double_iter(x0_9f(), 0);
        case Family::max_9n32: return maximal_9n32(t);
        case Family::max_even: return maximal_even(t);
        case Family::saturated: return saturated_base_double(t);
    }
    throw InputError("unknown family");
}

}  // namespace dlab

#endif  // DLAB_CATALOG_HPP
