#ifndef DLAB_IO_HPP
#define DLAB_IO_HPP

// JSON encodings for designs, patterns, exact numbers and reports.
// Integers that do not fit in 64 bits are written as decimal strings.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlab/complementary.hpp"
#include "dlab/design.hpp"
#include "dlab/errors.hpp"
#include "dlab/search.hpp"
#include "dlab/wlp.hpp"

namespace dlab::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline Json to_json(const Rational& r) {
    return Json{{"num", to_json(boost::multiprecision::numerator(r))},
                {"den", to_json(boost::multiprecision::denominator(r))}};
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw InputError("expected an integer");
}

inline Json labels_json(std::span<const std::uint64_t> labels) {
    Json a = Json::array();
    for (auto l : labels) a.push_back(l);
    return a;
}

inline Json to_json(const Design& d, const std::optional<DoublingPedigree>& ped = std::nullopt) {
    Json j;
    j["log2_runs"] = d.log2_runs();
    j["labels"] = labels_json(d.labels());
    if (ped) {
        j["pedigree"] = Json{{"base_log2_runs", ped->base.log2_runs()},
                             {"base_labels", labels_json(ped->base.labels())},
                             {"t", ped->t}};
    } else {
        j["pedigree"] = nullptr;
    }
    return j;
}

inline Json to_json(const DoubledDesign& x) { return to_json(x.design, x.pedigree); }

struct LoadedDesign {
    Design design;
    std::optional<DoublingPedigree> pedigree;

    DoubledDesign doubled() const {
        if (!pedigree) throw InputError("design file carries no doubling pedigree");
        return {design, *pedigree};
    }
};

inline std::vector<std::uint64_t> labels_from_json(const Json& a) {
    if (!a.is_array()) throw InputError("labels must be an array");
    std::vector<std::uint64_t> out;
    for (const auto& v : a) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw InputError("labels must be nonnegative integers");
        out.push_back(v.get<std::uint64_t>());
    }
    return out;
}

inline LoadedDesign design_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("log2_runs") || !j.contains("labels"))
            throw InputError("design JSON needs log2_runs and labels");
        LoadedDesign out{Design(j.at("log2_runs").get<int>(), labels_from_json(j.at("labels"))),
                         std::nullopt};
        if (j.contains("pedigree") && !j.at("pedigree").is_null()) {
            const auto& p = j.at("pedigree");
            DoublingPedigree ped{Design(p.at("base_log2_runs").get<int>(),
                                        labels_from_json(p.at("base_labels"))),
                                 p.at("t").get<int>()};
            if (ped.t < 0 || double_iter(ped.base, ped.t).design != out.design)
                throw InputError("pedigree does not reproduce the design labels");
            out.pedigree = std::move(ped);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed design JSON: ") + e.what());
    }
}

inline Json resolution_json(const std::optional<int>& r) { return r ? Json(*r) : Json("inf"); }

inline Json to_json(const WordlengthPattern& w) {
    Json a = Json::array();
    for (const auto& v : w.a) a.push_back(to_json(v));
    return a;
}

/// The `wlp` subcommand payload.
inline Json wlp_report(const WordlengthPattern& w) {
    return Json{{"A", to_json(w)}, {"resolution", resolution_json(resolution(w))}};
}

inline Json columns_json(const std::vector<int>& cols) {
    Json a = Json::array();
    for (int c : cols) a.push_back(c);
    return a;
}

inline Json to_json(const FrequencyVector& f) {
    Json a = Json::array();
    for (int v : f.f) a.push_back(v);
    return a;
}

inline Json to_json(const WlpClass& c) {
    Json sets = Json::array();
    for (const auto& s : c.column_sets) sets.push_back(columns_json(s));
    return Json{{"A", to_json(c.wlp)}, {"count", c.count}, {"column_sets", sets}};
}

inline Json to_json(const SearchResult& r) {
    Json j;
    j["u"] = r.u;
    j["depth"] = r.depth;
    j["balanced_only"] = r.balanced_only;
    j["symmetry_reduction"] = r.symmetry_reduction;
    j["space_size"] = to_json(r.space_size);
    j["examined"] = r.examined;
    j["budget_exhausted"] = r.budget_exhausted;
    j["best_A"] = to_json(r.best_wlp);
    j["winner_count"] = r.winner_count;
    Json winners = Json::array();
    for (std::size_t i = 0; i < r.winners.size(); ++i)
        winners.push_back(Json{{"columns", columns_json(r.winners[i])},
                               {"f", to_json(r.winner_frequencies[i])}});
    j["winners"] = winners;
    Json classes = Json::array();
    for (const auto& c : r.stage_classes) classes.push_back(to_json(c));
    j["stage_classes"] = classes;
    Json uc;
    uc["performed"] = r.unconstrained.performed;
    uc["complete"] = r.unconstrained.complete;
    uc["examined"] = r.unconstrained.examined;
    uc["space_size"] = to_json(r.unconstrained.space_size);
    uc["best"] = r.unconstrained.best ? to_json(*r.unconstrained.best) : Json(nullptr);
    uc["beats_balanced"] = r.unconstrained.beats_balanced;
    j["unconstrained"] = uc;
    j["conditions_satisfiable"] =
        r.conditions_satisfiable ? Json(*r.conditions_satisfiable) : Json(nullptr);
    return j;
}

inline Json to_json(const CheckLine& l) {
    return Json{{"name", l.name}, {"expected", to_json(l.expected)}, {"actual", to_json(l.actual)},
                {"pass", l.pass}};
}

inline Json to_json(const InequalityReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"n", row.n}, {"lhs", to_json(row.lhs)}, {"rhs", to_json(row.rhs)},
                            {"pass", row.pass}});
    Json conds = Json::array();
    for (const auto& c : r.conditions) conds.push_back(to_json(c));
    return Json{{"rows", rows}, {"conditions", conds}};
}

/// Uniform report envelope {check, params, pass, witness?}.
inline Json report(const std::string& check, Json params, bool pass,
                   std::optional<Json> witness = std::nullopt) {
    Json j{{"check", check}, {"params", std::move(params)}, {"pass", pass}};
    if (witness) j["witness"] = std::move(*witness);
    return j;
}

}  // namespace dlab::io

#endif  // DLAB_IO_HPP
