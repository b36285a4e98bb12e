#pragma once
// json_io.hpp - JSON forms of certificates, reports, and search results.
//
// Certificate documents are exchanged as
//     {"k":3,"r":3,"m":3066,"a":[3287,5855]}
// Valuations render as a number, or "inf" for the infinite sentinel.

#include <json.hpp>

#include "tcb/certificate.hpp"
#include "tcb/search.hpp"

namespace tcb::bpcert {

inline void to_json(nlohmann::json& j, const Certificate& c) {
    j = nlohmann::json{{"k", c.k}, {"r", c.r}, {"m", c.m}, {"a", c.a}};
}

inline void from_json(const nlohmann::json& j, Certificate& c) {
    j.at("k").get_to(c.k);
    j.at("r").get_to(c.r);
    j.at("m").get_to(c.m);
    j.at("a").get_to(c.a);
}

inline nlohmann::json valuation_json(const std::optional<Valuation>& v) {
    if (!v) return nullptr;
    if (v->is_infinite()) return "inf";
    return v->value();
}

inline void to_json(nlohmann::json& j, const ConditionReport& r) {
    j = nlohmann::json{{"sum_ok", r.sum_ok},
                       {"hyp_ok", r.hyp_ok},
                       {"hyp_min", valuation_json(r.hyp_min)},
                       {"prode_ok", r.prode_ok},
                       {"prode_nu", valuation_json(r.prode_nu)},
                       {"bound", r.bound ? nlohmann::json(*r.bound) : nlohmann::json(nullptr)}};
}

}  // namespace tcb::bpcert

namespace tcb::search {

inline void to_json(nlohmann::json& j, const SearchResult& r) {
    j = nlohmann::json{
        {"best_bound", r.best_bound ? nlohmann::json(*r.best_bound) : nlohmann::json(nullptr)},
        {"witness", r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr)},
        {"achieving_m",
         r.achieving_m ? nlohmann::json(*r.achieving_m) : nlohmann::json(nullptr)},
        {"tuples_examined", r.tuples_examined},
        {"hyp_rejections", r.hyp_rejections},
        {"prode_rejections", r.prode_rejections}};
}

}  // namespace tcb::search
