#include "weissler/serialize.hpp"

#include <cstdio>

namespace weissler {

nlohmann::json to_json(const ConditionReport& r) {
    nlohmann::json j;
    j["condition"] = std::string(condition_name(r.condition));
    j["margins"] = r.margins;
    j["first_violation"] = r.first_violation ? nlohmann::json(*r.first_violation) : nlohmann::json();
    return j;
}

nlohmann::json to_json(const InequalityVerdict& v) {
    return {{"lhs", v.lhs},
            {"rhs", v.rhs},
            {"gap", v.gap},
            {"holds", v.holds},
            {"truncation_bound", v.truncation_bound}};
}

std::string format_q(double q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", q);
    return buf;
}

nlohmann::json to_json(const BernoulliReport& r) {
    nlohmann::json psi = nlohmann::json::object();
    for (const auto& [q, v] : r.psi_at) psi[format_q(q)] = v;
    nlohmann::json j{{"S1", r.S1},
                     {"psi_prime_1", r.psi_prime_1},
                     {"psi", psi},
                     {"N_used", r.N_used},
                     {"tail_bound", r.tail_bound}};
    if (r.search_upper > 0.0) {
        j["zero_crossing"] = r.zero_crossing ? nlohmann::json(*r.zero_crossing) : nlohmann::json();
        j["search_upper"] = r.search_upper;
    }
    return j;
}

nlohmann::json to_json(const MomentSequence& h) {
    nlohmann::json values = nlohmann::json::array();
    nlohmann::json prov = nlohmann::json::array();
    nlohmann::json bounds = nlohmann::json::array();
    for (std::size_t k = 0; k <= h.max_index(); ++k) {
        values.push_back(h[k]);
        prov.push_back(h.provenance(k).source == Provenance::Source::ClosedForm ? "closed_form"
                                                                                 : "quadrature");
        bounds.push_back(h.error_bound(k));
    }
    return {{"values", values}, {"provenance", prov}, {"error_bounds", bounds}};
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2); }

}  // namespace weissler
