#include "weissler/conditions.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "weissler/bernoulli.hpp"
#include "weissler/error.hpp"

namespace weissler {

namespace {

void require_length(const MomentSequence& h, std::size_t min_index, std::string_view what) {
    if (h.max_index() < min_index)
        throw InputError(std::string(what) + ": need moments up to h_" +
                         std::to_string(2 * min_index) + ", have up to h_" +
                         std::to_string(2 * h.max_index()));
}

using Sides = std::pair<double, double>;

ConditionReport build(ConditionName name, std::size_t first, std::size_t last, double tol_report,
                      const std::function<Sides(std::size_t)>& sides) {
    ConditionReport r;
    r.condition = name;
    r.first_index = first;
    r.tol_report = tol_report;
    for (std::size_t m = first; m <= last; ++m) {
        const auto [l, rh] = sides(m);
        r.lhs.push_back(l);
        r.rhs.push_back(rh);
        r.margins.push_back(l - rh);
        if (!r.first_violation && l - rh < -tol_report) r.first_violation = m;
    }
    r.holds_up_to = last;
    return r;
}

}  // namespace

std::string_view condition_name(ConditionName c) noexcept {
    switch (c) {
        case ConditionName::WeakCondition: return "WeakCondition";
        case ConditionName::StrongCondition: return "StrongCondition";
        case ConditionName::Lemma2Inequality: return "Lemma2Inequality";
        case ConditionName::H4Bound: return "H4Bound";
        case ConditionName::CauchyLower: return "CauchyLower";
    }
    return "Unknown";
}

ConditionReport check_weak_condition(const MomentSequence& h, double tol_report) {
    require_length(h, 2, "check_weak_condition");
    return build(ConditionName::WeakCondition, 1, h.max_index() - 1, tol_report,
                 [&](std::size_t m) -> Sides {
                     const double md = static_cast<double>(m);
                     return {h[m] / h[m - 1], md / (md + 1.0) * h[m + 1] / h[m]};
                 });
}

ConditionReport check_strong_condition(const MomentSequence& h, double tol_report) {
    require_length(h, 2, "check_strong_condition");
    return build(ConditionName::StrongCondition, 1, h.max_index() - 1, tol_report,
                 [&](std::size_t m) -> Sides {
                     const double md = static_cast<double>(m);
                     return {h[m] / h[m - 1],
                             h[m + 1] / ((md + 1.0) * h[m - 1]) + md / (md + 1.0) * h[m + 1] / h[m]};
                 });
}

ConditionReport check_lemma2_inequality(const MomentSequence& h, double series_tol,
                                        double tol_report) {
    require_length(h, 2, "check_lemma2_inequality");
    const double log_s = std::log(series_S(1.0, h, series_tol).value);
    return build(ConditionName::Lemma2Inequality, 1, h.max_index() - 1, tol_report,
                 [&](std::size_t n) -> Sides {
                     return {h[n] * log_s, h[n + 1] / static_cast<double>(n + 1)};
                 });
}

ConditionReport check_cauchy_lower(const MomentSequence& h, double tol_report) {
    require_length(h, 2, "check_cauchy_lower");
    return build(ConditionName::CauchyLower, 1, h.max_index() - 1, tol_report,
                 [&](std::size_t k) -> Sides { return {h[k - 1] * h[k + 1], h[k] * h[k]}; });
}

InequalityVerdict check_h4_bound(const MomentSequence& h) {
    require_length(h, 2, "check_h4_bound");
    const double h2 = h[1];
    const double h4 = h[2];
    const double rhs = 2.0 * h2 * h2 / (h2 + 1.0);
    // d(rhs)/d(h2) = 2 h2 (h2 + 2) / (h2 + 1)^2 <= 3 on [0, 1]
    const double bound = h.error_bound(2) + 3.0 * h.error_bound(1) +
                         4.0 * std::numeric_limits<double>::epsilon() * (rhs + h4);
    return InequalityVerdict::make(h4, rhs, bound);
}

}  // namespace weissler
