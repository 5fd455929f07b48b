#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "weissler/verdict.hpp"
#include "weissler/weights.hpp"

namespace weissler {

inline constexpr double kDefaultReportTolerance = 1e-10;

enum class ConditionName { WeakCondition, StrongCondition, Lemma2Inequality, H4Bound, CauchyLower };

std::string_view condition_name(ConditionName c) noexcept;

// Margins of a moment condition, one per checked index starting at
// first_index.  margin = lhs - rhs, positive means satisfied.
struct ConditionReport {
    ConditionName condition = ConditionName::WeakCondition;
    std::size_t first_index = 1;
    std::vector<double> lhs;
    std::vector<double> rhs;
    std::vector<double> margins;
    std::optional<std::size_t> first_violation;
    std::size_t holds_up_to = 0;
    double tol_report = kDefaultReportTolerance;

    bool violated() const noexcept { return first_violation.has_value(); }
    double margin_at(std::size_t index) const { return margins.at(index - first_index); }
};

// h_{2m}/h_{2(m-1)} >= m/(m+1) * h_{2(m+1)}/h_{2m},  1 <= m <= N-1.
ConditionReport check_weak_condition(const MomentSequence& h,
                                     double tol_report = kDefaultReportTolerance);

// h_{2m}/h_{2(m-1)} >= h_{2(m+1)}/((m+1) h_{2(m-1)}) + m/(m+1) * h_{2(m+1)}/h_{2m}.
ConditionReport check_strong_condition(const MomentSequence& h,
                                       double tol_report = kDefaultReportTolerance);

// h_{2n} ln(sum_k h_{2k}/(k!)^2) >= h_{2(n+1)}/(n+1),  1 <= n <= N-1.  The
// series is summed to series_tol; throws InsufficientMoments if h is too short
// for that.
ConditionReport check_lemma2_inequality(const MomentSequence& h, double series_tol = 1e-13,
                                        double tol_report = kDefaultReportTolerance);

// h_{2(k-1)} h_{2(k+1)} >= h_{2k}^2, which every weight satisfies.
ConditionReport check_cauchy_lower(const MomentSequence& h,
                                   double tol_report = kDefaultReportTolerance);

// h_4 <= 2 h_2^2 / (h_2 + 1).
InequalityVerdict check_h4_bound(const MomentSequence& h);

}  // namespace weissler
