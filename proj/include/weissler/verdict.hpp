#pragma once

namespace weissler {

// One instance of an inequality lhs <= rhs.  truncation_bound bounds every
// non-mathematical contribution (series tails, moment errors, rounding), and
// the instance counts as holding when gap >= -truncation_bound.
struct InequalityVerdict {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    bool holds = true;
    double truncation_bound = 0.0;

    static InequalityVerdict make(double lhs, double rhs, double bound) {
        const double gap = rhs - lhs;
        return {lhs, rhs, gap, gap >= -bound, bound};
    }
};

}  // namespace weissler
