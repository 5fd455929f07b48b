#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weissler/weights.hpp"

namespace weissler {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

// Runs the eight acceptance criteria in order.  A criterion passes when its
// numerical checks pass and it finishes inside its time budget.
std::vector<CriterionResult> run_acceptance();

// Extra rows for a user-chosen weight: strong-condition status and, for a
// classical weight, the equality margins.
std::vector<CriterionResult> weight_rows(const RadialWeight& w, std::size_t max_index, double tol);

// Rows "psi_prime_1 ~ 0.0048" and "psi(2) ~ 0.0105" with the computed values.
std::vector<CriterionResult> counterexample_rows(double tol);

std::string format_row(const CriterionResult& r);

}  // namespace weissler
