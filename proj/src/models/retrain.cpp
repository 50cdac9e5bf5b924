#include "driftcast/models/retrain.hpp"

#include "driftcast/errors.hpp"

namespace driftcast::models {

std::vector<RetrainPlanEntry> yearly_retrain_plan(int first_test_year, int last_test_year,
                                                  int window_years) {
    if (window_years < 1) {
        throw ContractViolation("yearly_retrain_plan: window_years must be >= 1");
    }
    if (last_test_year < first_test_year) {
        throw ContractViolation("yearly_retrain_plan: empty test-year range");
    }
    std::vector<RetrainPlanEntry> plan;
    plan.reserve(static_cast<std::size_t>(last_test_year - first_test_year + 1));
    for (int year = first_test_year; year <= last_test_year; ++year) {
        plan.push_back(RetrainPlanEntry{year - window_years, year - 1, year});
    }
    return plan;
}

} // namespace driftcast::models
