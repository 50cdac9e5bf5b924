#pragma once

#include <vector>

namespace driftcast::models {

/// One retraining step: the inclusive training interval feeding the model
/// that forecasts `forecast_year`.
struct RetrainPlanEntry {
    int train_begin_year;
    int train_end_year;
    int forecast_year;

    bool operator==(const RetrainPlanEntry&) const = default;
};

/// Sliding-window retraining schedule: each forecast year Y trains on
/// [Y - window_years, Y - 1]. Years are inclusive on both ends.
std::vector<RetrainPlanEntry> yearly_retrain_plan(int first_test_year, int last_test_year,
                                                  int window_years = 3);

} // namespace driftcast::models
