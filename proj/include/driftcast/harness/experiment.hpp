#pragma once

#include <vector>

#include "driftcast/harness/config.hpp"
#include "driftcast/harness/report.hpp"
#include "driftcast/streams/series.hpp"

namespace driftcast::harness {

struct ExperimentResult {
    EvaluationReport report;
    std::vector<LoggedForecast> forecasts;  // zone-major, time ascending per zone
    std::vector<SwitchRecord> switches;
    std::vector<PlotRow> plot;
};

/// Materializes the configured stream source (generating or reading).
std::vector<streams::ZoneSeries> load_stream(const ExperimentConfig& config);

/**
 * Runs the full test-then-train protocol on pre-loaded zone streams.
 *
 * One network model is trained on the training segment (pooled over all
 * zones, zone one-hot input) with the experiment seed; optional yearly
 * retraining swaps in models fitted on a sliding window of past years.
 * Every zone then runs its own strategy instance hour by hour: both models
 * forecast, the strategy emits, truth is revealed, error traces and
 * detectors update. Hours after train_end are scored; earlier forecasts are
 * logged for warm-up context only.
 *
 * Zone streams must be aligned (same start, same length) and long enough
 * that the training segment exceeds the feature warm-up.
 */
ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::vector<streams::ZoneSeries> zones);

/// load_stream + run_experiment.
ExperimentResult run_experiment(const ExperimentConfig& config);

} // namespace driftcast::harness
