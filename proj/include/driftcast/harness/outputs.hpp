#pragma once

#include <filesystem>

#include "driftcast/harness/experiment.hpp"

namespace driftcast::harness {

/**
 * Writes the run artifacts into output_dir (created if needed):
 *   report.json    full evaluation report
 *   forecasts.csv  every logged forecast hour with both predictions
 *   switches.csv   model switches with trigger and error-trace context
 *   per_day.csv    the daily naive-usage table
 *   plotdata.csv   per-hour curves (predictions and EWMA error traces)
 * Bytes are deterministic for a fixed result; doubles are written with
 * enough digits to round-trip exactly.
 */
void emit_outputs(const ExperimentResult& result, const std::filesystem::path& output_dir);

} // namespace driftcast::harness
