#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "driftcast/metrics.hpp"
#include "driftcast/streams/series.hpp"
#include "driftcast/types.hpp"

namespace driftcast::harness {

/// One logged forecast hour; scored marks membership in the test segment.
struct LoggedForecast {
    int zone_id = 0;
    ForecastPair pair;
    bool scored = false;
};

/// A switch event with the error-trace context it happened under.
struct SwitchRecord {
    int zone_id = 0;
    SwitchEvent event;
    double ewma_simple = 0.0;
    double ewma_complex = 0.0;
};

/// One row of the plot log: everything needed to redraw the error-curve
/// and prediction figures.
struct PlotRow {
    int zone_id = 0;
    HourStamp timestamp;
    double actual = 0.0;
    double pred_simple = 0.0;
    double pred_complex = 0.0;
    double emitted = 0.0;
    double ewma_simple = 0.0;
    double ewma_complex = 0.0;
};

struct PerZoneMetrics {
    int zone_id = 0;
    double rmse = 0.0;
    double smape = 0.0;
    int switch_count = 0;
    std::uint64_t simple_count = 0;
    std::uint64_t scored_count = 0;
};

/// Daily digest row: how often the naive model was in charge and how much
/// the emitted forecast beat the network that day (positive = better).
struct PerDayRow {
    std::string date;  // "YYYY-MM-DD"
    double improvement = 0.0;
    int simple_hours = 0;
    int day_hours = 0;
};

/// Accuracy restricted to the hours where the naive model was active.
struct ConditionalImprovement {
    double rmse_strategy = 0.0;
    double rmse_complex = 0.0;
    double relative = 0.0;  // 1 - rmse_strategy / rmse_complex
};

/// Identifies the evaluation slice so reports can only be compared when
/// they cover the same data.
struct SegmentInfo {
    HourStamp test_start;
    HourStamp test_end;
    std::uint64_t n_scored = 0;
    std::uint64_t stream_fingerprint = 0;

    bool operator==(const SegmentInfo&) const = default;
};

struct EvaluationReport {
    std::string strategy;
    std::uint64_t seed = 0;
    double rmse = 0.0;
    double smape = 0.0;
    int switch_count = 0;
    std::uint64_t simple_count = 0;
    double simple_share = 0.0;
    std::optional<metrics::DmResult> dm_vs_complex;  // absent when n < 10
    std::optional<ConditionalImprovement> conditional;
    std::vector<PerDayRow> per_day;
    std::vector<PerZoneMetrics> per_zone;
    SegmentInfo segment;
};

/**
 * Builds the daily table from scored forecasts: per calendar day, the
 * number of distinct hours (0-23) in which any zone ran the naive model,
 * the distinct hours covered that day, and the RMSE improvement of the
 * emitted predictions over the network's. Rows sort by naive-hours
 * descending (stable, so equal counts stay in date order). Throws
 * ContractViolation when no scored rows exist.
 */
std::vector<PerDayRow> per_day_analysis(std::span<const LoggedForecast> log);

/// RMSE of emitted vs network predictions over naive-active scored hours;
/// empty when the naive model was never active.
std::optional<ConditionalImprovement> conditional_improvement(
    std::span<const LoggedForecast> log);

struct ComparisonRow {
    std::string strategy;
    double rmse = 0.0;
    double smape = 0.0;
    int switch_count = 0;
    double simple_share = 0.0;
    double dm_p_vs_complex = 0.0;  // NaN when the report carried none
};

/// Ranks reports by rmse ascending (stable). All reports must cover the
/// identical segment; needs at least two.
std::vector<ComparisonRow> compare_strategies(std::span<const EvaluationReport> reports);
std::string render_comparison(std::span<const ComparisonRow> rows);

std::string report_to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const std::string& text);

/// Order-independent FNV-1a digest of a set of zone streams.
std::uint64_t stream_fingerprint(std::span<const streams::ZoneSeries> zones);

} // namespace driftcast::harness
