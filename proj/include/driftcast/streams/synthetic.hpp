#pragma once

#include <cstdint>
#include <vector>

#include "driftcast/streams/series.hpp"
#include "driftcast/time.hpp"

namespace driftcast::streams {

enum class DriftEventKind { SuddenDrop, SuddenSpike, IncrementalShift };

/**
 * One labeled drift episode. Drops and spikes multiply demand by magnitude
 * inside [start_hour, end_hour) and revert afterwards; an incremental shift
 * ramps the factor from 1 at start_hour with slope magnitude per hour and
 * holds the reached level from end_hour on.
 */
struct DriftEvent {
    DriftEventKind kind = DriftEventKind::SuddenDrop;
    std::int64_t start_hour = 0;
    std::int64_t end_hour = 0;
    double magnitude = 0.0;
    std::vector<int> affected_zones;  // empty = every zone

    bool affects(int zone_id) const;
    /// Multiplicative factor this event contributes at stream hour t.
    double factor_at(std::int64_t t) const;
};

struct SyntheticConfig {
    std::int64_t num_hours = 0;
    int num_zones = 1;
    double base_level = 100.0;
    double daily_amplitude = 0.3;
    double weekly_amplitude = 0.2;
    double noise_std = 5.0;
    double trend_per_hour = 0.0;
    std::vector<DriftEvent> events;
    std::uint64_t seed = 0;
    HourStamp start = HourStamp::from_calendar(2015, 1, 1, 0);
};

struct SyntheticResult {
    std::vector<ZoneSeries> zones;
    std::vector<DriftEvent> truth;  // the configured events, verbatim
};

/**
 * Seeded hourly demand with daily/weekly seasonality, optional linear trend,
 * Gaussian noise and the configured drift events:
 *   demand = max(0, [base·(1 + da·sin(2π·hour/24))·(1 + wa·weekend)
 *                    + trend·t + noise] · event_factor)
 * Each zone draws from its own generator, so streams are independent of
 * zone count and bit-identical per (config, seed).
 */
SyntheticResult generate_synthetic(const SyntheticConfig& config);

} // namespace driftcast::streams
