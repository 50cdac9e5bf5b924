#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "driftcast/time.hpp"

namespace driftcast::models {

/// Hours of prior demand needed before a feature vector can be built:
/// four weekly lags plus the 24 hourly lags.
inline constexpr std::int64_t kWarmupHours = 4 * kHoursPerWeek + 24;

struct CyclicalFeatures {
    double cos_hour = 1.0;
    double sin_hour = 0.0;
    double cos_month = 1.0;
    double sin_month = 0.0;
};

/// cos/sin encodings of hour-of-day (period 24) and month (period 12,
/// zero-based so January maps to angle 0). Hour in 0..23, month in 1..12.
CyclicalFeatures cyclical_features(int hour, int month);

/**
 * Input encoding for the network forecaster: zone and weekday one-hots,
 * the previous 24 hourly demands, the demand at the same hour/weekday in
 * each of the four past weeks, and cyclical hour/month terms.
 */
struct FeatureVector {
    std::vector<double> zone_onehot;          // length = number of zones
    std::array<double, 7> weekday_onehot{};   // Monday first
    std::array<double, 24> hourly_lags{};     // oldest -> newest
    std::array<double, 4> weekly_lags{};      // 1 week ago first
    CyclicalFeatures cyclical;

    std::size_t dimension() const { return zone_onehot.size() + 7 + 24 + 4 + 4; }

    /// Concatenation in declaration order: zones, weekdays, hourly lags,
    /// weekly lags, cos/sin hour, cos/sin month.
    std::vector<double> flatten() const;
};

/**
 * Builds the feature vector for a forecast at `timestamp`.
 *
 * `history` holds the zone's hourly demand strictly before `timestamp`,
 * ending with the hour timestamp-1h. Throws InsufficientHistory when fewer
 * than kWarmupHours values are available.
 */
FeatureVector build_features(std::span<const double> history, HourStamp timestamp,
                             int zone_id, int num_zones);

} // namespace driftcast::models
