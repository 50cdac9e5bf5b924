#include "driftcast/models/features.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "driftcast/errors.hpp"

namespace driftcast::models {

CyclicalFeatures cyclical_features(int hour, int month) {
    if (hour < 0 || hour > 23) {
        throw ContractViolation("cyclical_features: hour out of range: " + std::to_string(hour));
    }
    if (month < 1 || month > 12) {
        throw ContractViolation("cyclical_features: month out of range: " + std::to_string(month));
    }
    const double hour_angle = static_cast<double>(hour) * 2.0 * std::numbers::pi / 24.0;
    const double month_angle = static_cast<double>(month - 1) * 2.0 * std::numbers::pi / 12.0;
    return CyclicalFeatures{std::cos(hour_angle), std::sin(hour_angle),
                            std::cos(month_angle), std::sin(month_angle)};
}

std::vector<double> FeatureVector::flatten() const {
    std::vector<double> out;
    out.reserve(dimension());
    out.insert(out.end(), zone_onehot.begin(), zone_onehot.end());
    out.insert(out.end(), weekday_onehot.begin(), weekday_onehot.end());
    out.insert(out.end(), hourly_lags.begin(), hourly_lags.end());
    out.insert(out.end(), weekly_lags.begin(), weekly_lags.end());
    out.push_back(cyclical.cos_hour);
    out.push_back(cyclical.sin_hour);
    out.push_back(cyclical.cos_month);
    out.push_back(cyclical.sin_month);
    return out;
}

FeatureVector build_features(std::span<const double> history, HourStamp timestamp,
                             int zone_id, int num_zones) {
    if (num_zones < 1 || zone_id < 0 || zone_id >= num_zones) {
        throw ContractViolation("build_features: zone_id " + std::to_string(zone_id) +
                                " not in [0, " + std::to_string(num_zones) + ")");
    }
    const auto n = static_cast<std::int64_t>(history.size());
    if (n < kWarmupHours) {
        throw InsufficientHistory("build_features: need " + std::to_string(kWarmupHours) +
                                  " prior hours, have " + std::to_string(n));
    }

    FeatureVector fv;
    fv.zone_onehot.assign(static_cast<std::size_t>(num_zones), 0.0);
    fv.zone_onehot[static_cast<std::size_t>(zone_id)] = 1.0;
    fv.weekday_onehot[timestamp.weekday()] = 1.0;

    for (int lag = 24; lag >= 1; --lag) {
        fv.hourly_lags[static_cast<std::size_t>(24 - lag)] = history[static_cast<std::size_t>(n - lag)];
    }
    for (int week = 1; week <= 4; ++week) {
        fv.weekly_lags[static_cast<std::size_t>(week - 1)] =
            history[static_cast<std::size_t>(n - week * kHoursPerWeek)];
    }

    fv.cyclical = cyclical_features(static_cast<int>(timestamp.hour()),
                                    static_cast<int>(timestamp.month()));
    return fv;
}

} // namespace driftcast::models
