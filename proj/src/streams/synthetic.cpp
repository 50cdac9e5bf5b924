#include "driftcast/streams/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "driftcast/errors.hpp"

namespace driftcast::streams {

namespace {

constexpr std::uint64_t kZoneSeedStride = 0x9E3779B97F4A7C15ULL;

void validate(const SyntheticConfig& config) {
    if (config.num_hours < 1) {
        throw ContractViolation("generate_synthetic: num_hours must be at least 1");
    }
    if (config.num_zones < 1) {
        throw ContractViolation("generate_synthetic: num_zones must be at least 1");
    }
    if (!(config.base_level > 0.0) || !std::isfinite(config.base_level)) {
        throw ContractViolation("generate_synthetic: base_level must be finite and positive");
    }
    if (config.daily_amplitude < 0.0 || config.weekly_amplitude < 0.0 ||
        config.noise_std < 0.0) {
        throw ContractViolation("generate_synthetic: amplitudes and noise_std must be >= 0");
    }
    if (!std::isfinite(config.trend_per_hour)) {
        throw ContractViolation("generate_synthetic: trend_per_hour must be finite");
    }
    for (const DriftEvent& event : config.events) {
        if (event.start_hour >= event.end_hour) {
            throw ContractViolation("generate_synthetic: event needs start_hour < end_hour");
        }
        if (!std::isfinite(event.magnitude)) {
            throw ContractViolation("generate_synthetic: event magnitude must be finite");
        }
        if (event.kind == DriftEventKind::SuddenDrop &&
            !(event.magnitude >= 0.0 && event.magnitude < 1.0)) {
            throw ContractViolation("generate_synthetic: drop magnitude must lie in [0,1)");
        }
        if (event.kind == DriftEventKind::SuddenSpike && event.magnitude < 0.0) {
            throw ContractViolation("generate_synthetic: spike magnitude must be >= 0");
        }
        for (int zone : event.affected_zones) {
            if (zone < 0 || zone >= config.num_zones) {
                throw ContractViolation("generate_synthetic: affected zone out of range");
            }
        }
    }
}

} // namespace

bool DriftEvent::affects(int zone_id) const {
    if (affected_zones.empty()) {
        return true;
    }
    return std::find(affected_zones.begin(), affected_zones.end(), zone_id) !=
           affected_zones.end();
}

double DriftEvent::factor_at(std::int64_t t) const {
    switch (kind) {
        case DriftEventKind::SuddenDrop:
        case DriftEventKind::SuddenSpike:
            return (t >= start_hour && t < end_hour) ? magnitude : 1.0;
        case DriftEventKind::IncrementalShift: {
            if (t < start_hour) {
                return 1.0;
            }
            const std::int64_t ramp = std::min(t, end_hour) - start_hour;
            return 1.0 + magnitude * static_cast<double>(ramp);
        }
    }
    return 1.0;
}

SyntheticResult generate_synthetic(const SyntheticConfig& config) {
    validate(config);

    SyntheticResult result;
    result.truth = config.events;
    result.zones.reserve(static_cast<std::size_t>(config.num_zones));

    for (int zone = 0; zone < config.num_zones; ++zone) {
        std::mt19937_64 rng(config.seed +
                            kZoneSeedStride * static_cast<std::uint64_t>(zone + 1));
        std::normal_distribution<double> noise(0.0, config.noise_std > 0.0 ? config.noise_std
                                                                           : 1.0);
        ZoneSeries series;
        series.zone_id = zone;
        series.start = config.start;
        series.demand.reserve(static_cast<std::size_t>(config.num_hours));

        for (std::int64_t t = 0; t < config.num_hours; ++t) {
            const HourStamp ts = config.start + t;
            const double daily =
                1.0 + config.daily_amplitude *
                          std::sin(2.0 * std::numbers::pi * static_cast<double>(ts.hour()) / 24.0);
            const double weekend = ts.weekday() >= 5 ? 1.0 : 0.0;
            const double weekly = 1.0 + config.weekly_amplitude * weekend;
            double value = config.base_level * daily * weekly +
                           config.trend_per_hour * static_cast<double>(t);
            if (config.noise_std > 0.0) {
                value += noise(rng);
            }
            double factor = 1.0;
            for (const DriftEvent& event : config.events) {
                if (event.affects(zone)) {
                    factor *= event.factor_at(t);
                }
            }
            series.demand.push_back(std::max(0.0, value * factor));
        }
        result.zones.push_back(std::move(series));
    }
    return result;
}

} // namespace driftcast::streams
