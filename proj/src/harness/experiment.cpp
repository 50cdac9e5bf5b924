#include "driftcast/harness/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "driftcast/detectors/switch_strategy.hpp"
#include "driftcast/errors.hpp"
#include "driftcast/models/features.hpp"
#include "driftcast/models/naive.hpp"
#include "driftcast/models/retrain.hpp"
#include "driftcast/strategies/eia.hpp"
#include "driftcast/strategies/ensemble.hpp"
#include "driftcast/strategies/error_trace.hpp"

namespace driftcast::harness {

namespace {

using models::kWarmupHours;

struct YearMapper {
    std::optional<std::int64_t> epoch_hours;
    const streams::ZoneSeries* reference = nullptr;

    int year_of(std::size_t index) const {
        if (epoch_hours) {
            return static_cast<int>(static_cast<std::int64_t>(index) / *epoch_hours);
        }
        return reference->timestamp_at(index).year();
    }
};

std::vector<models::TrainingExample> collect_examples(
    const std::vector<streams::ZoneSeries>& zones, std::size_t train_size,
    const YearMapper& years, std::optional<std::pair<int, int>> year_range) {
    std::vector<models::TrainingExample> dataset;
    const int num_zones = static_cast<int>(zones.size());
    const std::size_t limit = year_range ? zones.front().size() : train_size;
    for (int zi = 0; zi < num_zones; ++zi) {
        const auto& demand = zones[static_cast<std::size_t>(zi)].demand;
        for (std::size_t i = kWarmupHours; i < limit; ++i) {
            if (year_range) {
                const int year = years.year_of(i);
                if (year < year_range->first || year > year_range->second) {
                    continue;
                }
            }
            models::TrainingExample example;
            example.features =
                models::build_features(std::span(demand.data(), i),
                                       zones[static_cast<std::size_t>(zi)].timestamp_at(i), zi,
                                       num_zones)
                    .flatten();
            example.target = demand[i];
            dataset.push_back(std::move(example));
        }
    }
    return dataset;
}

std::unique_ptr<strategies::SwitchingStrategy> make_strategy(
    const ExperimentConfig& config, double adwin_cap,
    const detectors::RegressionErrorBinarizer& binarizer) {
    switch (config.strategy) {
        case StrategyKind::SimpleOnly:
            return std::make_unique<strategies::FixedStrategy>(ModelKind::Simple);
        case StrategyKind::ComplexOnly:
            return std::make_unique<strategies::FixedStrategy>(ModelKind::Complex);
        case StrategyKind::EnsembleEwma:
            return std::make_unique<strategies::EnsembleStrategy>(config.trace_window);
        case StrategyKind::Eia:
            return std::make_unique<strategies::ErrorIntersectionStrategy>(config.trace_window);
        case StrategyKind::PageHinkleySwitch:
            return std::make_unique<detectors::DetectorSwitchStrategy>(
                detectors::DetectorSwitchStrategy::page_hinkley(config.detectors.ph));
        case StrategyKind::AdwinSwitch:
            return std::make_unique<detectors::DetectorSwitchStrategy>(
                detectors::DetectorSwitchStrategy::adwin(config.detectors.adwin, adwin_cap));
        case StrategyKind::EddmSwitch:
            return std::make_unique<detectors::DetectorSwitchStrategy>(
                detectors::DetectorSwitchStrategy::eddm(config.detectors.eddm, binarizer));
    }
    throw ConfigError("unknown strategy");
}

} // namespace

std::vector<streams::ZoneSeries> load_stream(const ExperimentConfig& config) {
    if (config.synthetic) {
        streams::SyntheticConfig synth = *config.synthetic;
        synth.seed = config.seed;
        return streams::generate_synthetic(synth).zones;
    }
    if (config.csv_path) {
        return streams::read_demand_csv(*config.csv_path);
    }
    throw ConfigError("no stream source configured");
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::vector<streams::ZoneSeries> zones) {
    if (zones.empty()) {
        throw ConfigError("experiment stream has no zones");
    }
    std::sort(zones.begin(), zones.end(),
              [](const streams::ZoneSeries& a, const streams::ZoneSeries& b) {
                  return a.zone_id < b.zone_id;
              });
    const std::size_t size = zones.front().size();
    for (const streams::ZoneSeries& zone : zones) {
        if (zone.size() != size || zone.start != zones.front().start) {
            throw ConfigError("zone streams are not aligned to one hourly grid");
        }
    }
    if (size == 0) {
        throw ConfigError("experiment stream is empty");
    }

    const HourStamp start = zones.front().start;
    HourStamp train_end = config.train_end
                              ? *config.train_end
                              : start + (*config.train_hours - 1);
    if (train_end < start || zones.front().last_timestamp() < train_end) {
        throw ConfigError("train_end outside the stream span");
    }
    const std::size_t train_size = static_cast<std::size_t>(train_end - start) + 1;
    if (train_size <= static_cast<std::size_t>(kWarmupHours)) {
        throw ConfigError("training segment shorter than the feature warm-up window");
    }
    if (train_size >= size) {
        throw ConfigError("no test hours after train_end");
    }

    const int num_zones = static_cast<int>(zones.size());
    const YearMapper years{config.year_length_hours, &zones.front()};

    // One pooled model serves every zone; retraining swaps it at year starts.
    models::TrainingConfig train_config = config.training;
    train_config.seed = config.seed;
    std::vector<models::DemandRegressor> regressors;
    regressors.push_back(
        models::train_regressor(collect_examples(zones, train_size, years, std::nullopt),
                                train_config));
    std::vector<std::size_t> retrain_points;  // first index each later model serves
    if (config.retrain) {
        const int first_test_year = years.year_of(train_size);
        const int last_test_year = years.year_of(size - 1);
        const auto plan = models::yearly_retrain_plan(first_test_year, last_test_year,
                                                      config.retrain_window_years);
        std::size_t scan = train_size;
        for (const models::RetrainPlanEntry& entry : plan) {
            if (entry.forecast_year <= first_test_year) {
                continue;  // the initial model covers the first test year
            }
            while (scan < size && years.year_of(scan) < entry.forecast_year) {
                ++scan;
            }
            if (scan >= size) {
                break;
            }
            models::TrainingConfig retrain_config = config.training;
            retrain_config.seed = config.seed + retrain_points.size() + 1;
            auto dataset = collect_examples(
                zones, train_size, years,
                std::make_pair(entry.train_begin_year, entry.train_end_year));
            if (dataset.empty()) {
                throw ConfigError("retraining window holds no data");
            }
            regressors.push_back(models::train_regressor(dataset, retrain_config));
            retrain_points.push_back(scan);
        }
    }
    const auto model_at = [&](std::size_t index) -> const models::DemandRegressor& {
        std::size_t which = 0;
        for (std::size_t k = 0; k < retrain_points.size(); ++k) {
            if (index >= retrain_points[k]) {
                which = k + 1;
            }
        }
        return regressors[which];
    };

    // Per-zone detector calibration data from the training segment.
    std::vector<double> adwin_caps(zones.size(), 1.0);
    std::vector<detectors::RegressionErrorBinarizer> binarizers(
        zones.size(), detectors::RegressionErrorBinarizer(config.detectors.binarizer_quantile));
    for (std::size_t z = 0; z < zones.size(); ++z) {
        const auto& demand = zones[z].demand;
        double max_demand = 0.0;
        for (std::size_t i = 0; i < train_size; ++i) {
            max_demand = std::max(max_demand, demand[i]);
        }
        adwin_caps[z] = config.detectors.adwin_error_cap.value_or(
            max_demand > 0.0 ? max_demand : 1.0);
        if (config.strategy == StrategyKind::EddmSwitch) {
            std::vector<double> errors;
            errors.reserve(train_size - static_cast<std::size_t>(kWarmupHours));
            for (std::size_t i = kWarmupHours; i < train_size; ++i) {
                const double pred = regressors.front().predict(
                    models::build_features(std::span(demand.data(), i), zones[z].timestamp_at(i),
                                           static_cast<int>(z), num_zones)
                        .flatten());
                errors.push_back(std::abs(demand[i] - pred));
            }
            binarizers[z].calibrate(errors);
        }
    }

    ExperimentResult result;
    for (std::size_t z = 0; z < zones.size(); ++z) {
        const auto& zone = zones[z];
        const auto& demand = zone.demand;
        auto strategy = make_strategy(config, adwin_caps[z], binarizers[z]);
        strategies::ErrorTrace monitor_simple(config.trace_window);
        strategies::ErrorTrace monitor_complex(config.trace_window);

        for (std::size_t i = kWarmupHours; i < size; ++i) {
            const HourStamp ts = zone.timestamp_at(i);
            const std::span<const double> history(demand.data(), i);
            const double pred_simple = models::naive_predict(history);
            const double pred_complex = model_at(i).predict(
                models::build_features(history, ts, static_cast<int>(z), num_zones).flatten());

            const double emitted = strategy->emit(pred_simple, pred_complex);
            const ModelKind active = strategy->active();

            const double actual = demand[i];
            monitor_simple.update(std::abs(actual - pred_simple));
            monitor_complex.update(std::abs(actual - pred_complex));
            if (auto event = strategy->observe(ts, actual, pred_simple, pred_complex)) {
                result.switches.push_back(SwitchRecord{zone.zone_id, *event,
                                                       monitor_simple.ewma(),
                                                       monitor_complex.ewma()});
            }

            LoggedForecast row;
            row.zone_id = zone.zone_id;
            row.pair = ForecastPair{ts, actual, pred_simple, pred_complex, emitted, active};
            row.scored = i >= train_size;
            result.forecasts.push_back(row);
            result.plot.push_back(PlotRow{zone.zone_id, ts, actual, pred_simple, pred_complex,
                                          emitted, monitor_simple.ewma(),
                                          monitor_complex.ewma()});
        }
    }

    // Pooled and per-zone metrics over the scored suffix of each zone.
    EvaluationReport& report = result.report;
    report.strategy = std::string(to_string(config.strategy));
    report.seed = config.seed;

    std::vector<double> actual_all, emitted_all, err_emitted, err_complex;
    std::vector<double> actual_zone, emitted_zone;
    const std::size_t rows_per_zone = size - static_cast<std::size_t>(kWarmupHours);
    for (std::size_t z = 0; z < zones.size(); ++z) {
        actual_zone.clear();
        emitted_zone.clear();
        PerZoneMetrics per_zone;
        per_zone.zone_id = zones[z].zone_id;
        std::optional<ModelKind> prev_active;
        for (std::size_t r = z * rows_per_zone; r < (z + 1) * rows_per_zone; ++r) {
            const LoggedForecast& row = result.forecasts[r];
            if (!row.scored) {
                continue;
            }
            actual_zone.push_back(row.pair.actual);
            emitted_zone.push_back(row.pair.emitted);
            actual_all.push_back(row.pair.actual);
            emitted_all.push_back(row.pair.emitted);
            err_emitted.push_back(row.pair.actual - row.pair.emitted);
            err_complex.push_back(row.pair.actual - row.pair.pred_complex);
            if (row.pair.active_model == ModelKind::Simple) {
                ++per_zone.simple_count;
            }
            if (prev_active && *prev_active != row.pair.active_model) {
                ++per_zone.switch_count;
            }
            prev_active = row.pair.active_model;
            ++per_zone.scored_count;
        }
        per_zone.rmse = metrics::rmse(emitted_zone, actual_zone);
        per_zone.smape = metrics::smape(emitted_zone, actual_zone);
        report.per_zone.push_back(per_zone);
        report.switch_count += per_zone.switch_count;
        report.simple_count += per_zone.simple_count;
    }

    report.rmse = metrics::rmse(emitted_all, actual_all);
    report.smape = metrics::smape(emitted_all, actual_all);
    report.simple_share =
        static_cast<double>(report.simple_count) / static_cast<double>(actual_all.size());
    if (err_emitted.size() >= 10) {
        report.dm_vs_complex = metrics::dm_test(err_emitted, err_complex);
    }
    report.per_day = per_day_analysis(result.forecasts);
    report.conditional = conditional_improvement(result.forecasts);
    report.segment.test_start = start + static_cast<std::int64_t>(train_size);
    report.segment.test_end = zones.front().last_timestamp();
    report.segment.n_scored = actual_all.size();
    report.segment.stream_fingerprint = stream_fingerprint(zones);
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    return run_experiment(config, load_stream(config));
}

} // namespace driftcast::harness
