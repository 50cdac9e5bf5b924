#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "driftcast/detectors/adwin.hpp"
#include "driftcast/detectors/eddm.hpp"
#include "driftcast/detectors/page_hinkley.hpp"
#include "driftcast/models/mlp.hpp"
#include "driftcast/streams/synthetic.hpp"
#include "driftcast/time.hpp"

namespace driftcast::harness {

enum class StrategyKind {
    SimpleOnly,
    ComplexOnly,
    EnsembleEwma,
    PageHinkleySwitch,
    AdwinSwitch,
    EddmSwitch,
    Eia,
};

std::string_view to_string(StrategyKind kind);
StrategyKind strategy_from_string(std::string_view text);

struct DetectorConfig {
    detectors::PageHinkleyParams ph;
    detectors::AdwinParams adwin;
    detectors::EddmParams eddm;
    double binarizer_quantile = 0.95;
    // Error normalization bound for the adaptive window; defaults to each
    // zone's maximum training demand.
    std::optional<double> adwin_error_cap;
};

/**
 * Full description of one experiment run. Exactly one stream source must
 * be set; the train/test boundary comes from either an absolute train_end
 * timestamp or a train_hours count from stream start. `seed` drives stream
 * generation and model training alike.
 */
struct ExperimentConfig {
    std::optional<streams::SyntheticConfig> synthetic;
    std::optional<std::string> csv_path;
    StrategyKind strategy = StrategyKind::Eia;
    models::TrainingConfig training;
    std::size_t trace_window = 6;
    DetectorConfig detectors;
    std::optional<HourStamp> train_end;
    std::optional<std::int64_t> train_hours;
    bool retrain = false;
    int retrain_window_years = 3;
    // Synthetic streams have no calendar meaning; this remaps "year" to a
    // fixed hour count for the retraining schedule.
    std::optional<std::int64_t> year_length_hours;
    std::string output_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
};

/// Reads a config file: JSON when the first significant byte is '{',
/// otherwise flat key = value lines ('#' comments allowed). Keys match
/// apply_override.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Sets one dotted-path field from its text form, e.g.
/// "training.epochs" = "20", "stream.synthetic.num_hours" = "8760",
/// "detectors.ph.lambda" = "50". Unknown key or bad value -> ConfigError.
void apply_override(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Structural checks shared by CLI and harness; throws ConfigError.
void validate_config(const ExperimentConfig& config);

} // namespace driftcast::harness
