#pragma once

#include <cstdint>

namespace driftcast::detectors {

struct EddmParams {
    double beta_warn = 0.95;
    double beta_drift = 0.90;
    int min_errors = 30;  // errors observed before the thresholds apply
};

enum class EddmLevel { Normal, Warning, Drift };

/**
 * Distance-based drift detection over a binary misclassification stream.
 * Tracks the mean and standard deviation of the gap (in steps) between
 * consecutive misclassifications; the health metric p' + 2s' shrinks when
 * errors cluster. Once min_errors errors have been seen, the ratio of the
 * metric to its historical maximum is compared against the warn/drift
 * thresholds. The level reported on error-free steps is the last one
 * computed; the detector never resets itself.
 */
class Eddm {
public:
    Eddm() = default;
    explicit Eddm(EddmParams params);

    /// Advances one step; returns the level after processing it.
    EddmLevel update(bool misclassified);

    void reset();

    EddmLevel level() const { return level_; }
    std::uint64_t step_count() const { return step_; }
    std::uint64_t error_count() const { return errors_; }
    /// Mean gap between consecutive misclassifications (0 until two errors).
    double mean_distance() const { return mean_; }
    /// Population standard deviation of the gaps (0 until two errors).
    double std_distance() const;
    double metric() const;
    double max_metric() const { return max_metric_; }
    const EddmParams& params() const { return params_; }

private:
    EddmParams params_{};
    EddmLevel level_ = EddmLevel::Normal;
    std::uint64_t step_ = 0;
    std::uint64_t errors_ = 0;
    std::uint64_t last_error_step_ = 0;
    std::uint64_t distance_count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;  // Welford sum of squared deviations
    double max_metric_ = 0.0;
};

} // namespace driftcast::detectors
