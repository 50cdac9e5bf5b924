#pragma once

#include <span>
#include <vector>

namespace driftcast::detectors {

/// Nearest-rank quantile: the element at rank ceil(q*n) (1-based) of the
/// sorted sample. q must lie in (0,1) and the sample must be non-empty.
double nearest_rank_quantile(std::span<const double> sample, double q);

/**
 * Turns absolute regression errors into the binary miss/hit stream a
 * classification drift detector expects. Calibrate on a reference window of
 * absolute errors; afterwards an error counts as a misclassification iff it
 * strictly exceeds the q-quantile threshold tau.
 */
class RegressionErrorBinarizer {
public:
    RegressionErrorBinarizer() = default;
    explicit RegressionErrorBinarizer(double quantile);

    /// Fits tau from a non-empty sample of finite absolute errors.
    void calibrate(std::span<const double> abs_errors);

    bool calibrated() const { return calibrated_; }
    /// Threshold tau; requires calibration.
    double tau() const;
    /// True iff abs_error > tau (strictly). Requires calibration.
    bool misclassified(double abs_error) const;
    double quantile() const { return quantile_; }

private:
    double quantile_ = 0.95;
    double tau_ = 0.0;
    bool calibrated_ = false;
};

} // namespace driftcast::detectors
