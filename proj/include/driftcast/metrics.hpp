#pragma once

#include <cstddef>
#include <span>

namespace driftcast::metrics {

/// Root mean squared error over paired sequences. Throws ContractViolation
/// on empty input or length mismatch.
double rmse(std::span<const double> predictions, std::span<const double> actuals);

/**
 * Symmetric mean absolute percentage error on the 0..200 scale:
 *   (100/n) * sum |F - A| / ((|A| + |F|) / 2)
 * A term where both forecast and actual are zero contributes 0.
 */
double smape(std::span<const double> predictions, std::span<const double> actuals);

/// Outcome of a Diebold-Mariano forecast comparison.
struct DmResult {
    double statistic = 0.0;
    double p_value = 1.0;  // two-sided, standard normal reference
    std::size_t n = 0;
};

/**
 * Diebold-Mariano test on two forecast-error sequences under squared-error
 * loss at horizon 1. The loss differential is d_t = a_t^2 - b_t^2, the
 * statistic mean(d) / sqrt(var(d)/n) with the plain population variance
 * (no autocovariance terms, no small-sample adjustment).
 *
 * A zero-variance differential (identical losses) yields (0, 1). Requires
 * n >= 10, else InsufficientSample.
 */
DmResult dm_test(std::span<const double> errors_a, std::span<const double> errors_b);

/// Standard normal CDF.
double normal_cdf(double x);

} // namespace driftcast::metrics
