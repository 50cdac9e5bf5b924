#include "driftcast/metrics.hpp"

#include <cmath>
#include <vector>

#include "driftcast/errors.hpp"

namespace driftcast::metrics {

namespace {

void require_paired(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ContractViolation("sequence lengths differ");
    }
    if (a.empty()) {
        throw ContractViolation("empty sequences");
    }
}

} // namespace

double rmse(std::span<const double> predictions, std::span<const double> actuals) {
    require_paired(predictions, actuals);
    double acc = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double d = predictions[i] - actuals[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(predictions.size()));
}

double smape(std::span<const double> predictions, std::span<const double> actuals) {
    require_paired(predictions, actuals);
    double acc = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double denom = (std::abs(actuals[i]) + std::abs(predictions[i])) / 2.0;
        if (denom > 0.0) {
            acc += std::abs(predictions[i] - actuals[i]) / denom;
        }
    }
    return 100.0 * acc / static_cast<double>(predictions.size());
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

DmResult dm_test(std::span<const double> errors_a, std::span<const double> errors_b) {
    if (errors_a.size() != errors_b.size()) {
        throw ContractViolation("error sequences differ in length");
    }
    const std::size_t n = errors_a.size();
    if (n < 10) {
        throw InsufficientSample("Diebold-Mariano test needs at least 10 observations");
    }

    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = errors_a[i] * errors_a[i] - errors_b[i] * errors_b[i];
    }
    double mean = 0.0;
    for (double v : d) mean += v;
    mean /= static_cast<double>(n);

    double gamma0 = 0.0;
    for (double v : d) {
        const double c = v - mean;
        gamma0 += c * c;
    }
    gamma0 /= static_cast<double>(n);

    if (gamma0 == 0.0) {
        return DmResult{0.0, 1.0, n};
    }
    const double statistic = mean / std::sqrt(gamma0 / static_cast<double>(n));
    const double p = std::erfc(std::abs(statistic) / std::sqrt(2.0));
    return DmResult{statistic, p, n};
}

} // namespace driftcast::metrics
