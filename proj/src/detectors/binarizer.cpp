#include "driftcast/detectors/binarizer.hpp"

#include <algorithm>
#include <cmath>

#include "driftcast/errors.hpp"

namespace driftcast::detectors {

double nearest_rank_quantile(std::span<const double> sample, double q) {
    if (sample.empty()) {
        throw ContractViolation("nearest_rank_quantile: sample is empty");
    }
    if (!(q > 0.0 && q < 1.0)) {
        throw ContractViolation("nearest_rank_quantile: q must lie in (0,1)");
    }
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double rank = std::ceil(q * static_cast<double>(sorted.size()));
    std::size_t index = rank <= 1.0 ? 0 : static_cast<std::size_t>(rank) - 1;
    if (index >= sorted.size()) {
        index = sorted.size() - 1;
    }
    return sorted[index];
}

RegressionErrorBinarizer::RegressionErrorBinarizer(double quantile) : quantile_(quantile) {
    if (!(quantile > 0.0 && quantile < 1.0)) {
        throw ContractViolation("RegressionErrorBinarizer: quantile must lie in (0,1)");
    }
}

void RegressionErrorBinarizer::calibrate(std::span<const double> abs_errors) {
    for (double e : abs_errors) {
        if (!std::isfinite(e) || e < 0.0) {
            throw ContractViolation(
                "RegressionErrorBinarizer::calibrate: errors must be finite and non-negative");
        }
    }
    tau_ = nearest_rank_quantile(abs_errors, quantile_);
    calibrated_ = true;
}

double RegressionErrorBinarizer::tau() const {
    if (!calibrated_) {
        throw ContractViolation("RegressionErrorBinarizer: not calibrated");
    }
    return tau_;
}

bool RegressionErrorBinarizer::misclassified(double abs_error) const {
    return abs_error > tau();
}

} // namespace driftcast::detectors
