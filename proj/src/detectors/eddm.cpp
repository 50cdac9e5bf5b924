#include "driftcast/detectors/eddm.hpp"

#include <cmath>

#include "driftcast/errors.hpp"

namespace driftcast::detectors {

Eddm::Eddm(EddmParams params) : params_(params) {
    if (!(params.beta_drift > 0.0 && params.beta_drift <= params.beta_warn &&
          params.beta_warn <= 1.0)) {
        throw ContractViolation("Eddm: need 0 < beta_drift <= beta_warn <= 1");
    }
    if (params.min_errors < 1) {
        throw ContractViolation("Eddm: min_errors must be positive");
    }
}

EddmLevel Eddm::update(bool misclassified) {
    ++step_;
    if (!misclassified) {
        return level_;
    }

    if (errors_ > 0) {
        const double distance = static_cast<double>(step_ - last_error_step_);
        ++distance_count_;
        const double d1 = distance - mean_;
        mean_ += d1 / static_cast<double>(distance_count_);
        m2_ += d1 * (distance - mean_);
    }
    last_error_step_ = step_;
    ++errors_;

    const double current = metric();
    if (current > max_metric_) {
        max_metric_ = current;
    }
    if (errors_ >= static_cast<std::uint64_t>(params_.min_errors) && max_metric_ > 0.0) {
        const double ratio = current / max_metric_;
        if (ratio < params_.beta_drift) {
            level_ = EddmLevel::Drift;
        } else if (ratio < params_.beta_warn) {
            level_ = EddmLevel::Warning;
        } else {
            level_ = EddmLevel::Normal;
        }
    }
    return level_;
}

double Eddm::std_distance() const {
    if (distance_count_ == 0) {
        return 0.0;
    }
    return std::sqrt(m2_ / static_cast<double>(distance_count_));
}

double Eddm::metric() const {
    return mean_ + 2.0 * std_distance();
}

void Eddm::reset() {
    level_ = EddmLevel::Normal;
    step_ = 0;
    errors_ = 0;
    last_error_step_ = 0;
    distance_count_ = 0;
    mean_ = 0.0;
    m2_ = 0.0;
    max_metric_ = 0.0;
}

} // namespace driftcast::detectors
