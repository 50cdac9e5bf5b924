#include "driftcast/detectors/page_hinkley.hpp"

#include <cmath>

#include "driftcast/errors.hpp"

namespace driftcast::detectors {

PageHinkley::PageHinkley(PageHinkleyParams params) : params_(params) {
    if (!(params.delta >= 0.0) || !std::isfinite(params.delta)) {
        throw ContractViolation("PageHinkley: delta must be finite and non-negative");
    }
    if (!(params.lambda > 0.0) || !std::isfinite(params.lambda)) {
        throw ContractViolation("PageHinkley: lambda must be finite and positive");
    }
    if (!(params.alpha > 0.0 && params.alpha <= 1.0)) {
        throw ContractViolation("PageHinkley: alpha must lie in (0,1]");
    }
}

bool PageHinkley::update(double value) {
    if (!std::isfinite(value)) {
        throw ContractViolation("PageHinkley::update: value must be finite");
    }
    // Fading mean: old weight decays by alpha before the new unit weight joins.
    weight_sum_ = params_.alpha * weight_sum_ + 1.0;
    mean_ += (value - mean_) / weight_sum_;
    m_t_ += value - mean_ - params_.delta;
    if (m_t_ < min_m_t_) {
        min_m_t_ = m_t_;
    }
    ++count_;
    if (m_t_ - min_m_t_ > params_.lambda) {
        reset();
        return true;
    }
    return false;
}

void PageHinkley::reset() {
    mean_ = 0.0;
    weight_sum_ = 0.0;
    m_t_ = 0.0;
    min_m_t_ = 0.0;
    count_ = 0;
}

} // namespace driftcast::detectors
