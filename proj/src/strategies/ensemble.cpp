#include "driftcast/strategies/ensemble.hpp"

#include <cmath>
#include <limits>

#include "driftcast/errors.hpp"

namespace driftcast::strategies {

EnsembleWeights ensemble_weights(const ErrorTrace& trace_simple, const ErrorTrace& trace_complex) {
    const double e_s = trace_simple.ewma();
    const double e_c = trace_complex.ewma();
    const double total = e_s + e_c;
    if (total == 0.0) {
        return {0.5, 0.5};
    }
    // w_simple = 1 - e_s/total, computed as the complement share so that a
    // model holding exactly one third of the error mass gets weight 2/3.
    return {e_c / total, e_s / total};
}

double ensemble_predict(EnsembleWeights weights, double pred_simple, double pred_complex) {
    if (!(weights.simple >= 0.0 && weights.simple <= 1.0) ||
        !(weights.complex >= 0.0 && weights.complex <= 1.0)) {
        throw ContractViolation("ensemble_predict: weights must lie in [0,1]");
    }
    if (std::abs(weights.simple + weights.complex - 1.0) > 1e-9) {
        throw ContractViolation("ensemble_predict: weights must sum to 1");
    }
    return weights.simple * pred_simple + weights.complex * pred_complex;
}

EnsembleStrategy::EnsembleStrategy(std::size_t window)
    : trace_simple_(window), trace_complex_(window) {}

EnsembleWeights EnsembleStrategy::weights() const {
    if (trace_simple_.empty() || trace_complex_.empty()) {
        return {0.5, 0.5};
    }
    return ensemble_weights(trace_simple_, trace_complex_);
}

ModelKind EnsembleStrategy::active() const {
    const EnsembleWeights w = weights();
    return w.simple > w.complex ? ModelKind::Simple : ModelKind::Complex;
}

double EnsembleStrategy::emit(double pred_simple, double pred_complex) const {
    return ensemble_predict(weights(), pred_simple, pred_complex);
}

std::optional<SwitchEvent> EnsembleStrategy::observe(HourStamp, double actual,
                                                     double pred_simple, double pred_complex) {
    trace_simple_.update(std::abs(actual - pred_simple));
    trace_complex_.update(std::abs(actual - pred_complex));
    return std::nullopt;
}

double EnsembleStrategy::ewma_simple() const {
    return trace_simple_.empty() ? std::numeric_limits<double>::quiet_NaN() : trace_simple_.ewma();
}

double EnsembleStrategy::ewma_complex() const {
    return trace_complex_.empty() ? std::numeric_limits<double>::quiet_NaN()
                                  : trace_complex_.ewma();
}

} // namespace driftcast::strategies
