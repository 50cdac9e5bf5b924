#pragma once

#include "driftcast/strategies/error_trace.hpp"
#include "driftcast/strategies/strategy.hpp"

namespace driftcast::strategies {

struct EnsembleWeights {
    double simple = 0.5;
    double complex = 0.5;
};

/**
 * Inverse error-share weighting: a model contributing share e_m / (e_s + e_c)
 * of the summed EWMA errors gets weight 1 - that share, i.e. the other
 * model's share. Both traces at zero yield an even split.
 */
EnsembleWeights ensemble_weights(const ErrorTrace& trace_simple, const ErrorTrace& trace_complex);

/// Convex combination of the two forecasts. Weights must be in [0,1] and
/// sum to 1 within 1e-9.
double ensemble_predict(EnsembleWeights weights, double pred_simple, double pred_complex);

/**
 * Continuous blending baseline. Emits the weighted combination every hour;
 * the recorded active model is the currently higher-weighted one (Complex
 * on an even split), and no switch events are produced.
 */
class EnsembleStrategy final : public SwitchingStrategy {
public:
    explicit EnsembleStrategy(std::size_t window = 6);

    std::string_view name() const override { return "ensemble"; }
    ModelKind active() const override;
    double emit(double pred_simple, double pred_complex) const override;
    std::optional<SwitchEvent> observe(HourStamp timestamp, double actual,
                                       double pred_simple, double pred_complex) override;

    EnsembleWeights weights() const;
    double ewma_simple() const override;
    double ewma_complex() const override;

private:
    ErrorTrace trace_simple_;
    ErrorTrace trace_complex_;
};

} // namespace driftcast::strategies
