#pragma once

#include "driftcast/strategies/error_trace.hpp"
#include "driftcast/strategies/strategy.hpp"

namespace driftcast::strategies {

/**
 * Picks the model with the lower recent EWMA error. Ties resolve to
 * Complex, the default regime. Throws ContractViolation on empty traces.
 */
ModelKind eia_select(const ErrorTrace& trace_simple, const ErrorTrace& trace_complex);

/**
 * The error-intersection switcher: both models shadow-predict every hour,
 * their absolute errors feed two EWMA traces, and the emitted forecast is
 * the one from whichever model's error curve is currently lower. Switches
 * happen where the curves cross. Before the first observation the complex
 * model is active.
 */
class ErrorIntersectionStrategy final : public SwitchingStrategy {
public:
    explicit ErrorIntersectionStrategy(std::size_t window = 6);

    std::string_view name() const override { return "eia"; }
    ModelKind active() const override { return active_; }
    double emit(double pred_simple, double pred_complex) const override {
        return active_ == ModelKind::Simple ? pred_simple : pred_complex;
    }
    std::optional<SwitchEvent> observe(HourStamp timestamp, double actual,
                                       double pred_simple, double pred_complex) override;

    double ewma_simple() const override;
    double ewma_complex() const override;
    const ErrorTrace& trace_simple() const { return trace_simple_; }
    const ErrorTrace& trace_complex() const { return trace_complex_; }

private:
    ErrorTrace trace_simple_;
    ErrorTrace trace_complex_;
    ModelKind active_ = ModelKind::Complex;
};

} // namespace driftcast::strategies
