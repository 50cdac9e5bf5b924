#include "driftcast/strategies/eia.hpp"

#include <cmath>
#include <limits>

namespace driftcast::strategies {

double SwitchingStrategy::ewma_simple() const {
    return std::numeric_limits<double>::quiet_NaN();
}

double SwitchingStrategy::ewma_complex() const {
    return std::numeric_limits<double>::quiet_NaN();
}

ModelKind eia_select(const ErrorTrace& trace_simple, const ErrorTrace& trace_complex) {
    // ewma() throws on an empty trace; warm-up is the caller's business.
    return trace_simple.ewma() < trace_complex.ewma() ? ModelKind::Simple : ModelKind::Complex;
}

ErrorIntersectionStrategy::ErrorIntersectionStrategy(std::size_t window)
    : trace_simple_(window), trace_complex_(window) {}

std::optional<SwitchEvent> ErrorIntersectionStrategy::observe(HourStamp timestamp, double actual,
                                                              double pred_simple,
                                                              double pred_complex) {
    trace_simple_.update(std::abs(actual - pred_simple));
    trace_complex_.update(std::abs(actual - pred_complex));
    const ModelKind next = eia_select(trace_simple_, trace_complex_);
    if (next == active_) return std::nullopt;
    SwitchEvent event{timestamp, active_, next, TriggerKind::Eia};
    active_ = next;
    return event;
}

double ErrorIntersectionStrategy::ewma_simple() const {
    return trace_simple_.empty() ? std::numeric_limits<double>::quiet_NaN() : trace_simple_.ewma();
}

double ErrorIntersectionStrategy::ewma_complex() const {
    return trace_complex_.empty() ? std::numeric_limits<double>::quiet_NaN() : trace_complex_.ewma();
}

} // namespace driftcast::strategies
