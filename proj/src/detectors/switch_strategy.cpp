#include "driftcast/detectors/switch_strategy.hpp"

#include <cmath>

#include "driftcast/detectors/switch_policy.hpp"
#include "driftcast/errors.hpp"

namespace driftcast::detectors {

DetectorSwitchStrategy::DetectorSwitchStrategy(TriggerKind trigger) : trigger_(trigger) {}

DetectorSwitchStrategy DetectorSwitchStrategy::page_hinkley(PageHinkleyParams params) {
    DetectorSwitchStrategy s(TriggerKind::PageHinkley);
    s.ph_ = PageHinkley(params);
    return s;
}

DetectorSwitchStrategy DetectorSwitchStrategy::adwin(AdwinParams params, double error_cap) {
    if (!(error_cap > 0.0) || !std::isfinite(error_cap)) {
        throw ContractViolation("DetectorSwitchStrategy: error_cap must be finite and positive");
    }
    DetectorSwitchStrategy s(TriggerKind::Adwin);
    s.adwin_ = Adwin(params);
    s.error_cap_ = error_cap;
    return s;
}

DetectorSwitchStrategy DetectorSwitchStrategy::eddm(EddmParams params,
                                                    RegressionErrorBinarizer binarizer) {
    if (!binarizer.calibrated()) {
        throw ContractViolation("DetectorSwitchStrategy: binarizer must be calibrated");
    }
    DetectorSwitchStrategy s(TriggerKind::Eddm);
    s.eddm_ = Eddm(params);
    s.binarizer_ = binarizer;
    return s;
}

std::string_view DetectorSwitchStrategy::name() const {
    return to_string(trigger_);
}

double DetectorSwitchStrategy::emit(double pred_simple, double pred_complex) const {
    return active_ == ModelKind::Simple ? pred_simple : pred_complex;
}

bool DetectorSwitchStrategy::feed(double abs_error) {
    switch (trigger_) {
        case TriggerKind::PageHinkley:
            return ph_.update(abs_error);
        case TriggerKind::Adwin: {
            double scaled = abs_error / error_cap_;
            if (scaled > 1.0) {
                scaled = 1.0;
            }
            return adwin_.insert(scaled).drift;
        }
        case TriggerKind::Eddm:
            return eddm_.update(binarizer_.misclassified(abs_error)) == EddmLevel::Drift;
        case TriggerKind::Eia:
            break;
    }
    throw ContractViolation("DetectorSwitchStrategy: unsupported trigger");
}

void DetectorSwitchStrategy::reset_detector() {
    switch (trigger_) {
        case TriggerKind::PageHinkley:
            ph_.reset();
            return;
        case TriggerKind::Adwin:
            adwin_.reset();
            return;
        case TriggerKind::Eddm:
            eddm_.reset();
            return;
        case TriggerKind::Eia:
            return;
    }
}

std::optional<SwitchEvent> DetectorSwitchStrategy::observe(HourStamp timestamp, double actual,
                                                           double pred_simple,
                                                           double pred_complex) {
    const double pred = emit(pred_simple, pred_complex);
    const bool drift = feed(std::abs(actual - pred));
    const ModelKind next = detector_switch_policy(active_, drift);
    if (next == active_) {
        return std::nullopt;
    }
    SwitchEvent event{timestamp, active_, next, trigger_};
    active_ = next;
    reset_detector();
    return event;
}

} // namespace driftcast::detectors
