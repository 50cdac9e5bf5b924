#pragma once

#include "driftcast/detectors/adwin.hpp"
#include "driftcast/detectors/binarizer.hpp"
#include "driftcast/detectors/eddm.hpp"
#include "driftcast/detectors/page_hinkley.hpp"
#include "driftcast/strategies/strategy.hpp"

namespace driftcast::detectors {

/**
 * Runs one classical drift detector on the active model's absolute error
 * stream and toggles between the two models whenever drift fires. The
 * detector state is reset after every switch so it starts fresh on the new
 * model's error distribution.
 *
 * Input conditioning per detector: Page-Hinkley consumes the raw absolute
 * error; the adaptive window consumes the error scaled by error_cap and
 * clamped to [0,1]; the distance-based detector consumes the binarized
 * miss/hit decision of a pre-calibrated threshold.
 */
class DetectorSwitchStrategy final : public strategies::SwitchingStrategy {
public:
    static DetectorSwitchStrategy page_hinkley(PageHinkleyParams params);
    static DetectorSwitchStrategy adwin(AdwinParams params, double error_cap);
    static DetectorSwitchStrategy eddm(EddmParams params, RegressionErrorBinarizer binarizer);

    std::string_view name() const override;
    ModelKind active() const override { return active_; }
    double emit(double pred_simple, double pred_complex) const override;
    std::optional<SwitchEvent> observe(HourStamp timestamp, double actual,
                                       double pred_simple, double pred_complex) override;

    TriggerKind trigger() const { return trigger_; }

private:
    explicit DetectorSwitchStrategy(TriggerKind trigger);

    bool feed(double abs_error);
    void reset_detector();

    TriggerKind trigger_;
    ModelKind active_ = ModelKind::Complex;
    PageHinkley ph_;
    Adwin adwin_;
    double error_cap_ = 1.0;
    Eddm eddm_;
    RegressionErrorBinarizer binarizer_;
};

} // namespace driftcast::detectors
