#pragma once

#include <optional>
#include <string_view>

#include "driftcast/types.hpp"

namespace driftcast::strategies {

/**
 * Per-zone prediction strategy driving one prequential loop.
 *
 * The loop calls emit() with both models' forecasts for the coming hour,
 * then observe() once the truth arrives. observe() updates internal error
 * state and reselects the active model for the next hour, reporting a
 * SwitchEvent when it changed. Instances are single-threaded; run one per
 * zone.
 */
class SwitchingStrategy {
public:
    virtual ~SwitchingStrategy() = default;

    virtual std::string_view name() const = 0;

    /// Model whose forecast the next emit() will favor.
    virtual ModelKind active() const = 0;

    /// The prediction this strategy outputs for the coming hour.
    virtual double emit(double pred_simple, double pred_complex) const = 0;

    virtual std::optional<SwitchEvent> observe(HourStamp timestamp, double actual,
                                               double pred_simple, double pred_complex) = 0;

    /// Recent-error summaries when the strategy tracks them (NaN otherwise);
    /// exported to the plot log.
    virtual double ewma_simple() const;
    virtual double ewma_complex() const;
};

/// Always one model, never switches: the two static baselines.
class FixedStrategy final : public SwitchingStrategy {
public:
    explicit FixedStrategy(ModelKind kind) : kind_(kind) {}

    std::string_view name() const override {
        return kind_ == ModelKind::Simple ? "simple" : "complex";
    }
    ModelKind active() const override { return kind_; }
    double emit(double pred_simple, double pred_complex) const override {
        return kind_ == ModelKind::Simple ? pred_simple : pred_complex;
    }
    std::optional<SwitchEvent> observe(HourStamp, double, double, double) override {
        return std::nullopt;
    }

private:
    ModelKind kind_;
};

} // namespace driftcast::strategies
