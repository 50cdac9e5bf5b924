#pragma once

#include <string_view>

#include "driftcast/time.hpp"

namespace driftcast {

/// The two static forecasters the switching strategies alternate between.
enum class ModelKind { Simple, Complex };

/// What caused a model switch.
enum class TriggerKind { Eia, PageHinkley, Adwin, Eddm };

std::string_view to_string(ModelKind kind);
std::string_view to_string(TriggerKind trigger);
ModelKind model_kind_from_string(std::string_view text);

constexpr ModelKind toggled(ModelKind kind) {
    return kind == ModelKind::Simple ? ModelKind::Complex : ModelKind::Simple;
}

/// One hourly demand observation for one zone: the stream element.
struct DemandRecord {
    HourStamp timestamp;
    int zone_id = 0;
    double demand = 0.0;  // ride count in that hour, >= 0
};

/**
 * Everything recorded about one forecast hour: both models' predictions,
 * the prediction the active strategy actually emitted, and the truth
 * revealed one hour later.
 */
struct ForecastPair {
    HourStamp timestamp;
    double actual = 0.0;
    double pred_simple = 0.0;
    double pred_complex = 0.0;
    double emitted = 0.0;
    ModelKind active_model = ModelKind::Complex;
};

/// A logged change of the active model, attributed to its trigger.
struct SwitchEvent {
    HourStamp timestamp;
    ModelKind from_model;
    ModelKind to_model;
    TriggerKind trigger;
};

} // namespace driftcast
