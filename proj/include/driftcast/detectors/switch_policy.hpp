#pragma once

#include "driftcast/types.hpp"

namespace driftcast::detectors {

/// Drift toggles the active model; otherwise it is kept.
constexpr ModelKind detector_switch_policy(ModelKind active, bool drift_fired) {
    return drift_fired ? toggled(active) : active;
}

} // namespace driftcast::detectors
