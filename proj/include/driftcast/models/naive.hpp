#pragma once

#include <span>

#include "driftcast/errors.hpp"

namespace driftcast::models {

/// Last-value forecast: the demand observed one hour ago in the same zone.
inline double naive_predict(std::span<const double> history) {
    if (history.empty()) {
        throw ContractViolation("naive_predict: empty history");
    }
    return history.back();
}

} // namespace driftcast::models
