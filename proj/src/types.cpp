#include "driftcast/types.hpp"

#include "driftcast/errors.hpp"

namespace driftcast {

std::string_view to_string(ModelKind kind) {
    return kind == ModelKind::Simple ? "simple" : "complex";
}

std::string_view to_string(TriggerKind trigger) {
    switch (trigger) {
        case TriggerKind::Eia: return "eia";
        case TriggerKind::PageHinkley: return "ph";
        case TriggerKind::Adwin: return "adwin";
        case TriggerKind::Eddm: return "eddm";
    }
    return "?";
}

ModelKind model_kind_from_string(std::string_view text) {
    if (text == "simple") return ModelKind::Simple;
    if (text == "complex") return ModelKind::Complex;
    throw ContractViolation("unknown model kind: " + std::string(text));
}

} // namespace driftcast
