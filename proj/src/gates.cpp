#include "dqsim/gates.hpp"

namespace dqsim {

std::string_view kind_name(GateKind k) {
    switch (k) {
        case GateKind::I: return "I";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::PhaseShift: return "PS";
        case GateKind::MultiControlledZ: return "MCZ";
        case GateKind::MultiControlledPhaseShift: return "MCPS";
        case GateKind::Measure: return "MEASURE";
        case GateKind::Barrier: return "BARRIER";
    }
    return "?";
}

std::optional<GateKind> kind_from_name(std::string_view name) {
    using enum GateKind;
    for (GateKind k : {I, X, Y, Z, H, T, Tdg, PhaseShift, MultiControlledZ,
                       MultiControlledPhaseShift, Measure, Barrier}) {
        if (name == kind_name(k)) return k;
    }
    return std::nullopt;
}

}  // namespace dqsim
