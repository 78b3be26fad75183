#pragma once

#include <vector>

#include "dqsim/gates.hpp"
#include "dqsim/state.hpp"

namespace dqsim {

// One placed gate.  Multi-controlled kinds list controls first and the target
// last; their action is symmetric in the wires, so the order only matters for
// display.  Barrier spans the wires it aligns; Measure lists the wires it
// reads out.
struct GateInstance {
    GateKind kind = GateKind::I;
    std::vector<int> wires;
    double phi = 0.0;

    friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<GateInstance> gates;

    Circuit() = default;
    explicit Circuit(int n);

    Circuit& add(GateKind kind, std::vector<int> wires, double phi = 0.0);
    Circuit& h(int w) { return add(GateKind::H, {w}); }
    Circuit& x(int w) { return add(GateKind::X, {w}); }
    Circuit& h_layer();
    Circuit& mcz_all();                 // MultiControlledZ across every wire
    Circuit& mcps_all(double phi);      // MultiControlledPhaseShift across every wire
    Circuit& barrier_all();
    Circuit& measure_all();

    // Append another circuit's gates, shifting its wires by `wire_offset`.
    Circuit& append(const Circuit& other, int wire_offset = 0);

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Wires in range and distinct per gate, arities consistent, phases finite.
void validate_gate(const GateInstance& g, int n_qubits);
void validate(const Circuit& c);

// Number of gates excluding Barrier and Measure; a multi-controlled gate
// counts as one.
int gate_count(const Circuit& c);

// ASAP wire scheduling: a gate lands on layer 1 + max(front of its wires) and
// the result is the highest layer used.  Measure is readout, not a gate, and
// is ignored.  A barrier occupies no layer but aligns the front of the wires
// it spans, so freshly synthesized circuits keep their block structure until
// an optimizer drops the barriers.
int depth(const Circuit& c);

// Drops barriers, then repeatedly removes pairs of X gates on the same wire
// with no intervening gate touching that wire.  Preserves the unitary exactly
// (bit for bit: X application is a pure swap).
Circuit optimize_x_cancellation(const Circuit& c);

// Dense unitary of a measurement-free circuit; up to 10 qubits.
MatrixXc<double> unitary_of(const Circuit& c);

// Copy with Measure instances removed (for unitary comparisons).
Circuit without_measurements(const Circuit& c);

// Side-by-side combination of circuits on disjoint wire blocks; part k is
// shifted by offsets[k].
Circuit combined(const std::vector<Circuit>& parts, const std::vector<int>& offsets,
                 int n_total);

// Evolve |0...0> through all unitary gates.  Barriers are skipped; Measure is
// allowed only as trailing readout.
template <class Scalar = double>
StateVector<Scalar> simulate(const Circuit& c) {
    validate(c);
    bool measured = false;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::Measure) measured = true;
        else if (g.kind != GateKind::Barrier && measured)
            throw DomainError("mid-circuit measurement is not supported");
    }
    StateVector<Scalar> state = make_basis_state<Scalar>(c.n_qubits);
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) continue;
        apply_gate_in_place<Scalar>(state, g.kind, g.wires, static_cast<Scalar>(g.phi));
    }
    return state;
}

}  // namespace dqsim
