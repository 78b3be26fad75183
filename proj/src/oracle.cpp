#include "dqsim/oracle.hpp"

#include <cmath>

#include "dqsim/common.hpp"

namespace dqsim {
namespace {

// Adds one phase block for the satisfying input with the given basis index:
// X-conjugation on zero bits around a full-register phase gate, then a fence.
void add_block(Circuit& c, std::uint64_t index, GateKind phase_kind, double phi) {
    const int n = c.n_qubits;
    std::vector<int> zero_wires;
    for (int w = 0; w < n; ++w) {
        if (((index >> (n - 1 - w)) & 1u) == 0) zero_wires.push_back(w);
    }
    for (int w : zero_wires) c.x(w);
    std::vector<int> all(n);
    for (int w = 0; w < n; ++w) all[w] = w;
    c.add(phase_kind, all, phi);
    for (int w : zero_wires) c.x(w);
    c.barrier_all();
}

Circuit synth_blocks(const TruthTable& f, GateKind phase_kind, double phi) {
    Circuit c(f.arity);
    for (std::uint64_t index : satisfying_indices(f)) add_block(c, index, phase_kind, phi);
    validate(c);
    return c;
}

}  // namespace

Circuit synth_phase_oracle(const TruthTable& f) {
    return synth_blocks(f, GateKind::MultiControlledZ, 0.0);
}

Circuit synth_zero_reflection(int n_qubits) {
    TruthTable zero = point_function(BitString::zeros(n_qubits));
    return synth_phase_oracle(zero);
}

Circuit synth_rotation_oracle(const TruthTable& f, double phi) {
    if (!unique_target(f)) throw DomainError("rotation oracle requires unique target");
    if (!std::isfinite(phi)) throw DomainError("phase must be finite");
    return synth_blocks(f, GateKind::MultiControlledPhaseShift, phi);
}

Circuit synth_zero_rotation(int n_qubits, double phi) {
    TruthTable zero = point_function(BitString::zeros(n_qubits));
    return synth_rotation_oracle(zero, phi);
}

}  // namespace dqsim
