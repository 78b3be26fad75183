#pragma once

#include "dqsim/boolfn.hpp"
#include "dqsim/circuit.hpp"

namespace dqsim {

// Phase oracle for f: |x> -> (-1)^f(x) |x>.  One block per satisfying input,
// in ascending basis order: X on the zero bits, a full-register controlled-Z,
// the same X layer again, then a barrier fencing the block.
Circuit synth_phase_oracle(const TruthTable& f);

// Reflection about |0...0>: X on every wire, controlled-Z, X on every wire.
Circuit synth_zero_reflection(int n_qubits);

// Rotation variants replace the controlled-Z with a controlled phase e^{i phi}.
// The rotation oracle requires f to have exactly one satisfying input.
Circuit synth_rotation_oracle(const TruthTable& f, double phi);
Circuit synth_zero_rotation(int n_qubits, double phi);

}  // namespace dqsim
