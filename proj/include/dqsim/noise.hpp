#pragma once

#include <variant>
#include <vector>

#include "dqsim/circuit.hpp"
#include "dqsim/density.hpp"
#include "dqsim/sampling.hpp"

namespace dqsim {

// Two equivalent single-qubit depolarizing parameterizations:
//   UniformMix:  rho -> (1-p) rho + p I/2
//   PauliThirds: rho -> (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z)
// UniformMix(p) acts identically to PauliThirds(3p/4).
enum class DepolarizingForm { PauliThirds, UniformMix };

std::string_view form_name(DepolarizingForm form);
std::optional<DepolarizingForm> form_from_name(std::string_view name);

struct NoiseModel {
    double p = 0.0;
    DepolarizingForm form = DepolarizingForm::PauliThirds;

    // Weight of each of the three Pauli conjugation terms.
    double pauli_weight() const;
};

void validate(const NoiseModel& model);

struct ChannelOp {
    int qubit;
};

using NoisyOp = std::variant<GateInstance, ChannelOp>;

struct NoisyProgram {
    int n_qubits = 0;
    NoiseModel model;
    std::vector<NoisyOp> ops;
};

// Inserts one depolarizing channel on every wire a gate touches, after the
// gate; barriers and measurements pass through without channels.
NoisyProgram noisy_transform(const Circuit& c, const NoiseModel& model);

template <typename Scalar>
void depolarize_in_place(DensityState<Scalar>& rho, int qubit, const NoiseModel& model);

// Exact mixed-state evolution of the program from |0...0><0...0|.
DensityState<double> evolve_density(const NoisyProgram& program);

// Monte-Carlo unraveling: per trajectory each channel applies I with
// probability 1-3w and X/Y/Z each with probability w, then the final state
// is measured once.  Trajectory t draws from rng stream (seed, t).
Histogram trajectory_sample(const NoisyProgram& program, std::uint64_t shots, std::uint64_t seed);

}  // namespace dqsim
