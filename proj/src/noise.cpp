#include "dqsim/noise.hpp"

#include <array>
#include <cmath>

#include "dqsim/common.hpp"
#include "dqsim/state.hpp"

namespace dqsim {

std::string_view form_name(DepolarizingForm form) {
    return form == DepolarizingForm::PauliThirds ? "pauli-thirds" : "uniform-mix";
}

std::optional<DepolarizingForm> form_from_name(std::string_view name) {
    if (name == "pauli-thirds") return DepolarizingForm::PauliThirds;
    if (name == "uniform-mix") return DepolarizingForm::UniformMix;
    return std::nullopt;
}

double NoiseModel::pauli_weight() const {
    return form == DepolarizingForm::PauliThirds ? p / 3.0 : p / 4.0;
}

void validate(const NoiseModel& model) {
    if (!(model.p >= 0.0 && model.p <= 1.0)) throw DomainError("noise probability out of range");
}

NoisyProgram noisy_transform(const Circuit& c, const NoiseModel& model) {
    validate(c);
    validate(model);
    NoisyProgram program{c.n_qubits, model, {}};
    for (const auto& g : c.gates) {
        program.ops.emplace_back(g);
        if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) continue;
        for (int w : g.wires) program.ops.emplace_back(ChannelOp{w});
    }
    return program;
}

template <typename Scalar>
void depolarize_in_place(DensityState<Scalar>& rho, int qubit, const NoiseModel& model) {
    if (qubit < 0 || qubit >= rho.n_qubits) throw DomainError("invalid wire");
    validate(model);
    const Scalar w = static_cast<Scalar>(model.pauli_weight());
    if (w == Scalar{0}) return;
    const std::array<int, 1> wires{qubit};
    MatrixXc<Scalar> acc = (Scalar{1} - 3 * w) * rho.matrix;
    for (GateKind pauli : {GateKind::X, GateKind::Y, GateKind::Z}) {
        MatrixXc<Scalar> term = rho.matrix;
        apply_left<Scalar>(term, rho.n_qubits, pauli, wires);
        apply_right_dagger<Scalar>(term, rho.n_qubits, pauli, wires);
        acc += w * term;
    }
    rho.matrix = std::move(acc);
}

template void depolarize_in_place<float>(DensityState<float>&, int, const NoiseModel&);
template void depolarize_in_place<double>(DensityState<double>&, int, const NoiseModel&);

DensityState<double> evolve_density(const NoisyProgram& program) {
    auto rho = make_zero_density<double>(program.n_qubits);
    for (const auto& op : program.ops) {
        if (const auto* gate = std::get_if<GateInstance>(&op)) {
            if (gate->kind == GateKind::Barrier || gate->kind == GateKind::Measure) continue;
            apply_gate_in_place(rho, gate->kind, gate->wires, gate->phi);
        } else {
            depolarize_in_place(rho, std::get<ChannelOp>(op).qubit, program.model);
        }
    }
    return rho;
}

Histogram trajectory_sample(const NoisyProgram& program, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw DomainError("empty sample request");
    validate(program.model);
    const double w = program.model.pauli_weight();
    Histogram hist;
    hist.shots = shots;
    hist.seed = seed;
    for (std::uint64_t t = 0; t < shots; ++t) {
        std::mt19937_64 gen(rng::stream_seed(seed, t));
        auto state = make_basis_state<double>(program.n_qubits);
        for (const auto& op : program.ops) {
            if (const auto* gate = std::get_if<GateInstance>(&op)) {
                if (gate->kind == GateKind::Barrier || gate->kind == GateKind::Measure) continue;
                apply_gate_in_place(state, gate->kind, gate->wires, gate->phi);
            } else {
                const int q = std::get<ChannelOp>(op).qubit;
                const double u = rng::uniform_unit(gen);
                if (u >= 3 * w) continue;
                const GateKind pauli = u < w             ? GateKind::X
                                       : u < 2 * w       ? GateKind::Y
                                                         : GateKind::Z;
                const std::array<int, 1> wires{q};
                apply_gate_in_place(state, pauli, wires);
            }
        }
        const auto probs = probabilities(state);
        const double u = rng::uniform_unit(gen);
        double cumulative = 0.0;
        std::uint64_t outcome = static_cast<std::uint64_t>(probs.size()) - 1;
        for (Eigen::Index i = 0; i < probs.size(); ++i) {
            cumulative += probs[i];
            if (u < cumulative) {
                outcome = static_cast<std::uint64_t>(i);
                break;
            }
        }
        ++hist.counts[BitString::from_index(outcome, program.n_qubits)];
    }
    return hist;
}

}  // namespace dqsim
