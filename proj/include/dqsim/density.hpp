#pragma once

#include "dqsim/state.hpp"

namespace dqsim {

namespace detail {
constexpr int kMaxDensityQubits = 8;

inline void check_density_width(int n) {
    if (n < 0) throw DomainError("negative qubit count");
    if (n > kMaxDensityQubits) throw LimitError("density-matrix limit");
}
}  // namespace detail

// Mixed state of an n-qubit register, rho[i][j] in basis-index order.
template <class Scalar = double>
struct DensityState {
    int n_qubits = 0;
    MatrixXc<Scalar> matrix;
};

template <class Scalar = double>
DensityState<Scalar> make_zero_density(int n_qubits) {
    detail::check_density_width(n_qubits);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    DensityState<Scalar> rho{n_qubits, MatrixXc<Scalar>::Zero(dim, dim)};
    rho.matrix(0, 0) = ComplexT<Scalar>{1};
    return rho;
}

template <class Scalar>
DensityState<Scalar> from_state(const StateVector<Scalar>& state) {
    detail::check_density_width(state.n_qubits);
    return {state.n_qubits, state.amplitudes * state.amplitudes.adjoint()};
}

// rho <- U rho U^dagger.
template <class Scalar>
void apply_gate_in_place(DensityState<Scalar>& rho, GateKind kind, std::span<const int> wires,
                         Scalar phi = Scalar{0}) {
    apply_left<Scalar>(rho.matrix, rho.n_qubits, kind, wires, phi);
    apply_right_dagger<Scalar>(rho.matrix, rho.n_qubits, kind, wires, phi);
}

template <class Scalar>
VectorXr<Scalar> probabilities(const DensityState<Scalar>& rho) {
    return rho.matrix.diagonal().real();
}

template <class Scalar>
Scalar trace_real(const DensityState<Scalar>& rho) {
    return rho.matrix.diagonal().real().sum();
}

template <class Scalar>
Scalar hermiticity_error(const DensityState<Scalar>& rho) {
    return (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace dqsim
