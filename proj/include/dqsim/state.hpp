#pragma once

#include <span>
#include <vector>

#include "dqsim/gates.hpp"

namespace dqsim {

namespace detail {

constexpr int kMaxStateQubits = 26;

inline void check_state_width(int n) {
    if (n < 0) throw DomainError("negative qubit count");
    if (n > kMaxStateQubits) throw LimitError("state size limit");
}

inline void check_wires(int n_qubits, GateKind kind, std::span<const int> wires) {
    if (is_single_qubit(kind) && wires.size() != 1) throw DomainError("arity mismatch");
    if (is_multi_controlled(kind) && wires.empty()) throw DomainError("arity mismatch");
    std::uint64_t seen = 0;
    for (int w : wires) {
        if (w < 0 || w >= n_qubits) throw DomainError("invalid wire set");
        const std::uint64_t bit = std::uint64_t{1} << w;
        if (seen & bit) throw DomainError("invalid wire set");
        seen |= bit;
    }
}

// Index bit carrying wire w in an n-qubit register (wire 0 is the most
// significant bit of the basis index).
inline Eigen::Index wire_bit(int n_qubits, int w) {
    return Eigen::Index{1} << (n_qubits - 1 - w);
}

inline Eigen::Index ones_mask(int n_qubits, std::span<const int> wires) {
    Eigen::Index mask = 0;
    for (int w : wires) mask |= wire_bit(n_qubits, w);
    return mask;
}

}  // namespace detail

// m <- U m where U is `kind` on `wires` of an n-qubit register and each
// column of m is a state.  X stays a pure row swap and Z/MCZ a pure negation,
// so circuits built from them compose without rounding.
template <class Scalar>
void apply_left(Eigen::Ref<MatrixXc<Scalar>> m, int n_qubits, GateKind kind,
                std::span<const int> wires, Scalar phi = Scalar{0}) {
    using C = ComplexT<Scalar>;
    if (!is_unitary_kind(kind)) throw DomainError("not a unitary gate");
    detail::check_wires(n_qubits, kind, wires);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (m.rows() != dim) throw DomainError("state dimension mismatch");

    if (kind == GateKind::I) return;

    if (is_multi_controlled(kind)) {
        const Eigen::Index mask = detail::ones_mask(n_qubits, wires);
        const C phase = kind == GateKind::MultiControlledZ ? C{-1} : std::polar(Scalar{1}, phi);
        for (Eigen::Index idx = 0; idx < dim; ++idx) {
            if ((idx & mask) == mask) m.row(idx) *= phase;
        }
        return;
    }

    const Eigen::Index bit = detail::wire_bit(n_qubits, wires[0]);
    switch (kind) {
        case GateKind::X:
            for (Eigen::Index idx = 0; idx < dim; ++idx) {
                if (!(idx & bit)) m.row(idx).swap(m.row(idx | bit));
            }
            return;
        case GateKind::Z:
            for (Eigen::Index idx = 0; idx < dim; ++idx) {
                if (idx & bit) m.row(idx) = -m.row(idx);
            }
            return;
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::PhaseShift: {
            const Scalar quarter = std::numbers::pi_v<Scalar> / 4;
            const Scalar angle = kind == GateKind::T     ? quarter
                                 : kind == GateKind::Tdg ? -quarter
                                                         : phi;
            const C phase = std::polar(Scalar{1}, angle);
            for (Eigen::Index idx = 0; idx < dim; ++idx) {
                if (idx & bit) m.row(idx) *= phase;
            }
            return;
        }
        default: {
            const MatrixXc<Scalar> u = gate_unitary<Scalar>(kind, 1, phi);
            VectorXc<Scalar> top(m.cols());
            for (Eigen::Index idx = 0; idx < dim; ++idx) {
                if (idx & bit) continue;
                top = m.row(idx).transpose();
                m.row(idx) = u(0, 0) * top.transpose() + u(0, 1) * m.row(idx | bit);
                m.row(idx | bit) = u(1, 0) * top.transpose() + u(1, 1) * m.row(idx | bit);
            }
            return;
        }
    }
}

// m <- m U^dagger, the column-side counterpart of apply_left.
template <class Scalar>
void apply_right_dagger(Eigen::Ref<MatrixXc<Scalar>> m, int n_qubits, GateKind kind,
                        std::span<const int> wires, Scalar phi = Scalar{0}) {
    using C = ComplexT<Scalar>;
    if (!is_unitary_kind(kind)) throw DomainError("not a unitary gate");
    detail::check_wires(n_qubits, kind, wires);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (m.cols() != dim) throw DomainError("state dimension mismatch");

    if (kind == GateKind::I) return;

    if (is_multi_controlled(kind)) {
        const Eigen::Index mask = detail::ones_mask(n_qubits, wires);
        const C phase = kind == GateKind::MultiControlledZ
                            ? C{-1}
                            : std::conj(std::polar(Scalar{1}, phi));
        for (Eigen::Index idx = 0; idx < dim; ++idx) {
            if ((idx & mask) == mask) m.col(idx) *= phase;
        }
        return;
    }

    const Eigen::Index bit = detail::wire_bit(n_qubits, wires[0]);
    switch (kind) {
        case GateKind::X:
            for (Eigen::Index idx = 0; idx < dim; ++idx) {
                if (!(idx & bit)) m.col(idx).swap(m.col(idx | bit));
            }
            return;
        case GateKind::Z:
            for (Eigen::Index idx = 0; idx < dim; ++idx) {
                if (idx & bit) m.col(idx) = -m.col(idx);
            }
            return;
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::PhaseShift: {
            const Scalar quarter = std::numbers::pi_v<Scalar> / 4;
            const Scalar angle = kind == GateKind::T     ? quarter
                                 : kind == GateKind::Tdg ? -quarter
                                                         : phi;
            const C phase = std::conj(std::polar(Scalar{1}, angle));
            for (Eigen::Index idx = 0; idx < dim; ++idx) {
                if (idx & bit) m.col(idx) *= phase;
            }
            return;
        }
        default: {
            const MatrixXc<Scalar> u = gate_unitary<Scalar>(kind, 1, phi);
            VectorXc<Scalar> left(m.rows());
            for (Eigen::Index idx = 0; idx < dim; ++idx) {
                if (idx & bit) continue;
                left = m.col(idx);
                m.col(idx) = std::conj(u(0, 0)) * left + std::conj(u(0, 1)) * m.col(idx | bit);
                m.col(idx | bit) =
                    std::conj(u(1, 0)) * left + std::conj(u(1, 1)) * m.col(idx | bit);
            }
            return;
        }
    }
}

// Pure state of an n-qubit register in the basis-index amplitude order.
template <class Scalar = double>
struct StateVector {
    int n_qubits = 0;
    VectorXc<Scalar> amplitudes;
};

template <class Scalar = double>
StateVector<Scalar> make_basis_state(int n_qubits, std::uint64_t index = 0) {
    detail::check_state_width(n_qubits);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (static_cast<Eigen::Index>(index) >= dim) throw DomainError("basis index out of range");
    StateVector<Scalar> state{n_qubits, VectorXc<Scalar>::Zero(dim)};
    state.amplitudes[static_cast<Eigen::Index>(index)] = ComplexT<Scalar>{1};
    return state;
}

template <class Scalar>
void apply_gate_in_place(StateVector<Scalar>& state, GateKind kind, std::span<const int> wires,
                         Scalar phi = Scalar{0}) {
    apply_left<Scalar>(state.amplitudes, state.n_qubits, kind, wires, phi);
}

template <class Scalar>
StateVector<Scalar> apply_gate(StateVector<Scalar> state, GateKind kind,
                               std::span<const int> wires, Scalar phi = Scalar{0}) {
    apply_gate_in_place(state, kind, wires, phi);
    return state;
}

template <class Scalar>
VectorXr<Scalar> probabilities(const StateVector<Scalar>& state) {
    return state.amplitudes.array().abs2();
}

template <class Scalar>
std::uint64_t argmax_index(const VectorXr<Scalar>& probs) {
    Eigen::Index at = 0;
    probs.maxCoeff(&at);
    return static_cast<std::uint64_t>(at);
}

}  // namespace dqsim
