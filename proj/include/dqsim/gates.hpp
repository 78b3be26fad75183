#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>

#include "dqsim/common.hpp"
#include "dqsim/linalg.hpp"

namespace dqsim {

enum class GateKind : std::uint8_t {
    I,
    X,
    Y,
    Z,
    H,
    T,
    Tdg,
    PhaseShift,
    MultiControlledZ,
    MultiControlledPhaseShift,
    Measure,
    Barrier,
};

constexpr bool is_single_qubit(GateKind k) {
    switch (k) {
        case GateKind::I:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::PhaseShift:
            return true;
        default:
            return false;
    }
}

constexpr bool is_multi_controlled(GateKind k) {
    return k == GateKind::MultiControlledZ || k == GateKind::MultiControlledPhaseShift;
}

constexpr bool is_unitary_kind(GateKind k) {
    return k != GateKind::Measure && k != GateKind::Barrier;
}

constexpr bool has_phase_param(GateKind k) {
    return k == GateKind::PhaseShift || k == GateKind::MultiControlledPhaseShift;
}

// Serialization token, e.g. "MCZ"; inverse lookup returns nullopt for unknown
// tokens.
std::string_view kind_name(GateKind k);
std::optional<GateKind> kind_from_name(std::string_view name);

namespace detail {
constexpr int kMaxDenseQubits = 10;  // dense matrices stop at 2^10 x 2^10

inline void check_dense_arity(int arity) {
    if (arity > kMaxDenseQubits) throw LimitError("dimension limit exceeded");
}
}  // namespace detail

// Dense matrix of a unitary gate kind on `arity` qubits.  Multi-controlled
// kinds are diagonal: only the all-ones basis state acquires a phase (-1 for
// MultiControlledZ, e^{i phi} for MultiControlledPhaseShift); with arity 1
// they reduce to Z and PhaseShift.
template <class Scalar = double>
MatrixXc<Scalar> gate_unitary(GateKind kind, int arity, Scalar phi = Scalar{0}) {
    using C = ComplexT<Scalar>;
    if (!is_unitary_kind(kind)) throw DomainError("not a unitary gate");
    if (!std::isfinite(static_cast<double>(phi))) throw DomainError("phase must be finite");
    if (is_single_qubit(kind) && arity != 1) throw DomainError("arity mismatch");
    if (is_multi_controlled(kind) && arity < 1) throw DomainError("arity mismatch");
    detail::check_dense_arity(arity);

    MatrixXc<Scalar> u;
    switch (kind) {
        case GateKind::I:
            u = MatrixXc<Scalar>::Identity(2, 2);
            break;
        case GateKind::X:
            u.setZero(2, 2);
            u(0, 1) = u(1, 0) = C{1};
            break;
        case GateKind::Y:
            u.setZero(2, 2);
            u(0, 1) = C{0, -1};
            u(1, 0) = C{0, 1};
            break;
        case GateKind::Z:
            u = MatrixXc<Scalar>::Identity(2, 2);
            u(1, 1) = C{-1};
            break;
        case GateKind::H: {
            const Scalar r = Scalar{1} / std::sqrt(Scalar{2});
            u.resize(2, 2);
            u(0, 0) = u(0, 1) = u(1, 0) = C{r};
            u(1, 1) = C{-r};
            break;
        }
        case GateKind::T:
        case GateKind::Tdg: {
            const Scalar quarter = std::numbers::pi_v<Scalar> / 4;
            const Scalar angle = kind == GateKind::T ? quarter : -quarter;
            u = MatrixXc<Scalar>::Identity(2, 2);
            u(1, 1) = std::polar(Scalar{1}, angle);
            break;
        }
        case GateKind::PhaseShift:
            u = MatrixXc<Scalar>::Identity(2, 2);
            u(1, 1) = std::polar(Scalar{1}, phi);
            break;
        case GateKind::MultiControlledZ:
        case GateKind::MultiControlledPhaseShift: {
            const Eigen::Index dim = Eigen::Index{1} << arity;
            u = MatrixXc<Scalar>::Identity(dim, dim);
            u(dim - 1, dim - 1) = kind == GateKind::MultiControlledZ
                                      ? C{-1}
                                      : std::polar(Scalar{1}, phi);
            break;
        }
        default:
            throw DomainError("not a unitary gate");
    }
    return u;
}

}  // namespace dqsim
