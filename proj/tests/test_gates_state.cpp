#include <doctest.h>

#include "dqsim/density.hpp"
#include "dqsim/gates.hpp"
#include "dqsim/sampling.hpp"
#include "dqsim/state.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace dqsim;
using C = std::complex<double>;

namespace {

StateVector<double> random_state(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd;
    StateVector<double> psi{n, VectorXc<double>(Eigen::Index{1} << n)};
    for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) psi.amplitudes[i] = C{nd(gen), nd(gen)};
    psi.amplitudes.normalize();
    return psi;
}

}  // namespace

TEST_CASE("gate names round trip") {
    for (auto kind : {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::T,
                      GateKind::Tdg, GateKind::PhaseShift, GateKind::MultiControlledZ,
                      GateKind::MultiControlledPhaseShift, GateKind::Measure, GateKind::Barrier}) {
        CHECK(kind_from_name(kind_name(kind)) == kind);
    }
    CHECK_FALSE(kind_from_name("CNOT").has_value());
}

TEST_CASE("single-qubit unitaries have the right entries") {
    const double inv = 1.0 / std::numbers::sqrt2;
    const auto h = gate_unitary(GateKind::H, 1);
    CHECK(h(0, 0).real() == doctest::Approx(inv).epsilon(1e-15));
    CHECK(h(1, 1).real() == doctest::Approx(-inv).epsilon(1e-15));
    const auto x = gate_unitary(GateKind::X, 1);
    CHECK(x(0, 1) == C{1});
    CHECK(x(0, 0) == C{0});
    const auto y = gate_unitary(GateKind::Y, 1);
    CHECK(y(0, 1) == C{0, -1});
    CHECK(y(1, 0) == C{0, 1});
    const auto z = gate_unitary(GateKind::Z, 1);
    CHECK(z(1, 1) == C{-1});
    const auto t = gate_unitary(GateKind::T, 1);
    const auto tdg = gate_unitary(GateKind::Tdg, 1);
    CHECK((t * tdg - MatrixXc<double>::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    const auto s = gate_unitary(GateKind::PhaseShift, 1, std::numbers::pi / 2);
    CHECK((t * t - s).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("controlled phase gates are diagonal with one special entry") {
    const auto mcz = gate_unitary(GateKind::MultiControlledZ, 3);
    CHECK(mcz.rows() == 8);
    for (Eigen::Index i = 0; i < 8; ++i) {
        CHECK(mcz(i, i) == (i == 7 ? C{-1} : C{1}));
    }
    const auto mcp = gate_unitary(GateKind::MultiControlledPhaseShift, 2, std::numbers::pi);
    CHECK(std::abs(mcp(3, 3) - C{-1}) < 1e-15);
    CHECK(mcp(2, 2) == C{1});
}

TEST_CASE("unitary construction rejects bad arguments") {
    CHECK_THROWS_AS(gate_unitary(GateKind::H, 2), DomainError);
    CHECK_THROWS_AS(gate_unitary(GateKind::MultiControlledZ, 0), DomainError);
    CHECK_THROWS_AS(gate_unitary(GateKind::Measure, 1), DomainError);
    CHECK_THROWS_AS(gate_unitary(GateKind::Barrier, 1), DomainError);
    CHECK_THROWS_AS(gate_unitary(GateKind::PhaseShift, 1, std::nan("")), DomainError);
    CHECK_THROWS_AS(gate_unitary(GateKind::MultiControlledZ, 11), LimitError);
}

TEST_CASE("every unitary kind yields a unitary matrix") {
    for (auto kind : {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::T,
                      GateKind::Tdg}) {
        const auto u = gate_unitary(kind, 1);
        CHECK((u * u.adjoint() - MatrixXc<double>::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    }
    const auto u = gate_unitary(GateKind::MultiControlledPhaseShift, 2, 1.234);
    CHECK((u * u.adjoint() - MatrixXc<double>::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("wire zero is the most significant index bit") {
    auto psi = make_basis_state(2, 0);
    const int w0[] = {0};
    apply_gate_in_place(psi, GateKind::X, w0);
    CHECK(psi.amplitudes[2] == C{1});  // |10>
    const int w1[] = {1};
    apply_gate_in_place(psi, GateKind::X, w1);
    CHECK(psi.amplitudes[3] == C{1});  // |11>
}

TEST_CASE("basis states and probabilities") {
    const auto psi = make_basis_state(3, 5);
    CHECK(psi.amplitudes.size() == 8);
    CHECK(psi.amplitudes[5] == C{1});
    const auto p = probabilities(psi);
    CHECK(p[5] == 1.0);
    CHECK(p.sum() == 1.0);
    CHECK(argmax_index(p) == 5);
    CHECK_THROWS_AS(make_basis_state(27, 0), LimitError);
    CHECK_THROWS_AS(make_basis_state(2, 4), DomainError);
}

TEST_CASE("hadamard creates an even superposition") {
    auto psi = make_basis_state(1, 0);
    const int w[] = {0};
    apply_gate_in_place(psi, GateKind::H, w);
    const double inv = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(psi.amplitudes[0] - C{inv}) < 1e-15);
    CHECK(std::abs(psi.amplitudes[1] - C{inv}) < 1e-15);
    apply_gate_in_place(psi, GateKind::H, w);
    CHECK(std::abs(psi.amplitudes[0] - C{1}) < 1e-15);
    CHECK(std::abs(psi.amplitudes[1]) < 1e-15);
}

TEST_CASE("bit flips permute amplitudes without arithmetic") {
    auto psi = random_state(4, 7);
    const auto before = psi.amplitudes;
    const int w[] = {2};
    apply_gate_in_place(psi, GateKind::X, w);
    apply_gate_in_place(psi, GateKind::X, w);
    CHECK((psi.amplitudes.array() == before.array()).all());
}

TEST_CASE("phase flips negate exactly") {
    auto psi = random_state(3, 9);
    const auto before = psi.amplitudes;
    const int all[] = {0, 1, 2};
    apply_gate_in_place(psi, GateKind::MultiControlledZ, all);
    for (Eigen::Index i = 0; i < 8; ++i) {
        CHECK(psi.amplitudes[i] == (i == 7 ? -before[i] : before[i]));
    }
}

TEST_CASE("gate application matches the dense unitary") {
    std::mt19937_64 gen(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 2);
        auto psi = random_state(n, gen());
        const GateKind kinds[] = {GateKind::X,   GateKind::Y,  GateKind::Z,
                                  GateKind::H,   GateKind::T,  GateKind::Tdg,
                                  GateKind::PhaseShift};
        const auto kind = kinds[gen() % 7];
        const int wire = static_cast<int>(gen() % n);
        const double phi = 0.3 + 0.1 * static_cast<double>(trial);

        // Dense reference: embed the 2x2 unitary at the chosen wire.
        const auto u = gate_unitary(kind, 1, phi);
        const Eigen::Index dim = Eigen::Index{1} << n;
        MatrixXc<double> full = MatrixXc<double>::Zero(dim, dim);
        const Eigen::Index bit = Eigen::Index{1} << (n - 1 - wire);
        for (Eigen::Index col = 0; col < dim; ++col) {
            const Eigen::Index base = col & ~bit;
            const int b = (col & bit) ? 1 : 0;
            full(base, col) += u(0, b);
            full(base | bit, col) += u(1, b);
        }
        const VectorXc<double> expect = full * psi.amplitudes;
        const int w[] = {wire};
        apply_gate_in_place(psi, kind, w, phi);
        CHECK((psi.amplitudes - expect).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("invalid wire sets are rejected") {
    auto psi = make_basis_state(2, 0);
    const int dup[] = {1, 1};
    CHECK_THROWS_AS(apply_gate_in_place(psi, GateKind::MultiControlledZ, dup), DomainError);
    const int out[] = {2};
    CHECK_THROWS_AS(apply_gate_in_place(psi, GateKind::X, out), DomainError);
    const int pair[] = {0, 1};
    CHECK_THROWS_AS(apply_gate_in_place(psi, GateKind::H, pair), DomainError);
    CHECK_THROWS_AS(apply_gate_in_place(psi, GateKind::Measure, pair), DomainError);
}

TEST_CASE("density matrices track pure states") {
    auto psi = make_basis_state(2, 0);
    auto rho = from_state(psi);
    const int w0[] = {0};
    const int both[] = {0, 1};
    apply_gate_in_place(psi, GateKind::H, w0);
    apply_gate_in_place(rho, GateKind::H, w0);
    apply_gate_in_place(psi, GateKind::MultiControlledZ, both);
    apply_gate_in_place(rho, GateKind::MultiControlledZ, both);
    const auto expect = from_state(psi);
    CHECK((rho.matrix - expect.matrix).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(trace_real(rho) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hermiticity_error(rho) < 1e-14);
    CHECK((probabilities(rho) - probabilities(psi)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK_THROWS_AS(make_zero_density(9), LimitError);
}

TEST_CASE("sampling is deterministic in the seed") {
    VectorXr<double> dist(4);
    dist << 0.1, 0.2, 0.3, 0.4;
    const auto h1 = sample(dist, 2, 1000, 42);
    const auto h2 = sample(dist, 2, 1000, 42);
    CHECK(h1.counts == h2.counts);
    CHECK(h1.shots == 1000);
    std::uint64_t total = 0;
    for (const auto& [outcome, count] : h1.counts) {
        CHECK(outcome.size() == 2);
        total += count;
    }
    CHECK(total == 1000);
    CHECK(h1.frequency(BitString::parse("11")) == doctest::Approx(0.4).epsilon(0.2));
    CHECK_THROWS_AS(sample(dist, 2, 0, 1), DomainError);
}

TEST_CASE("sampling a deterministic distribution") {
    VectorXr<double> dist(4);
    dist << 0.0, 1.0, 0.0, 0.0;
    const auto h = sample(dist, 2, 50, 3);
    REQUIRE(h.counts.size() == 1);
    CHECK(h.counts.at(BitString::parse("01")) == 50);
    CHECK(h.frequency(BitString::parse("01")) == 1.0);
    CHECK(h.frequency(BitString::parse("10")) == 0.0);
}

TEST_CASE("seed streams decorrelate") {
    CHECK(rng::stream_seed(42, 0) != rng::stream_seed(42, 1));
    CHECK(rng::stream_seed(42, 0) != rng::stream_seed(43, 0));
    std::mt19937_64 gen(1);
    const double u = rng::uniform_unit(gen);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
