#include <doctest.h>

#include "dqsim/algorithms.hpp"
#include "dqsim/circuit_io.hpp"

#include <string>

using namespace dqsim;

namespace {

bool mentions(const std::exception& e, std::string_view needle) {
    return std::string_view{e.what()}.find(needle) != std::string_view::npos;
}

}  // namespace

TEST_CASE("serialization round trips") {
    Circuit c(3);
    c.h(0).x(2).add(GateKind::PhaseShift, {1}, 2.1268800471555034);
    c.add(GateKind::MultiControlledPhaseShift, {0, 1, 2}, -0.5);
    c.barrier_all().measure_all();
    const auto text = serialize(c);
    const auto back = deserialize(text);
    CHECK(back == c);
    CHECK(serialize(back) == text);
}

TEST_CASE("phases survive a round trip exactly") {
    Circuit c(1);
    c.add(GateKind::PhaseShift, {0}, 2.764763603060391);
    const auto back = deserialize(serialize(c));
    CHECK(back.gates[0].phi == 2.764763603060391);
}

TEST_CASE("comments and blank lines are ignored") {
    const auto c = deserialize("# built by hand\n\nqubits 2\nH 0  # first\n\n  X 1\n");
    CHECK(c.n_qubits == 2);
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0].kind == GateKind::H);
    CHECK(c.gates[1].kind == GateKind::X);
}

TEST_CASE("parse errors carry a position") {
    try {
        deserialize("qubits 2\nH 0\nFROB 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(mentions(e, "line 3"));
        CHECK(mentions(e, "FROB"));
    }
    try {
        deserialize("qubits 2\nX 5\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(mentions(e, "line 2"));
        CHECK(mentions(e, "invalid wire set"));
    }
    CHECK_THROWS_AS(deserialize(""), ParseError);
    CHECK_THROWS_AS(deserialize("circuit 2\n"), ParseError);
    CHECK_THROWS_AS(deserialize("qubits -1\n"), ParseError);
    CHECK_THROWS_AS(deserialize("qubits 2\nPS 0\n"), ParseError);        // missing phi
    CHECK_THROWS_AS(deserialize("qubits 2\nPS phi=x 0\n"), ParseError);  // bad phi
    CHECK_THROWS_AS(deserialize("qubits 2\nH\n"), ParseError);           // no wires
    CHECK_THROWS_AS(deserialize("qubits 2\nH 0 1\n"), ParseError);       // arity
    CHECK_THROWS_AS(deserialize("qubits 2\nMCZ 0 0\n"), ParseError);     // repeat wire
}

TEST_CASE("the stored two-qubit search circuit loads") {
    const auto c = load_circuit("fixtures/grover2_tau01.txt");
    CHECK(c.n_qubits == 2);
    CHECK(gate_count(c) == 14);
    CHECK(depth(c) == 9);
    // The file is the canonical text of the built circuit.
    CHECK(c == build_grover(point_function(BitString::parse("01"))));
    const auto r = run_circuit(c);
    CHECK(r.outcome.str() == "01");
    CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(load_circuit("fixtures/does_not_exist.txt"), ParseError);
}

TEST_CASE("truth-table text forms") {
    const auto f = parse_truth_table("arity 2\n0110\n");
    CHECK(f.arity == 2);
    CHECK(f.values == std::vector<std::uint8_t>{0, 1, 1, 0});
    CHECK(parse_truth_table(format_truth_table(f)) == f);

    const auto g = parse_truth_table("target 101\n");
    CHECK(g == point_function(BitString::parse("101")));
    const auto h = parse_truth_table("hidden 001011\n");
    CHECK(h == hidden_string_function(BitString::parse("001011")));

    // A long row may be split across lines.
    const auto k = parse_truth_table("arity 3\n0110\n0110\n");
    CHECK(k.values == hidden_string_function(BitString::parse("011")).values);
}

TEST_CASE("truth-table parse errors") {
    CHECK_THROWS_AS(parse_truth_table(""), ParseError);
    CHECK_THROWS_AS(parse_truth_table("arity 2\n011\n"), ParseError);
    CHECK_THROWS_AS(parse_truth_table("arity 2\n01102\n"), ParseError);
    CHECK_THROWS_AS(parse_truth_table("arity 2\n01a0\n"), ParseError);
    CHECK_THROWS_AS(parse_truth_table("arity -1\n"), ParseError);
    CHECK_THROWS_AS(parse_truth_table("arity 25\n"), ParseError);
    CHECK_THROWS_AS(parse_truth_table("target 01x\n"), ParseError);
    CHECK_THROWS_AS(parse_truth_table("rows 2\n0110\n"), ParseError);
}
