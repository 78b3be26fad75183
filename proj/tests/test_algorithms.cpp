#include <doctest.h>

#include "dqsim/algorithms.hpp"

#include <cmath>
#include <numbers>

using namespace dqsim;

namespace {

TruthTable hidden(std::string_view s) { return hidden_string_function(BitString::parse(s)); }
TruthTable point(std::string_view t) { return point_function(BitString::parse(t)); }

}  // namespace

TEST_CASE("node plans parse and validate") {
    const auto plan = parse_node_plan("3,3");
    CHECK(plan.sizes == std::vector<int>{3, 3});
    CHECK(plan.total() == 6);
    CHECK(plan.offsets() == std::vector<int>{0, 3});
    CHECK(parse_node_plan("6").offsets() == std::vector<int>{0});
    CHECK_THROWS_AS(parse_node_plan("3,,3"), ParseError);
    CHECK_THROWS_AS(parse_node_plan("3;3"), ParseError);
    CHECK_THROWS_AS(parse_node_plan(""), ParseError);
    CHECK_THROWS_WITH_AS(build_dbva(hidden("0010"), parse_node_plan("3,3")),
                         "node sizes do not sum to n", DomainError);
    CHECK_THROWS_WITH_AS(build_dbva(hidden("001"), NodePlan{{3, 0}}),
                         "node sizes must be positive", DomainError);
}

TEST_CASE("iteration counts grow with the register") {
    CHECK(grover_iterations(2) == 1);
    CHECK(grover_iterations(3) == 2);
    CHECK(grover_iterations(4) == 3);
    CHECK(grover_iterations(5) == 4);
    CHECK(grover_iterations(10) == 25);
    CHECK_THROWS_WITH_AS(grover_iterations(1), "search requires at least 2 qubits", DomainError);
}

TEST_CASE("certain-search parameters") {
    const auto p2 = long_params(2);
    CHECK(p2.j == 1);  // the ratio is exactly 1 here; rounding must not lose it
    CHECK(p2.theta == doctest::Approx(std::asin(0.5)).epsilon(1e-15));
    const auto p3 = long_params(3);
    CHECK(p3.j == 1);
    CHECK(p3.phi == doctest::Approx(2.1268800471555034).epsilon(1e-13));
    const auto p4 = long_params(4);
    CHECK(p4.j == 2);
    CHECK(p4.phi == doctest::Approx(2.195057699090115).epsilon(1e-13));
    const auto p5 = long_params(5);
    CHECK(p5.j == 3);
    CHECK(p5.phi == doctest::Approx(2.764763603060391).epsilon(1e-13));
    // phi is a valid rotation angle whenever the arcsine argument stays <= 1.
    for (int n = 2; n <= 12; ++n) {
        const auto p = long_params(n);
        CHECK(std::isfinite(p.phi));
        CHECK(p.phi > 0.0);
        CHECK(p.phi <= std::numbers::pi + 1e-12);
    }
}

TEST_CASE("closed-form search success probability") {
    CHECK(grover_success_probability(2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(grover_success_probability(4) == doctest::Approx(0.9613189697265625).epsilon(1e-12));
}

TEST_CASE("parity-recovery circuit counts") {
    const auto c = build_bv(hidden("001011"));
    CHECK(c.n_qubits == 6);
    CHECK(gate_count(c) == 236);
    CHECK(depth(c) == 96);
    const auto o = optimize_x_cancellation(c);
    CHECK(gate_count(o) == 130);
    CHECK(depth(o) == 66);
    CHECK_THROWS_WITH_AS(build_bv(point("11")), "not a hidden-string function", DomainError);
}

TEST_CASE("parity recovery is certain") {
    for (std::string_view s : {"001011", "0", "1", "111", "0000"}) {
        const auto r = run_bv(hidden(s));
        CHECK(r.outcome.str() == s);
        CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("distributed parity recovery splits the work") {
    const auto f = hidden("001011");
    const auto plan = parse_node_plan("3,3");
    const auto nodes = build_dbva(f, plan);
    REQUIRE(nodes.size() == 2);
    CHECK(nodes[0].n_qubits == 3);
    CHECK(nodes[1].n_qubits == 3);
    CHECK(gate_count(nodes[0]) + gate_count(nodes[1]) == 40);
    CHECK(std::max(depth(nodes[0]), depth(nodes[1])) == 14);
    CHECK(nodes[0] == build_bv(hidden("001")));
    CHECK(nodes[1] == build_bv(hidden("011")));

    const auto r = run_dbva(nodes, plan);
    CHECK(r.outcome.str() == "001011");
    CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(r.part_outcomes.size() == 2);
    CHECK(r.part_outcomes[0].str() == "001");
    CHECK(r.part_outcomes[1].str() == "011");

    // The one-node plan reduces to the single-register build.
    CHECK(build_dbva(f, parse_node_plan("6"))[0] == build_bv(f));
}

TEST_CASE("distributed parity recovery is exact on every split") {
    const auto f = hidden("1011");
    for (const auto& plan : {NodePlan{{1, 3}}, NodePlan{{2, 2}}, NodePlan{{1, 1, 2}},
                             NodePlan{{1, 1, 1, 1}}}) {
        const auto r = run_dbva(build_dbva(f, plan), plan);
        CHECK(r.outcome.str() == "1011");
        CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("search circuit counts") {
    CHECK(gate_count(build_grover(point("01"))) == 14);
    CHECK(depth(build_grover(point("01"))) == 9);
    CHECK(gate_count(build_grover(point("1001"))) == 70);
    CHECK(depth(build_grover(point("1001"))) == 25);
    CHECK(gate_count(build_grover(point("01001"))) == 117);
    CHECK(depth(build_grover(point("01001"))) == 33);
    CHECK_THROWS_WITH_AS(build_grover(hidden("11")), "requires unique target", DomainError);
    CHECK_THROWS_AS(build_grover(point("1")), DomainError);
}

TEST_CASE("certain-search circuit counts") {
    CHECK(gate_count(build_long(point("101"))) == 35);
    CHECK(depth(build_long(point("101"))) == 17);
    CHECK(gate_count(build_long(point("1001"))) == 70);
    CHECK(depth(build_long(point("1001"))) == 25);
    CHECK(gate_count(build_long(point("01001"))) == 117);
    CHECK(depth(build_long(point("01001"))) == 33);
}

TEST_CASE("the certain search finds every target with certainty") {
    for (std::string_view t : {"11", "00", "101", "010", "1001"}) {
        const auto r = run_circuit(build_long(point(t)));
        CHECK(r.outcome.str() == t);
        CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("plain search on two qubits is also certain") {
    const auto r = run_circuit(build_grover(point("01")));
    CHECK(r.outcome.str() == "01");
    CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("distributed search splits into two- and three-qubit parts") {
    const auto d4 = build_dega(point("1001"));
    REQUIRE(d4.circuits.size() == 2);
    CHECK(d4.spans == std::vector<std::pair<int, int>>{{0, 2}, {2, 2}});
    CHECK(gate_count(d4.circuits[0]) + gate_count(d4.circuits[1]) == 28);
    CHECK(std::max(depth(d4.circuits[0]), depth(d4.circuits[1])) == 9);

    const auto d5 = build_dega(point("01001"));
    CHECK(d5.spans == std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});
    CHECK(gate_count(d5.circuits[0]) + gate_count(d5.circuits[1]) == 53);
    CHECK(std::max(depth(d5.circuits[0]), depth(d5.circuits[1])) == 17);
    CHECK(d5.circuits[0] == build_grover(point("01")));
    CHECK(d5.circuits[1] == build_long(point("001")));

    const auto l5 = build_dega(point("01001"), DegaLayout::LeadingWideBlock);
    CHECK(l5.spans == std::vector<std::pair<int, int>>{{0, 3}, {3, 2}});
    CHECK(gate_count(l5.circuits[0]) + gate_count(l5.circuits[1]) == 53);
    CHECK(std::max(depth(l5.circuits[0]), depth(l5.circuits[1])) == 17);
    CHECK(l5.circuits[0] == build_long(point("010")));

    const auto d2 = build_dega(point("01"));
    REQUIRE(d2.circuits.size() == 1);
    CHECK(d2.circuits[0] == build_grover(point("01")));
    const auto d3 = build_dega(point("101"));
    REQUIRE(d3.circuits.size() == 1);
    CHECK(d3.circuits[0] == build_long(point("101")));
    CHECK(gate_count(d3.circuits[0]) == 35);
}

TEST_CASE("distributed search recovers the target with certainty") {
    for (std::string_view t : {"01", "110", "1001", "01001", "110110"}) {
        for (auto layout : {DegaLayout::TrailingWideBlock, DegaLayout::LeadingWideBlock}) {
            const auto parts = build_dega(point(t), layout);
            const auto r = run_dega(parts);
            CHECK(r.outcome.str() == t);
            CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("optimization keeps distributed runs exact") {
    const auto f = hidden("101101");
    const auto plan = parse_node_plan("2,2,2");
    auto nodes = build_dbva(f, plan);
    for (auto& node : nodes) node = optimize_x_cancellation(node);
    const auto r = run_dbva(nodes, plan);
    CHECK(r.outcome.str() == "101101");
    CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-9));

    auto parts = build_dega(point("010011"));
    for (auto& c : parts.circuits) c = optimize_x_cancellation(c);
    const auto q = run_dega(parts);
    CHECK(q.outcome.str() == "010011");
    CHECK(q.success_probability == doctest::Approx(1.0).epsilon(1e-9));
}
