#include "dqsim/algorithms.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "dqsim/common.hpp"
#include "dqsim/oracle.hpp"
#include "dqsim/state.hpp"

namespace dqsim {

int NodePlan::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

std::vector<int> NodePlan::offsets() const {
    std::vector<int> out(sizes.size());
    int acc = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out[i] = acc;
        acc += sizes[i];
    }
    return out;
}

NodePlan parse_node_plan(const std::string& text) {
    NodePlan plan;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(',', begin);
        if (end == std::string::npos) end = text.size();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
        if (ec != std::errc{} || ptr != text.data() + end)
            throw ParseError("node plan must be a comma-separated list of sizes");
        plan.sizes.push_back(value);
        begin = end + 1;
        if (end == text.size()) break;
    }
    return plan;
}

namespace {

void check_plan(const NodePlan& plan, int n) {
    for (int s : plan.sizes) {
        if (s < 1) throw DomainError("node sizes must be positive");
    }
    if (plan.total() != n) throw DomainError("node sizes do not sum to n");
}

void check_search_width(int n) {
    if (n < 2) throw DomainError("search requires at least 2 qubits");
}

TruthTable require_point_function(const TruthTable& f) {
    check_search_width(f.arity);
    if (!unique_target(f)) throw DomainError("requires unique target");
    return f;
}

}  // namespace

LongParams long_params(int n) {
    check_search_width(n);
    const double theta = std::asin(std::sqrt(1.0 / std::exp2(n)));
    // (pi/2 - theta)/(2 theta) is exactly integral for n=2 but rounds just
    // below it in doubles; the nudge keeps the floor at the true value.
    const int j = static_cast<int>(std::floor((std::numbers::pi / 2 - theta) / (2 * theta) + 1e-9));
    const double phi = 2 * std::asin(std::sin(std::numbers::pi / (4 * j + 6)) / std::sin(theta));
    return LongParams{n, theta, j, phi};
}

int grover_iterations(int n) {
    check_search_width(n);
    return static_cast<int>(std::floor(std::numbers::pi / 4 * std::sqrt(std::exp2(n))));
}

double grover_success_probability(int n) {
    const int k = grover_iterations(n);
    const double theta = std::asin(std::sqrt(1.0 / std::exp2(n)));
    const double a = std::sin((2 * k + 1) * theta);
    return a * a;
}

Circuit build_bv(const TruthTable& f) {
    if (!is_linear(f)) throw DomainError("not a hidden-string function");
    Circuit c(f.arity);
    c.h_layer();
    c.append(synth_phase_oracle(f), 0);
    c.h_layer();
    c.measure_all();
    return c;
}

Circuit build_grover(const TruthTable& f) {
    require_point_function(f);
    const int n = f.arity;
    Circuit c(n);
    c.h_layer();
    const Circuit oracle = synth_phase_oracle(f);
    const Circuit reflect = synth_zero_reflection(n);
    for (int k = 0; k < grover_iterations(n); ++k) {
        c.append(oracle, 0);
        c.h_layer();
        c.append(reflect, 0);
        c.h_layer();
    }
    c.measure_all();
    return c;
}

Circuit build_long(const TruthTable& f) {
    require_point_function(f);
    const int n = f.arity;
    const LongParams params = long_params(n);
    Circuit c(n);
    c.h_layer();
    const Circuit oracle = synth_rotation_oracle(f, params.phi);
    const Circuit rotate = synth_zero_rotation(n, params.phi);
    for (int k = 0; k < params.j + 1; ++k) {
        c.append(oracle, 0);
        c.h_layer();
        c.append(rotate, 0);
        c.h_layer();
    }
    c.measure_all();
    return c;
}

std::vector<Circuit> build_dbva(const TruthTable& f, const NodePlan& plan) {
    check_plan(plan, f.arity);
    if (!is_linear(f)) throw DomainError("not a hidden-string function");
    std::vector<Circuit> out;
    out.reserve(plan.sizes.size());
    const auto offsets = plan.offsets();
    for (std::size_t j = 0; j < plan.sizes.size(); ++j) {
        // Restrict every other block to zeros: for a hidden-string function
        // this keeps exactly the node's substring contribution.
        std::map<int, std::uint8_t> fixed;
        for (int pos = 0; pos < f.arity; ++pos) {
            if (pos < offsets[j] || pos >= offsets[j] + plan.sizes[j]) fixed[pos] = 0;
        }
        out.push_back(build_bv(restricted(f, fixed)));
    }
    return out;
}

DegaParts build_dega(const TruthTable& f, DegaLayout layout) {
    require_point_function(f);
    DegaParts parts;
    parts.n = f.arity;
    parts.layout = layout;
    const int count = dega_part_count(f.arity);
    for (int i = 0; i < count; ++i) {
        parts.spans.push_back(dega_part_span(f.arity, i, layout));
        const TruthTable sub = dega_subfunction(f, i, layout);
        parts.circuits.push_back(sub.arity == 2 ? build_grover(sub) : build_long(sub));
    }
    return parts;
}

RunResult run_circuit(const Circuit& c) {
    const auto state = simulate<double>(c);
    const auto probs = probabilities(state);
    const std::uint64_t best = argmax_index(probs);
    RunResult r;
    r.outcome = BitString::from_index(best, c.n_qubits);
    r.success_probability = probs[static_cast<Eigen::Index>(best)];
    return r;
}

RunResult run_bv(const TruthTable& f) { return run_circuit(build_bv(f)); }

RunResult run_dbva(const std::vector<Circuit>& circuits, const NodePlan& plan) {
    if (circuits.size() != plan.sizes.size()) throw DomainError("node sizes do not sum to n");
    RunResult r;
    r.outcome = BitString::zeros(plan.total());
    r.success_probability = 1.0;
    const auto offsets = plan.offsets();
    for (std::size_t j = 0; j < circuits.size(); ++j) {
        RunResult node = run_circuit(circuits[j]);
        for (int b = 0; b < plan.sizes[j]; ++b) r.outcome.set(offsets[j] + b, node.outcome[b]);
        r.success_probability *= node.success_probability;
        r.part_outcomes.push_back(std::move(node.outcome));
    }
    return r;
}

RunResult run_dega(const DegaParts& parts) {
    RunResult r;
    r.outcome = BitString::zeros(parts.n);
    r.success_probability = 1.0;
    for (std::size_t i = 0; i < parts.circuits.size(); ++i) {
        RunResult part = run_circuit(parts.circuits[i]);
        const auto [offset, width] = parts.spans[i];
        for (int b = 0; b < width; ++b) r.outcome.set(offset + b, part.outcome[b]);
        r.success_probability *= part.success_probability;
        r.part_outcomes.push_back(std::move(part.outcome));
    }
    return r;
}

}  // namespace dqsim
