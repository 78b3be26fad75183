#pragma once

#include <vector>

#include "dqsim/bits.hpp"
#include "dqsim/boolfn.hpp"
#include "dqsim/circuit.hpp"

namespace dqsim {

// Contiguous split of an n-bit register into per-node blocks, in order.
struct NodePlan {
    std::vector<int> sizes;

    int total() const;
    std::vector<int> offsets() const;
};

NodePlan parse_node_plan(const std::string& comma_separated);

// Amplitude-amplification parameters for the certain-success search variant:
// theta = arcsin(2^{-n/2}), J = floor((pi/2 - theta)/(2 theta)),
// phi = 2 arcsin(sin(pi/(4J+6)) / sin(theta)); the circuit runs J+1 rounds.
struct LongParams {
    int n;
    double theta;
    int j;
    double phi;
};

LongParams long_params(int n);

int grover_iterations(int n);
double grover_success_probability(int n);

// Single-register builders.  Each returns an H layer, the oracle/diffusion
// rounds, and a terminal full-register measurement.
Circuit build_bv(const TruthTable& f);
Circuit build_grover(const TruthTable& f);
Circuit build_long(const TruthTable& f);

// Distributed variants: independent circuits on disjoint wire blocks whose
// measured substrings concatenate to the global answer.
std::vector<Circuit> build_dbva(const TruthTable& f, const NodePlan& plan);

struct DegaParts {
    int n;
    DegaLayout layout;
    std::vector<std::pair<int, int>> spans;  // (offset, width) per part
    std::vector<Circuit> circuits;
};

DegaParts build_dega(const TruthTable& f, DegaLayout layout = DegaLayout::TrailingWideBlock);

struct RunResult {
    BitString outcome;
    double success_probability = 0.0;
    std::vector<BitString> part_outcomes;
};

RunResult run_circuit(const Circuit& c);
RunResult run_bv(const TruthTable& f);
RunResult run_dbva(const std::vector<Circuit>& circuits, const NodePlan& plan);
RunResult run_dega(const DegaParts& parts);

}  // namespace dqsim
