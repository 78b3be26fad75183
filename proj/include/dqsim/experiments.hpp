#pragma once

#include <string>
#include <vector>

#include "dqsim/algorithms.hpp"
#include "dqsim/noise.hpp"

namespace dqsim {

// A shipped benchmark circuit (possibly split into independent parts on
// disjoint contiguous wire blocks) together with the outcome it should yield.
struct Fixture {
    std::string id;
    BitString target;
    std::vector<std::pair<int, int>> spans;  // (offset, width) per part
    std::vector<Circuit> parts;

    int n_qubits() const;
};

std::vector<std::string> fixture_ids();
Fixture make_fixture(const std::string& id);

// Noiseless run: simulate each part, concatenate the most likely outcomes.
RunResult run_fixture(const Fixture& fx);

// Exact probability of the fixture target under the noise model: product of
// per-part density-matrix diagonals at the target's slice.
double noisy_target_probability(const Fixture& fx, const NoiseModel& model);

// Full outcome distribution under noise (tensor product over parts).
VectorXr<double> noisy_distribution(const Fixture& fx, const NoiseModel& model);

struct DepthTableRow {
    int n = 0;
    std::string algorithm;
    int gates = 0;
    int depth = 0;
    int formula_depth = 0;
    bool matches = false;
};

std::vector<DepthTableRow> depth_table(int n_min, int n_max,
                                       const std::vector<std::string>& algorithms);
std::string depth_table_csv(const std::vector<DepthTableRow>& rows);

struct NoiseSweepRow {
    double p = 0.0;
    std::string circuit_id;
    std::string parameterization;
    double p_target = 0.0;
    double frequency = 0.0;  // sampled; meaningful only when shots > 0
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

// One row per (fixture, p), in the given orders; shots = 0 skips sampling.
std::vector<NoiseSweepRow> noise_sweep(const std::vector<std::string>& ids,
                                       const std::vector<double>& p_grid, DepolarizingForm form,
                                       std::uint64_t shots, std::uint64_t seed);
std::string noise_sweep_csv(const std::vector<NoiseSweepRow>& rows);
std::string noise_sweep_chart_svg(const std::vector<NoiseSweepRow>& rows);

struct ReproduceResult {
    std::string table_id;
    std::string csv;
    std::string sidecar_json;
    bool pass = false;
};

std::vector<std::string> reproduce_ids();
ReproduceResult reproduce(const std::string& table_id);

}  // namespace dqsim
