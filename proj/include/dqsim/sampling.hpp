#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "dqsim/bits.hpp"
#include "dqsim/state.hpp"

namespace dqsim {

// Measurement counts of a repeated full-register readout.
struct Histogram {
    std::map<BitString, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    double frequency(const BitString& outcome) const;
};

namespace rng {

// SplitMix64 step; used to spread one user seed into independent streams.
constexpr std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed ^ mix(stream));
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace rng

// Multinomial draw from a probability vector over basis indices.  The vector
// must sum to 1 within 1e-9.  Deterministic for a given (probs, shots, seed).
Histogram sample(const VectorXr<double>& probs, int n_qubits, std::uint64_t shots,
                 std::uint64_t seed);

template <class Scalar>
Histogram sample(const StateVector<Scalar>& state, std::uint64_t shots, std::uint64_t seed) {
    const VectorXr<Scalar> p = probabilities(state);
    return sample(p.template cast<double>(), state.n_qubits, shots, seed);
}

}  // namespace dqsim
