#include "dqsim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dqsim {

double Histogram::frequency(const BitString& outcome) const {
    if (shots == 0) return 0.0;
    const auto it = counts.find(outcome);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
}

Histogram sample(const VectorXr<double>& probs, int n_qubits, std::uint64_t shots,
                 std::uint64_t seed) {
    if (shots == 0) throw DomainError("empty sample request");
    if (probs.size() != (Eigen::Index{1} << n_qubits)) throw DomainError("state dimension mismatch");
    if (probs.minCoeff() < -1e-9) throw DomainError("negative probability");
    if (std::abs(probs.sum() - 1.0) > 1e-9) throw DomainError("probabilities do not sum to 1");

    std::vector<double> cumulative(static_cast<std::size_t>(probs.size()));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        acc += std::max(probs[i], 0.0);
        cumulative[static_cast<std::size_t>(i)] = acc;
    }
    cumulative.back() = 1.0;  // guard the top bin against rounding

    std::mt19937_64 gen(rng::stream_seed(seed, 0));
    Histogram hist{{}, shots, seed};
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng::uniform_unit(gen);
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto idx = static_cast<std::uint64_t>(it - cumulative.begin());
        ++hist.counts[BitString::from_index(idx, n_qubits)];
    }
    return hist;
}

}  // namespace dqsim
