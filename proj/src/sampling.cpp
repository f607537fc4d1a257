#include "qamp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qamp/rng.hpp"

namespace qamp {

std::vector<long long> sample_counts(const QuantumState& psi, long long n_shots,
                                     std::uint64_t seed) {
    if (n_shots < 1) throw std::invalid_argument("shot count must be >= 1");

    std::vector<double> cdf(psi.dim());
    long double acc = 0.0L;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        acc += static_cast<long double>(psi.amplitude(i)) * psi.amplitude(i);
        cdf[i] = static_cast<double>(acc);
    }
    cdf.back() = 1.0;

    Rng rng(seed);
    std::vector<long long> counts(psi.dim(), 0);
    for (long long s = 0; s < n_shots; ++s) {
        const double u = rng.next_unit();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        counts[static_cast<std::size_t>(it - cdf.begin())] += 1;
    }
    return counts;
}

std::vector<double> estimate_angles(std::span<const long long> counts, long long total_shots) {
    if (total_shots < 1) throw std::invalid_argument("total shot count must be >= 1");
    long long sum = 0;
    for (long long c : counts) {
        if (c < 0) throw std::invalid_argument("negative count");
        sum += c;
    }
    if (sum != total_shots) {
        throw std::invalid_argument("counts do not sum to the stated total");
    }
    std::vector<double> angles(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double p = static_cast<double>(counts[i]) / static_cast<double>(total_shots);
        angles[i] = std::asin(std::sqrt(std::min(p, 1.0)));
    }
    return angles;
}

std::uint64_t required_shots(unsigned num_qubits, double delta_e) {
    if (num_qubits < 1) throw std::invalid_argument("need at least one qubit");
    if (!(delta_e > 0.0)) throw std::invalid_argument("target error must be positive");
    const long double shots = std::ceil(std::ldexp(1.0L, static_cast<int>(num_qubits)) /
                                        (static_cast<long double>(delta_e) * delta_e));
    if (shots > static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
        throw std::overflow_error("required shot count exceeds 64-bit range");
    }
    return static_cast<std::uint64_t>(shots);
}

SampleReport run_sampling(const QuantumState& psi, long long n_shots, std::uint64_t seed) {
    SampleReport report;
    report.total_shots = n_shots;
    report.seed = seed;
    report.counts = sample_counts(psi, n_shots, seed);
    report.angle_estimates = estimate_angles(report.counts, n_shots);
    return report;
}

} // namespace qamp
