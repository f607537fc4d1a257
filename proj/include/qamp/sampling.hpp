#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qamp/statevector.hpp"

namespace qamp {

// Outcome of one shot-sampling experiment: counts per basis index and the
// angle estimates arcsin(sqrt(count / total)) derived from them.
struct SampleReport {
    long long total_shots = 0;
    std::vector<long long> counts;
    std::vector<double> angle_estimates;
    std::uint64_t seed = 0;
};

// Draws n_shots outcomes from the Born distribution p_i = amplitude_i^2 by
// inverse-CDF lookup on the cumulative probabilities (strict upper-bound
// search, one 53-bit uniform per shot). Deterministic per seed.
std::vector<long long> sample_counts(const QuantumState& psi, long long n_shots,
                                     std::uint64_t seed);

// Per-index angle estimates arcsin(sqrt(N_i / N)). Requires counts summing
// to total_shots > 0.
std::vector<double> estimate_angles(std::span<const long long> counts, long long total_shots);

// Shot budget keeping the per-angle error at or below delta_e on average:
// ceil(2^n / delta_e^2).
std::uint64_t required_shots(unsigned num_qubits, double delta_e);

SampleReport run_sampling(const QuantumState& psi, long long n_shots, std::uint64_t seed);

} // namespace qamp
