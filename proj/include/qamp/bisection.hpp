#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qamp/comparator.hpp"
#include "qamp/statevector.hpp"

namespace qamp {

enum class InitMode { Midpoint, Fixed, RandomSeeded };

// Parameters for one binary search over [0, pi/2]. Exactly one of
// iterations / target_error must be set; when both are, target_error wins
// and the iteration count is derived from it.
struct SearchConfig {
    InitMode init_mode = InitMode::Midpoint;
    double fixed_beta = 0.0;   // InitMode::Fixed only
    std::uint64_t seed = 0;    // InitMode::RandomSeeded only

    std::optional<int> iterations;
    std::optional<double> target_error;

    double eq_tol = 1e-12;

    static SearchConfig for_iterations(int m);
    static SearchConfig for_target_error(double delta_e);

    // Applies the target-error-wins rule; throws when neither is set or a
    // value is out of range.
    int resolve_iterations() const;
};

// Interval state after one oracle call and update: [beta_lo, beta_hi] still
// brackets the hidden angle, beta is the next trial point.
struct IntervalStep {
    double beta_lo;
    double beta_hi;
    double beta;
};

struct SearchResult {
    double theta_hat = 0.0;
    double amplitude_hat = 0.0; // sin(theta_hat)
    int iterations_used = 0;
    long long oracle_calls = 0;
    long long gate_applications = 0;
    long long state_preparations = 0;
    std::vector<IntervalStep> interval_history;
    bool converged_exact = false;
};

// Guaranteed angle error after m midpoint-start iterations: pi / 2^(m+1).
double bound_for_iters(int m);

// Smallest m >= 1 with bound_for_iters(m) <= delta_e; delta_e in (0, pi/2].
int iters_for_error(double delta_e);

// Binary search for the hidden angle of a nonnegative single-qubit state.
// Per call: on HiddenGreater the lower edge moves to beta and beta moves to
// the midpoint of the surviving interval; HiddenLess mirrors; equal-within-
// tolerance stops early with converged_exact set.
SearchResult search_single(const QuantumState& psi, const SearchConfig& config);

// Same loop with the multipartite oracle; estimates the amplitude of |k>.
SearchResult search_multi(const QuantumState& psi, const BasisIndex& k,
                          const SearchConfig& config);

} // namespace qamp
