#include "qamp/bisection.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "qamp/error.hpp"
#include "qamp/rng.hpp"

namespace qamp {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

double initial_beta(const SearchConfig& config) {
    switch (config.init_mode) {
        case InitMode::Midpoint:
            return kHalfPi / 2;
        case InitMode::Fixed:
            if (!(config.fixed_beta >= 0.0 && config.fixed_beta <= kHalfPi)) {
                throw std::invalid_argument("fixed trial angle must lie in [0, pi/2]");
            }
            return config.fixed_beta;
        case InitMode::RandomSeeded:
            return Rng(config.seed).next_in(0.0, kHalfPi);
    }
    throw std::invalid_argument("unknown init mode");
}

SearchResult run_search(const std::function<ComparisonOutcome(double, OpCounter*)>& oracle,
                        const SearchConfig& config) {
    const int m = config.resolve_iterations();

    double beta_lo = 0.0;
    double beta_hi = kHalfPi;
    double beta = initial_beta(config);

    SearchResult result;
    result.interval_history.reserve(static_cast<std::size_t>(m));
    OpCounter ops;

    for (int t = 0; t < m; ++t) {
        const ComparisonOutcome outcome = oracle(beta, &ops);
        result.oracle_calls += 1;
        result.iterations_used += 1;
        if (outcome == ComparisonOutcome::EqualWithinTol) {
            result.converged_exact = true;
            result.interval_history.push_back({beta_lo, beta_hi, beta});
            break;
        }
        if (outcome == ComparisonOutcome::HiddenGreater) {
            beta_lo = beta;
            beta = (beta + beta_hi) / 2;
        } else {
            beta_hi = beta;
            beta = (beta + beta_lo) / 2;
        }
        result.interval_history.push_back({beta_lo, beta_hi, beta});
    }

    result.theta_hat = beta;
    result.amplitude_hat = std::sin(beta);
    result.gate_applications = ops.gate_applications;
    result.state_preparations = ops.state_preparations;
    return result;
}

} // namespace

SearchConfig SearchConfig::for_iterations(int m) {
    SearchConfig config;
    config.iterations = m;
    return config;
}

SearchConfig SearchConfig::for_target_error(double delta_e) {
    SearchConfig config;
    config.target_error = delta_e;
    return config;
}

int SearchConfig::resolve_iterations() const {
    if (target_error.has_value()) return iters_for_error(*target_error);
    if (iterations.has_value()) {
        if (*iterations < 1) throw std::invalid_argument("iteration count must be >= 1");
        return *iterations;
    }
    throw std::invalid_argument("search config needs an iteration count or a target error");
}

double bound_for_iters(int m) {
    if (m < 1) throw std::invalid_argument("iteration count must be >= 1");
    return std::ldexp(std::numbers::pi, -(m + 1));
}

int iters_for_error(double delta_e) {
    if (!(delta_e > 0.0) || delta_e > kHalfPi) {
        throw std::invalid_argument("target error must lie in (0, pi/2]");
    }
    int m = 1;
    while (bound_for_iters(m) > delta_e) {
        ++m;
        if (m > 1100) throw std::invalid_argument("target error below representable resolution");
    }
    return m;
}

SearchResult search_single(const QuantumState& psi, const SearchConfig& config) {
    if (psi.num_qubits() != 1) throw DimensionMismatch("search_single expects one qubit");
    if (!psi.nonnegative()) {
        throw std::invalid_argument("search inputs must have nonnegative amplitudes");
    }
    return run_search(
        [&psi, &config](double beta, OpCounter* ops) {
            return compare_single(psi, beta, config.eq_tol, ops);
        },
        config);
}

SearchResult search_multi(const QuantumState& psi, const BasisIndex& k,
                          const SearchConfig& config) {
    if (k.num_qubits != psi.num_qubits()) {
        throw DimensionMismatch("basis index qubit count differs from state");
    }
    if (!psi.nonnegative()) {
        throw std::invalid_argument("search inputs must have nonnegative amplitudes");
    }
    return run_search(
        [&psi, &k, &config](double beta, OpCounter* ops) {
            return compare_multi(psi, k, beta, config.eq_tol, ops);
        },
        config);
}

} // namespace qamp
