#include "qamp/comparator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qamp/error.hpp"
#include "qamp/gates.hpp"

namespace qamp {

namespace {

void check_beta(double beta) {
    if (!(beta >= 0.0 && beta <= std::numbers::pi / 2)) {
        throw std::domain_error("trial angle must lie in [0, pi/2]");
    }
}

void check_nonneg(const QuantumState& psi) {
    if (!psi.nonnegative()) {
        throw std::invalid_argument("comparator inputs must have nonnegative amplitudes");
    }
}

// Reduced two-level view of psi against |k>: [cos theta, sin theta] with
// sin theta = a_k.
QuantumState reduced_state(const QuantumState& psi, const BasisIndex& k) {
    const double a_k = psi.amplitude(k.index);
    if (a_k > 1.0 + 1e-12) throw std::invalid_argument("amplitude exceeds 1");
    const double c = std::sqrt(std::max(0.0, 1.0 - a_k * a_k));
    return QuantumState::from_amplitudes({c, std::min(a_k, 1.0)});
}

PipelineTrace run_pipeline(const QuantumState& psi, const LinearOperator& comparator_op,
                           std::size_t measured_index, double beta, double eq_tol,
                           OpCounter* counter) {
    const QuantumState zero({1.0, 0.0});
    QuantumState phi0 = apply(rotation_c(beta), zero);
    QuantumState phi1 = tensor(psi, phi0);
    QuantumState phi2 = apply(comparator_op, phi1);
    // Equal on amplitude magnitude <= eq_tol, i.e. weight <= eq_tol^2.
    const double eps = std::max(eq_tol * eq_tol, std::numeric_limits<double>::min());
    auto projected = project_and_renormalize(Projector::onto(measured_index, phi2.dim()), phi2, eps);
    if (counter != nullptr) {
        counter->state_preparations += 1; // one fresh copy of psi per run
        counter->gate_applications += 2;  // C(2 beta) and the comparator operator
        counter->projective_measurements += 1;
    }
    return {std::move(phi0), std::move(phi1), std::move(phi2), std::move(projected.state),
            projected.weight};
}

} // namespace

ComparisonOutcome outcome_from_trace(const PipelineTrace& trace, std::size_t measured_index) {
    if (!trace.phi3.has_value()) return ComparisonOutcome::EqualWithinTol;
    return trace.phi3->amplitude(measured_index) > 0.0 ? ComparisonOutcome::HiddenGreater
                                                       : ComparisonOutcome::HiddenLess;
}

ComparisonOutcome compare_single(const QuantumState& psi, double beta, double eq_tol,
                                 OpCounter* counter) {
    if (psi.num_qubits() != 1) throw DimensionMismatch("compare_single expects one qubit");
    check_beta(beta);
    check_nonneg(psi);
    if (!(eq_tol >= 0.0)) throw std::invalid_argument("eq_tol must be nonnegative");
    PipelineTrace trace = run_pipeline(psi, operator_a(), 2, beta, eq_tol, counter);
    return outcome_from_trace(trace, 2);
}

ComparisonOutcome compare_multi(const QuantumState& psi, const BasisIndex& k, double beta,
                                double eq_tol, OpCounter* counter) {
    if (k.num_qubits != psi.num_qubits()) {
        throw DimensionMismatch("basis index qubit count differs from state");
    }
    check_beta(beta);
    check_nonneg(psi);
    return compare_single(reduced_state(psi, k), beta, eq_tol, counter);
}

PipelineTrace pipeline_trace(const QuantumState& psi, double beta, double eq_tol) {
    if (psi.num_qubits() != 1) throw DimensionMismatch("single-qubit trace expects one qubit");
    check_beta(beta);
    check_nonneg(psi);
    return run_pipeline(psi, operator_a(), 2, beta, eq_tol, nullptr);
}

PipelineTrace pipeline_trace(const QuantumState& psi, const BasisIndex& k, double beta,
                             double eq_tol) {
    if (k.num_qubits != psi.num_qubits()) {
        throw DimensionMismatch("basis index qubit count differs from state");
    }
    check_beta(beta);
    check_nonneg(psi);
    // Measured component |k>|0> sits at basis index 2k of the extended space.
    return run_pipeline(psi, embed_a(psi, k), 2 * k.index, beta, eq_tol, nullptr);
}

} // namespace qamp
