#pragma once

#include <optional>

#include "qamp/statevector.hpp"

namespace qamp {

// One-shot oracle verdict: the hidden angle is equal to the trial angle
// within tolerance, above it (+ sign at the measured index), or below it
// (- sign).
enum class ComparisonOutcome { EqualWithinTol, HiddenGreater, HiddenLess };

// Intermediate states of one comparator run. phi3 is empty when the
// projected component vanished (the equal branch).
struct PipelineTrace {
    QuantumState phi0;
    QuantumState phi1;
    QuantumState phi2;
    std::optional<QuantumState> phi3;
    double projection_weight;
};

// Simulation cost tally, accumulated across oracle calls by the callers
// that care (the search loop, the benchmark runner).
struct OpCounter {
    long long gate_applications = 0;
    long long state_preparations = 0;
    long long projective_measurements = 0;
};

// Single-qubit oracle: rotate |0> by the trial angle, tensor with the hidden
// state, apply the comparator operator, measure the third component. The
// surviving amplitude is sin(alpha - beta)/sqrt(2); equal within eq_tol on
// its magnitude, otherwise the sign decides.
ComparisonOutcome compare_single(const QuantumState& psi, double beta, double eq_tol = 1e-12,
                                 OpCounter* counter = nullptr);

// Multipartite oracle for the amplitude at basis index k, run on the reduced
// two-level state [cos theta, sin theta] with sin theta = psi[k]. Equivalent
// to the full-space pipeline (see pipeline_trace) at O(1) cost per call.
ComparisonOutcome compare_multi(const QuantumState& psi, const BasisIndex& k, double beta,
                                double eq_tol = 1e-12, OpCounter* counter = nullptr);

// Audit pipelines retaining every intermediate state. The multipartite form
// builds the full-space operator (embed_a), so it costs O(4^n); it exists to
// verify the reduced path, not to replace it.
PipelineTrace pipeline_trace(const QuantumState& psi, double beta, double eq_tol = 1e-12);
PipelineTrace pipeline_trace(const QuantumState& psi, const BasisIndex& k, double beta,
                             double eq_tol = 1e-12);

ComparisonOutcome outcome_from_trace(const PipelineTrace& trace, std::size_t measured_index);

} // namespace qamp
