#pragma once

#include <array>

#include "qamp/statevector.hpp"

namespace qamp {

enum class GateName { Hadamard, PauliX, PauliZ };

LinearOperator standard_gate(GateName name);

// [[cos b, sin b], [sin b, -cos b]]. Orthogonal for every b; values outside
// [0, pi/2] are permitted but flagged through outside_domain when asked.
LinearOperator rotation_c(double beta, bool* outside_domain = nullptr);

// The fixed 4x4 comparator operator. Satisfies, for any t and b,
//   A [cos t cos b, cos t sin b, sin t cos b, sin t sin b]^T
//     = (1/sqrt 2) [cos(t+b), sin(t+b), sin(t-b), cos(t-b)]^T.
LinearOperator operator_a();

// The four orthonormal (n+1)-qubit vectors |phi>|0>, |phi>|1>, |k>|0>,
// |k>|1>, where |phi> is the renormalized restriction of psi away from k.
// When psi sits entirely on |k>, the lowest basis index != k stands in for
// the undefined |phi>.
std::array<QuantumState, 4> effective_basis(const QuantumState& psi, const BasisIndex& k);

// Full-space realization of operator_a: acts as the 4x4 above on the span of
// effective_basis(psi, k) and as identity on its orthogonal complement.
// A simulator privilege (it depends on the hidden amplitudes); the search
// loop itself uses the reduced pipeline and never calls this.
LinearOperator embed_a(const QuantumState& psi, const BasisIndex& k);

} // namespace qamp
