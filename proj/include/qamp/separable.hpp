#pragma once

#include <optional>
#include <vector>

#include "qamp/bisection.hpp"
#include "qamp/statevector.hpp"

namespace qamp {

// Per-qubit factor angles of a product state; tensoring
// [cos t_l, sin t_l] over l rebuilds the source state.
using FactorAngles = std::vector<double>;

// Detects a tensor-product state. For each qubit the amplitude vector is
// reshaped into a 2 x 2^(n-1) array (that qubit's bit as row index); the
// state is separable when every reshaping is rank one. Rank one is decided
// by 2x2 cross-ratio minors taken against the dominant column: all
// |a0[p] a1[j] - a1[p] a0[j]| <= tol. On success the factor angle is
// atan2(row-1 norm, row-0 norm). Returns empty when any qubit fails.
std::optional<FactorAngles> factor_product_state(const QuantumState& psi, double tol = 1e-9);

// Runs one single-qubit binary search per extracted factor, so a product
// state costs at most n*m oracle calls instead of 2^n * m. Non-separable
// input is rejected.
std::vector<SearchResult> search_separable(const QuantumState& psi, const SearchConfig& config);

} // namespace qamp
