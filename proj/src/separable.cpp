#include "qamp/separable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qamp/error.hpp"

namespace qamp {

namespace {

// Rows of the qubit-l reshaping: row r holds the amplitudes whose bit for
// qubit l equals r, columns ordered by the remaining bits.
struct Reshaping {
    std::vector<double> row0;
    std::vector<double> row1;
};

Reshaping reshape_by_qubit(const QuantumState& psi, unsigned l) {
    const unsigned n = psi.num_qubits();
    const std::size_t cols = psi.dim() / 2;
    Reshaping r{std::vector<double>(cols), std::vector<double>(cols)};
    const unsigned low_bits = n - l;
    const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        const std::size_t col = ((i >> (low_bits + 1)) << low_bits) | (i & low_mask);
        if (detail::qubit_bit(i, l, n)) {
            r.row1[col] = psi.amplitude(i);
        } else {
            r.row0[col] = psi.amplitude(i);
        }
    }
    return r;
}

double row_norm(const std::vector<double>& row) {
    long double acc = 0.0L;
    for (double x : row) acc += static_cast<long double>(x) * x;
    return std::sqrt(static_cast<double>(acc));
}

double rank_one_residual(const Reshaping& r) {
    // Pivot on the column with the largest magnitude, then bound all 2x2
    // minors by the minors against that column.
    std::size_t pivot = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < r.row0.size(); ++j) {
        const double mag = std::abs(r.row0[j]) + std::abs(r.row1[j]);
        if (mag > best) {
            best = mag;
            pivot = j;
        }
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < r.row0.size(); ++j) {
        const double minor = r.row0[pivot] * r.row1[j] - r.row1[pivot] * r.row0[j];
        worst = std::max(worst, std::abs(minor));
    }
    return worst;
}

} // namespace

std::optional<FactorAngles> factor_product_state(const QuantumState& psi, double tol) {
    if (!psi.nonnegative()) {
        throw std::invalid_argument("separability test expects nonnegative amplitudes");
    }
    const unsigned n = psi.num_qubits();
    if (n == 1) {
        return FactorAngles{std::atan2(psi.amplitude(1), psi.amplitude(0))};
    }
    FactorAngles angles(n);
    for (unsigned l = 1; l <= n; ++l) {
        const Reshaping r = reshape_by_qubit(psi, l);
        if (rank_one_residual(r) > tol) return std::nullopt;
        angles[l - 1] = std::atan2(row_norm(r.row1), row_norm(r.row0));
    }
    return angles;
}

std::vector<SearchResult> search_separable(const QuantumState& psi, const SearchConfig& config) {
    const auto angles = factor_product_state(psi);
    if (!angles.has_value()) {
        throw NotSeparable("state is not a tensor product of single-qubit factors");
    }
    std::vector<SearchResult> results;
    results.reserve(angles->size());
    for (std::size_t l = 0; l < angles->size(); ++l) {
        SearchConfig per_factor = config;
        if (config.init_mode == InitMode::RandomSeeded) {
            per_factor.seed = config.seed + l; // independent trial angles per factor
        }
        results.push_back(search_single(QuantumState::from_angle((*angles)[l]), per_factor));
    }
    return results;
}

} // namespace qamp
