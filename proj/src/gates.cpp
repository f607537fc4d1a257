#include "qamp/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qamp/error.hpp"

namespace qamp {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// Residual amplitude threshold below which psi is treated as exactly |k>.
constexpr double kDegenerateTol = 1e-12;

} // namespace

LinearOperator standard_gate(GateName name) {
    switch (name) {
        case GateName::Hadamard:
            return LinearOperator::orthogonal(2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
        case GateName::PauliX:
            return LinearOperator::orthogonal(2, {0.0, 1.0, 1.0, 0.0});
        case GateName::PauliZ:
            return LinearOperator::orthogonal(2, {1.0, 0.0, 0.0, -1.0});
    }
    throw std::invalid_argument("unknown gate name");
}

LinearOperator rotation_c(double beta, bool* outside_domain) {
    if (outside_domain != nullptr) {
        *outside_domain = !(beta >= 0.0 && beta <= std::numbers::pi / 2);
    }
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    return LinearOperator::orthogonal(2, {c, s, s, -c});
}

LinearOperator operator_a() {
    // Row 3 realizes sin(t - b) = sin t cos b - cos t sin b; the sign layout
    // is fixed by the +|10> outcome convention for t > b.
    return LinearOperator::orthogonal(4, {kInvSqrt2, 0.0, 0.0, -kInvSqrt2,
                                          0.0, kInvSqrt2, kInvSqrt2, 0.0,
                                          0.0, -kInvSqrt2, kInvSqrt2, 0.0,
                                          kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

std::array<QuantumState, 4> effective_basis(const QuantumState& psi, const BasisIndex& k) {
    if (k.num_qubits != psi.num_qubits()) {
        throw DimensionMismatch("basis index qubit count differs from state");
    }
    if (!psi.nonnegative()) {
        throw std::invalid_argument("effective basis expects nonnegative amplitudes");
    }
    const std::size_t dim = psi.dim();

    // |phi>: psi restricted away from index k, renormalized.
    std::vector<double> phi(dim, 0.0);
    long double rest = 0.0L;
    for (std::size_t i = 0; i < dim; ++i) {
        if (i == k.index) continue;
        phi[i] = psi.amplitude(i);
        rest += static_cast<long double>(phi[i]) * phi[i];
    }
    const double rest_norm = std::sqrt(static_cast<double>(rest));
    if (rest_norm <= kDegenerateTol) {
        // Degenerate a_k = 1: any unit vector orthogonal to |k> works; take
        // the lowest basis index != k.
        std::fill(phi.begin(), phi.end(), 0.0);
        phi[k.index == 0 ? 1 : 0] = 1.0;
    } else {
        for (double& a : phi) a /= rest_norm;
    }

    auto lift = [dim](const std::vector<double>& base, int ancilla_bit) {
        std::vector<double> out(dim * 2, 0.0);
        for (std::size_t i = 0; i < dim; ++i) out[2 * i + ancilla_bit] = base[i];
        return QuantumState(std::move(out));
    };
    std::vector<double> k_vec(dim, 0.0);
    k_vec[k.index] = 1.0;

    return {lift(phi, 0), lift(phi, 1), lift(k_vec, 0), lift(k_vec, 1)};
}

LinearOperator embed_a(const QuantumState& psi, const BasisIndex& k) {
    const auto basis = effective_basis(psi, k);
    const LinearOperator a4 = operator_a();
    const std::size_t full = psi.dim() * 2;

    // I + sum_{r,s} (A_{rs} - delta_{rs}) e_r e_s^T
    std::vector<double> m(full * full, 0.0);
    for (std::size_t i = 0; i < full; ++i) m[i * full + i] = 1.0;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t s = 0; s < 4; ++s) {
            const double coeff = a4.entry(r, s) - (r == s ? 1.0 : 0.0);
            if (coeff == 0.0) continue;
            for (std::size_t i = 0; i < full; ++i) {
                const double er = basis[r].amplitude(i);
                if (er == 0.0) continue;
                for (std::size_t j = 0; j < full; ++j) {
                    m[i * full + j] += coeff * er * basis[s].amplitude(j);
                }
            }
        }
    }
    return LinearOperator::orthogonal(full, std::move(m));
}

} // namespace qamp
