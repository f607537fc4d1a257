#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qamp {

// Dense real square matrix. Operators applied to states must carry the
// orthogonal flag, which is only granted after an M^T M = I check.
class LinearOperator {
public:
    // Verifies M^T M = I entrywise within tol before setting the flag.
    static LinearOperator orthogonal(std::size_t dim, std::vector<double> entries,
                                     double tol = 1e-12);

    // Unflagged matrix; apply() rejects it. Useful for building blocks.
    static LinearOperator dense(std::size_t dim, std::vector<double> entries);

    std::size_t dim() const { return dim_; }
    bool is_orthogonal() const { return orthogonal_; }

    double entry(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    const std::vector<double>& entries() const { return entries_; }

    // Largest |(M^T M - I)_{ij}|.
    double orthogonality_residual() const;

private:
    LinearOperator(std::size_t dim, std::vector<double> entries, bool orthogonal);

    std::size_t dim_;
    std::vector<double> entries_; // row-major
    bool orthogonal_;
};

// Real amplitude vector over the computational basis of n qubits, with
// qubit 1 the most significant index bit. Unit norm is enforced at every
// construction; amplitude signs are free (pipeline states carry them), and
// operations that require nonnegative inputs check that themselves.
class QuantumState {
public:
    // Requires a power-of-two length >= 2 and unit norm within 1e-10.
    explicit QuantumState(std::vector<double> amplitudes);

    // Single-qubit state [cos alpha, sin alpha]; alpha must lie in [0, pi/2].
    static QuantumState from_angle(double alpha);

    // Renormalizes any finite nonzero vector of power-of-two length.
    // With require_nonneg, negative entries are rejected.
    static QuantumState from_amplitudes(std::vector<double> raw, bool require_nonneg = false);

    unsigned num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    double amplitude(std::size_t i) const { return amplitudes_[i]; }
    const std::vector<double>& amplitudes() const { return amplitudes_; }

    double norm() const;
    bool nonnegative() const;

private:
    unsigned num_qubits_;
    std::vector<double> amplitudes_;
};

// Computational-basis index k over n qubits, validated on construction.
struct BasisIndex {
    BasisIndex(std::size_t index, unsigned num_qubits);

    std::size_t index;
    unsigned num_qubits;
};

// Diagonal 0/1 projector onto a set of basis indices. P^2 = P and P^T = P
// hold by representation.
class Projector {
public:
    Projector(std::vector<std::size_t> basis_indices, std::size_t dim);

    static Projector onto(std::size_t index, std::size_t dim);
    static Projector full(std::size_t dim);

    Projector complement() const;

    std::size_t dim() const { return dim_; }
    const std::vector<std::size_t>& indices() const { return indices_; }

private:
    std::vector<std::size_t> indices_; // sorted, unique
    std::size_t dim_;
};

struct ProjectionResult {
    // Empty when the projected weight is at or below eps (the measured
    // component vanishes).
    std::optional<QuantumState> state;
    double weight;
};

// |a> (x) |b> with a's index most significant.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

// Matrix-vector product; op must be flagged orthogonal and match dimensions.
QuantumState apply(const LinearOperator& op, const QuantumState& state);

double inner(const QuantumState& a, const QuantumState& b);

double projection_weight(const Projector& p, const QuantumState& state);

// Von Neumann measurement: weight = sum of squared amplitudes inside p.
// Returns the renormalized projected state (signs preserved) or empty when
// weight <= eps.
ProjectionResult project_and_renormalize(const Projector& p, const QuantumState& state,
                                         double eps = 1e-12);

// Nonnegative amplitudes drawn uniformly in [0, 1) then normalized.
// Deterministic per seed.
QuantumState random_nonneg_state(unsigned num_qubits, std::uint64_t seed);

// Tensor product of [cos t_i, sin t_i] factors, one per angle, angle i
// most significant. Every angle must lie in [0, pi/2].
QuantumState product_state(std::span<const double> angles);

namespace detail {

bool is_power_of_two(std::size_t v);

// Bit of basis index i belonging to qubit l (1-based, qubit 1 most
// significant) in an n-qubit register.
inline int qubit_bit(std::size_t i, unsigned l, unsigned n) {
    return static_cast<int>((i >> (n - l)) & 1u);
}

} // namespace detail

} // namespace qamp
