#include "qamp/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qamp/error.hpp"
#include "qamp/rng.hpp"

namespace qamp {

namespace {

constexpr double kNormTol = 1e-10;

double sum_of_squares(const std::vector<double>& v) {
    long double acc = 0.0L;
    for (double x : v) acc += static_cast<long double>(x) * x;
    return static_cast<double>(acc);
}

unsigned qubits_for_length(std::size_t len) {
    if (len < 2 || !detail::is_power_of_two(len)) {
        throw std::invalid_argument("amplitude vector length must be a power of two >= 2");
    }
    unsigned n = 0;
    while ((std::size_t{1} << n) < len) ++n;
    return n;
}

} // namespace

namespace detail {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace detail

// --- LinearOperator ---------------------------------------------------------

LinearOperator::LinearOperator(std::size_t dim, std::vector<double> entries, bool orthogonal)
    : dim_(dim), entries_(std::move(entries)), orthogonal_(orthogonal) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("operator entries must form a dim x dim matrix");
    }
}

LinearOperator LinearOperator::dense(std::size_t dim, std::vector<double> entries) {
    return LinearOperator(dim, std::move(entries), false);
}

LinearOperator LinearOperator::orthogonal(std::size_t dim, std::vector<double> entries,
                                          double tol) {
    LinearOperator op(dim, std::move(entries), true);
    if (op.orthogonality_residual() > tol) {
        throw std::invalid_argument("matrix failed the orthogonality check");
    }
    return op;
}

double LinearOperator::orthogonality_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            long double dot = 0.0L;
            for (std::size_t r = 0; r < dim_; ++r) {
                dot += static_cast<long double>(entries_[r * dim_ + i]) * entries_[r * dim_ + j];
            }
            double target = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(static_cast<double>(dot) - target));
        }
    }
    return worst;
}

// --- QuantumState ------------------------------------------------------------

QuantumState::QuantumState(std::vector<double> amplitudes)
    : num_qubits_(qubits_for_length(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
    for (double a : amplitudes_) {
        if (!std::isfinite(a)) throw std::invalid_argument("amplitudes must be finite");
    }
    if (std::abs(sum_of_squares(amplitudes_) - 1.0) > kNormTol) {
        throw std::invalid_argument("state vector must have unit norm");
    }
}

QuantumState QuantumState::from_angle(double alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
        throw std::domain_error("angle must lie in [0, pi/2]");
    }
    return QuantumState({std::cos(alpha), std::sin(alpha)});
}

QuantumState QuantumState::from_amplitudes(std::vector<double> raw, bool require_nonneg) {
    qubits_for_length(raw.size());
    for (double a : raw) {
        if (!std::isfinite(a)) throw std::invalid_argument("amplitudes must be finite");
        if (require_nonneg && a < 0.0) {
            throw std::invalid_argument("negative amplitude rejected by nonneg check");
        }
    }
    double norm = std::sqrt(sum_of_squares(raw));
    if (norm == 0.0) throw std::invalid_argument("zero vector cannot be normalized");
    // Already-unit inputs (file round trips) are kept bit-identical; the
    // division would only shuffle last-ulp noise.
    if (std::abs(norm - 1.0) > 1e-12) {
        for (double& a : raw) a /= norm;
    }
    return QuantumState(std::move(raw));
}

double QuantumState::norm() const { return std::sqrt(sum_of_squares(amplitudes_)); }

bool QuantumState::nonnegative() const {
    return std::all_of(amplitudes_.begin(), amplitudes_.end(), [](double a) { return a >= 0.0; });
}

// --- BasisIndex / Projector --------------------------------------------------

BasisIndex::BasisIndex(std::size_t index_, unsigned num_qubits_)
    : index(index_), num_qubits(num_qubits_) {
    if (num_qubits == 0) throw std::invalid_argument("basis index needs at least one qubit");
    if (num_qubits >= 8 * sizeof(std::size_t) || index >= (std::size_t{1} << num_qubits)) {
        throw std::out_of_range("basis index out of range for qubit count");
    }
}

Projector::Projector(std::vector<std::size_t> basis_indices, std::size_t dim)
    : indices_(std::move(basis_indices)), dim_(dim) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.back() >= dim_) {
        throw std::out_of_range("projector index exceeds dimension");
    }
}

Projector Projector::onto(std::size_t index, std::size_t dim) {
    return Projector({index}, dim);
}

Projector Projector::full(std::size_t dim) {
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i;
    return Projector(std::move(all), dim);
}

Projector Projector::complement() const {
    std::vector<std::size_t> rest;
    rest.reserve(dim_ - indices_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (next < indices_.size() && indices_[next] == i) {
            ++next;
        } else {
            rest.push_back(i);
        }
    }
    return Projector(std::move(rest), dim_);
}

// --- Operations --------------------------------------------------------------

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
    std::vector<double> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double ai = a.amplitude(i);
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = ai * b.amplitude(j);
        }
    }
    return QuantumState(std::move(out));
}

QuantumState apply(const LinearOperator& op, const QuantumState& state) {
    if (op.dim() != state.dim()) {
        throw DimensionMismatch("operator and state dimensions differ");
    }
    if (!op.is_orthogonal()) {
        throw std::invalid_argument("apply requires an orthogonality-flagged operator");
    }
    std::vector<double> out(state.dim(), 0.0);
    const auto& m = op.entries();
    const std::size_t d = op.dim();
    for (std::size_t r = 0; r < d; ++r) {
        long double acc = 0.0L;
        const double* row = m.data() + r * d;
        for (std::size_t c = 0; c < d; ++c) acc += static_cast<long double>(row[c]) * state.amplitude(c);
        out[r] = static_cast<double>(acc);
    }
    return QuantumState(std::move(out));
}

double inner(const QuantumState& a, const QuantumState& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("inner product needs equal dimensions");
    long double acc = 0.0L;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += static_cast<long double>(a.amplitude(i)) * b.amplitude(i);
    }
    return static_cast<double>(acc);
}

double projection_weight(const Projector& p, const QuantumState& state) {
    if (p.dim() != state.dim()) throw DimensionMismatch("projector and state dimensions differ");
    long double acc = 0.0L;
    for (std::size_t i : p.indices()) {
        acc += static_cast<long double>(state.amplitude(i)) * state.amplitude(i);
    }
    return static_cast<double>(acc);
}

ProjectionResult project_and_renormalize(const Projector& p, const QuantumState& state,
                                         double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("projection eps must be positive");
    const double weight = projection_weight(p, state);
    if (weight <= eps) return {std::nullopt, weight};

    std::vector<double> out(state.dim(), 0.0);
    const double scale = 1.0 / std::sqrt(weight);
    for (std::size_t i : p.indices()) out[i] = state.amplitude(i) * scale;
    return {QuantumState(std::move(out)), weight};
}

QuantumState random_nonneg_state(unsigned num_qubits, std::uint64_t seed) {
    if (num_qubits == 0) throw std::invalid_argument("need at least one qubit");
    if (num_qubits > 30) throw std::invalid_argument("qubit count above the supported limit of 30");
    Rng rng(seed);
    std::vector<double> amps(std::size_t{1} << num_qubits);
    double norm = 0.0;
    do {
        for (double& a : amps) a = rng.next_unit();
        norm = sum_of_squares(amps);
    } while (norm == 0.0);
    return QuantumState::from_amplitudes(std::move(amps), true);
}

QuantumState product_state(std::span<const double> angles) {
    if (angles.empty()) throw std::invalid_argument("need at least one factor angle");
    if (angles.size() > 30) throw std::invalid_argument("qubit count above the supported limit of 30");
    QuantumState state = QuantumState::from_angle(angles[0]);
    for (std::size_t i = 1; i < angles.size(); ++i) {
        state = tensor(state, QuantumState::from_angle(angles[i]));
    }
    return state;
}

} // namespace qamp
