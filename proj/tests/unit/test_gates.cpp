#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qamp/gates.hpp"
#include "qamp/rng.hpp"
#include "qamp/statevector.hpp"

using namespace qamp;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865476;

double entry_distance(const LinearOperator& a, const LinearOperator& b) {
    REQUIRE(a.dim() == b.dim());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

// Kronecker vector [cos t, sin t] (x) [cos b, sin b].
QuantumState kron_vector(double t, double b) {
    return QuantumState({std::cos(t) * std::cos(b), std::cos(t) * std::sin(b),
                         std::sin(t) * std::cos(b), std::sin(t) * std::sin(b)});
}

} // namespace

TEST_CASE("standard gates match their fixed matrices") {
    const LinearOperator h = standard_gate(GateName::Hadamard);
    CHECK(h.entry(0, 0) == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(h.entry(1, 1) == doctest::Approx(-kInvSqrt2).epsilon(1e-15));

    const LinearOperator x = standard_gate(GateName::PauliX);
    CHECK(x.entry(0, 0) == 0.0);
    CHECK(x.entry(0, 1) == 1.0);
    CHECK(x.entry(1, 0) == 1.0);
    CHECK(x.entry(1, 1) == 0.0);

    const LinearOperator z = standard_gate(GateName::PauliZ);
    CHECK(z.entry(0, 0) == 1.0);
    CHECK(z.entry(1, 1) == -1.0);
    CHECK(z.entry(0, 1) == 0.0);
}

TEST_CASE("rotation specializes to Z, H, X") {
    CHECK(entry_distance(rotation_c(0.0), standard_gate(GateName::PauliZ)) <= 1e-15);
    CHECK(entry_distance(rotation_c(kPi / 4), standard_gate(GateName::Hadamard)) <= 1e-15);
    CHECK(entry_distance(rotation_c(kPi / 2), standard_gate(GateName::PauliX)) <= 1e-15);
}

TEST_CASE("rotation acts on |0> as the angle preparation") {
    for (int i = 0; i <= 100; ++i) {
        const double beta = (kPi / 2) * i / 100;
        const QuantumState rotated = apply(rotation_c(beta), QuantumState({1.0, 0.0}));
        CHECK(std::abs(rotated.amplitude(0) - std::cos(beta)) <= 1e-15);
        CHECK(std::abs(rotated.amplitude(1) - std::sin(beta)) <= 1e-15);
    }
}

TEST_CASE("rotation domain flag") {
    bool outside = false;
    rotation_c(kPi / 4, &outside);
    CHECK_FALSE(outside);
    const LinearOperator wide = rotation_c(2.5, &outside);
    CHECK(outside);
    CHECK(wide.is_orthogonal());
    // The column identity holds outside the nominal domain too.
    const QuantumState rotated = apply(wide, QuantumState({1.0, 0.0}));
    CHECK(std::abs(rotated.amplitude(0) - std::cos(2.5)) <= 1e-15);
    CHECK(std::abs(rotated.amplitude(1) - std::sin(2.5)) <= 1e-15);
}

TEST_CASE("operator A is orthogonal with the expected columns") {
    const LinearOperator a = operator_a();
    CHECK(a.orthogonality_residual() <= 1e-15);

    const QuantumState first = apply(a, QuantumState({1.0, 0.0, 0.0, 0.0}));
    CHECK(std::abs(first.amplitude(0) - kInvSqrt2) <= 1e-15);
    CHECK(first.amplitude(1) == 0.0);
    CHECK(first.amplitude(2) == 0.0);
    CHECK(std::abs(first.amplitude(3) - kInvSqrt2) <= 1e-15);

    // theta = beta = pi/4: (1/sqrt2)[cos(pi/2), sin(pi/2), sin 0, cos 0].
    const QuantumState mid = apply(a, kron_vector(kPi / 4, kPi / 4));
    CHECK(std::abs(mid.amplitude(0)) <= 1e-15);
    CHECK(std::abs(mid.amplitude(1) - kInvSqrt2) <= 1e-15);
    CHECK(std::abs(mid.amplitude(2)) <= 1e-15);
    CHECK(std::abs(mid.amplitude(3) - kInvSqrt2) <= 1e-15);
}

TEST_CASE("operator A realizes the angle-addition identity") {
    Rng rng(21);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const double t = rng.next_in(0.0, kPi / 2);
        const double b = rng.next_in(0.0, kPi / 2);
        const QuantumState out = apply(operator_a(), kron_vector(t, b));
        worst = std::max(worst, std::abs(out.amplitude(0) - kInvSqrt2 * std::cos(t + b)));
        worst = std::max(worst, std::abs(out.amplitude(1) - kInvSqrt2 * std::sin(t + b)));
        worst = std::max(worst, std::abs(out.amplitude(2) - kInvSqrt2 * std::sin(t - b)));
        worst = std::max(worst, std::abs(out.amplitude(3) - kInvSqrt2 * std::cos(t - b)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("embed_a reduces to operator A on one qubit") {
    const QuantumState psi = QuantumState::from_angle(kPi / 5);
    const LinearOperator embedded = embed_a(psi, BasisIndex(1, 1));
    CHECK(entry_distance(embedded, operator_a()) <= 1e-12);
}

TEST_CASE("embed_a is orthogonal and matches the reduced pipeline") {
    Rng rng(22);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.next_u64() % 4);
        const QuantumState psi = random_nonneg_state(n, rng.next_u64());
        const BasisIndex k(rng.next_u64() % psi.dim(), n);
        const double beta = rng.next_in(0.0, kPi / 2);

        const LinearOperator embedded = embed_a(psi, k);
        CHECK(embedded.orthogonality_residual() <= 1e-12);

        // Oracle: the reduced 4-vector computed from theta = arcsin a_k.
        const double theta = std::asin(std::min(1.0, psi.amplitude(k.index)));
        const QuantumState reduced = apply(operator_a(), kron_vector(theta, beta));

        const QuantumState full =
            apply(embedded, tensor(psi, QuantumState({std::cos(beta), std::sin(beta)})));
        const auto basis = effective_basis(psi, k);
        for (int i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(inner(basis[i], full) - reduced.amplitude(i)));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("embed_a degenerate case takes the lowest free basis vector") {
    std::vector<double> amps(4, 0.0);
    amps[2] = 1.0;
    const QuantumState psi = QuantumState::from_amplitudes(std::move(amps), true);
    const auto basis = effective_basis(psi, BasisIndex(2, 2));
    CHECK(basis[0].amplitude(0) == 1.0); // |phi> -> |00>, ancilla 0
    const LinearOperator embedded = embed_a(psi, BasisIndex(2, 2));
    CHECK(embedded.orthogonality_residual() <= 1e-12);

    const QuantumState degenerate_at_zero = QuantumState::from_amplitudes({1.0, 0.0}, true);
    const auto basis0 = effective_basis(degenerate_at_zero, BasisIndex(0, 1));
    CHECK(basis0[0].amplitude(2) == 1.0); // |phi> -> |1>, ancilla 0
}

TEST_CASE("embed_a rejects mismatched indices") {
    const QuantumState psi = random_nonneg_state(2, 7);
    CHECK_THROWS(embed_a(psi, BasisIndex(1, 3)));
}
