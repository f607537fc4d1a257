#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qamp/error.hpp"
#include "qamp/rng.hpp"
#include "qamp/statevector.hpp"

using namespace qamp;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const QuantumState& state, const std::vector<double>& expected) {
    REQUIRE(state.dim() == expected.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        worst = std::max(worst, std::abs(state.amplitude(i) - expected[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("from_angle produces [cos, sin]") {
    CHECK(max_abs_diff(QuantumState::from_angle(0.0), {1.0, 0.0}) == 0.0);
    CHECK(max_abs_diff(QuantumState::from_angle(kPi / 2), {0.0, 1.0}) <= 1e-15);
    CHECK(max_abs_diff(QuantumState::from_angle(kPi / 6),
                       {0.8660254037844386, 0.5}) <= 1e-15);
    CHECK_THROWS_AS(QuantumState::from_angle(-0.1), std::domain_error);
    CHECK_THROWS_AS(QuantumState::from_angle(kPi / 2 + 0.1), std::domain_error);
    CHECK_THROWS_AS(QuantumState::from_angle(std::nan("")), std::domain_error);
}

TEST_CASE("from_amplitudes validates and renormalizes") {
    const QuantumState basis = QuantumState::from_amplitudes({1.0, 0.0, 0.0, 0.0});
    CHECK(basis.num_qubits() == 2);
    CHECK(basis.amplitude(0) == 1.0);

    const QuantumState uniform = QuantumState::from_amplitudes({1.0, 1.0, 1.0, 1.0});
    CHECK(max_abs_diff(uniform, {0.5, 0.5, 0.5, 0.5}) <= 1e-15);

    CHECK_THROWS_AS(QuantumState::from_amplitudes({1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(QuantumState::from_amplitudes({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(QuantumState::from_amplitudes({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(QuantumState::from_amplitudes({0.6, -0.8}, true), std::invalid_argument);
    // Signed input is fine without the nonneg check.
    CHECK(QuantumState::from_amplitudes({0.6, -0.8}).amplitude(1) == -0.8);
    CHECK_FALSE(QuantumState::from_amplitudes({0.6, -0.8}).nonnegative());
}

TEST_CASE("direct construction enforces unit norm") {
    CHECK_THROWS_AS(QuantumState({0.5, 0.5}), std::invalid_argument);
    CHECK_NOTHROW(QuantumState({0.6, 0.8}));
}

TEST_CASE("tensor follows the outer-product index law") {
    const QuantumState zz = tensor(QuantumState({1.0, 0.0}), QuantumState({1.0, 0.0}));
    CHECK(max_abs_diff(zz, {1.0, 0.0, 0.0, 0.0}) == 0.0);

    // cos/sin products of (pi/6, pi/3): [sqrt3/4, 3/4, 1/4, sqrt3/4].
    const QuantumState prod =
        tensor(QuantumState::from_angle(kPi / 6), QuantumState::from_angle(kPi / 3));
    CHECK(max_abs_diff(prod, {0.4330127018922193, 0.75, 0.25, 0.4330127018922193}) <= 1e-15);

    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const QuantumState a = random_nonneg_state(1 + rng.next_u64() % 3, rng.next_u64());
        const QuantumState b = random_nonneg_state(1 + rng.next_u64() % 3, rng.next_u64());
        const QuantumState t = tensor(a, b);
        REQUIRE(t.dim() == a.dim() * b.dim());
        CHECK(std::abs(t.norm() - 1.0) <= 1e-12);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = 0; j < b.dim(); ++j) {
                CHECK(t.amplitude(i * b.dim() + j) == a.amplitude(i) * b.amplitude(j));
            }
        }
    }
}

TEST_CASE("apply is the flagged matrix-vector product") {
    const LinearOperator h = LinearOperator::orthogonal(
        2, {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2,
            -std::numbers::sqrt2 / 2});
    CHECK(max_abs_diff(apply(h, QuantumState({1.0, 0.0})),
                       {0.7071067811865476, 0.7071067811865476}) <= 1e-15);

    const LinearOperator x = LinearOperator::orthogonal(2, {0.0, 1.0, 1.0, 0.0});
    CHECK(max_abs_diff(apply(x, QuantumState({1.0, 0.0})), {0.0, 1.0}) == 0.0);

    CHECK_THROWS_AS(apply(h, QuantumState({1.0, 0.0, 0.0, 0.0})), DimensionMismatch);
    CHECK_THROWS_AS(apply(LinearOperator::dense(2, {1.0, 1.0, 0.0, 1.0}),
                          QuantumState({1.0, 0.0})),
                    std::invalid_argument);
}

TEST_CASE("norm preservation under orthogonal operators") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const double beta = rng.next_in(0.0, kPi / 2);
        const LinearOperator c = LinearOperator::orthogonal(
            2, {std::cos(beta), std::sin(beta), std::sin(beta), -std::cos(beta)});
        const QuantumState s = random_nonneg_state(1, rng.next_u64());
        CHECK(std::abs(apply(c, s).norm() - 1.0) <= 1e-10);
    }
}

TEST_CASE("inner products") {
    const QuantumState s = random_nonneg_state(3, 5);
    CHECK(std::abs(inner(s, s) - 1.0) <= 1e-12);
    CHECK(inner(QuantumState({1.0, 0.0}), QuantumState({0.0, 1.0})) == 0.0);
    // cos(pi/6 - pi/3) by hand: sqrt(3)/2.
    CHECK(std::abs(inner(QuantumState::from_angle(kPi / 6), QuantumState::from_angle(kPi / 3)) -
                   0.8660254037844386) <= 1e-15);
    CHECK_THROWS_AS(inner(QuantumState({1.0, 0.0}), QuantumState({1.0, 0.0, 0.0, 0.0})),
                    DimensionMismatch);
}

TEST_CASE("projective measurement keeps signs and weights") {
    // Comparator output state at alpha = pi/3, beta = pi/6:
    // (1/sqrt2)[cos(pi/2), sin(pi/2), sin(pi/6), cos(pi/6)].
    const double inv_sqrt2 = 0.7071067811865476;
    const QuantumState phi2({0.0, inv_sqrt2, inv_sqrt2 * 0.5, inv_sqrt2 * 0.8660254037844386});

    const auto hit = project_and_renormalize(Projector::onto(2, 4), phi2);
    REQUIRE(hit.state.has_value());
    CHECK(std::abs(hit.weight - 0.125) <= 1e-15);
    CHECK(std::abs(hit.state->amplitude(2) - 1.0) <= 1e-12);

    // alpha = beta: the measured component vanishes.
    const QuantumState equal_case({inv_sqrt2 * 0.5, inv_sqrt2 * 0.8660254037844386, 0.0,
                                   inv_sqrt2});
    const auto miss = project_and_renormalize(Projector::onto(2, 4), equal_case);
    CHECK_FALSE(miss.state.has_value());
    CHECK(miss.weight == 0.0);

    const auto full = project_and_renormalize(Projector::full(4), phi2);
    REQUIRE(full.state.has_value());
    CHECK(std::abs(full.weight - 1.0) <= 1e-15);
    CHECK(max_abs_diff(*full.state, phi2.amplitudes()) <= 1e-15);

    CHECK_THROWS_AS(project_and_renormalize(Projector::onto(0, 2), phi2), DimensionMismatch);
    CHECK_THROWS_AS(project_and_renormalize(Projector::onto(2, 4), phi2, 0.0),
                    std::invalid_argument);
}

TEST_CASE("projection partitions and preserves signs") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> raw(8);
        for (double& v : raw) v = rng.next_in(-1.0, 1.0);
        const QuantumState s = QuantumState::from_amplitudes(std::move(raw));

        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            if (rng.next_u64() & 1u) subset.push_back(i);
        }
        const Projector p(subset, s.dim());
        CHECK(std::abs(projection_weight(p, s) + projection_weight(p.complement(), s) - 1.0) <=
              1e-12);

        const auto projected = project_and_renormalize(p, s);
        if (projected.state.has_value()) {
            for (std::size_t i : p.indices()) {
                if (s.amplitude(i) != 0.0) {
                    CHECK(std::signbit(projected.state->amplitude(i)) ==
                          std::signbit(s.amplitude(i)));
                }
            }
        }
    }
}

TEST_CASE("basis index and projector validation") {
    CHECK_NOTHROW(BasisIndex(3, 2));
    CHECK_THROWS_AS(BasisIndex(4, 2), std::out_of_range);
    CHECK_THROWS_AS(BasisIndex(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Projector({4}, 4), std::out_of_range);
}

TEST_CASE("random state generator honors its contract") {
    const QuantumState a = random_nonneg_state(3, 99);
    const QuantumState b = random_nonneg_state(3, 99);
    CHECK(a.dim() == 8);
    CHECK(a.nonnegative());
    CHECK(std::abs(a.norm() - 1.0) <= 1e-12);
    CHECK(max_abs_diff(a, b.amplitudes()) == 0.0);
    CHECK(max_abs_diff(a, random_nonneg_state(3, 100).amplitudes()) > 0.0);
}

TEST_CASE("product_state builds angle factors") {
    const std::vector<double> one{kPi / 4};
    CHECK(max_abs_diff(product_state(one), {0.7071067811865476, 0.7071067811865476}) <= 1e-15);
    const std::vector<double> zeros{0.0, 0.0};
    CHECK(max_abs_diff(product_state(zeros), {1.0, 0.0, 0.0, 0.0}) == 0.0);
    const std::vector<double> pair{kPi / 6, kPi / 3};
    CHECK(max_abs_diff(product_state(pair),
                       {0.4330127018922193, 0.75, 0.25, 0.4330127018922193}) <= 1e-15);
}
