#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qamp/bisection.hpp"
#include "qamp/error.hpp"
#include "qamp/rng.hpp"

using namespace qamp;

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

TEST_CASE("bound_for_iters") {
    CHECK(bound_for_iters(1) == kPi / 4);
    // m = 10: pi/2^11 ~ 1.5e-3.
    CHECK(std::abs(bound_for_iters(10) - 1.5339807878856412e-3) <= 1e-18);
    CHECK(bound_for_iters(10) < 1.6e-3);
    // m = 20: pi/2^21 ~ 1.5e-6.
    CHECK(std::abs(bound_for_iters(20) - 1.4980281131695715e-6) <= 1e-20);
    CHECK(bound_for_iters(20) < 2e-6);
    CHECK_THROWS_AS(bound_for_iters(0), std::invalid_argument);
}

TEST_CASE("iters_for_error") {
    CHECK(iters_for_error(kPi / 4) == 1);
    CHECK(iters_for_error(kPi / 2) == 1);
    // pi/2^11 = 1.534e-3 <= 1.6e-3 while pi/2^10 = 3.068e-3 is too big.
    CHECK(iters_for_error(1.6e-3) == 10);
    // pi/2^12 = 7.67e-4 <= 1e-3.
    CHECK(iters_for_error(1e-3) == 11);
    CHECK_THROWS_AS(iters_for_error(0.0), std::invalid_argument);
    CHECK_THROWS_AS(iters_for_error(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(iters_for_error(2.0), std::invalid_argument);
}

TEST_CASE("config resolution") {
    CHECK(SearchConfig::for_iterations(7).resolve_iterations() == 7);
    CHECK(SearchConfig::for_target_error(1e-3).resolve_iterations() == 11);

    SearchConfig both = SearchConfig::for_iterations(3);
    both.target_error = 1e-3; // target error wins
    CHECK(both.resolve_iterations() == 11);

    SearchConfig neither;
    CHECK_THROWS_AS(neither.resolve_iterations(), std::invalid_argument);
    CHECK_THROWS_AS(SearchConfig::for_iterations(0).resolve_iterations(),
                    std::invalid_argument);
}

TEST_CASE("midpoint start hits an exact angle immediately") {
    const SearchResult result =
        search_single(QuantumState::from_angle(kPi / 4), SearchConfig::for_iterations(20));
    CHECK(result.converged_exact);
    CHECK(result.iterations_used == 1);
    CHECK(result.oracle_calls == 1);
    CHECK(result.theta_hat == kPi / 4);
}

TEST_CASE("known angle within the advertised bound") {
    const SearchResult result =
        search_single(QuantumState::from_angle(kPi / 3), SearchConfig::for_iterations(20));
    CHECK_FALSE(result.converged_exact);
    CHECK(result.oracle_calls == 20);
    CHECK(std::abs(result.theta_hat - kPi / 3) <= bound_for_iters(20));
    CHECK(result.amplitude_hat == std::sin(result.theta_hat));
}

TEST_CASE("boundary angles stay inside the bound") {
    const SearchResult low =
        search_single(QuantumState::from_angle(0.0), SearchConfig::for_iterations(10));
    CHECK(low.theta_hat <= bound_for_iters(10));

    const SearchResult high =
        search_single(QuantumState::from_angle(kPi / 2), SearchConfig::for_iterations(10));
    CHECK(kPi / 2 - high.theta_hat <= bound_for_iters(10));
}

TEST_CASE("interval history nests and contains the hidden angle") {
    const double alpha = 0.9371;
    const SearchResult result =
        search_single(QuantumState::from_angle(alpha), SearchConfig::for_iterations(25));
    REQUIRE(result.interval_history.size() == 25);
    double width = kPi / 2;
    double lo = 0.0, hi = kPi / 2;
    for (const IntervalStep& step : result.interval_history) {
        CHECK(step.beta_lo >= lo);
        CHECK(step.beta_hi <= hi);
        CHECK(step.beta_hi - step.beta_lo <= width + 1e-15);
        CHECK(alpha >= step.beta_lo - 1e-12);
        CHECK(alpha <= step.beta_hi + 1e-12);
        width = step.beta_hi - step.beta_lo;
        lo = step.beta_lo;
        hi = step.beta_hi;
    }
}

TEST_CASE("geometric shrinkage with midpoint init") {
    const SearchResult result =
        search_single(QuantumState::from_angle(1.0471), SearchConfig::for_iterations(12));
    for (std::size_t t = 0; t < result.interval_history.size(); ++t) {
        const IntervalStep& step = result.interval_history[t];
        const double expected = (kPi / 2) * std::ldexp(1.0, -static_cast<int>(t + 1));
        CHECK(std::abs((step.beta_hi - step.beta_lo) - expected) <= 1e-15);
        // The next trial angle is the midpoint of the surviving interval.
        CHECK(std::abs(step.beta - (step.beta_lo + step.beta_hi) / 2) <= 1e-15);
    }
}

TEST_CASE("error bound over many random angles and init modes") {
    Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const double alpha = rng.next_in(0.0, kPi / 2);
        const QuantumState psi = QuantumState::from_angle(alpha);

        SearchConfig midpoint = SearchConfig::for_iterations(12);
        CHECK(std::abs(search_single(psi, midpoint).theta_hat - alpha) <=
              bound_for_iters(12) + 1e-12);

        SearchConfig randomized = SearchConfig::for_iterations(12);
        randomized.init_mode = InitMode::RandomSeeded;
        randomized.seed = rng.next_u64();
        // Random start gives up one halving: pi/2^m.
        CHECK(std::abs(search_single(psi, randomized).theta_hat - alpha) <=
              2 * bound_for_iters(12) + 1e-12);

        SearchConfig fixed = SearchConfig::for_iterations(12);
        fixed.init_mode = InitMode::Fixed;
        fixed.fixed_beta = rng.next_in(0.0, kPi / 2);
        CHECK(std::abs(search_single(psi, fixed).theta_hat - alpha) <=
              2 * bound_for_iters(12) + 1e-12);
    }
}

TEST_CASE("amplitude transfer is Lipschitz") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = rng.next_in(0.0, kPi / 2);
        const SearchResult result =
            search_single(QuantumState::from_angle(alpha), SearchConfig::for_iterations(8));
        CHECK(std::abs(result.amplitude_hat - std::sin(alpha)) <=
              std::abs(result.theta_hat - alpha) + 1e-15);
    }
}

TEST_CASE("multipartite search estimates a_k") {
    std::vector<double> point(8, 0.0);
    point[3] = 1.0;
    const SearchResult on_k =
        search_multi(QuantumState(std::move(point)), BasisIndex(3, 3),
                     SearchConfig::for_iterations(15));
    CHECK(kPi / 2 - on_k.theta_hat <= bound_for_iters(15));
    CHECK(1.0 - on_k.amplitude_hat <= bound_for_iters(15));

    // Uniform 4-dim state: theta = arcsin(1/2) = pi/6 at every k.
    const QuantumState uniform({0.5, 0.5, 0.5, 0.5});
    const SearchResult mid =
        search_multi(uniform, BasisIndex(2, 2), SearchConfig::for_iterations(20));
    CHECK(std::abs(mid.amplitude_hat - 0.5) <= bound_for_iters(20));
    CHECK(mid.oracle_calls == 20);
    CHECK(mid.state_preparations == 20);
    CHECK(mid.gate_applications == 40);
}

TEST_CASE("search validation") {
    CHECK_THROWS_AS(search_single(QuantumState({0.6, -0.8}), SearchConfig::for_iterations(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        search_single(QuantumState({0.5, 0.5, 0.5, 0.5}), SearchConfig::for_iterations(4)),
        DimensionMismatch);
    SearchConfig bad_fixed = SearchConfig::for_iterations(4);
    bad_fixed.init_mode = InitMode::Fixed;
    bad_fixed.fixed_beta = 3.0;
    CHECK_THROWS_AS(search_single(QuantumState::from_angle(0.3), bad_fixed),
                    std::invalid_argument);
    CHECK_THROWS_AS(search_multi(random_nonneg_state(2, 1), BasisIndex(1, 3),
                                 SearchConfig::for_iterations(4)),
                    DimensionMismatch);
}

TEST_CASE("config eq_tol drives the equal short-circuit") {
    SearchConfig loose = SearchConfig::for_iterations(30);
    loose.eq_tol = 0.2; // merges everything within ~arcsin(0.28) of the trial
    const SearchResult result = search_single(QuantumState::from_angle(0.9), loose);
    CHECK(result.converged_exact);
    CHECK(result.iterations_used < 30);
    CHECK(std::abs(result.theta_hat - 0.9) <= std::asin(std::numbers::sqrt2 * 0.2));
}

TEST_CASE("fixed init at the exact angle stops immediately") {
    SearchConfig config = SearchConfig::for_iterations(9);
    config.init_mode = InitMode::Fixed;
    config.fixed_beta = 0.0;
    const SearchResult result = search_single(QuantumState::from_angle(0.0), config);
    CHECK(result.converged_exact);
    CHECK(result.iterations_used == 1);
    CHECK(result.theta_hat == 0.0);
}
