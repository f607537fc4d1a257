#include "qamp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <utility>

#include "qamp/bisection.hpp"
#include "qamp/comparator.hpp"
#include "qamp/gates.hpp"
#include "qamp/rng.hpp"
#include "qamp/sampling.hpp"
#include "qamp/separable.hpp"
#include "qamp/statevector.hpp"

namespace qamp {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

struct SuiteCheck {
    bool passed = true;
    std::string detail;

    void fail(const std::string& message) {
        passed = false;
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double entry_distance(const LinearOperator& a, const LinearOperator& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

SuiteCheck check_gate_identities() {
    SuiteCheck check;
    const double z = entry_distance(rotation_c(0.0), standard_gate(GateName::PauliZ));
    const double h = entry_distance(rotation_c(kHalfPi / 2), standard_gate(GateName::Hadamard));
    const double x = entry_distance(rotation_c(kHalfPi), standard_gate(GateName::PauliX));
    const double worst = std::max({z, h, x});
    if (worst > 1e-15) check.fail("rotation identities residual " + fmt(worst));

    double rot_worst = 0.0;
    for (int i = 0; i <= 64; ++i) {
        const double beta = kHalfPi * i / 64;
        const QuantumState rotated = apply(rotation_c(beta), QuantumState({1.0, 0.0}));
        rot_worst = std::max({rot_worst, std::abs(rotated.amplitude(0) - std::cos(beta)),
                              std::abs(rotated.amplitude(1) - std::sin(beta))});
    }
    if (rot_worst > 1e-15) check.fail("rotation column residual " + fmt(rot_worst));
    if (check.passed) {
        check.detail = "identity residual " + fmt(worst) + ", rotation residual " + fmt(rot_worst);
    }
    return check;
}

SuiteCheck check_operator_a() {
    SuiteCheck check;
    const LinearOperator a = operator_a();
    const double residual = a.orthogonality_residual();
    if (residual > 1e-14) check.fail("orthogonality residual " + fmt(residual));

    Rng rng(0x5eedu);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double alpha = rng.next_in(0.0, kHalfPi);
        const double beta = rng.next_in(0.0, kHalfPi);
        const PipelineTrace trace = pipeline_trace(QuantumState::from_angle(alpha), beta);
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        const double expected[4] = {inv_sqrt2 * std::cos(alpha + beta),
                                    inv_sqrt2 * std::sin(alpha + beta),
                                    inv_sqrt2 * std::sin(alpha - beta),
                                    inv_sqrt2 * std::cos(alpha - beta)};
        for (int i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(trace.phi2.amplitude(i) - expected[i]));
        }
    }
    if (worst > 1e-12) check.fail("closed-form residual " + fmt(worst));
    if (check.passed) {
        check.detail = "orthogonality residual " + fmt(residual) + ", closed form within " +
                       fmt(worst) + " over 1000 samples";
    }
    return check;
}

SuiteCheck check_error_bound() {
    SuiteCheck check;
    Rng rng(0xb15ec7u);
    double reported_max = 0.0;
    for (const int m : {5, 10, 20}) {
        const double bound = bound_for_iters(m) + 1e-12;
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const double alpha = rng.next_in(0.0, kHalfPi);
            const SearchResult result =
                search_single(QuantumState::from_angle(alpha), SearchConfig::for_iterations(m));
            worst = std::max(worst, std::abs(result.theta_hat - alpha));
        }
        if (worst > bound) {
            check.fail("m=" + std::to_string(m) + " max error " + fmt(worst) + " exceeds " +
                       fmt(bound));
        }
        if (m == 20) reported_max = worst;
    }
    if (check.passed) {
        check.detail = "m=20 max error " + fmt(reported_max) + " <= " + fmt(bound_for_iters(20));
    }
    return check;
}

SuiteCheck check_reduced_full_equivalence() {
    SuiteCheck check;
    Rng rng(0xfacadeu);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.next_u64() % 6);
        const QuantumState psi = random_nonneg_state(n, rng.next_u64());
        const BasisIndex k(rng.next_u64() % psi.dim(), n);
        const double beta = rng.next_in(0.0, kHalfPi);

        const ComparisonOutcome reduced = compare_multi(psi, k, beta);
        const PipelineTrace full = pipeline_trace(psi, k, beta);
        if (reduced != outcome_from_trace(full, 2 * k.index)) {
            check.fail("outcome mismatch at trial " + std::to_string(trial));
            break;
        }

        const double theta = std::asin(std::min(1.0, psi.amplitude(k.index)));
        const auto basis = effective_basis(psi, k);
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        const double expected[4] = {inv_sqrt2 * std::cos(theta + beta),
                                    inv_sqrt2 * std::sin(theta + beta),
                                    inv_sqrt2 * std::sin(theta - beta),
                                    inv_sqrt2 * std::cos(theta - beta)};
        for (int i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(inner(basis[i], full.phi2) - expected[i]));
        }
    }
    if (worst > 1e-12) check.fail("effective-basis coefficient residual " + fmt(worst));
    if (check.passed) {
        check.detail = "100 trials agree, coefficient residual " + fmt(worst);
    }
    return check;
}

SuiteCheck check_separability() {
    SuiteCheck check;
    Rng rng(0x9a7b3cu);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng.next_u64() % 7);
        std::vector<double> angles(n);
        for (double& a : angles) a = rng.next_in(0.0, kHalfPi);
        const auto recovered = factor_product_state(product_state(angles));
        if (!recovered.has_value()) {
            check.fail("product state rejected at trial " + std::to_string(trial));
            break;
        }
        for (unsigned l = 0; l < n; ++l) {
            worst = std::max(worst, std::abs((*recovered)[l] - angles[l]));
        }
    }
    if (worst > 1e-10) check.fail("recovered angle residual " + fmt(worst));

    int rejected = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned extra = static_cast<unsigned>(rng.next_u64() % 5);
        std::vector<double> bell(4, 0.0);
        bell[0] = bell[3] = 1.0;
        QuantumState state = QuantumState::from_amplitudes(std::move(bell));
        if (extra > 0) {
            std::vector<double> angles(extra);
            for (double& a : angles) a = rng.next_in(0.0, kHalfPi);
            state = tensor(state, product_state(angles));
        }
        if (!factor_product_state(state).has_value()) ++rejected;
    }
    if (rejected != 50) {
        check.fail("only " + std::to_string(rejected) + "/50 entangled states rejected");
    }
    if (check.passed) {
        check.detail = "50 round trips within " + fmt(worst) + ", 50 entangled rejections";
    }
    return check;
}

SuiteCheck check_projection_partition() {
    SuiteCheck check;
    Rng rng(0x70a57u);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.next_u64() % 5);
        const QuantumState psi = random_nonneg_state(n, rng.next_u64());
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            if (rng.next_u64() & 1u) subset.push_back(i);
        }
        const Projector p(std::move(subset), psi.dim());
        const double total = projection_weight(p, psi) + projection_weight(p.complement(), psi);
        worst = std::max(worst, std::abs(total - 1.0));
    }
    if (worst > 1e-12) check.fail("partition residual " + fmt(worst));
    if (check.passed) check.detail = "partition residual " + fmt(worst) + " over 200 trials";
    return check;
}

SuiteCheck check_baseline_sampling() {
    SuiteCheck check;
    const QuantumState psi = random_nonneg_state(2, 0x5a3fu);
    std::vector<double> truth(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) truth[i] = std::asin(psi.amplitude(i));

    const double delta_e = 0.05;
    const long long shots = static_cast<long long>(required_shots(2, delta_e));
    int ok = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const SampleReport report = run_sampling(psi, shots, 1000 + trial);
        long long sum = 0;
        for (long long c : report.counts) sum += c;
        if (sum != shots) {
            check.fail("count conservation violated");
            return check;
        }
        double max_err = 0.0;
        for (std::size_t i = 0; i < truth.size(); ++i) {
            max_err = std::max(max_err, std::abs(report.angle_estimates[i] - truth[i]));
        }
        if (max_err <= delta_e) ++ok;
    }
    if (ok < 190) {
        check.fail("only " + std::to_string(ok) + "/200 trials within the shot-budget error");
    }

    const auto once = sample_counts(psi, shots, 77);
    const auto twice = sample_counts(psi, shots, 77);
    if (once != twice) check.fail("same seed produced different counts");

    if (check.passed) {
        check.detail = std::to_string(ok) + "/200 trials within delta_e at N=" +
                       std::to_string(shots);
    }
    return check;
}

} // namespace

std::vector<VerifySuiteResult> run_verification() {
    const std::vector<std::pair<std::string, std::function<SuiteCheck()>>> suites = {
        {"gate-identities", check_gate_identities},
        {"operator-a", check_operator_a},
        {"error-bound", check_error_bound},
        {"reduced-full-equivalence", check_reduced_full_equivalence},
        {"separability", check_separability},
        {"projection-partition", check_projection_partition},
        {"baseline-sampling", check_baseline_sampling},
    };

    std::vector<VerifySuiteResult> results;
    results.reserve(suites.size());
    for (const auto& [name, fn] : suites) {
        const auto start = std::chrono::steady_clock::now();
        SuiteCheck check;
        try {
            check = fn();
        } catch (const std::exception& e) {
            check.passed = false;
            check.detail = std::string("exception: ") + e.what();
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        results.push_back({name, check.passed, check.detail, elapsed.count()});
    }
    return results;
}

} // namespace qamp
