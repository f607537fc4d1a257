#include "qamp.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "qamp/bisection.hpp"
#include "qamp/error.hpp"
#include "qamp/sampling.hpp"
#include "qamp/separable.hpp"
#include "qamp/state_io.hpp"
#include "qamp/statevector.hpp"
#include "qamp/verify.hpp"

struct qamp_state {
    qamp::QuantumState rep;
};

struct qamp_result {
    qamp::SearchResult rep;
};

struct qamp_verify_report {
    std::vector<qamp::VerifySuiteResult> rep;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) { g_last_error = message; }

qamp_status fail(qamp_status status, const char* message) {
    set_error(message);
    return status;
}

// Translates the active exception into a status code + detail message.
qamp_status translate_exception() {
    try {
        throw;
    } catch (const qamp::DimensionMismatch& e) {
        return fail(QAMP_ERR_DIMENSION_MISMATCH, e.what());
    } catch (const qamp::NotSeparable& e) {
        return fail(QAMP_ERR_NOT_SEPARABLE, e.what());
    } catch (const qamp::ParseError& e) {
        return fail(QAMP_ERR_PARSE, e.what());
    } catch (const qamp::IoError& e) {
        return fail(QAMP_ERR_IO, e.what());
    } catch (const std::overflow_error& e) {
        return fail(QAMP_ERR_OVERFLOW, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QAMP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QAMP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QAMP_ERR_INTERNAL, "unknown error");
    }
}

template <typename Fn>
qamp_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QAMP_OK;
    } catch (...) {
        return translate_exception();
    }
}

qamp_status make_state(qamp::QuantumState&& state, qamp_state** out) {
    *out = new qamp_state{std::move(state)};
    return QAMP_OK;
}

qamp::SearchConfig to_core_config(const qamp_search_config* config) {
    if (config == nullptr) throw std::invalid_argument("null search config");
    qamp::SearchConfig core;
    switch (config->init_mode) {
        case QAMP_INIT_MIDPOINT:
            core.init_mode = qamp::InitMode::Midpoint;
            break;
        case QAMP_INIT_FIXED:
            core.init_mode = qamp::InitMode::Fixed;
            core.fixed_beta = config->fixed_beta;
            break;
        case QAMP_INIT_RANDOM:
            core.init_mode = qamp::InitMode::RandomSeeded;
            core.seed = config->seed;
            break;
        default:
            throw std::invalid_argument("unknown init mode");
    }
    if (config->iterations > 0) core.iterations = config->iterations;
    if (config->target_error > 0.0) core.target_error = config->target_error;
    if (config->eq_tol > 0.0) core.eq_tol = config->eq_tol;
    return core;
}

qamp_outcome to_c_outcome(qamp::ComparisonOutcome outcome) {
    switch (outcome) {
        case qamp::ComparisonOutcome::EqualWithinTol:
            return QAMP_CMP_EQUAL;
        case qamp::ComparisonOutcome::HiddenGreater:
            return QAMP_CMP_HIDDEN_GREATER;
        case qamp::ComparisonOutcome::HiddenLess:
            return QAMP_CMP_HIDDEN_LESS;
    }
    return QAMP_CMP_EQUAL;
}

} // namespace

extern "C" {

const char* qamp_version(void) { return "1.0.0"; }

const char* qamp_strerror(qamp_status status) {
    switch (status) {
        case QAMP_OK: return "ok";
        case QAMP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QAMP_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case QAMP_ERR_NOT_SEPARABLE: return "state is not separable";
        case QAMP_ERR_IO: return "i/o error";
        case QAMP_ERR_PARSE: return "parse error";
        case QAMP_ERR_OVERFLOW: return "numeric overflow";
        case QAMP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* qamp_last_error(void) { return g_last_error.c_str(); }

qamp_status qamp_state_from_angle(double alpha, qamp_state** out) {
    if (out == nullptr) return fail(QAMP_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { make_state(qamp::QuantumState::from_angle(alpha), out); });
}

qamp_status qamp_state_from_amplitudes(const double* amplitudes, size_t len, int require_nonneg,
                                       qamp_state** out) {
    if (out == nullptr || amplitudes == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] {
        std::vector<double> amps(amplitudes, amplitudes + len);
        make_state(qamp::QuantumState::from_amplitudes(std::move(amps), require_nonneg != 0), out);
    });
}

qamp_status qamp_state_product(const double* angles, size_t n_angles, qamp_state** out) {
    if (out == nullptr || angles == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] {
        make_state(qamp::product_state(std::span<const double>(angles, n_angles)), out);
    });
}

qamp_status qamp_state_random(unsigned num_qubits, uint64_t seed, qamp_state** out) {
    if (out == nullptr) return fail(QAMP_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { make_state(qamp::random_nonneg_state(num_qubits, seed), out); });
}

qamp_status qamp_state_load(const char* path, qamp_state** out) {
    if (out == nullptr || path == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] { make_state(qamp::load_state_file(path), out); });
}

qamp_status qamp_state_save(const qamp_state* state, const char* path) {
    if (state == nullptr || path == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] { qamp::save_state_file(state->rep, path); });
}

void qamp_state_free(qamp_state* state) { delete state; }

unsigned qamp_state_num_qubits(const qamp_state* state) {
    return state == nullptr ? 0 : state->rep.num_qubits();
}

size_t qamp_state_dim(const qamp_state* state) {
    return state == nullptr ? 0 : state->rep.dim();
}

double qamp_state_amplitude(const qamp_state* state, size_t index) {
    if (state == nullptr || index >= state->rep.dim()) return std::nan("");
    return state->rep.amplitude(index);
}

int qamp_state_nonnegative(const qamp_state* state) {
    return state != nullptr && state->rep.nonnegative() ? 1 : 0;
}

qamp_status qamp_error_bound(int m, double* out) {
    if (out == nullptr) return fail(QAMP_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = qamp::bound_for_iters(m); });
}

qamp_status qamp_iters_for_error(double delta_e, int* out) {
    if (out == nullptr) return fail(QAMP_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = qamp::iters_for_error(delta_e); });
}

qamp_status qamp_required_shots(unsigned num_qubits, double delta_e, uint64_t* out) {
    if (out == nullptr) return fail(QAMP_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = qamp::required_shots(num_qubits, delta_e); });
}

qamp_status qamp_compare_single(const qamp_state* state, double beta, double eq_tol,
                                qamp_outcome* out) {
    if (state == nullptr || out == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] {
        *out = to_c_outcome(qamp::compare_single(state->rep, beta, eq_tol > 0 ? eq_tol : 1e-12));
    });
}

qamp_status qamp_compare_amplitude(const qamp_state* state, size_t k, double beta, double eq_tol,
                                   qamp_outcome* out) {
    if (state == nullptr || out == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] {
        const qamp::BasisIndex index(k, state->rep.num_qubits());
        *out = to_c_outcome(
            qamp::compare_multi(state->rep, index, beta, eq_tol > 0 ? eq_tol : 1e-12));
    });
}

qamp_status qamp_search_single(const qamp_state* state, const qamp_search_config* config,
                               qamp_result** out) {
    if (state == nullptr || out == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] {
        *out = new qamp_result{qamp::search_single(state->rep, to_core_config(config))};
    });
}

qamp_status qamp_search_amplitude(const qamp_state* state, size_t k,
                                  const qamp_search_config* config, qamp_result** out) {
    if (state == nullptr || out == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] {
        const qamp::BasisIndex index(k, state->rep.num_qubits());
        *out = new qamp_result{qamp::search_multi(state->rep, index, to_core_config(config))};
    });
}

qamp_status qamp_search_separable(const qamp_state* state, const qamp_search_config* config,
                                  qamp_result** results, size_t capacity, size_t* n_out) {
    if (state == nullptr || results == nullptr || n_out == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    if (capacity < state->rep.num_qubits()) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "result capacity below qubit count");
    }
    return guarded([&] {
        auto core_results = qamp::search_separable(state->rep, to_core_config(config));
        for (std::size_t i = 0; i < core_results.size(); ++i) {
            results[i] = new qamp_result{std::move(core_results[i])};
        }
        *n_out = core_results.size();
    });
}

void qamp_result_free(qamp_result* result) { delete result; }

double qamp_result_theta(const qamp_result* result) {
    return result == nullptr ? std::nan("") : result->rep.theta_hat;
}

double qamp_result_amplitude(const qamp_result* result) {
    return result == nullptr ? std::nan("") : result->rep.amplitude_hat;
}

int qamp_result_iterations(const qamp_result* result) {
    return result == nullptr ? 0 : result->rep.iterations_used;
}

long long qamp_result_oracle_calls(const qamp_result* result) {
    return result == nullptr ? 0 : result->rep.oracle_calls;
}

long long qamp_result_gate_applications(const qamp_result* result) {
    return result == nullptr ? 0 : result->rep.gate_applications;
}

long long qamp_result_state_preparations(const qamp_result* result) {
    return result == nullptr ? 0 : result->rep.state_preparations;
}

int qamp_result_converged_exact(const qamp_result* result) {
    return result != nullptr && result->rep.converged_exact ? 1 : 0;
}

size_t qamp_result_history_len(const qamp_result* result) {
    return result == nullptr ? 0 : result->rep.interval_history.size();
}

qamp_status qamp_result_history_entry(const qamp_result* result, size_t i, double* beta_lo,
                                      double* beta_hi, double* beta) {
    if (result == nullptr || beta_lo == nullptr || beta_hi == nullptr || beta == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    if (i >= result->rep.interval_history.size()) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "history index out of range");
    }
    const auto& step = result->rep.interval_history[i];
    *beta_lo = step.beta_lo;
    *beta_hi = step.beta_hi;
    *beta = step.beta;
    g_last_error.clear();
    return QAMP_OK;
}

qamp_status qamp_factor_angles(const qamp_state* state, double* angles_out, size_t capacity,
                               int* separable_out) {
    if (state == nullptr || angles_out == nullptr || separable_out == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    if (capacity < state->rep.num_qubits()) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "angle capacity below qubit count");
    }
    return guarded([&] {
        const auto angles = qamp::factor_product_state(state->rep);
        if (angles.has_value()) {
            std::memcpy(angles_out, angles->data(), angles->size() * sizeof(double));
            *separable_out = 1;
        } else {
            *separable_out = 0;
        }
    });
}

qamp_status qamp_sample_counts(const qamp_state* state, long long n_shots, uint64_t seed,
                               long long* counts_out, size_t capacity) {
    if (state == nullptr || counts_out == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    if (capacity < state->rep.dim()) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "count capacity below state dimension");
    }
    return guarded([&] {
        const auto counts = qamp::sample_counts(state->rep, n_shots, seed);
        std::memcpy(counts_out, counts.data(), counts.size() * sizeof(long long));
    });
}

qamp_status qamp_estimate_angles(const long long* counts, size_t len, long long total_shots,
                                 double* angles_out) {
    if (counts == nullptr || angles_out == nullptr) {
        return fail(QAMP_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    return guarded([&] {
        const auto angles =
            qamp::estimate_angles(std::span<const long long>(counts, len), total_shots);
        std::memcpy(angles_out, angles.data(), angles.size() * sizeof(double));
    });
}

qamp_status qamp_verify_run(qamp_verify_report** out) {
    if (out == nullptr) return fail(QAMP_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = new qamp_verify_report{qamp::run_verification()}; });
}

void qamp_verify_report_free(qamp_verify_report* report) { delete report; }

size_t qamp_verify_suite_count(const qamp_verify_report* report) {
    return report == nullptr ? 0 : report->rep.size();
}

const char* qamp_verify_suite_name(const qamp_verify_report* report, size_t i) {
    if (report == nullptr || i >= report->rep.size()) return "";
    return report->rep[i].name.c_str();
}

int qamp_verify_suite_passed(const qamp_verify_report* report, size_t i) {
    if (report == nullptr || i >= report->rep.size()) return 0;
    return report->rep[i].passed ? 1 : 0;
}

const char* qamp_verify_suite_detail(const qamp_verify_report* report, size_t i) {
    if (report == nullptr || i >= report->rep.size()) return "";
    return report->rep[i].detail.c_str();
}

double qamp_verify_suite_seconds(const qamp_verify_report* report, size_t i) {
    if (report == nullptr || i >= report->rep.size()) return 0.0;
    return report->rep[i].seconds;
}

int qamp_verify_all_passed(const qamp_verify_report* report) {
    if (report == nullptr) return 0;
    for (const auto& suite : report->rep) {
        if (!suite.passed) return 0;
    }
    return 1;
}

} // extern "C"
