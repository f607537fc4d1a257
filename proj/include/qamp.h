/*
 * qamp - binary-search amplitude measurement on real-valued state vectors.
 *
 * C interface to the simulator core. All objects are opaque handles created
 * and released through these functions; every fallible call returns a
 * qamp_status, with qamp_last_error() holding a human-readable detail
 * message for the most recent failure on the calling thread.
 */

#ifndef QAMP_H
#define QAMP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qamp_status {
    QAMP_OK = 0,
    QAMP_ERR_INVALID_ARGUMENT = 1,
    QAMP_ERR_DIMENSION_MISMATCH = 2,
    QAMP_ERR_NOT_SEPARABLE = 3,
    QAMP_ERR_IO = 4,
    QAMP_ERR_PARSE = 5,
    QAMP_ERR_OVERFLOW = 6,
    QAMP_ERR_INTERNAL = 7
} qamp_status;

/* Comparator verdict for the hidden angle against the trial angle. */
typedef enum qamp_outcome {
    QAMP_CMP_EQUAL = 0,
    QAMP_CMP_HIDDEN_GREATER = 1,
    QAMP_CMP_HIDDEN_LESS = -1
} qamp_outcome;

typedef enum qamp_init_mode {
    QAMP_INIT_MIDPOINT = 0,
    QAMP_INIT_FIXED = 1,
    QAMP_INIT_RANDOM = 2
} qamp_init_mode;

typedef struct qamp_state qamp_state;
typedef struct qamp_result qamp_result;
typedef struct qamp_verify_report qamp_verify_report;

/*
 * Binary-search parameters. Exactly one of iterations / target_error must be
 * positive; when both are, target_error wins and the iteration count is
 * derived from it. eq_tol <= 0 selects the default 1e-12.
 */
typedef struct qamp_search_config {
    int init_mode;       /* qamp_init_mode */
    double fixed_beta;   /* QAMP_INIT_FIXED only */
    uint64_t seed;       /* QAMP_INIT_RANDOM only */
    int iterations;
    double target_error;
    double eq_tol;
} qamp_search_config;

const char* qamp_version(void);
const char* qamp_strerror(qamp_status status);

/* Detail message for the last failing call on this thread; empty otherwise. */
const char* qamp_last_error(void);

/* ---- states ---------------------------------------------------------- */

/* Single-qubit state [cos alpha, sin alpha], alpha in [0, pi/2]. */
qamp_status qamp_state_from_angle(double alpha, qamp_state** out);

/* Renormalizes a power-of-two-length vector; rejects negatives when asked. */
qamp_status qamp_state_from_amplitudes(const double* amplitudes, size_t len,
                                       int require_nonneg, qamp_state** out);

/* Tensor product of [cos a_i, sin a_i] factors (angle i most significant). */
qamp_status qamp_state_product(const double* angles, size_t n_angles, qamp_state** out);

/* Nonnegative amplitudes drawn from the seeded generator, then normalized. */
qamp_status qamp_state_random(unsigned num_qubits, uint64_t seed, qamp_state** out);

/* JSON state document: num_qubits plus amplitudes or angles. */
qamp_status qamp_state_load(const char* path, qamp_state** out);
qamp_status qamp_state_save(const qamp_state* state, const char* path);

void qamp_state_free(qamp_state* state);

unsigned qamp_state_num_qubits(const qamp_state* state);
size_t qamp_state_dim(const qamp_state* state);
double qamp_state_amplitude(const qamp_state* state, size_t index);
int qamp_state_nonnegative(const qamp_state* state);

/* ---- error bounds and shot budgets ----------------------------------- */

/* pi / 2^(m+1): guaranteed angle error after m midpoint-start iterations. */
qamp_status qamp_error_bound(int m, double* out);

/* Smallest m with pi / 2^(m+1) <= delta_e; delta_e in (0, pi/2]. */
qamp_status qamp_iters_for_error(double delta_e, int* out);

/* ceil(2^n / delta_e^2): traditional shot budget for per-angle error delta_e. */
qamp_status qamp_required_shots(unsigned num_qubits, double delta_e, uint64_t* out);

/* ---- comparator oracle ------------------------------------------------ */

qamp_status qamp_compare_single(const qamp_state* state, double beta, double eq_tol,
                                qamp_outcome* out);
qamp_status qamp_compare_amplitude(const qamp_state* state, size_t k, double beta,
                                   double eq_tol, qamp_outcome* out);

/* ---- binary searches --------------------------------------------------- */

qamp_status qamp_search_single(const qamp_state* state, const qamp_search_config* config,
                               qamp_result** out);
qamp_status qamp_search_amplitude(const qamp_state* state, size_t k,
                                  const qamp_search_config* config, qamp_result** out);

/*
 * One search per extracted factor of a product state. results must hold
 * capacity >= num_qubits slots; *n_out receives the number written. Fails
 * with QAMP_ERR_NOT_SEPARABLE when the state has no product form.
 */
qamp_status qamp_search_separable(const qamp_state* state, const qamp_search_config* config,
                                  qamp_result** results, size_t capacity, size_t* n_out);

void qamp_result_free(qamp_result* result);

double qamp_result_theta(const qamp_result* result);
double qamp_result_amplitude(const qamp_result* result);
int qamp_result_iterations(const qamp_result* result);
long long qamp_result_oracle_calls(const qamp_result* result);
long long qamp_result_gate_applications(const qamp_result* result);
long long qamp_result_state_preparations(const qamp_result* result);
int qamp_result_converged_exact(const qamp_result* result);

/* Interval audit trail: (lo, hi, trial) after each oracle call. */
size_t qamp_result_history_len(const qamp_result* result);
qamp_status qamp_result_history_entry(const qamp_result* result, size_t i, double* beta_lo,
                                      double* beta_hi, double* beta);

/* ---- separability ------------------------------------------------------ */

/*
 * Writes the factor angles of a product state into angles_out (capacity >=
 * num_qubits) and sets *separable_out to 1, or sets it to 0 and writes
 * nothing when the state is entangled.
 */
qamp_status qamp_factor_angles(const qamp_state* state, double* angles_out, size_t capacity,
                               int* separable_out);

/* ---- shot-sampling baseline -------------------------------------------- */

/* Multinomial Born-rule counts; counts_out needs capacity >= state dim. */
qamp_status qamp_sample_counts(const qamp_state* state, long long n_shots, uint64_t seed,
                               long long* counts_out, size_t capacity);

/* Angle estimates arcsin(sqrt(count/total)) per basis index. */
qamp_status qamp_estimate_angles(const long long* counts, size_t len, long long total_shots,
                                 double* angles_out);

/* ---- built-in verification suites -------------------------------------- */

qamp_status qamp_verify_run(qamp_verify_report** out);
void qamp_verify_report_free(qamp_verify_report* report);

size_t qamp_verify_suite_count(const qamp_verify_report* report);
const char* qamp_verify_suite_name(const qamp_verify_report* report, size_t i);
int qamp_verify_suite_passed(const qamp_verify_report* report, size_t i);
const char* qamp_verify_suite_detail(const qamp_verify_report* report, size_t i);
double qamp_verify_suite_seconds(const qamp_verify_report* report, size_t i);
int qamp_verify_all_passed(const qamp_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* QAMP_H */
