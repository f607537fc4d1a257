// qamp: estimate amplitudes by comparator-driven binary search, sample the
// traditional shot-count baseline, compare the two at a matched error
// target, or run the built-in verification suites.
//
// Report bodies (stdout or --out) are deterministic for fixed inputs and
// seed; wall-clock timing goes to stderr as a separate record so repeated
// runs stay byte-identical.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qamp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerifyFailed = 3;

// All report decimals use 17 significant digits so values round-trip.
std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string fmt_int(long long v) { return std::to_string(v); }

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail_input(const std::string& message) {
    throw CliError{kExitInput, message};
}

void check(qamp_status status, const std::string& context) {
    if (status == QAMP_OK) return;
    const std::string detail = qamp_last_error();
    throw CliError{kExitInput, context + ": " + qamp_strerror(status) +
                                   (detail.empty() ? "" : " (" + detail + ")")};
}

struct StateHandle {
    qamp_state* ptr = nullptr;
    ~StateHandle() { qamp_state_free(ptr); }
    StateHandle() = default;
    StateHandle(const StateHandle&) = delete;
    StateHandle& operator=(const StateHandle&) = delete;
};

struct ResultHandle {
    qamp_result* ptr = nullptr;
    ~ResultHandle() { qamp_result_free(ptr); }
    ResultHandle() = default;
    ResultHandle(ResultHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    ResultHandle& operator=(ResultHandle&& other) noexcept {
        std::swap(ptr, other.ptr);
        return *this;
    }
    ResultHandle(const ResultHandle&) = delete;
    ResultHandle& operator=(const ResultHandle&) = delete;
};

// ---- shared options ---------------------------------------------------------

struct SourceOptions {
    std::string state_path;
    std::string random_spec; // "<n>:<seed>"
    std::string frqi_path;
};

struct SearchOptions {
    int iters = 0;
    double error = 0.0;
    std::string init = "midpoint";
    double eq_tol = 0.0;
};

struct OutputOptions {
    std::string format = "json-lines";
    std::string out_path;
};

void add_source_flags(CLI::App* cmd, SourceOptions& src) {
    auto* state = cmd->add_option("--state", src.state_path, "state document (JSON) to load");
    auto* random =
        cmd->add_option("--random", src.random_spec, "random nonneg state, form <n>:<seed>");
    auto* frqi = cmd->add_option("--frqi", src.frqi_path,
                                 "JSON array of per-qubit angles building a product state");
    state->excludes(random)->excludes(frqi);
    random->excludes(frqi);
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "json-lines or csv")
        ->check(CLI::IsMember({"json-lines", "csv"}));
    cmd->add_option("--out", out.out_path, "report path (default standard output)");
}

void load_source(const SourceOptions& src, StateHandle& state) {
    const int given = (!src.state_path.empty()) + (!src.random_spec.empty()) +
                      (!src.frqi_path.empty());
    if (given != 1) fail_input("choose exactly one of --state, --random, --frqi");

    if (!src.state_path.empty()) {
        check(qamp_state_load(src.state_path.c_str(), &state.ptr), "loading state");
        return;
    }
    if (!src.random_spec.empty()) {
        const auto colon = src.random_spec.find(':');
        if (colon == std::string::npos) fail_input("--random takes <n>:<seed>");
        unsigned n = 0;
        unsigned long long seed = 0;
        try {
            n = static_cast<unsigned>(std::stoul(src.random_spec.substr(0, colon)));
            seed = std::stoull(src.random_spec.substr(colon + 1));
        } catch (const std::exception&) {
            fail_input("--random takes <n>:<seed> with integer fields");
        }
        check(qamp_state_random(n, seed, &state.ptr), "generating random state");
        return;
    }
    std::ifstream in(src.frqi_path);
    if (!in) fail_input("cannot open angles file: " + src.frqi_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail_input("angles file is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_array() || doc.empty()) fail_input("angles file must be a nonempty JSON array");
    std::vector<double> angles;
    for (const auto& item : doc) {
        if (!item.is_number()) fail_input("angles file entries must be numbers");
        angles.push_back(item.get<double>());
    }
    check(qamp_state_product(angles.data(), angles.size(), &state.ptr), "building product state");
}

qamp_search_config build_config(const SearchOptions& opts, int resolved_m,
                                std::uint64_t seed) {
    qamp_search_config config{};
    config.init_mode = QAMP_INIT_MIDPOINT;
    if (opts.init == "random") {
        config.init_mode = QAMP_INIT_RANDOM;
        config.seed = seed;
    } else if (opts.init.rfind("fixed:", 0) == 0) {
        config.init_mode = QAMP_INIT_FIXED;
        try {
            config.fixed_beta = std::stod(opts.init.substr(6));
        } catch (const std::exception&) {
            fail_input("--init fixed:<beta> needs a numeric beta");
        }
    } else if (opts.init != "midpoint") {
        fail_input("--init takes midpoint, random, or fixed:<beta>");
    }
    config.iterations = resolved_m;
    config.target_error = 0.0;
    config.eq_tol = opts.eq_tol;
    return config;
}

// Exactly one of --iters / --error. A non-midpoint start needs one extra
// halving to keep the guaranteed error at or below the requested target.
int resolve_m(const SearchOptions& opts) {
    if ((opts.iters > 0) == (opts.error > 0.0)) {
        fail_input("choose exactly one of --iters, --error");
    }
    if (opts.iters > 0) return opts.iters;
    int m = 0;
    check(qamp_iters_for_error(opts.error, &m), "deriving iteration count");
    return opts.init == "midpoint" ? m : m + 1;
}

double bound_for(const SearchOptions& opts, int m) {
    double bound = 0.0;
    check(qamp_error_bound(m, &bound), "computing error bound");
    // Non-midpoint starts give up the balanced first split.
    return opts.init == "midpoint" ? bound : 2.0 * bound;
}

// ---- report writing ---------------------------------------------------------

struct ReportSink {
    std::ostream* stream = nullptr;
    std::ofstream file;

    explicit ReportSink(const std::string& path) {
        if (path.empty()) {
            stream = &std::cout;
        } else {
            file.open(path);
            if (!file) fail_input("cannot write report: " + path);
            stream = &file;
        }
    }
    void line(const std::string& text) { (*stream) << text << '\n'; }
};

std::string json_line(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out = "{";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ",";
        out += "\"" + fields[i].first + "\":" + fields[i].second;
    }
    out += "}";
    return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ",";
        out += cells[i];
    }
    return out;
}

// Wall-clock data never enters the report body; it goes to stderr so that
// repeated runs with the same arguments and seed stay byte-identical.
void emit_timing(const std::string& command,
                 const std::vector<std::pair<std::string, double>>& spans) {
    char stamp[32] = {0};
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);

    std::vector<std::pair<std::string, std::string>> fields;
    fields.emplace_back("schema", quoted("qamp.timing.v1"));
    fields.emplace_back("command", quoted(command));
    fields.emplace_back("timestamp_utc", quoted(stamp));
    for (const auto& [name, seconds] : spans) fields.emplace_back(name, fmt_num(seconds));
    std::cerr << json_line(fields) << '\n';
}

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// ---- estimate ----------------------------------------------------------------

struct EstimateRecord {
    std::string mode;
    long long k = 0;
    double theta_hat = 0.0;
    double amplitude_hat = 0.0;
    int iterations = 0;
    long long oracle_calls = 0;
    long long gate_applications = 0;
    long long state_preparations = 0;
    double bound = 0.0;
    bool converged_exact = false;
    double true_theta = 0.0;
    double true_amplitude = 0.0;
};

EstimateRecord record_from_result(const qamp_result* r, const std::string& mode, long long k,
                                  double bound, double true_theta, double true_amplitude) {
    EstimateRecord rec;
    rec.mode = mode;
    rec.k = k;
    rec.theta_hat = qamp_result_theta(r);
    rec.amplitude_hat = qamp_result_amplitude(r);
    rec.iterations = qamp_result_iterations(r);
    rec.oracle_calls = qamp_result_oracle_calls(r);
    rec.gate_applications = qamp_result_gate_applications(r);
    rec.state_preparations = qamp_result_state_preparations(r);
    rec.bound = bound;
    rec.converged_exact = qamp_result_converged_exact(r) != 0;
    rec.true_theta = true_theta;
    rec.true_amplitude = true_amplitude;
    return rec;
}

void write_estimate_records(ReportSink& sink, const std::string& format,
                            const std::vector<EstimateRecord>& records) {
    const std::vector<std::string> columns = {
        "schema",          "mode",        "k",
        "theta_hat",       "amplitude_hat", "iterations",
        "oracle_calls",    "gate_applications", "state_preparations",
        "bound",           "converged_exact", "true_theta",
        "true_amplitude",  "true_error"};
    if (format == "csv") sink.line(csv_row(columns));
    for (const auto& rec : records) {
        const double true_error = std::abs(rec.theta_hat - rec.true_theta);
        if (format == "csv") {
            sink.line(csv_row({"qamp.estimate.v1", rec.mode, fmt_int(rec.k),
                               fmt_num(rec.theta_hat), fmt_num(rec.amplitude_hat),
                               fmt_int(rec.iterations), fmt_int(rec.oracle_calls),
                               fmt_int(rec.gate_applications), fmt_int(rec.state_preparations),
                               fmt_num(rec.bound), rec.converged_exact ? "true" : "false",
                               fmt_num(rec.true_theta), fmt_num(rec.true_amplitude),
                               fmt_num(true_error)}));
        } else {
            sink.line(json_line({{"schema", quoted("qamp.estimate.v1")},
                                 {"mode", quoted(rec.mode)},
                                 {"k", fmt_int(rec.k)},
                                 {"theta_hat", fmt_num(rec.theta_hat)},
                                 {"amplitude_hat", fmt_num(rec.amplitude_hat)},
                                 {"iterations", fmt_int(rec.iterations)},
                                 {"oracle_calls", fmt_int(rec.oracle_calls)},
                                 {"gate_applications", fmt_int(rec.gate_applications)},
                                 {"state_preparations", fmt_int(rec.state_preparations)},
                                 {"bound", fmt_num(rec.bound)},
                                 {"converged_exact", rec.converged_exact ? "true" : "false"},
                                 {"true_theta", fmt_num(rec.true_theta)},
                                 {"true_amplitude", fmt_num(rec.true_amplitude)},
                                 {"true_error", fmt_num(true_error)}}));
        }
    }
}

int run_estimate(const SourceOptions& src, const SearchOptions& search, const OutputOptions& out,
                 std::uint64_t seed, long long k_flag, bool all_k, bool separable) {
    StateHandle state;
    load_source(src, state);
    const unsigned n = qamp_state_num_qubits(state.ptr);
    const size_t dim = qamp_state_dim(state.ptr);

    const int m = resolve_m(search);
    const double bound = bound_for(search, m);
    const qamp_search_config config = build_config(search, m, seed);

    const int selectors = (k_flag >= 0) + (all_k ? 1 : 0) + (separable ? 1 : 0);
    if (selectors > 1) fail_input("choose at most one of --k, --all-k, --separable");
    if (selectors == 0 && n != 1) {
        fail_input("multi-qubit states need --k, --all-k, or --separable");
    }

    const double start = now_seconds();
    std::vector<EstimateRecord> records;

    if (separable) {
        std::vector<double> angles(n);
        int is_separable = 0;
        check(qamp_factor_angles(state.ptr, angles.data(), n, &is_separable),
              "testing separability");
        if (is_separable == 0) {
            fail_input("state is not separable; estimate-separable requires a product state");
        }
        std::vector<qamp_result*> raw(n, nullptr);
        size_t written = 0;
        check(qamp_search_separable(state.ptr, &config, raw.data(), n, &written),
              "running separable search");
        for (size_t l = 0; l < written; ++l) {
            ResultHandle r;
            r.ptr = raw[l];
            records.push_back(record_from_result(r.ptr, "separable",
                                                 static_cast<long long>(l + 1), bound, angles[l],
                                                 std::sin(angles[l])));
        }
    } else if (selectors == 0) {
        // Single-qubit fast path: the hidden angle is arcsin of amplitude 1.
        ResultHandle r;
        check(qamp_search_single(state.ptr, &config, &r.ptr), "running search");
        const double true_amp = qamp_state_amplitude(state.ptr, 1);
        records.push_back(
            record_from_result(r.ptr, "single", 1, bound, std::asin(true_amp), true_amp));
    } else {
        std::vector<long long> targets;
        if (all_k) {
            for (size_t k = 0; k < dim; ++k) targets.push_back(static_cast<long long>(k));
        } else {
            if (k_flag >= static_cast<long long>(dim)) fail_input("--k out of range");
            targets.push_back(k_flag);
        }
        for (long long k : targets) {
            ResultHandle r;
            check(qamp_search_amplitude(state.ptr, static_cast<size_t>(k), &config, &r.ptr),
                  "running search");
            const double true_amp = qamp_state_amplitude(state.ptr, static_cast<size_t>(k));
            records.push_back(record_from_result(r.ptr, "multi", k, bound,
                                                 std::asin(std::min(1.0, true_amp)), true_amp));
        }
    }

    ReportSink sink(out.out_path);
    write_estimate_records(sink, out.format, records);
    emit_timing("estimate", {{"seconds", now_seconds() - start}});
    return kExitOk;
}

// ---- sample -------------------------------------------------------------------

int run_sample(const SourceOptions& src, const OutputOptions& out, long long shots,
               double error, std::uint64_t seed) {
    StateHandle state;
    load_source(src, state);
    const size_t dim = qamp_state_dim(state.ptr);
    const unsigned n = qamp_state_num_qubits(state.ptr);

    if ((shots > 0) == (error > 0.0)) fail_input("choose exactly one of --shots, --error");
    if (error > 0.0) {
        uint64_t required = 0;
        check(qamp_required_shots(n, error, &required), "deriving shot budget");
        if (required > (1ull << 62)) fail_input("derived shot budget is impractically large");
        shots = static_cast<long long>(required);
    }

    const double start = now_seconds();
    std::vector<long long> counts(dim, 0);
    check(qamp_sample_counts(state.ptr, shots, seed, counts.data(), dim), "sampling");
    std::vector<double> alpha_hat(dim, 0.0);
    check(qamp_estimate_angles(counts.data(), dim, shots, alpha_hat.data()),
          "estimating angles");

    ReportSink sink(out.out_path);
    if (out.format == "csv") {
        sink.line(csv_row({"schema", "k", "count", "total_shots", "probability_hat", "alpha_hat",
                           "true_alpha", "abs_error", "seed"}));
    }
    for (size_t k = 0; k < dim; ++k) {
        const double p_hat = static_cast<double>(counts[k]) / static_cast<double>(shots);
        const double truth = std::asin(std::min(1.0, std::abs(qamp_state_amplitude(state.ptr, k))));
        const double err = std::abs(alpha_hat[k] - truth);
        if (out.format == "csv") {
            sink.line(csv_row({"qamp.sample.v1", fmt_int(static_cast<long long>(k)),
                               fmt_int(counts[k]), fmt_int(shots), fmt_num(p_hat),
                               fmt_num(alpha_hat[k]), fmt_num(truth), fmt_num(err),
                               fmt_int(static_cast<long long>(seed))}));
        } else {
            sink.line(json_line({{"schema", quoted("qamp.sample.v1")},
                                 {"k", fmt_int(static_cast<long long>(k))},
                                 {"count", fmt_int(counts[k])},
                                 {"total_shots", fmt_int(shots)},
                                 {"probability_hat", fmt_num(p_hat)},
                                 {"alpha_hat", fmt_num(alpha_hat[k])},
                                 {"true_alpha", fmt_num(truth)},
                                 {"abs_error", fmt_num(err)},
                                 {"seed", fmt_int(static_cast<long long>(seed))}}));
        }
    }
    emit_timing("sample", {{"seconds", now_seconds() - start}});
    return kExitOk;
}

// ---- compare ------------------------------------------------------------------

int run_compare(const SourceOptions& src, const SearchOptions& search, const OutputOptions& out,
                std::uint64_t seed, long long max_baseline_shots) {
    if (!(search.error > 0.0)) fail_input("compare requires --error <delta_e>");
    if (max_baseline_shots < 1) fail_input("--max-baseline-shots must be >= 1");
    StateHandle state;
    load_source(src, state);
    const size_t dim = qamp_state_dim(state.ptr);
    const unsigned n = qamp_state_num_qubits(state.ptr);

    const int m = resolve_m(search);
    const double bound = bound_for(search, m);
    const qamp_search_config config = build_config(search, m, seed);

    // Bisection over every basis amplitude.
    const double bisect_start = now_seconds();
    std::vector<double> bisect_amp(dim, 0.0), bisect_theta(dim, 0.0);
    long long oracle_calls = 0, gate_applications = 0, state_preparations = 0;
    for (size_t k = 0; k < dim; ++k) {
        ResultHandle r;
        check(qamp_search_amplitude(state.ptr, k, &config, &r.ptr), "running search");
        bisect_amp[k] = qamp_result_amplitude(r.ptr);
        bisect_theta[k] = qamp_result_theta(r.ptr);
        oracle_calls += qamp_result_oracle_calls(r.ptr);
        gate_applications += qamp_result_gate_applications(r.ptr);
        state_preparations += qamp_result_state_preparations(r.ptr);
    }
    const double bisect_seconds = now_seconds() - bisect_start;

    // Baseline at the matched target, capped to keep desk-scale runs bounded.
    uint64_t required = 0;
    check(qamp_required_shots(n, search.error, &required), "deriving shot budget");
    const long long executed = static_cast<long long>(
        std::min<uint64_t>(required, static_cast<uint64_t>(max_baseline_shots)));
    const double baseline_start = now_seconds();
    std::vector<long long> counts(dim, 0);
    check(qamp_sample_counts(state.ptr, executed, seed, counts.data(), dim), "sampling");
    std::vector<double> alpha_hat(dim, 0.0);
    check(qamp_estimate_angles(counts.data(), dim, executed, alpha_hat.data()),
          "estimating angles");
    const double baseline_seconds = now_seconds() - baseline_start;

    double bisect_max_err = 0.0, baseline_max_err = 0.0;
    std::vector<double> truth_amp(dim, 0.0), truth_theta(dim, 0.0);
    for (size_t k = 0; k < dim; ++k) {
        truth_amp[k] = qamp_state_amplitude(state.ptr, k);
        truth_theta[k] = std::asin(std::min(1.0, truth_amp[k]));
        bisect_max_err = std::max(bisect_max_err, std::abs(bisect_amp[k] - truth_amp[k]));
        baseline_max_err =
            std::max(baseline_max_err, std::abs(std::sqrt(static_cast<double>(counts[k]) /
                                                          static_cast<double>(executed)) -
                                                truth_amp[k]));
    }

    const double ratio = static_cast<double>(required) /
                         (static_cast<double>(dim) * static_cast<double>(m));
    const std::string bisect_meaning =
        "target angle error per estimated amplitude; the bound field carries the "
        "guaranteed value for the chosen init";
    const std::string baseline_meaning =
        "per-angle statistical target driving the shot budget ceil(2^n/delta_e^2)";

    ReportSink sink(out.out_path);
    if (out.format == "csv") {
        sink.line("# schema: qamp.compare.v1");
        sink.line("# n_qubits: " + std::to_string(n));
        sink.line("# delta_e: " + fmt_num(search.error));
        sink.line("# delta_e_bisection_meaning: " + bisect_meaning);
        sink.line("# delta_e_baseline_meaning: " + baseline_meaning);
        sink.line("# m_per_amplitude: " + std::to_string(m));
        sink.line("# bound: " + fmt_num(bound));
        sink.line("# bisection_oracle_calls: " + fmt_int(oracle_calls));
        sink.line("# bisection_gate_applications: " + fmt_int(gate_applications));
        sink.line("# bisection_state_preparations: " + fmt_int(state_preparations));
        sink.line("# bisection_max_abs_error: " + fmt_num(bisect_max_err));
        sink.line("# baseline_required_shots: " + fmt_int(static_cast<long long>(required)));
        sink.line("# baseline_executed_shots: " + fmt_int(executed));
        sink.line("# baseline_seed: " + fmt_int(static_cast<long long>(seed)));
        sink.line("# baseline_max_abs_error: " + fmt_num(baseline_max_err));
        sink.line("# required_shots_to_bisection_calls_ratio: " + fmt_num(ratio));
        sink.line(csv_row({"schema", "k", "true_amplitude", "bisection_amplitude_hat",
                           "bisection_abs_error", "bisection_theta_abs_error",
                           "baseline_amplitude_hat", "baseline_abs_error",
                           "baseline_theta_abs_error"}));
    } else {
        sink.line(json_line(
            {{"schema", quoted("qamp.compare.v1")},
             {"type", quoted("summary")},
             {"n_qubits", std::to_string(n)},
             {"delta_e", fmt_num(search.error)},
             {"delta_e_bisection_meaning", quoted(bisect_meaning)},
             {"delta_e_baseline_meaning", quoted(baseline_meaning)},
             {"m_per_amplitude", std::to_string(m)},
             {"bound", fmt_num(bound)},
             {"bisection_oracle_calls", fmt_int(oracle_calls)},
             {"bisection_gate_applications", fmt_int(gate_applications)},
             {"bisection_state_preparations", fmt_int(state_preparations)},
             {"bisection_max_abs_error", fmt_num(bisect_max_err)},
             {"baseline_required_shots", fmt_int(static_cast<long long>(required))},
             {"baseline_executed_shots", fmt_int(executed)},
             {"baseline_seed", fmt_int(static_cast<long long>(seed))},
             {"baseline_max_abs_error", fmt_num(baseline_max_err)},
             {"required_shots_to_bisection_calls_ratio", fmt_num(ratio)}}));
    }

    for (size_t k = 0; k < dim; ++k) {
        const double baseline_amp =
            std::sqrt(static_cast<double>(counts[k]) / static_cast<double>(executed));
        const double baseline_theta = alpha_hat[k];
        if (out.format == "csv") {
            sink.line(csv_row({"qamp.compare.v1", fmt_int(static_cast<long long>(k)),
                               fmt_num(truth_amp[k]), fmt_num(bisect_amp[k]),
                               fmt_num(std::abs(bisect_amp[k] - truth_amp[k])),
                               fmt_num(std::abs(bisect_theta[k] - truth_theta[k])),
                               fmt_num(baseline_amp),
                               fmt_num(std::abs(baseline_amp - truth_amp[k])),
                               fmt_num(std::abs(baseline_theta - truth_theta[k]))}));
        } else {
            sink.line(json_line(
                {{"schema", quoted("qamp.compare.v1")},
                 {"type", quoted("amplitude")},
                 {"k", fmt_int(static_cast<long long>(k))},
                 {"true_amplitude", fmt_num(truth_amp[k])},
                 {"bisection_amplitude_hat", fmt_num(bisect_amp[k])},
                 {"bisection_abs_error", fmt_num(std::abs(bisect_amp[k] - truth_amp[k]))},
                 {"bisection_theta_abs_error",
                  fmt_num(std::abs(bisect_theta[k] - truth_theta[k]))},
                 {"baseline_amplitude_hat", fmt_num(baseline_amp)},
                 {"baseline_abs_error", fmt_num(std::abs(baseline_amp - truth_amp[k]))},
                 {"baseline_theta_abs_error",
                  fmt_num(std::abs(baseline_theta - truth_theta[k]))}}));
        }
    }

    emit_timing("compare", {{"bisection_seconds", bisect_seconds},
                            {"baseline_seconds", baseline_seconds}});
    return kExitOk;
}

// ---- verify -------------------------------------------------------------------

int run_verify(const OutputOptions& out) {
    qamp_verify_report* report = nullptr;
    check(qamp_verify_run(&report), "running verification");
    std::unique_ptr<qamp_verify_report, decltype(&qamp_verify_report_free)> guard(
        report, qamp_verify_report_free);

    ReportSink sink(out.out_path);
    const size_t count = qamp_verify_suite_count(report);
    size_t passed = 0;
    if (out.format == "csv") sink.line(csv_row({"suite", "result", "seconds", "detail"}));
    for (size_t i = 0; i < count; ++i) {
        const bool ok = qamp_verify_suite_passed(report, i) != 0;
        passed += ok ? 1u : 0u;
        if (out.format == "csv") {
            sink.line(csv_row({qamp_verify_suite_name(report, i), ok ? "PASS" : "FAIL",
                               fmt_num(qamp_verify_suite_seconds(report, i)),
                               quoted(qamp_verify_suite_detail(report, i))}));
        } else if (out.format == "json-lines") {
            sink.line(json_line({{"schema", quoted("qamp.verify.v1")},
                                 {"suite", quoted(qamp_verify_suite_name(report, i))},
                                 {"passed", ok ? "true" : "false"},
                                 {"seconds", fmt_num(qamp_verify_suite_seconds(report, i))},
                                 {"detail", quoted(qamp_verify_suite_detail(report, i))}}));
        } else {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.3f", qamp_verify_suite_seconds(report, i));
            sink.line(std::string("suite ") + qamp_verify_suite_name(report, i) + ": " +
                      (ok ? "PASS" : "FAIL") + " (" + buf + " s) " +
                      qamp_verify_suite_detail(report, i));
        }
    }
    if (out.format != "json-lines" && out.format != "csv") {
        sink.line("verification: " + std::to_string(passed) + "/" + std::to_string(count) +
                  " suites passed");
    }
    return qamp_verify_all_passed(report) != 0 ? kExitOk : kExitVerifyFailed;
}

void emit_error(const std::string& command, const std::string& message) {
    std::cerr << json_line({{"schema", quoted("qamp.error.v1")},
                            {"command", quoted(command)},
                            {"message", quoted(message)}})
              << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary-search amplitude measurement versus shot sampling"};
    app.require_subcommand(1);

    SourceOptions src;
    SearchOptions search;
    OutputOptions output;
    std::uint64_t seed = 0;
    long long k_flag = -1;
    bool all_k = false;
    bool separable = false;
    long long shots = 0;
    long long max_baseline_shots = 10'000'000;

    auto* estimate = app.add_subcommand("estimate", "estimate amplitudes by binary search");
    add_source_flags(estimate, src);
    estimate->add_option("--k", k_flag, "basis index to estimate")
        ->check(CLI::NonNegativeNumber);
    estimate->add_flag("--all-k", all_k, "estimate every basis amplitude");
    estimate->add_flag("--separable", separable, "per-factor estimation of a product state");
    estimate->add_option("--iters", search.iters, "iteration count m");
    estimate->add_option("--error", search.error, "target angle error (derives m)");
    estimate->add_option("--init", search.init, "midpoint, random, or fixed:<beta>");
    estimate->add_option("--eq-tol", search.eq_tol, "equality tolerance on the read amplitude");
    estimate->add_option("--seed", seed, "seed for random init");
    add_output_flags(estimate, output);

    auto* sample = app.add_subcommand("sample", "shot-sampling baseline estimator");
    add_source_flags(sample, src);
    sample->add_option("--shots", shots, "number of shots");
    sample->add_option("--error", search.error, "per-angle target deriving the shot budget");
    sample->add_option("--seed", seed, "sampling seed");
    add_output_flags(sample, output);

    auto* compare = app.add_subcommand("compare", "both estimators at a matched error target");
    add_source_flags(compare, src);
    compare->add_option("--error", search.error, "target error delta_e (required)");
    compare->add_option("--init", search.init, "midpoint, random, or fixed:<beta>");
    compare->add_option("--seed", seed, "baseline sampling seed");
    compare->add_option("--max-baseline-shots", max_baseline_shots,
                        "cap on executed baseline shots (required count is still reported)");
    add_output_flags(compare, output);

    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "run the built-in invariant suites");
    verify->add_option("--format", verify_format, "text, json-lines, or csv")
        ->check(CLI::IsMember({"text", "json-lines", "csv"}));
    verify->add_option("--out", output.out_path, "report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("parse", e.what());
        return kExitInput;
    }

    std::string command = "unknown";
    try {
        if (estimate->parsed()) {
            command = "estimate";
            return run_estimate(src, search, output, seed, k_flag, all_k, separable);
        }
        if (sample->parsed()) {
            command = "sample";
            return run_sample(src, output, shots, search.error, seed);
        }
        if (compare->parsed()) {
            command = "compare";
            return run_compare(src, search, output, seed, max_baseline_shots);
        }
        command = "verify";
        output.format = verify_format;
        return run_verify(output);
    } catch (const CliError& e) {
        emit_error(command, e.message);
        return e.exit_code;
    } catch (const std::exception& e) {
        emit_error(command, std::string("internal error: ") + e.what());
        return kExitInternal;
    }
}
