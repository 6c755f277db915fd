#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "olo/adversary.hpp"
#include "olo/learner.hpp"

namespace olo {

inline constexpr const char* kLibraryVersion = "0.1.0";

// ----- theorem bound evaluators ------------------------------------------
//
// Printed constants are used verbatim where the source states them; where
// only an order bound is stated the bracketed expression is reported with
// constant 1 and the caller supplies any empirical multiplier.

// Single-hint guarantee:
//   1/2 + 4 ( sqrt(sum_{t in B_alpha} ||c||^2) + log(T)/alpha
//             + 2 sqrt( log(T) sum_t max(0, -<c_t,h_t>) / alpha ) ).
double single_hint_regret_bound(const std::vector<Vec>& costs, const std::vector<Vec>& hints, double alpha,
                   std::size_t horizon_T);

// K-hint guarantee at a fixed blend w (constant 1):
//   sqrt( log(T) sum_{t in B^w_alpha} ||c||^2 )
//   + sqrt( log(T) sum_t max(0, -<c_t, h_t(w)>) / alpha )
//   + ( log(T) + sqrt(log(T) log(K)) ) / alpha.
double k_hints_regret_bound(const std::vector<Vec>& costs, const std::vector<HintMatrix>& hints,
                   const Vec& w, double alpha, std::size_t horizon_T);

// Deterministic combiner guarantee: K (4 + 4 min_bound).
double combiner_regret_bound(std::size_t num_learners, double min_bound);

// Unconstrained guarantee (constant 1):
//   ||u|| log(T) ( sqrt(log K)/alpha + sqrt(B/alpha) ).
double unconstrained_regret_bound(double u_norm, std::size_t horizon_T, std::size_t num_hints,
                   std::size_t bad_count, double alpha);

// ----- experiment configuration -------------------------------------------

struct LearnerSpec {
    std::string name;  // unique row label
    std::string type;  // registry key
    std::map<std::string, std::string> params;

    double param_double(const std::string& key, std::optional<double> fallback = {}) const;
    std::string param_str(const std::string& key, std::optional<std::string> fallback = {}) const;
};

struct ExperimentConfig {
    ScenarioSpec scenario;
    std::vector<LearnerSpec> learners;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string output = "results.csv";
    int threads = 1;
    std::string raw_text;  // exact config text, hashed into the sidecar
};

// key = value lines with [section] headers; learner sections are
// "[learner <name>]".  Throws std::invalid_argument on malformed input.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

std::vector<std::string> known_learner_types();

// Builds a learner for a scenario; `stream` seeds any internal randomness.
LearnerPtr make_learner(const LearnerSpec& spec, const ScenarioSpec& scenario,
                        std::uint64_t stream);

// ----- runner --------------------------------------------------------------

struct ResultRow {
    std::size_t trial = 0;
    std::size_t round = 0;
    std::string learner;
    double regret = 0.0;
    double bound = std::numeric_limits<double>::quiet_NaN();
    double ratio = std::numeric_limits<double>::quiet_NaN();
};

struct TraceKey {
    std::size_t trial;
    std::string learner;
    bool operator<(const TraceKey& o) const {
        return trial != o.trial ? trial < o.trial : learner < o.learner;
    }
};

struct RunResult {
    std::vector<ResultRow> rows;  // (trial, learner, round) order
    std::map<TraceKey, std::vector<Vec>> traces;  // kept only on request
    std::uint64_t config_hash = 0;
};

// Checkpoints: powers of two up to T, plus T itself.
std::vector<std::size_t> checkpoint_rounds(std::size_t T);

RunResult run_experiment(const ExperimentConfig& config, bool keep_traces = false);

// CSV with header trial,round,learner,regret,bound,ratio; RFC-style quoting;
// NaN cells are left empty.  Byte-identical for identical configs.
std::string to_csv(const RunResult& result);
void write_outputs(const ExperimentConfig& config, const RunResult& result);

// Per-learner summary of a result column across trials at a fixed round:
// mean, median, and a seeded 95% bootstrap interval of the mean.
struct Aggregate {
    std::size_t n = 0;
    double mean = 0.0;
    double median = 0.0;
    double lo95 = 0.0;
    double hi95 = 0.0;
};
Aggregate aggregate_regret(const RunResult& result, const std::string& learner,
                           std::size_t round);

std::uint64_t fnv1a64(const std::string& text);

}  // namespace olo
