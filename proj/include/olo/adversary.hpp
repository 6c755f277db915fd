#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "olo/learner.hpp"
#include "olo/rng.hpp"

namespace olo {

enum class ScenarioKind {
    correlated,          // unit costs, hints exactly alpha-good outside the bad set
    complementary_pair,  // two sequences, each half-bad, whose blend is never bad
    logk_lower,          // the block/pattern construction behind the log K lower bound
    alpha_lower,         // two-dimensional 1/alpha lower-bound instance
    random_signs,        // +-e1 coin-flip costs, no hints
    sparse_onehot,       // one-hot costs concentrated on two coordinates, no hints
    dense_isotropic,     // random unit-vector costs, no hints
};

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& s);

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::correlated;
    std::size_t T = 0;
    std::size_t d = 0;
    std::size_t K = 0;              // derived for logk_lower / complementary_pair
    double alpha = 0.0;
    double bad_fraction = 0.0;      // correlated only; ignored when bad_set set
    std::vector<std::size_t> bad_set;
    std::uint64_t seed = 0;
};

// A fully materialized instance.  Regenerating from the same spec is
// bit-identical: everything derives from the seed through splitmix64.
struct Scenario {
    ScenarioSpec spec;
    std::vector<Vec> costs;
    std::vector<HintMatrix> hints;  // empty for cost-only kinds
    Vec witness_w;                  // logk_lower: the exact-correlation blend

    std::size_t num_hints() const { return hints.empty() ? 0 : hints.front().hints(); }
    // Hint sequence i as a plain vector-of-rounds view.
    std::vector<Vec> hint_sequence(std::size_t i) const;
};

Scenario generate(const ScenarioSpec& spec);

Scenario gen_correlated(std::size_t T, std::size_t d, double alpha,
                        const std::vector<std::size_t>& bad_set, std::uint64_t seed);
Scenario gen_correlated(std::size_t T, std::size_t d, double alpha, double bad_fraction,
                        std::uint64_t seed);
Scenario gen_complementary_pair(std::size_t T, std::size_t d, std::uint64_t seed);
Scenario gen_logk_lower(std::size_t T, double alpha, std::uint64_t seed);
Scenario gen_alpha_lower(std::size_t T, double alpha, std::uint64_t seed);
Scenario gen_random_signs(std::size_t T, std::size_t d, std::uint64_t seed);
Scenario gen_sparse_onehot(std::size_t T, std::size_t d, std::uint64_t seed);
Scenario gen_dense_isotropic(std::size_t T, std::size_t d, std::uint64_t seed);

// Flat textual table (t, cost coordinates, hint coordinates per sequence),
// full double precision, for cross-implementation diffing.
void save_table(const Scenario& sc, const std::string& path);
Scenario load_table(const std::string& path);

}  // namespace olo
