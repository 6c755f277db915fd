#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "olo/learner.hpp"
#include "olo/rng.hpp"

namespace olo {

// The combiner theorems assume sup_{x,y in B} <c_t, x-y> <= 1, i.e. costs of
// norm at most 1/2.  Both combiners therefore halve incoming costs before
// anything touches them and report regret rescaled back by 2, so callers
// keep the ||c|| <= 1 convention.  All gamma thresholds, trackers, and the
// internal_* accessors live on the halved scale.
class CombinerBase : public Learner {
public:
    double gamma() const { return gamma_; }
    std::size_t phase_count() const { return phase_count_; }
    std::size_t subphase_count() const { return subphase_count_; }
    std::size_t active_index() const { return active_; }

    // Worst-case regret on the internal (halved) cost sequence.
    double internal_worst_case_regret() const { return internal_ledger_.worst_case_regret(); }
    // Same quantity on the caller's scale.
    double worst_case_regret() const { return 2.0 * internal_ledger_.worst_case_regret(); }
    const RegretLedger& internal_ledger() const { return internal_ledger_; }

protected:
    explicit CombinerBase(std::vector<LearnerPtr> learners);
    Vec validate_cost(const Vec& cost) override;

    std::vector<LearnerPtr> learners_;
    std::size_t active_ = 0;
    double gamma_ = 1.0;
    std::size_t phase_count_ = 1;
    std::size_t subphase_count_ = 1;
    RegretLedger internal_ledger_;
};

// Deterministic combiner: trusts learners in cyclic order, switching when
// the active learner's tracked worst-case regret over the current sub-phase
// strictly exceeds gamma, and doubling gamma each time the cycle wraps.
class DetCombiner : public CombinerBase {
public:
    explicit DetCombiner(std::vector<LearnerPtr> learners);
    std::string name() const override { return "det-combiner"; }

    double active_tracked_regret() const { return sub_ledger_.worst_case_regret(); }

protected:
    Vec decide(const HintMatrix& hints) override;
    void absorb(const Vec& halved_cost) override;
    void restart() override;

private:
    RegretLedger sub_ledger_;
    Vec pending_decision_;
};

struct RandCombinerOptions {
    // On a new sub-phase, reset every learner still in the candidate set
    // (the default) or only the newly drawn one.  Tracked-regret clocks
    // restart either way.
    bool reset_all_candidates = true;
};

// Randomized combiner: simulates every candidate learner each round, plays
// a uniformly drawn one, evicts candidates whose tracked regret exceeds
// gamma, and refills the candidate set (doubling gamma) once it empties.
class RandCombiner : public CombinerBase {
public:
    RandCombiner(std::vector<LearnerPtr> learners, std::uint64_t seed,
                 RandCombinerOptions options = {});
    std::string name() const override { return "rand-combiner"; }

    const std::vector<std::size_t>& candidates() const { return candidates_; }

protected:
    Vec decide(const HintMatrix& hints) override;
    void absorb(const Vec& halved_cost) override;
    void restart() override;

private:
    void draw_active();

    std::uint64_t seed_;
    RandCombinerOptions options_;
    SplitMix64 rng_;
    std::vector<std::size_t> candidates_;
    std::vector<RegretLedger> ledgers_;
    std::vector<Vec> pending_decisions_;
};

// Handles unknown correlation thresholds: instantiates ceil(log2 T) copies
// of a hint learner at alpha_i = 2^{-i} and wraps them in the randomized
// combiner.
using AlphaLearnerFactory = std::function<LearnerPtr(double alpha)>;
LearnerPtr make_unknown_alpha_learner(const AlphaLearnerFactory& factory, std::size_t horizon_T,
                                      std::uint64_t seed);

// The alpha grid used above, {2^-1, ..., 2^-ceil(log2 T)}.
std::vector<double> unknown_alpha_grid(std::size_t horizon_T);

}  // namespace olo
