#include "olo/combiner.hpp"

#include <cmath>
#include <stdexcept>

#include "olo/multi_hint.hpp"

namespace olo {

CombinerBase::CombinerBase(std::vector<LearnerPtr> learners)
    : learners_(std::move(learners)) {
    if (learners_.empty()) throw std::invalid_argument("combiner: need at least one learner");
    for (auto& l : learners_) l->reset();
}

Vec CombinerBase::validate_cost(const Vec& cost) {
    Vec c;
    try {
        c = validate_unit_norm(cost, "cost");
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(
            name() + ": cost range violation; combiners require ||c_t|| <= 1 because costs "
                     "are halved internally so that sup_{x,y in B} <c_t, x-y> <= 1");
    }
    for (double& v : c) v *= 0.5;
    return c;
}

DetCombiner::DetCombiner(std::vector<LearnerPtr> learners)
    : CombinerBase(std::move(learners)) {}

Vec DetCombiner::decide(const HintMatrix& hints) {
    pending_decision_ = learners_[active_]->observe_hints(hints);
    return pending_decision_;
}

void DetCombiner::absorb(const Vec& g) {
    learners_[active_]->observe_cost(g);
    sub_ledger_.update(g, pending_decision_);
    internal_ledger_.update(g, pending_decision_);
    if (sub_ledger_.worst_case_regret() > gamma_) {
        if (active_ + 1 == learners_.size()) {
            gamma_ *= 2.0;
            ++phase_count_;
        }
        active_ = (active_ + 1) % learners_.size();
        learners_[active_]->reset();
        sub_ledger_.reset();
        ++subphase_count_;
        // Nothing from the finished sub-phase may leak into the new one.
        if (sub_ledger_.rounds() != 0 || sub_ledger_.worst_case_regret() != 0.0)
            throw std::logic_error("det-combiner: stale tracker survived a sub-phase switch");
    }
}

void DetCombiner::restart() {
    for (auto& l : learners_) l->reset();
    active_ = 0;
    gamma_ = 1.0;
    phase_count_ = 1;
    subphase_count_ = 1;
    sub_ledger_.reset();
    internal_ledger_.reset();
    pending_decision_.clear();
}

RandCombiner::RandCombiner(std::vector<LearnerPtr> learners, std::uint64_t seed,
                           RandCombinerOptions options)
    : CombinerBase(std::move(learners)),
      seed_(seed),
      options_(options),
      rng_(seed),
      ledgers_(learners_.size()),
      pending_decisions_(learners_.size()) {
    candidates_.resize(learners_.size());
    for (std::size_t j = 0; j < learners_.size(); ++j) candidates_[j] = j;
    draw_active();
}

void RandCombiner::draw_active() {
    active_ = candidates_[rng_.below(candidates_.size())];
}

Vec RandCombiner::decide(const HintMatrix& hints) {
    for (std::size_t j : candidates_) pending_decisions_[j] = learners_[j]->observe_hints(hints);
    return pending_decisions_[active_];
}

void RandCombiner::absorb(const Vec& g) {
    internal_ledger_.update(g, pending_decisions_[active_]);

    std::vector<std::size_t> survivors;
    survivors.reserve(candidates_.size());
    bool active_evicted = false;
    for (std::size_t j : candidates_) {
        learners_[j]->observe_cost(g);
        ledgers_[j].update(g, pending_decisions_[j]);
        if (ledgers_[j].worst_case_regret() > gamma_) {
            if (j == active_) active_evicted = true;
        } else {
            survivors.push_back(j);
        }
    }
    candidates_ = std::move(survivors);

    if (active_evicted) {
        if (candidates_.empty()) {
            candidates_.resize(learners_.size());
            for (std::size_t j = 0; j < learners_.size(); ++j) candidates_[j] = j;
            gamma_ *= 2.0;
            ++phase_count_;
        }
        for (std::size_t j : candidates_) {
            if (options_.reset_all_candidates) learners_[j]->reset();
            ledgers_[j].reset();
            if (ledgers_[j].rounds() != 0)
                throw std::logic_error("rand-combiner: stale tracker survived a sub-phase switch");
        }
        draw_active();
        if (!options_.reset_all_candidates) learners_[active_]->reset();
        ++subphase_count_;
    }
}

void RandCombiner::restart() {
    for (auto& l : learners_) l->reset();
    for (auto& led : ledgers_) led.reset();
    rng_ = SplitMix64(seed_);
    candidates_.resize(learners_.size());
    for (std::size_t j = 0; j < learners_.size(); ++j) candidates_[j] = j;
    gamma_ = 1.0;
    phase_count_ = 1;
    subphase_count_ = 1;
    internal_ledger_.reset();
    draw_active();
}

std::vector<double> unknown_alpha_grid(std::size_t horizon_T) {
    if (horizon_T < 2) throw std::invalid_argument("unknown_alpha: horizon must be >= 2");
    std::size_t n = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(horizon_T))));
    std::vector<double> alphas;
    double a = 0.5;
    for (std::size_t i = 0; i < n; ++i, a *= 0.5) alphas.push_back(a);
    return alphas;
}

LearnerPtr make_unknown_alpha_learner(const AlphaLearnerFactory& factory, std::size_t horizon_T,
                                      std::uint64_t seed) {
    std::vector<LearnerPtr> instances;
    for (double a : unknown_alpha_grid(horizon_T)) instances.push_back(factory(a));
    return std::make_unique<RandCombiner>(std::move(instances), seed);
}

}  // namespace olo
