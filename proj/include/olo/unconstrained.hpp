#pragma once

#include <vector>

#include "olo/learner.hpp"
#include "olo/zoo.hpp"

namespace olo {

// One-dimensional Krichevsky-Trofimov coin bettor.  Plays
//     y_t = beta_t * W_{t-1},   beta_t = (sum_{tau<t} -g_tau) / t,
// and updates wealth W_t = W_{t-1} (1 - g_t beta_t) on scalar costs
// g in [-1, 1].  Wealth starts at epsilon and stays strictly positive
// (|beta| < 1 always).  Wealth is saturated at exp(200) so perfectly
// predictable streams cannot push doubles to infinity; below that the
// recurrence is exact.
class KtBettor {
public:
    explicit KtBettor(double epsilon = 1.0);

    // The bet for the current round; pure function of the state.
    double output() const;
    // Absorbs the round's scalar cost.  |g| beyond 1 + tolerance is an
    // error; tiny overshoots are clamped.
    void observe(double g);
    void reset();

    double wealth() const { return wealth_; }
    double epsilon() const { return epsilon_; }
    double bet_fraction() const;
    std::size_t rounds() const { return rounds_; }

private:
    double epsilon_;
    double wealth_;
    double neg_cost_sum_ = 0.0;
    std::size_t rounds_ = 0;
};

// Dimension-free parameter-free learner: a KT bettor chooses the signed
// magnitude on the scalarized costs <c_t, z_t>, a unit-ball direction
// learner (adaptive OGD) supplies z_t, and the output is their product.
class ParameterFreeLearner : public Learner {
public:
    ParameterFreeLearner(std::size_t dim, double epsilon = 1.0);
    std::string name() const override { return "parameter-free"; }

    const KtBettor& bettor() const { return bettor_; }

protected:
    Vec decide(const HintMatrix&) override;
    void absorb(const Vec& cost) override;
    void restart() override;
    // Decisions are unconstrained; costs still obey the unit-norm contract.

private:
    std::size_t dim_;
    KtBettor bettor_;
    AdaptiveOgd direction_;
    Vec pending_dir_;
};

// Unconstrained composite learner: one d-dimensional parameter-free learner
// plus K scalar bettors, one per hint sequence.  Emits
//     xhat_t = x_t + sum_i y_t^(i) h_t^(i),
// and on the cost feeds c_t to the d-dimensional learner and <c_t, h_t^(i)>
// to the i-th bettor.  The wealth budget epsilon is split: the vector
// learner gets epsilon, each bettor epsilon / K.
class UnconstrainedComposite : public Learner {
public:
    UnconstrainedComposite(std::size_t dim, std::size_t num_hints, std::size_t /*horizon_T*/,
                           double epsilon = 1.0);
    std::string name() const override { return "unconstrained"; }

    const std::vector<KtBettor>& bettors() const { return bettors_; }
    const Vec& last_base_decision() const { return last_base_; }
    const Vec& last_scalar_outputs() const { return last_scalars_; }

protected:
    Vec decide(const HintMatrix& hints) override;
    void absorb(const Vec& cost) override;
    void restart() override;

private:
    std::size_t dim_;
    std::size_t K_;
    ParameterFreeLearner base_;
    std::vector<KtBettor> bettors_;
    HintMatrix pending_hints_;
    Vec last_base_;
    Vec last_scalars_;
};

}  // namespace olo
