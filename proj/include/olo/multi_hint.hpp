#pragma once

#include <cstdint>
#include <vector>

#include "olo/learner.hpp"
#include "olo/rng.hpp"
#include "olo/single_hint.hpp"

namespace olo {

// Smoothed hinge loss in the scalar margin a against threshold b >= 0:
//     0            a > b
//     (b-a)^2 / b  a in [0, b]   (b > 0)
//     b - 2a       a < 0
// Continuously differentiable in a; b = 0 degenerates to max(0, -2a).
double smoothed_hinge(double a, double b);

// d/da of the above.  At the kinks both one-sided derivatives agree
// (0 at a = b, -2 at a = 0), so the middle-branch formula is used there.
double smoothed_hinge_grad(double a, double b);

struct SimplexLoss {
    double value = 0.0;
    Vec grad;  // length K
};

// l(<c, H w>, alpha ||c||^2) together with its gradient in w.
SimplexLoss simplex_loss(const Vec& w, const Vec& cost, const HintMatrix& hints, double alpha);

// State of entropic FTRL over the simplex.
struct FtrlState {
    Vec grad_sum;             // g_{1:t}
    double sq_inf_sum = 0.0;  // sum of ||g_tau||_inf^2

    explicit FtrlState(std::size_t K) : grad_sum(K, 0.0) {}
    std::size_t K() const { return grad_sum.size(); }
};

// Closed-form minimizer of  <grad_sum, w> + sqrt((log K + sq_inf_sum)/log K) psi(w)
// over the simplex, with psi the shifted entropy: w_i proportional to
// exp(-grad_sum_i / eta).  Entries are floored at the smallest normal double
// so the output is strictly positive even under extreme gradient spreads.
Vec ftrl_simplex_update(const FtrlState& state);

// Rounds where the hint is bad: <c_t, h_t> < alpha ||c_t||^2.  0-based.
std::vector<std::size_t> bad_step_set(const std::vector<Vec>& hints, const std::vector<Vec>& costs,
                                      double alpha);

// K-hint learner: entropic FTRL on the smoothed hinge losses picks a simplex
// weight each round, the blended hint is fed to an internal single-hint
// learner run at threshold alpha/2, and its decision is relayed.  K = 1
// bypasses the FTRL entirely.
class KHintsLearner : public Learner {
public:
    KHintsLearner(std::size_t dim, std::size_t num_hints, double alpha, std::size_t horizon_T);

    std::string name() const override { return "k-hints"; }

    double alpha() const { return alpha_; }
    std::size_t num_hints() const { return K_; }
    double loss_sum() const { return loss_sum_; }
    const std::vector<Vec>& weight_history() const { return weight_history_; }
    const SingleHintLearner& inner() const { return inner_; }

protected:
    Vec decide(const HintMatrix& hints) override;
    void absorb(const Vec& cost) override;
    void restart() override;

private:
    std::size_t dim_;
    std::size_t K_;
    double alpha_;
    SingleHintLearner inner_;
    FtrlState ftrl_;
    double loss_sum_ = 0.0;
    std::vector<Vec> weight_history_;

    Vec pending_w_;
    HintMatrix pending_hints_;
};

// Which correlation test marks a hint as bad for the MWU losses.  The
// default matches the bad-step definition (signed, against alpha ||c||^2);
// the alternative compares |<c,h>| against alpha ||c||.
enum class MwuLossRule { correlation, absolute };

// Multiplicative-weights baseline: samples one hint sequence per round
// (probability proportional to weight), relays an internal single-hint
// learner at threshold alpha, and multiplies weights by (1 - eta) on binary
// bad-hint losses with eta = 1/2.
class MwuLearner : public Learner {
public:
    MwuLearner(std::size_t dim, std::size_t num_hints, double alpha, std::size_t horizon_T,
               std::uint64_t seed, MwuLossRule rule = MwuLossRule::correlation);

    std::string name() const override { return "mwu"; }

    const Vec& weights() const { return weights_; }
    std::size_t rounds() const { return rounds_; }
    std::size_t bad_pick_count() const { return bad_picks_; }
    std::size_t last_pick() const { return last_pick_; }

protected:
    Vec decide(const HintMatrix& hints) override;
    void absorb(const Vec& cost) override;
    void restart() override;

private:
    bool hint_is_bad(const Vec& cost, const Vec& hint) const;

    std::size_t dim_;
    std::size_t K_;
    double alpha_;
    std::uint64_t seed_;
    MwuLossRule rule_;
    SingleHintLearner inner_;
    SplitMix64 rng_;
    Vec weights_;
    std::size_t rounds_ = 0;
    std::size_t bad_picks_ = 0;
    std::size_t last_pick_ = 0;
    HintMatrix pending_hints_;
};

}  // namespace olo
