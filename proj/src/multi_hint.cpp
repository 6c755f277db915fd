#include "olo/multi_hint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace olo {

double smoothed_hinge(double a, double b) {
    if (b < 0.0) throw std::invalid_argument("smoothed_hinge: b must be >= 0");
    if (a > b) return 0.0;
    if (a < 0.0) return b - 2.0 * a;
    if (b == 0.0) return 0.0;  // a == 0 here
    double m = b - a;
    return m * m / b;
}

double smoothed_hinge_grad(double a, double b) {
    if (b < 0.0) throw std::invalid_argument("smoothed_hinge_grad: b must be >= 0");
    if (a > b) return 0.0;
    if (a < 0.0) return -2.0;
    if (b == 0.0) return 0.0;
    return 2.0 * (a - b) / b;
}

SimplexLoss simplex_loss(const Vec& w, const Vec& cost, const HintMatrix& hints, double alpha) {
    if (w.size() != hints.hints())
        throw std::invalid_argument("simplex_loss: weight/hint count mismatch");
    double b = alpha * norm_sq(cost);
    // Per-column correlations; the margin is their w-average.
    Vec corr(w.size());
    double a = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        corr[i] = dot(cost, hints.columns[i]);
        a += w[i] * corr[i];
    }
    SimplexLoss out;
    out.value = smoothed_hinge(a, b);
    double slope = smoothed_hinge_grad(a, b);
    out.grad.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.grad[i] = corr[i] * slope;
    return out;
}

Vec ftrl_simplex_update(const FtrlState& state) {
    std::size_t K = state.K();
    if (K < 2) throw std::invalid_argument("ftrl_simplex_update: need K >= 2");
    double logK = std::log(static_cast<double>(K));
    double eta = std::sqrt((logK + state.sq_inf_sum) / logK);

    double best = *std::min_element(state.grad_sum.begin(), state.grad_sum.end());
    Vec w(K);
    double sum = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
        w[i] = std::exp(-(state.grad_sum[i] - best) / eta);
        w[i] = std::max(w[i], std::numeric_limits<double>::min());
        sum += w[i];
    }
    for (double& v : w) v /= sum;
    return w;
}

std::vector<std::size_t> bad_step_set(const std::vector<Vec>& hints, const std::vector<Vec>& costs,
                                      double alpha) {
    if (hints.size() != costs.size())
        throw std::invalid_argument("bad_step_set: hint/cost length mismatch");
    std::vector<std::size_t> bad;
    for (std::size_t t = 0; t < costs.size(); ++t)
        if (dot(costs[t], hints[t]) < alpha * norm_sq(costs[t])) bad.push_back(t);
    return bad;
}

KHintsLearner::KHintsLearner(std::size_t dim, std::size_t num_hints, double alpha,
                             std::size_t horizon_T)
    : dim_(dim),
      K_(num_hints),
      alpha_(alpha),
      inner_(dim, alpha / 2.0, horizon_T),
      ftrl_(num_hints) {
    if (K_ == 0) throw std::invalid_argument("k-hints: need at least one hint sequence");
}

Vec KHintsLearner::decide(const HintMatrix& hints) {
    if (hints.hints() != K_) throw std::invalid_argument("k-hints: hint count mismatch");
    hints.validate(dim_);
    pending_w_ = (K_ == 1) ? Vec{1.0} : ftrl_simplex_update(ftrl_);
    pending_hints_ = hints;
    Vec blended = hints.blend(pending_w_);
    weight_history_.push_back(pending_w_);
    return inner_.observe_hints(HintMatrix::single(std::move(blended)));
}

void KHintsLearner::absorb(const Vec& cost) {
    inner_.observe_cost(cost);
    SimplexLoss loss = simplex_loss(pending_w_, cost, pending_hints_, alpha_);
    loss_sum_ += loss.value;
    if (K_ >= 2) {
        axpy(1.0, loss.grad, ftrl_.grad_sum);
        double gi = norm_inf(loss.grad);
        ftrl_.sq_inf_sum += gi * gi;
    }
}

void KHintsLearner::restart() {
    inner_.reset();
    ftrl_ = FtrlState(K_);
    loss_sum_ = 0.0;
    weight_history_.clear();
    pending_w_.clear();
    pending_hints_ = HintMatrix{};
}

MwuLearner::MwuLearner(std::size_t dim, std::size_t num_hints, double alpha,
                       std::size_t horizon_T, std::uint64_t seed, MwuLossRule rule)
    : dim_(dim),
      K_(num_hints),
      alpha_(alpha),
      seed_(seed),
      rule_(rule),
      inner_(dim, alpha, horizon_T),
      rng_(seed),
      weights_(num_hints, 1.0) {
    if (K_ == 0) throw std::invalid_argument("mwu: need at least one hint sequence");
}

bool MwuLearner::hint_is_bad(const Vec& cost, const Vec& hint) const {
    double corr = dot(cost, hint);
    if (rule_ == MwuLossRule::correlation) return corr < alpha_ * norm_sq(cost);
    return std::abs(corr) < alpha_ * norm(cost);
}

Vec MwuLearner::decide(const HintMatrix& hints) {
    if (hints.hints() != K_) throw std::invalid_argument("mwu: hint count mismatch");
    hints.validate(dim_);
    double total = 0.0;
    for (double w : weights_) total += w;
    double u = rng_.uniform01() * total;
    std::size_t pick = K_ - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < K_; ++i) {
        acc += weights_[i];
        if (u < acc) {
            pick = i;
            break;
        }
    }
    last_pick_ = pick;
    pending_hints_ = hints;
    return inner_.observe_hints(HintMatrix::single(hints.columns[pick]));
}

void MwuLearner::absorb(const Vec& cost) {
    inner_.observe_cost(cost);
    ++rounds_;
    if (hint_is_bad(cost, pending_hints_.columns[last_pick_])) ++bad_picks_;
    double total = 0.0;
    for (std::size_t i = 0; i < K_; ++i) {
        if (hint_is_bad(cost, pending_hints_.columns[i])) weights_[i] *= 0.5;  // (1 - eta), eta = 1/2
        total += weights_[i];
    }
    // Renormalize so long runs cannot underflow; sampling only sees ratios.
    for (double& w : weights_) w /= total;
}

void MwuLearner::restart() {
    inner_.reset();
    rng_ = SplitMix64(seed_);
    weights_.assign(K_, 1.0);
    rounds_ = 0;
    bad_picks_ = 0;
    last_pick_ = 0;
    pending_hints_ = HintMatrix{};
}

}  // namespace olo
