#include "olo/single_hint.hpp"

#include <cmath>
#include <stdexcept>

namespace olo {

double solve_lambda(double S, double cost_norm_sq) {
    if (S < 0.0 || cost_norm_sq < 0.0)
        throw std::invalid_argument("solve_lambda: negative input");
    if (cost_norm_sq == 0.0) return 0.0;
    // lambda = (-S + sqrt(S^2 + 4 c)) / 2, written to avoid cancellation.
    return 2.0 * cost_norm_sq / (S + std::sqrt(S * S + 4.0 * cost_norm_sq));
}

Vec shift_decision(const Vec& xbar, const Vec& hint, double r) {
    if (r < 1.0) throw std::invalid_argument("shift_decision: r must be >= 1");
    Vec x = xbar;
    axpy((norm_sq(xbar) - 1.0) / (2.0 * r), hint, x);
    return x;
}

double update_radius(double r, double cost_hint_inner, double alpha, std::size_t horizon_T) {
    if (horizon_T < 2) throw std::invalid_argument("update_radius: need T >= 2 (log T > 0)");
    double neg = std::max(0.0, -cost_hint_inner);
    return std::sqrt(r * r + alpha * neg / std::log(static_cast<double>(horizon_T)));
}

SingleHintLearner::SingleHintLearner(std::size_t dim, double alpha, std::size_t horizon_T)
    : dim_(dim), alpha_(alpha), horizon_(horizon_T) {
    if (dim == 0) throw std::invalid_argument("one-hint: dimension must be positive");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("one-hint: alpha must be in (0,1)");
    if (horizon_T < 2) throw std::invalid_argument("one-hint: horizon must be >= 2");
    log_T_ = std::log(static_cast<double>(horizon_T));
    xbar_.assign(dim_, 0.0);
    ledger_ = RegretLedger(dim_);
}

Vec SingleHintLearner::decide(const HintMatrix& hints) {
    if (hints.hints() > 1)
        throw std::invalid_argument("one-hint: expected at most one hint column");
    hints.validate(hints.hints() == 0 ? dim_ : hints.dim());
    if (hints.hints() == 1 && hints.dim() != dim_)
        throw std::invalid_argument("one-hint: hint dimension mismatch");
    pending_hint_ = hints.hints() == 1 ? hints.columns.front() : Vec(dim_, 0.0);
    pending_decision_ = shift_decision(xbar_, pending_hint_, r_);
    return pending_decision_;
}

void SingleHintLearner::absorb(const Vec& cost) {
    if (cost.size() != dim_) throw std::invalid_argument("one-hint: cost dimension mismatch");
    ledger_.update(cost, pending_decision_);

    double chh = dot(cost, pending_hint_);
    double sigma = std::abs(chh) / r_;
    r_ = update_radius(r_, chh, alpha_, horizon_);

    double cn2 = norm_sq(cost);
    double S = sigma_sum_ + lambda_sum_ + sigma;
    double lambda = solve_lambda(S, cn2);
    last_lambda_ = lambda;
    last_lambda_residual_ = std::abs(lambda * (S + lambda) - cn2);

    sigma_sum_ += sigma;
    lambda_sum_ += lambda;

    // Inner strongly-convex step.  The denominator is zero only while every
    // cost so far was zero, in which case the gradient carries nothing.
    double denom = sigma_sum_ + lambda_sum_;
    if (denom > 0.0) {
        double eta = 1.0 / denom;
        Vec step = xbar_;
        for (std::size_t i = 0; i < dim_; ++i) step[i] -= eta * (cost[i] + sigma * xbar_[i]);
        xbar_ = project_to_ball(step);
    }
}

void SingleHintLearner::restart() {
    xbar_.assign(dim_, 0.0);
    r_ = 1.0;
    sigma_sum_ = 0.0;
    lambda_sum_ = 0.0;
    ledger_.reset();
    pending_hint_.clear();
    pending_decision_.clear();
    last_lambda_ = 0.0;
    last_lambda_residual_ = 0.0;
}

}  // namespace olo
