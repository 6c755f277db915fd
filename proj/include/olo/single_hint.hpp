#pragma once

#include <cstddef>

#include "olo/learner.hpp"

namespace olo {

// Unique nonnegative root of  lambda * (S + lambda) = cost_norm_sq.
// S is the running sum of strong-convexity and regularization weights up to
// and including the current round's sigma.  Closed form, no root finding.
double solve_lambda(double S, double cost_norm_sq);

// xbar + ((||xbar||^2 - 1) / (2r)) * h.  Stays inside the unit ball for
// ||xbar|| <= 1, ||h|| <= 1, r >= 1.
Vec shift_decision(const Vec& xbar, const Vec& hint, double r);

// r' = sqrt(r^2 + alpha * max(0, -<c,h>) / log T).  Never decreases.
double update_radius(double r, double cost_hint_inner, double alpha, std::size_t horizon_T);

// Online learner for a single hint sequence with a known correlation
// threshold alpha.  Each round it shifts the inner iterate along the hint
// by a confidence-scaled amount, then feeds the inner learner the
// quadratically regularized loss
//     l_t(x) = <c_t, x> + (|<c_t,h_t>| / 2r_t) (||x||^2 - 1),
// stepping it by projected gradient descent with learning rate
// 1 / (sigma_{1:t} + lambda_{1:t}).  All per-round work is O(d).
class SingleHintLearner : public Learner {
public:
    SingleHintLearner(std::size_t dim, double alpha, std::size_t horizon_T);

    std::string name() const override { return "one-hint"; }

    double alpha() const { return alpha_; }
    std::size_t horizon() const { return horizon_; }
    double radius() const { return r_; }
    double sigma_sum() const { return sigma_sum_; }
    double lambda_sum() const { return lambda_sum_; }
    const Vec& inner_iterate() const { return xbar_; }
    const RegretLedger& ledger() const { return ledger_; }

    // |lambda (S + lambda) - ||c||^2| from the most recent cost.
    double last_lambda_residual() const { return last_lambda_residual_; }
    double last_lambda() const { return last_lambda_; }

protected:
    Vec decide(const HintMatrix& hints) override;
    void absorb(const Vec& cost) override;
    void restart() override;

private:
    std::size_t dim_;
    double alpha_;
    std::size_t horizon_;
    double log_T_;

    Vec xbar_;
    double r_ = 1.0;
    double sigma_sum_ = 0.0;
    double lambda_sum_ = 0.0;
    RegretLedger ledger_;

    Vec pending_hint_;
    Vec pending_decision_;
    double last_lambda_ = 0.0;
    double last_lambda_residual_ = 0.0;
};

}  // namespace olo
