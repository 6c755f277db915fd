#pragma once

#include <functional>
#include <string>
#include <vector>

#include "olo/learner.hpp"

namespace olo {

// Projected online gradient descent with the adaptive-norm stepsize
// eta_t = 1 / sqrt(sum_{tau<=t} ||c_tau||^2).  Hint-blind.
class AdaptiveOgd : public Learner {
public:
    explicit AdaptiveOgd(std::size_t dim);
    std::string name() const override { return "aogd"; }
    const Vec& iterate() const { return x_; }

protected:
    Vec decide(const HintMatrix&) override { return x_; }
    void absorb(const Vec& cost) override;
    void restart() override;

private:
    std::size_t dim_;
    Vec x_;
    double grad_sq_sum_ = 0.0;
};

// Per-coordinate adaptive steps eta_{t,i} = 1 / sqrt(sum_tau c_{tau,i}^2),
// iterates clipped to the box [-1/sqrt(d), 1/sqrt(d)]^d, which sits inside
// the unit ball.  Hint-blind.
class DiagonalAdaGrad : public Learner {
public:
    explicit DiagonalAdaGrad(std::size_t dim);
    std::string name() const override { return "adagrad"; }
    const Vec& iterate() const { return x_; }
    double box_radius() const { return box_; }

protected:
    Vec decide(const HintMatrix&) override { return x_; }
    void absorb(const Vec& cost) override;
    void restart() override;

private:
    std::size_t dim_;
    double box_;
    Vec x_;
    Vec coord_sq_sum_;
};

// The q-grid for the p-norm family: q_0 = 2 and 1/q_i = 1/q_{i-1} - 1/log d,
// i = 1..floor((log d)/2).  Natural log.  Returns the q_i (i >= 1).
std::vector<double> pnorm_grid(std::size_t dim);

// Mirror descent with the (1/2)||x||_p^2 regularizer for one grid entry,
// dual-averaging form with a Euclidean fallback projection onto the ball.
class PNormLearner : public Learner {
public:
    PNormLearner(std::size_t dim, double q);
    std::string name() const override { return "pnorm"; }
    double q() const { return q_; }
    double p() const { return p_; }

protected:
    Vec decide(const HintMatrix&) override { return x_; }
    void absorb(const Vec& cost) override;
    void restart() override;

private:
    std::size_t dim_;
    double q_;
    double p_;
    Vec dual_sum_;
    Vec x_;
    double q_norm_sq_sum_ = 0.0;
};

// Analytic per-interval regret certificate for a base learner, evaluated on
// a cost subsequence.  Every built-in evaluator is a sum over the interval,
// hence monotone under interval extension.
struct MonotoneBoundEvaluator {
    std::string tag;
    std::function<double(const std::vector<Vec>&, std::size_t, std::size_t)> fn;

    // Inclusive-exclusive interval [begin, end); empty interval gives 0.
    double operator()(const std::vector<Vec>& costs, std::size_t begin, std::size_t end) const {
        if (begin >= end) return 0.0;
        return fn(costs, begin, end);
    }
    double operator()(const std::vector<Vec>& costs) const { return (*this)(costs, 0, costs.size()); }
};

// D_2 sqrt(sum ||c||^2) with D_2 = 2, the ball diameter.
MonotoneBoundEvaluator aogd_bound();

// Per-coordinate certificate of the box-clipped implementation:
// (1 + 2/d) * sum_i sqrt(sum_t c_{t,i}^2).  The leading constant is the
// honest (D_i^2/2 + 1) of the unit-stepsize analysis with box width
// D_i = 2/sqrt(d); a bare constant in front of sum_i sqrt(.) cannot sit
// below the aogd certificate on concentrated streams and above it on
// isotropic ones at the same time.
MonotoneBoundEvaluator adagrad_bound(std::size_t dim);

// sup_{u in B} ||u||_p / sqrt(p-1) * sqrt(sum ||c||_q^2)
//   = d^{1/p - 1/2} / sqrt(p-1) * sqrt(sum ||c||_q^2).
MonotoneBoundEvaluator pnorm_bound(std::size_t dim, double q);

enum class ZooKind { adaptive_ogd, diagonal_adagrad, p_norm_mirror_descent };

// Builds a zoo learner together with its bound evaluator.  For the p-norm
// family, `index` selects the grid entry (0-based, must be < grid size).
struct ZooEntry {
    LearnerPtr learner;
    MonotoneBoundEvaluator bound;
};
ZooEntry base_learner_zoo(ZooKind kind, std::size_t dim, std::size_t index = 0);

}  // namespace olo
