#include "olo/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace olo {

AdaptiveOgd::AdaptiveOgd(std::size_t dim) : dim_(dim), x_(dim, 0.0) {
    if (dim == 0) throw std::invalid_argument("aogd: dimension must be positive");
}

void AdaptiveOgd::absorb(const Vec& cost) {
    if (cost.size() != dim_) throw std::invalid_argument("aogd: cost dimension mismatch");
    grad_sq_sum_ += norm_sq(cost);
    if (grad_sq_sum_ <= 0.0) return;
    Vec step = x_;
    axpy(-1.0 / std::sqrt(grad_sq_sum_), cost, step);
    x_ = project_to_ball(step);
}

void AdaptiveOgd::restart() {
    x_.assign(dim_, 0.0);
    grad_sq_sum_ = 0.0;
}

DiagonalAdaGrad::DiagonalAdaGrad(std::size_t dim)
    : dim_(dim), box_(1.0 / std::sqrt(static_cast<double>(dim))), x_(dim, 0.0),
      coord_sq_sum_(dim, 0.0) {
    if (dim == 0) throw std::invalid_argument("adagrad: dimension must be positive");
}

void DiagonalAdaGrad::absorb(const Vec& cost) {
    if (cost.size() != dim_) throw std::invalid_argument("adagrad: cost dimension mismatch");
    for (std::size_t i = 0; i < dim_; ++i) {
        coord_sq_sum_[i] += cost[i] * cost[i];
        if (coord_sq_sum_[i] <= 0.0) continue;
        double v = x_[i] - cost[i] / std::sqrt(coord_sq_sum_[i]);
        x_[i] = std::clamp(v, -box_, box_);
    }
}

void DiagonalAdaGrad::restart() {
    x_.assign(dim_, 0.0);
    coord_sq_sum_.assign(dim_, 0.0);
}

std::vector<double> pnorm_grid(std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("pnorm_grid: need d >= 2");
    double logd = std::log(static_cast<double>(dim));
    std::size_t K = static_cast<std::size_t>(std::floor(logd / 2.0));
    std::vector<double> qs;
    double inv_q = 0.5;
    for (std::size_t i = 0; i < K; ++i) {
        inv_q -= 1.0 / logd;
        if (inv_q <= 0.0) break;
        qs.push_back(1.0 / inv_q);
    }
    return qs;
}

PNormLearner::PNormLearner(std::size_t dim, double q)
    : dim_(dim), q_(q), p_(q / (q - 1.0)), dual_sum_(dim, 0.0), x_(dim, 0.0) {
    if (dim == 0) throw std::invalid_argument("pnorm: dimension must be positive");
    if (!(q > 2.0)) throw std::invalid_argument("pnorm: need q > 2");
}

void PNormLearner::absorb(const Vec& cost) {
    if (cost.size() != dim_) throw std::invalid_argument("pnorm: cost dimension mismatch");
    axpy(1.0, cost, dual_sum_);
    double qn = norm_p(cost, q_);
    q_norm_sq_sum_ += qn * qn;
    if (q_norm_sq_sum_ <= 0.0) return;
    double scale = std::sqrt((p_ - 1.0) * q_norm_sq_sum_);

    // Gradient of the conjugate (1/2)||theta||_q^2 at -dual_sum/scale.
    double tq = norm_p(dual_sum_, q_);
    if (tq <= 0.0) {
        x_.assign(dim_, 0.0);
        return;
    }
    Vec y(dim_);
    double outer = std::pow(tq / scale, 2.0 - q_);
    for (std::size_t i = 0; i < dim_; ++i) {
        double th = -dual_sum_[i] / scale;
        y[i] = outer * std::copysign(std::pow(std::abs(th), q_ - 1.0), th);
    }
    x_ = project_to_ball(y);
}

void PNormLearner::restart() {
    dual_sum_.assign(dim_, 0.0);
    x_.assign(dim_, 0.0);
    q_norm_sq_sum_ = 0.0;
}

MonotoneBoundEvaluator aogd_bound() {
    return {"aogd", [](const std::vector<Vec>& costs, std::size_t a, std::size_t b) {
                double s = 0.0;
                for (std::size_t t = a; t < b; ++t) s += norm_sq(costs[t]);
                return 2.0 * std::sqrt(s);
            }};
}

MonotoneBoundEvaluator adagrad_bound(std::size_t dim) {
    double c = 1.0 + 2.0 / static_cast<double>(dim);
    return {"adagrad", [c](const std::vector<Vec>& costs, std::size_t a, std::size_t b) {
                if (a >= b) return 0.0;
                std::size_t d = costs[a].size();
                Vec sq(d, 0.0);
                for (std::size_t t = a; t < b; ++t)
                    for (std::size_t i = 0; i < d; ++i) sq[i] += costs[t][i] * costs[t][i];
                double s = 0.0;
                for (double v : sq) s += std::sqrt(v);
                return c * s;
            }};
}

MonotoneBoundEvaluator pnorm_bound(std::size_t dim, double q) {
    double p = q / (q - 1.0);
    double diam = std::pow(static_cast<double>(dim), 1.0 / p - 0.5);
    double c = diam / std::sqrt(p - 1.0);
    return {"pnorm", [c, q](const std::vector<Vec>& costs, std::size_t a, std::size_t b) {
                double s = 0.0;
                for (std::size_t t = a; t < b; ++t) {
                    double qn = norm_p(costs[t], q);
                    s += qn * qn;
                }
                return c * std::sqrt(s);
            }};
}

ZooEntry base_learner_zoo(ZooKind kind, std::size_t dim, std::size_t index) {
    switch (kind) {
        case ZooKind::adaptive_ogd:
            return {std::make_unique<AdaptiveOgd>(dim), aogd_bound()};
        case ZooKind::diagonal_adagrad:
            return {std::make_unique<DiagonalAdaGrad>(dim), adagrad_bound(dim)};
        case ZooKind::p_norm_mirror_descent: {
            auto grid = pnorm_grid(dim);
            if (grid.empty()) throw std::invalid_argument("pnorm zoo: empty grid (d too small)");
            if (index >= grid.size()) throw std::invalid_argument("pnorm zoo: grid index out of range");
            double q = grid[index];
            return {std::make_unique<PNormLearner>(dim, q), pnorm_bound(dim, q)};
        }
    }
    throw std::invalid_argument("base_learner_zoo: unknown kind");
}

}  // namespace olo
