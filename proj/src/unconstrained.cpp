#include "olo/unconstrained.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace olo {

namespace {
constexpr double kWealthCap = 7.225973768125749e86;  // exp(200)
}

KtBettor::KtBettor(double epsilon) : epsilon_(epsilon), wealth_(epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("KtBettor: epsilon must be positive");
}

double KtBettor::bet_fraction() const {
    return neg_cost_sum_ / static_cast<double>(rounds_ + 1);
}

double KtBettor::output() const { return bet_fraction() * wealth_; }

void KtBettor::observe(double g) {
    if (std::abs(g) > 1.0 + kNormTol)
        throw std::invalid_argument("KtBettor: scalar cost magnitude exceeds 1");
    g = std::clamp(g, -1.0, 1.0);
    double beta = bet_fraction();
    wealth_ = std::min(wealth_ * (1.0 - g * beta), kWealthCap);
    neg_cost_sum_ -= g;
    ++rounds_;
}

void KtBettor::reset() {
    wealth_ = epsilon_;
    neg_cost_sum_ = 0.0;
    rounds_ = 0;
}

ParameterFreeLearner::ParameterFreeLearner(std::size_t dim, double epsilon)
    : dim_(dim), bettor_(epsilon), direction_(dim) {
    if (dim == 0) throw std::invalid_argument("parameter-free: dimension must be positive");
}

Vec ParameterFreeLearner::decide(const HintMatrix&) {
    pending_dir_ = direction_.observe_hints(HintMatrix{});
    return scaled(pending_dir_, bettor_.output());
}

void ParameterFreeLearner::absorb(const Vec& cost) {
    if (cost.size() != dim_) throw std::invalid_argument("parameter-free: cost dimension mismatch");
    bettor_.observe(std::clamp(dot(cost, pending_dir_), -1.0, 1.0));
    direction_.observe_cost(cost);
}

void ParameterFreeLearner::restart() {
    bettor_.reset();
    direction_.reset();
    pending_dir_.clear();
}

UnconstrainedComposite::UnconstrainedComposite(std::size_t dim, std::size_t num_hints,
                                               std::size_t, double epsilon)
    : dim_(dim), K_(num_hints), base_(dim, epsilon) {
    bettors_.reserve(K_);
    for (std::size_t i = 0; i < K_; ++i)
        bettors_.emplace_back(epsilon / static_cast<double>(std::max<std::size_t>(K_, 1)));
}

Vec UnconstrainedComposite::decide(const HintMatrix& hints) {
    if (hints.hints() != K_) throw std::invalid_argument("unconstrained: hint count mismatch");
    hints.validate(dim_);
    pending_hints_ = hints;
    last_base_ = base_.observe_hints(HintMatrix{});
    last_scalars_.resize(K_);
    Vec x = last_base_;
    for (std::size_t i = 0; i < K_; ++i) {
        last_scalars_[i] = bettors_[i].output();
        axpy(last_scalars_[i], hints.columns[i], x);
    }
    return x;
}

void UnconstrainedComposite::absorb(const Vec& cost) {
    base_.observe_cost(cost);
    for (std::size_t i = 0; i < K_; ++i)
        bettors_[i].observe(std::clamp(dot(cost, pending_hints_.columns[i]), -1.0, 1.0));
}

void UnconstrainedComposite::restart() {
    base_.reset();
    for (auto& b : bettors_) b.reset();
    pending_hints_ = HintMatrix{};
    last_base_.clear();
    last_scalars_.clear();
}

}  // namespace olo
