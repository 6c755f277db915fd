#pragma once

#include <cstddef>

#include "olo/vec.hpp"

namespace olo {

// Running regret accounting over the unit ball.  Keeps only the cumulative
// incurred cost and the running cost sum, so an update is O(d) and no
// history is ever rescanned.  The sup over unit-ball comparators has the
// closed form  sup_{||u||<=1} sum<c_t, x_t - u> = cumulative_cost + ||sum c_t||.
class RegretLedger {
public:
    RegretLedger() = default;
    explicit RegretLedger(std::size_t dim) : cost_sum_(dim, 0.0) {}

    void update(const Vec& cost, const Vec& decision) {
        if (cost_sum_.empty()) cost_sum_.assign(cost.size(), 0.0);
        cumulative_cost_ += dot(cost, decision);
        axpy(1.0, cost, cost_sum_);
        ++rounds_;
    }

    void reset() {
        cumulative_cost_ = 0.0;
        cost_sum_.assign(cost_sum_.size(), 0.0);
        rounds_ = 0;
    }

    // Exact worst-case regret against the best unit-ball comparator.
    double worst_case_regret() const { return cumulative_cost_ + norm(cost_sum_); }

    // Regret against a fixed comparator u (unrestricted, so the
    // unconstrained setting can reuse the same ledger).
    double regret_vs(const Vec& u) const {
        if (!cost_sum_.empty() && u.size() != cost_sum_.size())
            throw std::invalid_argument("regret_vs: comparator dimension mismatch");
        return cumulative_cost_ - (cost_sum_.empty() ? 0.0 : dot(cost_sum_, u));
    }

    double cumulative_cost() const { return cumulative_cost_; }
    const Vec& cost_sum() const { return cost_sum_; }
    std::size_t rounds() const { return rounds_; }

private:
    double cumulative_cost_ = 0.0;
    Vec cost_sum_;
    std::size_t rounds_ = 0;
};

}  // namespace olo
