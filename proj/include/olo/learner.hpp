#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "olo/ledger.hpp"
#include "olo/vec.hpp"

namespace olo {

// The K hint columns revealed before a decision.  Every column must have
// l2 norm at most 1.
struct HintMatrix {
    std::vector<Vec> columns;

    HintMatrix() = default;
    explicit HintMatrix(std::vector<Vec> cols) : columns(std::move(cols)) {}
    static HintMatrix single(Vec h) { return HintMatrix({std::move(h)}); }

    std::size_t hints() const { return columns.size(); }
    std::size_t dim() const { return columns.empty() ? 0 : columns.front().size(); }

    void validate(std::size_t expected_dim) const {
        for (const Vec& h : columns) {
            if (h.size() != expected_dim)
                throw std::invalid_argument("HintMatrix: hint dimension mismatch");
            validate_unit_norm(h, "hint");
        }
    }

    // Convex blend of the columns; ||blend|| <= 1 whenever w is in the simplex.
    Vec blend(const Vec& w) const {
        if (w.size() != columns.size())
            throw std::invalid_argument("HintMatrix::blend: weight length mismatch");
        Vec h(dim(), 0.0);
        for (std::size_t i = 0; i < columns.size(); ++i) axpy(w[i], columns[i], h);
        return h;
    }
};

// Protocol contract: observe_hints and observe_cost strictly alternate per
// round, and reset() restores the freshly constructed state exactly
// (bit-identical decisions given the same seed).  Hint-free learners accept
// any hint matrix and ignore it.
class Learner {
public:
    virtual ~Learner() = default;

    Vec observe_hints(const HintMatrix& hints) {
        if (awaiting_cost_)
            throw std::logic_error(name() + ": observe_hints called twice without a cost");
        Vec x = decide(hints);
        awaiting_cost_ = true;
        return x;
    }

    void observe_cost(const Vec& cost) {
        if (!awaiting_cost_)
            throw std::logic_error(name() + ": observe_cost called before observe_hints");
        absorb(validate_cost(cost));
        awaiting_cost_ = false;
    }

    void reset() {
        awaiting_cost_ = false;
        restart();
    }

    virtual std::string name() const = 0;

protected:
    virtual Vec decide(const HintMatrix& hints) = 0;
    virtual void absorb(const Vec& cost) = 0;
    virtual void restart() = 0;
    virtual Vec validate_cost(const Vec& cost) { return validate_unit_norm(cost, "cost"); }

private:
    bool awaiting_cost_ = false;
};

using LearnerPtr = std::unique_ptr<Learner>;

// Runs the full protocol on fixed cost/hint sequences and returns the
// ledger.  `hints[t]` may be empty for hint-free runs.
struct RunTrace {
    std::vector<Vec> decisions;
    RegretLedger ledger;
};

inline RunTrace run_protocol(Learner& learner, const std::vector<Vec>& costs,
                             const std::vector<HintMatrix>& hints, bool keep_decisions = false) {
    if (!hints.empty() && hints.size() != costs.size())
        throw std::invalid_argument("run_protocol: hint/cost length mismatch");
    RunTrace trace;
    for (std::size_t t = 0; t < costs.size(); ++t) {
        Vec x = learner.observe_hints(hints.empty() ? HintMatrix{} : hints[t]);
        trace.ledger.update(costs[t], x);
        if (keep_decisions) trace.decisions.push_back(x);
        learner.observe_cost(costs[t]);
    }
    return trace;
}

}  // namespace olo
