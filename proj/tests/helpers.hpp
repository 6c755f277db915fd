#pragma once

#include <cstdint>

#include "olo/learner.hpp"
#include "olo/rng.hpp"
#include "olo/zoo.hpp"

namespace olo::testing {

// Plays a fixed point forever.
class ConstantLearner : public Learner {
public:
    explicit ConstantLearner(Vec point) : point_(std::move(point)) {}
    std::string name() const override { return "constant"; }

protected:
    Vec decide(const HintMatrix&) override { return point_; }
    void absorb(const Vec&) override {}
    void restart() override {}

private:
    Vec point_;
};

// Plays +e1 for the first `stop_after` rounds since its last reset, then 0.
// Its certificate on a window of n costs is
//     sum_{local tau <= stop_after} ||c_tau|| + sum_window ||c_tau||.
// The first term depends on where the window starts, so this is a monotone
// regret bound only on streams with constant cost norms; the combiner tests
// that use it feed constant costs.
class PlayThenStop : public Learner {
public:
    PlayThenStop(std::size_t dim, std::size_t stop_after)
        : dim_(dim), stop_after_(stop_after) {}
    std::string name() const override { return "play-then-stop"; }
    std::size_t stop_after() const { return stop_after_; }

protected:
    Vec decide(const HintMatrix&) override {
        Vec x(dim_, 0.0);
        if (rounds_ < stop_after_) x[0] = 1.0;
        return x;
    }
    void absorb(const Vec&) override { ++rounds_; }
    void restart() override { rounds_ = 0; }

private:
    std::size_t dim_;
    std::size_t stop_after_;
    std::size_t rounds_ = 0;
};

inline MonotoneBoundEvaluator play_then_stop_bound(std::size_t stop_after) {
    return {"play-then-stop",
            [stop_after](const std::vector<Vec>& costs, std::size_t a, std::size_t b) {
                double s = 0.0;
                for (std::size_t t = a; t < b; ++t) {
                    double n = norm(costs[t]);
                    if (t - a < stop_after) s += n;
                    s += n;
                }
                return s;
            }};
}

inline Vec random_ball_point(SplitMix64& rng, std::size_t d) {
    Vec v = rng.unit_vec(d);
    double scale = std::pow(rng.uniform01(), 1.0 / static_cast<double>(d));
    return scaled(v, scale);
}

inline Vec random_simplex_point(SplitMix64& rng, std::size_t K) {
    Vec w(K);
    double s = 0.0;
    for (double& v : w) {
        v = -std::log(1.0 - rng.uniform01());
        s += v;
    }
    for (double& v : w) v /= s;
    return w;
}

}  // namespace olo::testing
