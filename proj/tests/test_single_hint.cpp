#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "olo/adversary.hpp"
#include "olo/single_hint.hpp"
#include "olo/zoo.hpp"

using namespace olo;

TEST_CASE("solve_lambda closed form") {
    CHECK(solve_lambda(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));

    double l = solve_lambda(3.0, 4.0);
    CHECK(l == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(l * (3.0 + l) == doctest::Approx(4.0).epsilon(1e-12));

    CHECK(solve_lambda(7.5, 0.0) == 0.0);
    CHECK_THROWS_AS(solve_lambda(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_lambda(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("solve_lambda fixed point residual stays tiny") {
    SplitMix64 rng(1);
    for (int i = 0; i < 10000; ++i) {
        double S = rng.uniform(0.0, 200.0);
        double cn2 = rng.uniform(0.0, 1.0);
        double l = solve_lambda(S, cn2);
        CHECK(l >= 0.0);
        CHECK(std::abs(l * (S + l) - cn2) <= 1e-9);
    }
}

TEST_CASE("shift_decision") {
    Vec x = shift_decision(Vec{0.0, 0.0}, Vec{1.0, 0.0}, 1.0);
    CHECK(x[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(x[1] == 0.0);

    Vec boundary{0.0, 1.0};
    CHECK(shift_decision(boundary, Vec{0.7, 0.1}, 1.5) == boundary);

    Vec shifted = shift_decision(Vec{0.6, 0.0}, Vec{0.0, 1.0}, 2.0);
    CHECK(shifted[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(shifted[1] == doctest::Approx(-0.16).epsilon(1e-12));
    CHECK(norm(shifted) <= 1.0);

    CHECK_THROWS_AS(shift_decision(Vec{0.0}, Vec{1.0}, 0.99), std::invalid_argument);
}

TEST_CASE("shift_decision never leaves the ball") {
    SplitMix64 rng(2);
    for (int i = 0; i < 5000; ++i) {
        std::size_t d = 1 + rng.below(6);
        Vec xbar = olo::testing::random_ball_point(rng, d);
        Vec h = scaled(rng.unit_vec(d), rng.uniform01());
        double r = rng.uniform(1.0, 4.0);
        CHECK(norm(shift_decision(xbar, h, r)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("update_radius") {
    CHECK(update_radius(1.3, 0.3, 0.5, 64) == doctest::Approx(1.3).epsilon(1e-15));
    CHECK(update_radius(1.3, 0.0, 0.5, 64) == doctest::Approx(1.3).epsilon(1e-15));

    // alpha = log T makes the increment exactly 1.
    double logT = std::log(16.0);
    CHECK(update_radius(1.0, -1.0, logT, 16) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(update_radius(1.0, -1.0, 0.5, 1), std::invalid_argument);
}

TEST_CASE("inner learner stays at the origin on zero costs") {
    SingleHintLearner learner(3, 0.4, 128);
    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        learner.observe_hints(HintMatrix::single(rng.unit_vec(3)));
        learner.observe_cost(Vec(3, 0.0));
    }
    CHECK(learner.inner_iterate() == Vec(3, 0.0));
    CHECK(learner.sigma_sum() == 0.0);
    CHECK(learner.lambda_sum() == 0.0);
    CHECK(learner.ledger().worst_case_regret() == 0.0);
}

TEST_CASE("single round against hand-computed state") {
    SingleHintLearner learner(2, 0.5, 64);
    Vec x1 = learner.observe_hints(HintMatrix::single(Vec{1.0, 0.0}));
    // xbar_1 = 0, so the decision is -h/2.
    CHECK(x1[0] == doctest::Approx(-0.5).epsilon(1e-15));

    learner.observe_cost({1.0, 0.0});
    double lambda = (-1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(learner.last_lambda() == doctest::Approx(lambda).epsilon(1e-12));
    CHECK(learner.sigma_sum() == doctest::Approx(1.0).epsilon(1e-15));
    double eta = 1.0 / (1.0 + lambda);
    CHECK(learner.inner_iterate()[0] == doctest::Approx(-eta).epsilon(1e-12));
    CHECK(learner.inner_iterate()[1] == 0.0);

    // <c,h> = 1 > 0 leaves the radius alone.
    CHECK(learner.radius() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("inner loss gradient matches central finite differences") {
    SplitMix64 rng(4);
    for (int i = 0; i < 200; ++i) {
        std::size_t d = 2 + rng.below(3);
        Vec c = scaled(rng.unit_vec(d), rng.uniform01());
        double sigma = rng.uniform(0.0, 1.0);
        Vec x = olo::testing::random_ball_point(rng, d);
        auto loss = [&](const Vec& z) { return dot(c, z) + 0.5 * sigma * (norm_sq(z) - 1.0); };
        const double h = 1e-6;
        for (std::size_t j = 0; j < d; ++j) {
            Vec hi = x, lo = x;
            hi[j] += h;
            lo[j] -= h;
            double fd = (loss(hi) - loss(lo)) / (2.0 * h);
            double analytic = c[j] + sigma * x[j];
            CHECK(analytic == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("emitted decisions stay feasible; lambda and radius identities hold") {
    std::size_t d = 4, T = 3000;
    SingleHintLearner learner(d, 0.3, T);
    SplitMix64 rng(5);
    double neg_sum = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        Vec h = scaled(rng.unit_vec(d), rng.uniform01());
        Vec x = learner.observe_hints(HintMatrix::single(h));
        CHECK(norm(x) <= 1.0 + kNormTol);
        Vec c = scaled(rng.unit_vec(d), rng.uniform01());
        neg_sum += std::max(0.0, -dot(c, h));
        double r_before = learner.radius();
        learner.observe_cost(c);
        CHECK(learner.last_lambda_residual() <= 1e-9);
        CHECK(learner.radius() >= r_before);
    }
    // Telescoping the radius update: r_T^2 - 1 == (alpha/log T) sum max(0, -<c,h>).
    double lhs = learner.radius() * learner.radius() - 1.0;
    double rhs = 0.3 * neg_sum / std::log(static_cast<double>(T));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
}

TEST_CASE("zero hints reduce to the adaptive inner learner") {
    std::size_t d = 4, T = 1024;
    Scenario sc = gen_dense_isotropic(T, d, 77);

    SingleHintLearner learner(d, 0.5, T);
    RegretLedger ledger(d);
    for (std::size_t t = 0; t < T; ++t) {
        Vec x = learner.observe_hints(HintMatrix::single(Vec(d, 0.0)));
        ledger.update(sc.costs[t], x);
        learner.observe_cost(sc.costs[t]);
    }
    CHECK(learner.radius() == 1.0);
    CHECK(learner.sigma_sum() == 0.0);
    CHECK(ledger.worst_case_regret() <= 3.0 * std::sqrt(static_cast<double>(T)));

    // The adaptive-OGD baseline lands in the same regime.
    AdaptiveOgd baseline(d);
    RunTrace base = run_protocol(baseline, sc.costs, {});
    CHECK(base.ledger.worst_case_regret() <= 3.0 * std::sqrt(static_cast<double>(T)));
}

TEST_CASE("alpha-good hints give polylog regret") {
    std::size_t d = 4, T = 4096;
    double alpha = 0.25;
    Scenario sc = gen_correlated(T, d, alpha, 0.0, 99);
    SingleHintLearner learner(d, alpha, T);
    RunTrace trace = run_protocol(learner, sc.costs, sc.hints);
    CHECK(trace.ledger.worst_case_regret() <=
          40.0 * std::log(static_cast<double>(T)) / alpha);
}

TEST_CASE("one zero-cost round has zero regret") {
    SingleHintLearner learner(2, 0.5, 2);
    Vec x = learner.observe_hints(HintMatrix::single(Vec{0.3, 0.1}));
    RegretLedger ledger(2);
    ledger.update(Vec(2, 0.0), x);
    learner.observe_cost(Vec(2, 0.0));
    CHECK(ledger.worst_case_regret() == 0.0);
}

TEST_CASE("constructor and input validation") {
    CHECK_THROWS_AS(SingleHintLearner(0, 0.5, 16), std::invalid_argument);
    CHECK_THROWS_AS(SingleHintLearner(2, 0.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(SingleHintLearner(2, 1.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(SingleHintLearner(2, 0.5, 1), std::invalid_argument);

    SingleHintLearner learner(2, 0.5, 16);
    CHECK_THROWS_AS(learner.observe_hints(HintMatrix::single(Vec{1.2, 0.0})),
                    std::invalid_argument);
    HintMatrix two;
    two.columns = {Vec{1.0, 0.0}, Vec{0.0, 1.0}};
    CHECK_THROWS_AS(learner.observe_hints(two), std::invalid_argument);
    learner.observe_hints(HintMatrix::single(Vec{0.5, 0.0}));
    CHECK_THROWS_AS(learner.observe_cost(Vec{1.5, 0.0}), std::invalid_argument);
}

TEST_CASE("reset restores the initial trajectory exactly") {
    std::size_t d = 3, T = 64;
    Scenario sc = gen_correlated(T, d, 0.3, 0.2, 123);
    SingleHintLearner learner(d, 0.3, T);
    RunTrace first = run_protocol(learner, sc.costs, sc.hints, true);
    learner.reset();
    RunTrace second = run_protocol(learner, sc.costs, sc.hints, true);
    REQUIRE(first.decisions.size() == second.decisions.size());
    for (std::size_t t = 0; t < first.decisions.size(); ++t)
        CHECK(first.decisions[t] == second.decisions[t]);
}
