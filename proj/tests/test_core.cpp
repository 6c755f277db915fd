#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "olo/ledger.hpp"
#include "olo/learner.hpp"
#include "olo/rng.hpp"
#include "olo/vec.hpp"

using namespace olo;

TEST_CASE("project_to_ball basics") {
    CHECK(project_to_ball({0.3, 0.4}) == Vec{0.3, 0.4});

    Vec p = project_to_ball({3.0, 4.0});
    CHECK(p[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.8).epsilon(1e-12));

    Vec zero(5, 0.0);
    CHECK(project_to_ball(zero) == zero);

    CHECK_THROWS_AS(project_to_ball({1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(project_to_ball({std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
}

TEST_CASE("project_to_ball is idempotent and non-expansive") {
    SplitMix64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        std::size_t d = 1 + rng.below(5);
        Vec x = scaled(rng.gaussian_vec(d), rng.uniform(0.0, 3.0));
        Vec y = scaled(rng.gaussian_vec(d), rng.uniform(0.0, 3.0));
        Vec px = project_to_ball(x);
        Vec ppx = project_to_ball(px);
        for (std::size_t j = 0; j < d; ++j) CHECK(px[j] == doctest::Approx(ppx[j]).epsilon(1e-15));

        Vec py = project_to_ball(y);
        Vec dxy = x, dpq = px;
        axpy(-1.0, y, dxy);
        axpy(-1.0, py, dpq);
        CHECK(norm(dpq) <= norm(dxy) + 1e-12);
    }
}

TEST_CASE("worst-case regret closed form") {
    RegretLedger ledger(2);
    ledger.update({1.0, 0.0}, {0.0, 0.0});
    ledger.update({0.0, 1.0}, {0.0, 0.0});
    CHECK(ledger.worst_case_regret() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ledger.rounds() == 2);

    RegretLedger one(2);
    one.update({1.0, 0.0}, {1.0, 0.0});
    CHECK(one.worst_case_regret() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("worst-case regret matches a dense comparator sweep") {
    SplitMix64 rng(22);
    RegretLedger ledger(2);
    for (int t = 0; t < 5; ++t)
        ledger.update(scaled(rng.unit_vec(2), rng.uniform01()),
                      olo::testing::random_ball_point(rng, 2));
    // 10,000 boundary comparators on an angular grid (the sup is attained on
    // the boundary), plus random interior points.
    double best = -1e300;
    for (int i = 0; i < 10000; ++i) {
        double a = 2.0 * M_PI * i / 10000.0;
        best = std::max(best, ledger.regret_vs({std::cos(a), std::sin(a)}));
    }
    for (int i = 0; i < 2000; ++i)
        best = std::max(best, ledger.regret_vs(olo::testing::random_ball_point(rng, 2)));
    CHECK(ledger.worst_case_regret() == doctest::Approx(best).epsilon(1e-6));
    CHECK(ledger.worst_case_regret() >= best - 1e-12);
}

TEST_CASE("regret against fixed comparators") {
    SplitMix64 rng(33);
    RegretLedger ledger(3);
    std::vector<Vec> costs, decisions;
    for (int t = 0; t < 20; ++t) {
        costs.push_back(scaled(rng.unit_vec(3), rng.uniform01()));
        decisions.push_back(olo::testing::random_ball_point(rng, 3));
        ledger.update(costs.back(), decisions.back());
    }
    CHECK(ledger.regret_vs(Vec(3, 0.0)) == doctest::Approx(ledger.cumulative_cost()));

    // sup_u of  cum - <G,u>  over the ball is attained at u = -G/||G||.
    Vec maximizer = scaled(ledger.cost_sum(), -1.0 / norm(ledger.cost_sum()));
    CHECK(ledger.regret_vs(maximizer) ==
          doctest::Approx(ledger.worst_case_regret()).epsilon(1e-12));

    // Direct round-by-round summation oracle.
    Vec u = olo::testing::random_ball_point(rng, 3);
    double direct = 0.0;
    for (int t = 0; t < 20; ++t) {
        Vec diff = decisions[t];
        axpy(-1.0, u, diff);
        direct += dot(costs[t], diff);
    }
    CHECK(ledger.regret_vs(u) == doctest::Approx(direct).epsilon(1e-9));

    CHECK_THROWS_AS(ledger.regret_vs(Vec(2, 0.0)), std::invalid_argument);
}

TEST_CASE("worst-case regret dominates every ball comparator") {
    SplitMix64 rng(44);
    RegretLedger ledger(4);
    for (int t = 0; t < 30; ++t)
        ledger.update(scaled(rng.unit_vec(4), rng.uniform01()),
                      olo::testing::random_ball_point(rng, 4));
    double wcr = ledger.worst_case_regret();
    for (int i = 0; i < 1000; ++i)
        CHECK(wcr >= ledger.regret_vs(olo::testing::random_ball_point(rng, 4)) - 1e-12);
}

TEST_CASE("ledger updates are associative") {
    SplitMix64 rng(55);
    std::vector<Vec> costs, decisions;
    for (int t = 0; t < 9; ++t) {
        costs.push_back(scaled(rng.unit_vec(3), rng.uniform01()));
        decisions.push_back(olo::testing::random_ball_point(rng, 3));
    }
    RegretLedger whole(3);
    for (int t = 0; t < 9; ++t) whole.update(costs[t], decisions[t]);

    // Splitting the stream anywhere gives the same final state.
    for (int split : {1, 3, 6, 8}) {
        RegretLedger parts(3);
        for (int t = 0; t < split; ++t) parts.update(costs[t], decisions[t]);
        for (int t = split; t < 9; ++t) parts.update(costs[t], decisions[t]);
        CHECK(parts.worst_case_regret() == whole.worst_case_regret());
        CHECK(parts.rounds() == 9);
    }
}

TEST_CASE("unit-norm validation renormalizes inside tolerance and rejects beyond") {
    Vec barely{1.0 + 5e-10, 0.0};
    Vec fixed = validate_unit_norm(barely, "cost");
    CHECK(norm(fixed) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(validate_unit_norm(Vec{1.1, 0.0}, "cost"), std::invalid_argument);
    CHECK_THROWS_AS(validate_unit_norm(Vec{std::nan("")}, "cost"), std::invalid_argument);

    Vec inside{0.3, -0.2};
    CHECK(validate_unit_norm(inside, "cost") == inside);
}

TEST_CASE("learner protocol enforces alternation") {
    olo::testing::ConstantLearner learner(Vec{0.5, 0.0});
    HintMatrix none;
    learner.observe_hints(none);
    CHECK_THROWS_AS(learner.observe_hints(none), std::logic_error);
    learner.observe_cost({0.1, 0.2});
    CHECK_THROWS_AS(learner.observe_cost(Vec{0.1, 0.2}), std::logic_error);
}
