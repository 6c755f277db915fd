#include "olo/propcheck.hpp"

#include <cmath>
#include <sstream>

#include "olo/adversary.hpp"
#include "olo/bench.hpp"
#include "olo/combiner.hpp"
#include "olo/multi_hint.hpp"
#include "olo/single_hint.hpp"
#include "olo/unconstrained.hpp"
#include "olo/zoo.hpp"

namespace olo {

namespace {

Vec random_ball_point(SplitMix64& rng, std::size_t d) {
    Vec v = rng.unit_vec(d);
    double scale = std::pow(rng.uniform01(), 1.0 / static_cast<double>(d));
    return scaled(v, scale);
}

Vec random_simplex_point(SplitMix64& rng, std::size_t K) {
    Vec w(K);
    double s = 0.0;
    for (double& v : w) {
        v = -std::log(1.0 - rng.uniform01());
        s += v;
    }
    for (double& v : w) v /= s;
    return w;
}

PropResult check(const std::string& name, bool ok, const std::string& detail = "") {
    return {name, ok, detail};
}

PropResult core_projection(SplitMix64& rng) {
    for (int i = 0; i < 1000; ++i) {
        std::size_t d = 1 + rng.below(6);
        Vec x = scaled(rng.gaussian_vec(d), rng.uniform(0.0, 3.0));
        Vec y = scaled(rng.gaussian_vec(d), rng.uniform(0.0, 3.0));
        Vec px = project_to_ball(x), py = project_to_ball(y);
        Vec ppx = project_to_ball(px);
        for (std::size_t j = 0; j < d; ++j)
            if (std::abs(px[j] - ppx[j]) > 1e-15)
                return check("core/projection", false, "not idempotent");
        Vec dx = x, dp = px;
        axpy(-1.0, y, dx);
        axpy(-1.0, py, dp);
        if (norm(dp) > norm(dx) + 1e-12)
            return check("core/projection", false, "expansive pair found");
    }
    return check("core/projection", true);
}

PropResult core_ledger(SplitMix64& rng) {
    std::size_t d = 3;
    RegretLedger ledger(d);
    std::vector<Vec> costs;
    for (int t = 0; t < 50; ++t) {
        Vec c = scaled(rng.unit_vec(d), rng.uniform01());
        ledger.update(c, random_ball_point(rng, d));
        costs.push_back(c);
    }
    double wcr = ledger.worst_case_regret();
    for (int i = 0; i < 1000; ++i) {
        if (wcr + 1e-12 < ledger.regret_vs(random_ball_point(rng, d)))
            return check("core/ledger-sup", false, "comparator beats closed-form sup");
    }
    return check("core/ledger-sup", true);
}

PropResult single_hint_lambda(SplitMix64& rng) {
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double S = rng.uniform(0.0, 100.0);
        double cn2 = rng.uniform(0.0, 1.0);
        double l = solve_lambda(S, cn2);
        worst = std::max(worst, std::abs(l * (S + l) - cn2));
    }
    std::ostringstream ss;
    ss << "max residual " << worst;
    return check("single-hint/lambda-fixed-point", worst <= 1e-9, ss.str());
}

PropResult single_hint_feasible(SplitMix64& rng) {
    std::size_t d = 4, T = 5000;
    SingleHintLearner learner(d, 0.3, T);
    double sum_neg = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        Vec h = rng.unit_vec(d);
        Vec x = learner.observe_hints(HintMatrix::single(h));
        if (norm(x) > 1.0 + kNormTol)
            return check("single-hint/ball-feasibility", false, "decision left the ball");
        Vec c = scaled(rng.unit_vec(d), rng.uniform01());
        sum_neg += std::max(0.0, -dot(c, h));
        learner.observe_cost(c);
        if (learner.last_lambda_residual() > 1e-9)
            return check("single-hint/ball-feasibility", false, "lambda residual too large");
    }
    double lhs = learner.radius() * learner.radius() - 1.0;
    double rhs = 0.3 * sum_neg / std::log(static_cast<double>(T));
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, rhs))
        return check("single-hint/ball-feasibility", false, "radius telescoping broke");
    return check("single-hint/ball-feasibility", true);
}

PropResult hinge_properties(SplitMix64& rng) {
    for (int i = 0; i < 10000; ++i) {
        std::size_t K = 2 + rng.below(4), d = 1 + rng.below(4);
        double alpha = rng.uniform(0.05, 0.95);
        Vec c = scaled(rng.unit_vec(d), rng.uniform01());
        HintMatrix H;
        for (std::size_t k = 0; k < K; ++k) H.columns.push_back(scaled(rng.unit_vec(d), rng.uniform01()));
        Vec w = random_simplex_point(rng, K);
        Vec w2 = random_simplex_point(rng, K);
        double b = alpha * norm_sq(c);
        double a = dot(c, H.blend(w));
        SimplexLoss l = simplex_loss(w, c, H, alpha);
        SimplexLoss l2 = simplex_loss(w2, c, H, alpha);

        if (l.value < 0.0) return check("multi-hint/prop-3.2", false, "(a) negative value");
        double a2 = dot(c, H.blend(w2));
        double mid = smoothed_hinge(0.5 * (a + a2), b);
        if (mid > 0.5 * (l.value + l2.value) + 1e-12)
            return check("multi-hint/prop-3.2", false, "(a) midpoint convexity");
        if (a >= b && (l.value != 0.0 || norm_inf(l.grad) != 0.0))
            return check("multi-hint/prop-3.2", false, "(b) good blend with nonzero loss");
        if (a < 0.5 * b && l.value < 0.25 * b - 1e-12)
            return check("multi-hint/prop-3.2", false, "(c) weak blend with small loss");
        Vec dw = w;
        axpy(-1.0, w2, dw);
        double l1 = 0.0;
        for (double v : dw) l1 += std::abs(v);
        if (std::abs(l.value - l2.value) > 2.0 * l1 + 1e-12)
            return check("multi-hint/prop-3.2", false, "(d) lipschitz");
        double gi = norm_inf(l.grad);
        if (gi * gi > (4.0 / alpha) * l.value + 1e-9)
            return check("multi-hint/prop-3.2", false, "(e) self-bounded gradient");
        if (l.value > b + 2.0 * std::max(0.0, -a) + 1e-12)
            return check("multi-hint/prop-3.2", false, "(f) value cap");
    }
    return check("multi-hint/prop-3.2", true);
}

PropResult ftrl_positive(SplitMix64& rng) {
    for (int i = 0; i < 2000; ++i) {
        std::size_t K = 2 + rng.below(7);
        FtrlState st(K);
        for (std::size_t k = 0; k < K; ++k) st.grad_sum[k] = rng.uniform(-50.0, 50.0);
        st.sq_inf_sum = rng.uniform(0.0, 200.0);
        Vec w = ftrl_simplex_update(st);
        double sum = 0.0;
        for (double v : w) {
            if (!(v > 0.0)) return check("multi-hint/ftrl-simplex", false, "nonpositive weight");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            return check("multi-hint/ftrl-simplex", false, "weights do not sum to 1");
    }
    return check("multi-hint/ftrl-simplex", true);
}

PropResult khints_feasible(SplitMix64& rng) {
    std::size_t d = 3, K = 3, T = 500;
    KHintsLearner learner(d, K, 0.25, T);
    for (std::size_t t = 0; t < T; ++t) {
        HintMatrix H;
        for (std::size_t k = 0; k < K; ++k) H.columns.push_back(rng.unit_vec(d));
        Vec x = learner.observe_hints(H);
        if (norm(x) > 1.0 + kNormTol)
            return check("multi-hint/k-hints-feasibility", false, "decision left the ball");
        learner.observe_cost(scaled(rng.unit_vec(d), rng.uniform01()));
    }
    return check("multi-hint/k-hints-feasibility", true);
}

PropResult monotone_bounds(SplitMix64& rng) {
    std::size_t d = 8, T = 200;
    Scenario sc = gen_dense_isotropic(T, d, rng.next());
    std::vector<MonotoneBoundEvaluator> evals = {aogd_bound(), adagrad_bound(d),
                                                 pnorm_bound(d, pnorm_grid(d).front())};
    for (int i = 0; i < 1000; ++i) {
        std::size_t a = rng.below(T), b = a + rng.below(T - a + 1);
        std::size_t a2 = a + rng.below(b - a + 1), b2 = a2 + rng.below(b - a2 + 1);
        for (const auto& ev : evals)
            if (ev(sc.costs, a2, b2) > ev(sc.costs, a, b) + 1e-12)
                return check("combiners/monotone-bounds", false,
                             "nested interval exceeded outer bound (" + ev.tag + ")");
    }
    return check("combiners/monotone-bounds", true);
}

PropResult det_combiner_guarantee(SplitMix64& rng) {
    std::size_t d = 8, T = 1000;
    Scenario sc = gen_sparse_onehot(T, d, rng.next());
    std::vector<LearnerPtr> parts;
    parts.push_back(std::make_unique<AdaptiveOgd>(d));
    parts.push_back(std::make_unique<DiagonalAdaGrad>(d));
    DetCombiner comb(std::move(parts));
    for (std::size_t t = 0; t < T; ++t) {
        comb.observe_hints(HintMatrix{});
        comb.observe_cost(sc.costs[t]);
    }
    std::vector<Vec> halved;
    halved.reserve(T);
    for (const Vec& c : sc.costs) halved.push_back(scaled(c, 0.5));
    double min_bound = std::min(aogd_bound()(halved), adagrad_bound(d)(halved));
    double rhs = combiner_regret_bound(2, min_bound);
    bool ok = comb.internal_worst_case_regret() <= rhs;
    std::ostringstream ss;
    ss << "regret " << comb.internal_worst_case_regret() << " vs " << rhs;
    return check("combiners/det-guarantee", ok, ss.str());
}

PropResult wealth_positive(SplitMix64& rng) {
    for (int trial = 0; trial < 50; ++trial) {
        KtBettor bettor(rng.uniform(0.1, 2.0));
        for (int t = 0; t < 400; ++t) {
            bettor.observe(rng.uniform(-1.0, 1.0));
            if (!(bettor.wealth() > 0.0))
                return check("unconstrained/wealth-positive", false, "wealth hit zero");
            if (!(std::abs(bettor.bet_fraction()) < 1.0))
                return check("unconstrained/wealth-positive", false, "bet fraction left (-1,1)");
        }
    }
    return check("unconstrained/wealth-positive", true);
}

PropResult composite_identity(SplitMix64& rng) {
    std::size_t d = 3, K = 2, T = 100;
    UnconstrainedComposite learner(d, K, T);
    for (std::size_t t = 0; t < T; ++t) {
        HintMatrix H;
        for (std::size_t k = 0; k < K; ++k) H.columns.push_back(rng.unit_vec(d));
        Vec x = learner.observe_hints(H);
        Vec expect = learner.last_base_decision();
        for (std::size_t k = 0; k < K; ++k)
            axpy(learner.last_scalar_outputs()[k], H.columns[k], expect);
        for (std::size_t i = 0; i < d; ++i)
            if (x[i] != expect[i])
                return check("unconstrained/composite-identity", false, "span decomposition broke");
        learner.observe_cost(scaled(rng.unit_vec(d), rng.uniform01()));
    }
    return check("unconstrained/composite-identity", true);
}

PropResult generator_contracts(SplitMix64& rng) {
    std::uint64_t seed = rng.next();
    Scenario a = gen_correlated(64, 3, 0.25, 0.3, seed);
    Scenario b = gen_correlated(64, 3, 0.25, 0.3, seed);
    for (std::size_t t = 0; t < a.costs.size(); ++t) {
        if (a.costs[t] != b.costs[t] || a.hints[t].columns != b.hints[t].columns)
            return check("adversaries/contracts", false, "regeneration not bit-identical");
    }
    Scenario lk = gen_logk_lower(8, 0.25, seed);
    if (lk.spec.K != 16) return check("adversaries/contracts", false, "logk K mismatch");
    for (std::size_t t = 0; t < lk.costs.size(); ++t) {
        double corr = dot(lk.costs[t], lk.hints[t].blend(lk.witness_w));
        if (std::abs(corr - 0.25) > 1e-15)
            return check("adversaries/contracts", false, "logk witness inexact");
    }
    double wsum = 0.0;
    for (double v : lk.witness_w) {
        if (v < 0.0) return check("adversaries/contracts", false, "witness left the simplex");
        wsum += v;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        return check("adversaries/contracts", false, "witness weights do not sum to 1");
    return check("adversaries/contracts", true);
}

}  // namespace

std::vector<PropResult> run_property_suites(std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<PropResult> out;
    out.push_back(core_projection(rng));
    out.push_back(core_ledger(rng));
    out.push_back(single_hint_lambda(rng));
    out.push_back(single_hint_feasible(rng));
    out.push_back(hinge_properties(rng));
    out.push_back(ftrl_positive(rng));
    out.push_back(khints_feasible(rng));
    out.push_back(monotone_bounds(rng));
    out.push_back(det_combiner_guarantee(rng));
    out.push_back(wealth_positive(rng));
    out.push_back(composite_identity(rng));
    out.push_back(generator_contracts(rng));
    return out;
}

bool report_property_suites(std::ostream& out, std::uint64_t seed) {
    bool all = true;
    for (const PropResult& r : run_property_suites(seed)) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
        all = all && r.passed;
    }
    return all;
}

}  // namespace olo
