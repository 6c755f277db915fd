#include "olo/adversary.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace olo {

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::correlated: return "correlated";
        case ScenarioKind::complementary_pair: return "complementary-pair";
        case ScenarioKind::logk_lower: return "logk-lower";
        case ScenarioKind::alpha_lower: return "alpha-lower";
        case ScenarioKind::random_signs: return "random-signs";
        case ScenarioKind::sparse_onehot: return "sparse-onehot";
        case ScenarioKind::dense_isotropic: return "dense-isotropic";
    }
    return "?";
}

ScenarioKind scenario_kind_from_string(const std::string& s) {
    for (ScenarioKind k : {ScenarioKind::correlated, ScenarioKind::complementary_pair,
                           ScenarioKind::logk_lower, ScenarioKind::alpha_lower,
                           ScenarioKind::random_signs, ScenarioKind::sparse_onehot,
                           ScenarioKind::dense_isotropic})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown scenario kind '" + s +
                                "'; valid: correlated, complementary-pair, logk-lower, "
                                "alpha-lower, random-signs, sparse-onehot, dense-isotropic");
}

std::vector<Vec> Scenario::hint_sequence(std::size_t i) const {
    std::vector<Vec> seq;
    seq.reserve(hints.size());
    for (const HintMatrix& H : hints) seq.push_back(H.columns.at(i));
    return seq;
}

namespace {

void check_norms(const Scenario& sc) {
    for (const Vec& c : sc.costs) validate_unit_norm(c, "generated cost");
    for (const HintMatrix& H : sc.hints)
        for (const Vec& h : H.columns) validate_unit_norm(h, "generated hint");
}

// Unit vector orthogonal to c, seeded.  d = 1 has no orthogonal direction;
// callers handle that case.
Vec orthogonal_unit(SplitMix64& rng, const Vec& c) {
    for (;;) {
        Vec n = rng.gaussian_vec(c.size());
        axpy(-dot(n, c), c, n);
        double len = norm(n);
        if (len > 1e-9) return scaled(n, 1.0 / len);
    }
}

}  // namespace

Scenario gen_correlated(std::size_t T, std::size_t d, double alpha,
                        const std::vector<std::size_t>& bad_set, std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("gen_correlated: alpha must be in (0,1)");
    if (d == 0) throw std::invalid_argument("gen_correlated: d must be positive");
    std::vector<bool> bad(T, false);
    for (std::size_t t : bad_set) {
        if (t >= T) throw std::invalid_argument("gen_correlated: bad round index out of range");
        bad[t] = true;
    }
    SplitMix64 rng(seed);
    Scenario sc;
    sc.spec = {ScenarioKind::correlated, T, d, 1, alpha, 0.0, bad_set, seed};
    double ortho = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    for (std::size_t t = 0; t < T; ++t) {
        Vec c = rng.unit_vec(d);
        Vec h;
        if (bad[t]) {
            h = scaled(c, -1.0);
        } else if (d == 1) {
            h = scaled(c, alpha);
        } else {
            h = scaled(c, alpha);
            axpy(ortho, orthogonal_unit(rng, c), h);
            // Rounding can leave <c,h> an ulp below alpha ||c||^2; the round
            // must sit on the good side of the strict bad-step test, so nudge
            // along c until it does.
            double cn2 = norm_sq(c);
            double deficit = alpha * cn2 - dot(c, h);
            if (deficit >= 0.0) axpy((deficit + 1e-13 * alpha) / cn2, c, h);
        }
        sc.costs.push_back(std::move(c));
        sc.hints.push_back(HintMatrix::single(std::move(h)));
    }
    check_norms(sc);
    return sc;
}

Scenario gen_correlated(std::size_t T, std::size_t d, double alpha, double bad_fraction,
                        std::uint64_t seed) {
    if (bad_fraction < 0.0 || bad_fraction > 1.0)
        throw std::invalid_argument("gen_correlated: bad_fraction must be in [0,1]");
    SplitMix64 marks(SplitMix64::derive(seed, 0x626164));  // separate stream for the bad set
    std::vector<std::size_t> bad_set;
    for (std::size_t t = 0; t < T; ++t)
        if (marks.uniform01() < bad_fraction) bad_set.push_back(t);
    Scenario sc = gen_correlated(T, d, alpha, bad_set, seed);
    sc.spec.bad_fraction = bad_fraction;
    return sc;
}

Scenario gen_complementary_pair(std::size_t T, std::size_t d, std::uint64_t seed) {
    if (T % 2 != 0) throw std::invalid_argument("gen_complementary_pair: T must be even");
    if (d < 3) throw std::invalid_argument("gen_complementary_pair: need d >= 3");
    SplitMix64 rng(seed);
    Scenario sc;
    sc.spec = {ScenarioKind::complementary_pair, T, d, 2, 0.25, 0.0, {}, seed};
    const double lift = std::sqrt(15.0) / 4.0;  // ||(-1/4) e1 + lift e_j|| = 1
    for (std::size_t t = 0; t < T; ++t) {
        double s = rng.sign();
        Vec c(d, 0.0);
        c[0] = s;
        // The poorly correlated hint leans on e2 or e3 depending on which
        // sequence is currently the bad one, so the two sequences differ.
        Vec low(d, 0.0), high(d, 0.0);
        high[0] = s;
        low[0] = -0.25 * s;
        low[t % 2 == 0 ? 1 : 2] = lift;
        HintMatrix H;
        if (t % 2 == 0) H.columns = {low, high};   // <c,h1> = -1/4, <c,h2> = 1
        else            H.columns = {high, low};   // <c,h1> = 1,    <c,h2> = -1/4
        sc.costs.push_back(std::move(c));
        sc.hints.push_back(std::move(H));
    }
    check_norms(sc);
    return sc;
}

Scenario gen_logk_lower(std::size_t T, double alpha, std::uint64_t seed) {
    double Bd = alpha * static_cast<double>(T);
    std::size_t B = static_cast<std::size_t>(std::llround(Bd));
    if (B == 0 || std::abs(Bd - static_cast<double>(B)) > 1e-9 || T % B != 0)
        throw std::invalid_argument(
            "gen_logk_lower: alpha*T must be a positive integer dividing T");
    std::size_t groups = T / B;
    std::size_t patterns = static_cast<std::size_t>(1) << B;
    std::size_t K = groups * patterns;

    SplitMix64 rng(seed);
    Scenario sc;
    sc.spec = {ScenarioKind::logk_lower, T, 1, K, alpha, 0.0, {}, seed};
    std::vector<double> signs(T);
    for (std::size_t t = 0; t < T; ++t) signs[t] = rng.sign();

    for (std::size_t t = 0; t < T; ++t) {
        sc.costs.push_back({signs[t]});
        std::size_t g = t / B;          // active group for this round
        std::size_t off = t - g * B;    // position inside the block
        HintMatrix H;
        H.columns.assign(K, Vec{0.0});
        for (std::size_t p = 0; p < patterns; ++p)
            H.columns[g * patterns + p][0] = ((p >> off) & 1U) ? 1.0 : -1.0;
        sc.hints.push_back(std::move(H));
    }

    // Witness blend: weight B/T on the pattern matching the costs in each
    // group.  Its correlation with the cost is exactly alpha every round.
    sc.witness_w.assign(K, 0.0);
    double w = static_cast<double>(B) / static_cast<double>(T);
    for (std::size_t g = 0; g < groups; ++g) {
        std::size_t p = 0;
        for (std::size_t off = 0; off < B; ++off)
            if (signs[g * B + off] > 0) p |= (static_cast<std::size_t>(1) << off);
        sc.witness_w[g * patterns + p] = w;
    }
    for (std::size_t t = 0; t < T; ++t) {
        double corr = dot(sc.costs[t], sc.hints[t].blend(sc.witness_w));
        if (std::abs(corr - alpha) > 1e-12)
            throw std::logic_error("gen_logk_lower: witness correlation check failed");
    }
    check_norms(sc);
    return sc;
}

Scenario gen_alpha_lower(std::size_t T, double alpha, std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("gen_alpha_lower: alpha must be in (0,1)");
    SplitMix64 rng(seed);
    Scenario sc;
    sc.spec = {ScenarioKind::alpha_lower, T, 2, 1, alpha, 0.0, {}, seed};
    double tail = std::sqrt(1.0 - alpha * alpha);
    for (std::size_t t = 0; t < T; ++t) {
        sc.costs.push_back({alpha, rng.sign() * tail});
        sc.hints.push_back(HintMatrix::single({1.0, 0.0}));
    }
    check_norms(sc);
    return sc;
}

Scenario gen_random_signs(std::size_t T, std::size_t d, std::uint64_t seed) {
    if (d == 0) throw std::invalid_argument("gen_random_signs: d must be positive");
    SplitMix64 rng(seed);
    Scenario sc;
    sc.spec = {ScenarioKind::random_signs, T, d, 0, 0.0, 0.0, {}, seed};
    for (std::size_t t = 0; t < T; ++t) {
        Vec c(d, 0.0);
        c[0] = rng.sign();
        sc.costs.push_back(std::move(c));
    }
    return sc;
}

Scenario gen_sparse_onehot(std::size_t T, std::size_t d, std::uint64_t seed) {
    if (d == 0) throw std::invalid_argument("gen_sparse_onehot: d must be positive");
    SplitMix64 rng(seed);
    Scenario sc;
    sc.spec = {ScenarioKind::sparse_onehot, T, d, 0, 0.0, 0.0, {}, seed};
    std::size_t active = std::min<std::size_t>(2, d);
    for (std::size_t t = 0; t < T; ++t) {
        Vec c(d, 0.0);
        c[rng.below(active)] = rng.sign();
        sc.costs.push_back(std::move(c));
    }
    return sc;
}

Scenario gen_dense_isotropic(std::size_t T, std::size_t d, std::uint64_t seed) {
    if (d == 0) throw std::invalid_argument("gen_dense_isotropic: d must be positive");
    SplitMix64 rng(seed);
    Scenario sc;
    sc.spec = {ScenarioKind::dense_isotropic, T, d, 0, 0.0, 0.0, {}, seed};
    for (std::size_t t = 0; t < T; ++t) sc.costs.push_back(rng.unit_vec(d));
    return sc;
}

Scenario generate(const ScenarioSpec& spec) {
    switch (spec.kind) {
        case ScenarioKind::correlated:
            return spec.bad_set.empty()
                       ? gen_correlated(spec.T, spec.d, spec.alpha, spec.bad_fraction, spec.seed)
                       : gen_correlated(spec.T, spec.d, spec.alpha, spec.bad_set, spec.seed);
        case ScenarioKind::complementary_pair:
            return gen_complementary_pair(spec.T, spec.d, spec.seed);
        case ScenarioKind::logk_lower:
            return gen_logk_lower(spec.T, spec.alpha, spec.seed);
        case ScenarioKind::alpha_lower:
            return gen_alpha_lower(spec.T, spec.alpha, spec.seed);
        case ScenarioKind::random_signs:
            return gen_random_signs(spec.T, spec.d, spec.seed);
        case ScenarioKind::sparse_onehot:
            return gen_sparse_onehot(spec.T, spec.d, spec.seed);
        case ScenarioKind::dense_isotropic:
            return gen_dense_isotropic(spec.T, spec.d, spec.seed);
    }
    throw std::invalid_argument("generate: unknown scenario kind");
}

void save_table(const Scenario& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_table: cannot open " + path);
    std::size_t d = sc.costs.empty() ? sc.spec.d : sc.costs.front().size();
    std::size_t K = sc.num_hints();
    out << "# kind=" << to_string(sc.spec.kind) << " T=" << sc.costs.size() << " d=" << d
        << " K=" << K << " alpha=" << sc.spec.alpha << " seed=" << sc.spec.seed << "\n";
    out << "t";
    for (std::size_t i = 0; i < d; ++i) out << "\tc" << i;
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < d; ++i) out << "\th" << k << "_" << i;
    out << "\n";
    char buf[40];
    for (std::size_t t = 0; t < sc.costs.size(); ++t) {
        out << t;
        auto put = [&](double v) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << '\t' << buf;
        };
        for (double v : sc.costs[t]) put(v);
        if (K > 0)
            for (const Vec& h : sc.hints[t].columns)
                for (double v : h) put(v);
        out << "\n";
    }
}

Scenario load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_table: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_table: empty file");

    Scenario sc;
    std::size_t d = 0, K = 0, T = 0;
    {
        std::istringstream meta(line);
        std::string tok;
        meta >> tok;  // '#'
        while (meta >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "kind") sc.spec.kind = scenario_kind_from_string(val);
            else if (key == "T") T = std::stoull(val);
            else if (key == "d") d = std::stoull(val);
            else if (key == "K") K = std::stoull(val);
            else if (key == "alpha") sc.spec.alpha = std::stod(val);
            else if (key == "seed") sc.spec.seed = std::stoull(val);
        }
    }
    sc.spec.T = T;
    sc.spec.d = d;
    sc.spec.K = K;
    std::getline(in, line);  // column header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::size_t t;
        row >> t;
        Vec c(d);
        for (double& v : c) row >> v;
        sc.costs.push_back(std::move(c));
        if (K > 0) {
            HintMatrix H;
            for (std::size_t k = 0; k < K; ++k) {
                Vec h(d);
                for (double& v : h) row >> v;
                H.columns.push_back(std::move(h));
            }
            sc.hints.push_back(std::move(H));
        }
    }
    return sc;
}

}  // namespace olo
