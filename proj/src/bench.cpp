#include "olo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "olo/combiner.hpp"
#include "olo/multi_hint.hpp"
#include "olo/single_hint.hpp"
#include "olo/unconstrained.hpp"
#include "olo/zoo.hpp"

namespace olo {

double single_hint_regret_bound(const std::vector<Vec>& costs, const std::vector<Vec>& hints, double alpha,
                   std::size_t horizon_T) {
    if (hints.size() != costs.size())
        throw std::invalid_argument("single_hint_regret_bound: hint/cost length mismatch");
    if (costs.empty()) return 0.5;
    double logT = std::log(static_cast<double>(horizon_T));
    double bad_sq = 0.0, neg = 0.0;
    for (std::size_t t = 0; t < costs.size(); ++t) {
        double corr = dot(costs[t], hints[t]);
        double cn2 = norm_sq(costs[t]);
        if (corr < alpha * cn2) bad_sq += cn2;
        neg += std::max(0.0, -corr);
    }
    return 0.5 + 4.0 * (std::sqrt(bad_sq) + logT / alpha + 2.0 * std::sqrt(logT * neg / alpha));
}

double k_hints_regret_bound(const std::vector<Vec>& costs, const std::vector<HintMatrix>& hints,
                   const Vec& w, double alpha, std::size_t horizon_T) {
    if (hints.size() != costs.size())
        throw std::invalid_argument("k_hints_regret_bound: hint/cost length mismatch");
    double logT = std::log(static_cast<double>(horizon_T));
    std::size_t K = w.size();
    double logK = std::log(static_cast<double>(std::max<std::size_t>(K, 2)));
    double bad_sq = 0.0, neg = 0.0;
    for (std::size_t t = 0; t < costs.size(); ++t) {
        Vec h = hints[t].blend(w);
        double corr = dot(costs[t], h);
        double cn2 = norm_sq(costs[t]);
        if (corr < alpha * cn2) bad_sq += cn2;
        neg += std::max(0.0, -corr);
    }
    return std::sqrt(logT * bad_sq) + std::sqrt(logT * neg / alpha) +
           (logT + std::sqrt(logT * logK)) / alpha;
}

double combiner_regret_bound(std::size_t num_learners, double min_bound) {
    return static_cast<double>(num_learners) * (4.0 + 4.0 * min_bound);
}

double unconstrained_regret_bound(double u_norm, std::size_t horizon_T, std::size_t num_hints,
                   std::size_t bad_count, double alpha) {
    double logT = std::log(static_cast<double>(horizon_T));
    double logK = std::log(static_cast<double>(std::max<std::size_t>(num_hints, 1)));
    return u_norm * logT *
           (std::sqrt(logK) / alpha + std::sqrt(static_cast<double>(bad_count) / alpha));
}

// ----- config ---------------------------------------------------------------

double LearnerSpec::param_double(const std::string& key, std::optional<double> fallback) const {
    auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) return *fallback;
        throw std::invalid_argument("learner '" + name + "': missing parameter '" + key + "'");
    }
    return std::stod(it->second);
}

std::string LearnerSpec::param_str(const std::string& key,
                                   std::optional<std::string> fallback) const {
    auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) return *fallback;
        throw std::invalid_argument("learner '" + name + "': missing parameter '" + key + "'");
    }
    return it->second;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    cfg.raw_text = text;
    std::istringstream in(text);
    std::string line, section;
    LearnerSpec* learner = nullptr;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unterminated section header");
            std::string inner = trim(s.substr(1, s.size() - 2));
            if (inner.rfind("learner", 0) == 0) {
                std::string lname = trim(inner.substr(7));
                if (lname.empty())
                    throw std::invalid_argument("config line " + std::to_string(lineno) +
                                                ": learner section needs a name");
                for (const auto& l : cfg.learners)
                    if (l.name == lname)
                        throw std::invalid_argument("duplicate learner name '" + lname + "'");
                cfg.learners.push_back(LearnerSpec{lname, "", {}});
                learner = &cfg.learners.back();
                section = "learner";
            } else {
                section = inner;
                learner = nullptr;
            }
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (section == "experiment") {
            if (key == "trials") cfg.trials = std::stoull(val);
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "output") cfg.output = val;
            else if (key == "threads") cfg.threads = (val == "auto") ? 0 : std::stoi(val);
            else throw std::invalid_argument("unknown experiment key '" + key + "'");
        } else if (section == "scenario") {
            if (key == "kind") cfg.scenario.kind = scenario_kind_from_string(val);
            else if (key == "T") cfg.scenario.T = std::stoull(val);
            else if (key == "d") cfg.scenario.d = std::stoull(val);
            else if (key == "K") cfg.scenario.K = std::stoull(val);
            else if (key == "alpha") cfg.scenario.alpha = std::stod(val);
            else if (key == "bad_fraction") cfg.scenario.bad_fraction = std::stod(val);
            else if (key == "seed") cfg.scenario.seed = std::stoull(val);
            else throw std::invalid_argument("unknown scenario key '" + key + "'");
        } else if (section == "learner" && learner != nullptr) {
            if (key == "type") learner->type = val;
            else learner->params[key] = val;
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": key outside a known section");
        }
    }
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (cfg.learners.empty()) throw std::invalid_argument("config: no learners given");
    for (const auto& l : cfg.learners)
        if (l.type.empty())
            throw std::invalid_argument("learner '" + l.name + "': missing type");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::vector<std::string> known_learner_types() {
    return {"one-hint", "k-hints",       "mwu",          "aogd",         "adagrad",
            "pnorm",    "unconstrained", "unknown-alpha", "det-combiner", "rand-combiner"};
}

namespace {

std::vector<LearnerPtr> build_combiner_parts(const LearnerSpec& spec, std::size_t d) {
    std::string of = spec.param_str("of", std::string("aogd+adagrad"));
    for (char& c : of)
        if (c == ',') c = '+';
    std::vector<LearnerPtr> parts;
    std::istringstream ss(of);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        tok = trim(tok);
        if (tok == "aogd") parts.push_back(std::make_unique<AdaptiveOgd>(d));
        else if (tok == "adagrad") parts.push_back(std::make_unique<DiagonalAdaGrad>(d));
        else if (tok == "pnorm") {
            auto grid = pnorm_grid(d);
            for (double q : grid) parts.push_back(std::make_unique<PNormLearner>(d, q));
        } else throw std::invalid_argument("combiner 'of' entry '" + tok +
                                           "' not recognized (aogd, adagrad, pnorm)");
    }
    if (parts.empty()) throw std::invalid_argument("combiner: empty 'of' list");
    return parts;
}

}  // namespace

LearnerPtr make_learner(const LearnerSpec& spec, const ScenarioSpec& sc, std::uint64_t stream) {
    std::size_t d = sc.d, T = std::max<std::size_t>(sc.T, 2), K = std::max<std::size_t>(sc.K, 1);
    const std::string& t = spec.type;
    if (t == "one-hint")
        return std::make_unique<SingleHintLearner>(d, spec.param_double("alpha", sc.alpha), T);
    if (t == "k-hints")
        return std::make_unique<KHintsLearner>(d, K, spec.param_double("alpha", sc.alpha), T);
    if (t == "mwu") {
        auto rule = spec.param_str("rule", std::string("correlation")) == "absolute"
                        ? MwuLossRule::absolute
                        : MwuLossRule::correlation;
        return std::make_unique<MwuLearner>(d, K, spec.param_double("alpha", sc.alpha), T, stream,
                                            rule);
    }
    if (t == "aogd") return std::make_unique<AdaptiveOgd>(d);
    if (t == "adagrad") return std::make_unique<DiagonalAdaGrad>(d);
    if (t == "pnorm") {
        auto grid = pnorm_grid(d);
        auto idx = static_cast<std::size_t>(spec.param_double("index", 0.0));
        if (idx >= grid.size()) throw std::invalid_argument("pnorm: grid index out of range");
        return std::make_unique<PNormLearner>(d, grid[idx]);
    }
    if (t == "unconstrained")
        return std::make_unique<UnconstrainedComposite>(d, K, T, spec.param_double("epsilon", 1.0));
    if (t == "unknown-alpha") {
        return make_unknown_alpha_learner(
            [d, K, T](double alpha) -> LearnerPtr {
                return std::make_unique<KHintsLearner>(d, K, alpha, T);
            },
            T, stream);
    }
    if (t == "det-combiner") return std::make_unique<DetCombiner>(build_combiner_parts(spec, d));
    if (t == "rand-combiner")
        return std::make_unique<RandCombiner>(build_combiner_parts(spec, d), stream);

    std::string valid;
    for (const auto& v : known_learner_types()) valid += (valid.empty() ? "" : ", ") + v;
    throw std::invalid_argument("unknown learner type '" + t + "'; valid types: " + valid);
}

// ----- runner ---------------------------------------------------------------

std::vector<std::size_t> checkpoint_rounds(std::size_t T) {
    std::vector<std::size_t> cps;
    for (std::size_t p = 1; p < T; p *= 2) cps.push_back(p);
    if (T > 0) cps.push_back(T);
    return cps;
}

namespace {

// Analytic bound column for the ratio report.  Only learner types whose
// guarantee is directly evaluable from the data get one.
double bound_for(const LearnerSpec& spec, const Scenario& sc, std::size_t prefix) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::size_t T = std::max<std::size_t>(sc.spec.T, 2);
    if (spec.type == "one-hint") {
        if (sc.hints.empty()) return nan;
        std::vector<Vec> h;
        h.reserve(prefix);
        for (std::size_t t = 0; t < prefix; ++t) h.push_back(sc.hints[t].columns.at(0));
        std::vector<Vec> c(sc.costs.begin(), sc.costs.begin() + prefix);
        return single_hint_regret_bound(c, h, spec.param_double("alpha", sc.spec.alpha), T);
    }
    if (spec.type == "k-hints") {
        if (sc.hints.empty()) return nan;
        std::size_t K = sc.hints.front().hints();
        Vec w(K, 1.0 / static_cast<double>(K));
        std::vector<Vec> c(sc.costs.begin(), sc.costs.begin() + prefix);
        std::vector<HintMatrix> h(sc.hints.begin(), sc.hints.begin() + prefix);
        return k_hints_regret_bound(c, h, w, spec.param_double("alpha", sc.spec.alpha), T);
    }
    if (spec.type == "aogd") return aogd_bound()(sc.costs, 0, prefix);
    if (spec.type == "adagrad") return adagrad_bound(sc.spec.d)(sc.costs, 0, prefix);
    if (spec.type == "pnorm") {
        auto grid = pnorm_grid(sc.spec.d);
        auto idx = static_cast<std::size_t>(spec.param_double("index", 0.0));
        return idx < grid.size() ? pnorm_bound(sc.spec.d, grid[idx])(sc.costs, 0, prefix) : nan;
    }
    return nan;
}

void run_trial(const ExperimentConfig& cfg, std::size_t trial, bool keep_traces,
               std::vector<ResultRow>& rows, std::map<TraceKey, std::vector<Vec>>& traces) {
    ScenarioSpec spec = cfg.scenario;
    spec.seed = SplitMix64::derive(cfg.seed ^ spec.seed, 2 * trial);
    Scenario sc = generate(spec);
    auto cps = checkpoint_rounds(sc.costs.size());
    std::uint64_t learner_base = SplitMix64::derive(cfg.seed ^ spec.seed, 2 * trial + 1);

    for (std::size_t li = 0; li < cfg.learners.size(); ++li) {
        const LearnerSpec& lspec = cfg.learners[li];
        LearnerPtr learner = make_learner(lspec, sc.spec, SplitMix64::derive(learner_base, li));
        RegretLedger ledger;
        std::vector<Vec> decisions;
        std::size_t next_cp = 0;
        for (std::size_t t = 0; t < sc.costs.size(); ++t) {
            Vec x = learner->observe_hints(sc.hints.empty() ? HintMatrix{} : sc.hints[t]);
            ledger.update(sc.costs[t], x);
            if (keep_traces) decisions.push_back(x);
            learner->observe_cost(sc.costs[t]);
            if (next_cp < cps.size() && t + 1 == cps[next_cp]) {
                ResultRow row;
                row.trial = trial;
                row.round = t + 1;
                row.learner = lspec.name;
                row.regret = ledger.worst_case_regret();
                row.bound = bound_for(lspec, sc, t + 1);
                if (row.bound > 0.0) row.ratio = row.regret / row.bound;
                rows.push_back(std::move(row));
                ++next_cp;
            }
        }
        if (keep_traces) traces[{trial, lspec.name}] = std::move(decisions);
    }
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, bool keep_traces) {
    RunResult out;
    out.config_hash = fnv1a64(cfg.raw_text);
    std::size_t n = cfg.trials;
    std::vector<std::vector<ResultRow>> rows(n);
    std::vector<std::map<TraceKey, std::vector<Vec>>> traces(n);

    unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) run_trial(cfg, i, keep_traces, rows[i], traces[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                    run_trial(cfg, i, keep_traces, rows[i], traces[i]);
            });
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.rows.insert(out.rows.end(), rows[i].begin(), rows[i].end());
        for (auto& kv : traces[i]) out.traces[kv.first] = std::move(kv.second);
    }
    return out;
}

// ----- output ---------------------------------------------------------------

Aggregate aggregate_regret(const RunResult& result, const std::string& learner,
                           std::size_t round) {
    std::vector<double> values;
    for (const ResultRow& r : result.rows)
        if (r.learner == learner && r.round == round) values.push_back(r.regret);
    Aggregate agg;
    agg.n = values.size();
    if (values.empty()) return agg;
    for (double v : values) agg.mean += v;
    agg.mean /= static_cast<double>(values.size());

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::size_t mid = sorted.size() / 2;
    agg.median = (sorted.size() % 2 == 1) ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

    // Seeded bootstrap of the mean, 1000 resamples.
    SplitMix64 rng(fnv1a64(learner) ^ round);
    std::vector<double> means;
    means.reserve(1000);
    for (int b = 0; b < 1000; ++b) {
        double m = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) m += values[rng.below(values.size())];
        means.push_back(m / static_cast<double>(values.size()));
    }
    std::sort(means.begin(), means.end());
    agg.lo95 = means[24];
    agg.hi95 = means[974];
    return agg;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_double(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_csv(const RunResult& result) {
    std::string out = "trial,round,learner,regret,bound,ratio\n";
    for (const ResultRow& r : result.rows) {
        out += std::to_string(r.trial);
        out += ',';
        out += std::to_string(r.round);
        out += ',';
        out += csv_escape(r.learner);
        out += ',';
        out += fmt_double(r.regret);
        out += ',';
        out += fmt_double(r.bound);
        out += ',';
        out += fmt_double(r.ratio);
        out += '\n';
    }
    return out;
}

void write_outputs(const ExperimentConfig& cfg, const RunResult& result) {
    {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + cfg.output);
        out << to_csv(result);
    }
    nlohmann::json meta;
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(result.config_hash));
    meta["config_hash"] = hash;
    meta["prng"] = SplitMix64::kName;
    meta["version"] = kLibraryVersion;
    meta["trials"] = cfg.trials;
    meta["seed"] = cfg.seed;
    meta["scenario"] = {{"kind", to_string(cfg.scenario.kind)}, {"T", cfg.scenario.T},
                        {"d", cfg.scenario.d},                  {"K", cfg.scenario.K},
                        {"alpha", cfg.scenario.alpha}};
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : cfg.learners) ls.push_back({{"name", l.name}, {"type", l.type}});
    meta["learners"] = ls;
    std::ofstream mout(cfg.output + ".meta.json");
    if (!mout) throw std::runtime_error("cannot open metadata file " + cfg.output + ".meta.json");
    mout << meta.dump(2) << "\n";
}

}  // namespace olo
