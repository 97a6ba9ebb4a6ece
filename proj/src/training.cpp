#include "eaqc/training.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace eaqc::training {

namespace {

const double TSIRELSON = 2.0 * std::sqrt(2.0);

// Fisher-Yates with explicit draws so the permutation is identical on every
// platform (mt19937_64 output is standardized, std::shuffle is not).
void seeded_shuffle(std::vector<std::size_t>& idx, std::mt19937_64& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(idx[i - 1], idx[j]);
    }
}

std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    // 53-bit mantissa draw; deterministic across platforms.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

}  // namespace

std::vector<TrainPair> make_pairs(
    const std::vector<std::vector<double>>& t_plus,
    const std::vector<std::vector<double>>& t_minus, std::uint64_t seed) {
    if (t_plus.empty() || t_plus.size() != t_minus.size())
        throw std::invalid_argument(
            "make_pairs: class sets must be non-empty and of equal size");
    std::mt19937_64 rng(seed);
    auto idx = identity_perm(t_minus.size());
    seeded_shuffle(idx, rng);
    std::vector<TrainPair> pairs;
    pairs.reserve(t_plus.size());
    for (std::size_t i = 0; i < t_plus.size(); ++i)
        pairs.push_back({t_plus[i], t_minus[idx[i]]});
    return pairs;
}

qsim::State2Q training_state(const TrainPair& pair, const ModelParams& p) {
    auto a = forward(pair.x_plus, p);
    auto b = forward(pair.x_minus, p);
    const double s = 1.0 / std::sqrt(2.0);
    // |q_sample q_label>: [|00>, |01>, |10>, |11>]
    return {{a.a0 * s, b.a0 * s, a.a1 * s, b.a1 * s}};
}

double bell_expectation(const qsim::State2Q& s) {
    return qsim::expectation(qsim::bell_operator(), s);
}

double closed_form_bell(const qsim::State1Q& a, const qsim::State1Q& b) {
    return TSIRELSON * (std::conj(b.a0) * a.a1).real();
}

double pair_cost(const TrainPair& pair, const ModelParams& p) {
    return TSIRELSON - std::abs(bell_expectation(training_state(pair, p)));
}

CostReport total_cost(const std::vector<TrainPair>& pairs,
                      const ModelParams& p) {
    if (pairs.empty())
        throw std::invalid_argument("total_cost: empty pair list");
    CostReport r;
    r.per_pair.reserve(pairs.size());
    double acc = 0.0;
    for (const auto& pr : pairs) {
        double c = pair_cost(pr, p);
        r.per_pair.push_back(c);
        acc += c;
    }
    r.raw = acc / static_cast<double>(pairs.size());
    r.normalized = r.raw / TSIRELSON;
    return r;
}

double baseline_cost(const std::vector<std::vector<double>>& t_plus,
                     const std::vector<std::vector<double>>& t_minus,
                     const ModelParams& p) {
    if (t_plus.empty() && t_minus.empty())
        throw std::invalid_argument("baseline_cost: empty training set");
    double acc = 0.0;
    for (const auto& x : t_plus) {
        double f = 2.0 * qsim::prob_minus(forward(x, p)) - 1.0;
        acc += std::abs(f - 1.0);
    }
    for (const auto& x : t_minus) {
        double f = 2.0 * qsim::prob_minus(forward(x, p)) - 1.0;
        acc += std::abs(f + 1.0);
    }
    return acc / static_cast<double>(t_plus.size() + t_minus.size());
}

std::vector<double> flatten(const ModelParams& p) {
    std::vector<double> v(p.w);
    v.insert(v.end(), p.theta.begin(), p.theta.end());
    return v;
}

ModelParams unflatten(const std::vector<double>& v, std::size_t d) {
    if (v.size() != d + 3)
        throw std::invalid_argument("unflatten: wrong length");
    ModelParams p;
    p.w.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d));
    p.theta = {v[d], v[d + 1], v[d + 2]};
    return p;
}

std::vector<double> gradient(
    const ModelParams& p,
    const std::function<double(const ModelParams&)>& cost, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("gradient: step must be > 0");
    auto flat = flatten(p);
    std::size_t d = p.w.size();
    std::vector<double> g(flat.size());
    for (std::size_t j = 0; j < flat.size(); ++j) {
        auto up = flat, dn = flat;
        up[j] += h;
        dn[j] -= h;
        double cu = cost(unflatten(up, d));
        double cl = cost(unflatten(dn, d));
        if (!std::isfinite(cu) || !std::isfinite(cl))
            throw std::runtime_error("gradient: non-finite cost evaluation");
        g[j] = (cu - cl) / (2.0 * h);
    }
    return g;
}

ModelParams adam_step(AdamState& state, const ModelParams& p,
                      const std::vector<double>& g) {
    auto flat = flatten(p);
    if (state.m.empty()) state.m.assign(flat.size(), 0.0);
    if (state.v.empty()) state.v.assign(flat.size(), 0.0);
    if (g.size() != flat.size() || state.m.size() != flat.size())
        throw std::invalid_argument("adam_step: dimension mismatch");
    state.step += 1;
    double b1t = std::pow(state.beta1, static_cast<double>(state.step));
    double b2t = std::pow(state.beta2, static_cast<double>(state.step));
    for (std::size_t j = 0; j < flat.size(); ++j) {
        state.m[j] = state.beta1 * state.m[j] + (1.0 - state.beta1) * g[j];
        state.v[j] = state.beta2 * state.v[j] + (1.0 - state.beta2) * g[j] * g[j];
        double mhat = state.m[j] / (1.0 - b1t);
        double vhat = state.v[j] / (1.0 - b2t);
        flat[j] -= state.alpha * mhat / (std::sqrt(vhat) + state.eps);
    }
    return unflatten(flat, p.w.size());
}

ModelParams init_params(std::size_t dim, const TrainConfig& cfg) {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    ModelParams p;
    p.w.resize(dim);
    for (auto& wi : p.w) wi = uniform(rng, -cfg.w_init_range, cfg.w_init_range);
    for (auto& t : p.theta)
        t = uniform(rng, -cfg.theta_init_range, cfg.theta_init_range);
    return p;
}

namespace {

void validate(const TrainConfig& cfg) {
    if (cfg.epochs < 1)
        throw std::invalid_argument("train: epochs must be >= 1");
    if (!(cfg.learning_rate > 0.0))
        throw std::invalid_argument("train: learning rate must be > 0");
    if (!(cfg.fd_step > 0.0))
        throw std::invalid_argument("train: fd step must be > 0");
}

// Per-pair share of the conventional cost; the mean over all pairs equals
// baseline_cost over the full set.
double pair_baseline(const TrainPair& pr, const ModelParams& p) {
    double fp = 2.0 * qsim::prob_minus(forward(pr.x_plus, p)) - 1.0;
    double fm = 2.0 * qsim::prob_minus(forward(pr.x_minus, p)) - 1.0;
    return 0.5 * (std::abs(fp - 1.0) + std::abs(fm + 1.0));
}

}  // namespace

TrainResult train(const TrainConfig& cfg,
                  const std::vector<std::vector<double>>& t_plus,
                  const std::vector<std::vector<double>>& t_minus,
                  const std::optional<EvalSets>& eval_sets) {
    validate(cfg);
    auto pairs = make_pairs(t_plus, t_minus, cfg.seed);
    const std::size_t dim = t_plus.front().size();
    ModelParams params = init_params(dim, cfg);

    AdamState adam;
    adam.alpha = cfg.learning_rate;

    std::vector<LabeledSample> train_eval;
    if (eval_sets) {
        train_eval = eval_sets->train;
    } else {
        for (const auto& x : t_plus) train_eval.push_back({x, Label::Plus});
        for (const auto& x : t_minus) train_eval.push_back({x, Label::Minus});
    }

    auto pair_fn = [&](const TrainPair& pr, const ModelParams& p) {
        return cfg.cost == CostKind::Bell ? pair_cost(pr, p)
                                          : pair_baseline(pr, p);
    };

    std::mt19937_64 loop_rng(cfg.seed ^ 0xda3e39cb94b95bdbULL);
    TrainResult result;
    result.records.reserve(static_cast<std::size_t>(cfg.epochs));

    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        if (cfg.reshuffle_pairs && epoch > 1)
            pairs = make_pairs(t_plus, t_minus, loop_rng());

        RunRecord rec;
        rec.epoch = epoch;

        if (cfg.mode == TrainMode::Batch) {
            double acc = 0.0;
            for (const auto& pr : pairs) acc += pair_fn(pr, params);
            rec.raw_cost = acc / static_cast<double>(pairs.size());
            auto cost = [&](const ModelParams& p) {
                double c = 0.0;
                for (const auto& pr : pairs) c += pair_fn(pr, p);
                return c / static_cast<double>(pairs.size());
            };
            params = adam_step(adam, params, gradient(params, cost, cfg.fd_step));
        } else {
            auto order = identity_perm(pairs.size());
            seeded_shuffle(order, loop_rng);
            double acc = 0.0;
            for (std::size_t k : order) {
                const auto& pr = pairs[k];
                acc += pair_fn(pr, params);
                auto cost = [&](const ModelParams& p) { return pair_fn(pr, p); };
                params =
                    adam_step(adam, params, gradient(params, cost, cfg.fd_step));
            }
            rec.raw_cost = acc / static_cast<double>(pairs.size());
        }

        if (!std::isfinite(rec.raw_cost))
            throw std::runtime_error("train: non-finite cost at epoch " +
                                     std::to_string(epoch));
        rec.normalized_cost = rec.raw_cost / TSIRELSON;
        rec.train_accuracy = accuracy(train_eval, params);
        rec.test_accuracy = (eval_sets && !eval_sets->test.empty())
                                ? accuracy(eval_sets->test, params)
                                : std::numeric_limits<double>::quiet_NaN();
        result.records.push_back(rec);
    }

    result.params = std::move(params);
    result.pairs = std::move(pairs);
    return result;
}

}  // namespace eaqc::training
