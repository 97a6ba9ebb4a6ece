#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eaqc/classifier.hpp"

// Entanglement-assisted training: opposite-class pairs are encoded into a
// two-qubit state and the gap to the Tsirelson bound is minimized with Adam
// over finite-difference gradients.

namespace eaqc::training {

struct TrainPair {
    std::vector<double> x_plus;
    std::vector<double> x_minus;
};

struct CostReport {
    double raw = 0.0;         // mean of per_pair
    double normalized = 0.0;  // raw / (2 sqrt2)
    std::vector<double> per_pair;
};

struct AdamState {
    std::uint64_t step = 0;
    std::vector<double> m;
    std::vector<double> v;
    double alpha = 0.1;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

enum class TrainMode { Batch, Stochastic };
enum class CostKind { Bell, Baseline };

struct TrainConfig {
    int epochs = 50;
    std::uint64_t seed = 0;
    double learning_rate = 0.1;
    double fd_step = 1e-4;
    TrainMode mode = TrainMode::Batch;
    CostKind cost = CostKind::Bell;
    bool reshuffle_pairs = false;
    double w_init_range = 0.1;   // w ~ U(-r, r)
    double theta_init_range = 3.14159265358979323846;  // theta ~ U(-r, r)
};

struct RunRecord {
    int epoch = 0;              // 1-based
    double raw_cost = 0.0;      // pre-update cost of the epoch
    double normalized_cost = 0.0;
    double train_accuracy = 0.0;  // post-update
    double test_accuracy = 0.0;   // post-update; -1 if no test set given
};

// Seeded one-to-one matching of T+ against a shuffled T-. Throws
// std::invalid_argument on empty or unequal lists.
std::vector<TrainPair> make_pairs(
    const std::vector<std::vector<double>>& t_plus,
    const std::vector<std::vector<double>>& t_minus, std::uint64_t seed);

// (1/sqrt2)(|psi(x+)>|0> + |psi(x-)>|1>) in |q_sample q_label> ordering:
// amplitudes [a0, b0, a1, b1] / sqrt2.
qsim::State2Q training_state(const TrainPair& pair, const ModelParams& p);

// <B> for the Bell operator sqrt2(s1 x s1 + s2 x s2); |result| <= 2 sqrt2.
double bell_expectation(const qsim::State2Q& s);

// Analytic route: 2 sqrt2 Re(conj(b0) a1). Equals
// bell_expectation(training_state(...)) for a = forward(x+), b = forward(x-).
double closed_form_bell(const qsim::State1Q& a, const qsim::State1Q& b);

// 2 sqrt2 - |<B>|, in [0, 2 sqrt2].
double pair_cost(const TrainPair& pair, const ModelParams& p);

CostReport total_cost(const std::vector<TrainPair>& pairs,
                      const ModelParams& p);

// Conventional per-sample cost with f'(x) = P-(x) - P+(x):
// (1/|T|) [sum |f'(x+) - 1| + sum |f'(x-) + 1|].
double baseline_cost(const std::vector<std::vector<double>>& t_plus,
                     const std::vector<std::vector<double>>& t_minus,
                     const ModelParams& p);

// Flattened parameter order: w[0..d), theta[0..3).
std::vector<double> flatten(const ModelParams& p);
ModelParams unflatten(const std::vector<double>& v, std::size_t d);

// Central finite differences of an arbitrary cost over the flattened
// parameters. Throws std::runtime_error on non-finite evaluations.
std::vector<double> gradient(
    const ModelParams& p,
    const std::function<double(const ModelParams&)>& cost, double h);

// One Adam update with bias correction; returns the updated parameters and
// advances the state in place.
ModelParams adam_step(AdamState& state, const ModelParams& p,
                      const std::vector<double>& g);

// Seeded parameter initialization per the config ranges.
ModelParams init_params(std::size_t dim, const TrainConfig& cfg);

struct EvalSets {
    std::vector<LabeledSample> train;
    std::vector<LabeledSample> test;  // may be empty
};

struct TrainResult {
    ModelParams params;
    std::vector<RunRecord> records;
    std::vector<TrainPair> pairs;  // the pairing used in the final epoch
};

// Runs the full loop. Batch mode: one gradient step per epoch on the mean
// cost. Stochastic mode: one step per pair, pairs visited once per epoch in
// seeded order; the epoch's reported cost is the mean of the per-pair costs
// seen before each step. Deterministic given seed.
TrainResult train(const TrainConfig& cfg,
                  const std::vector<std::vector<double>>& t_plus,
                  const std::vector<std::vector<double>>& t_minus,
                  const std::optional<EvalSets>& eval_sets);

}  // namespace eaqc::training
