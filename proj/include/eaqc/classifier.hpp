#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eaqc/qsim.hpp"

// The dressed quantum circuit classifier: a linear embedding layer feeding a
// single qubit, followed by a probability-threshold decision rule.

namespace eaqc {

enum class Label { Plus, Minus };

struct ModelParams {
    std::vector<double> w;         // embedding weights, length d
    std::array<double, 3> theta;   // SU(2) rotation angles

    std::size_t dim() const { return w.size(); }
};

struct Prediction {
    Label label;
    double p_minus;
};

struct LabeledSample {
    std::vector<double> features;
    Label label;
};

// x_tilde = sum_i w_i x_i. Throws std::invalid_argument on length mismatch.
double embed(const std::vector<double>& x, const std::vector<double>& w);

// su2_rotate(prepare_encoded_state(embed(x, w)), theta).
qsim::State1Q forward(const std::vector<double>& x, const ModelParams& p);

// Decision rule: Plus iff p_minus >= 0.5 (tie goes to Plus).
Label decide(double p_minus);

Prediction predict(const std::vector<double>& x, const ModelParams& p);

// Fraction of samples whose predicted label matches. Throws on empty input.
double accuracy(const std::vector<LabeledSample>& samples,
                const ModelParams& p);

// Model persistence: {"w": [...], "theta": [...], "classes": [a, b],
// "feature_dim": d}.
struct ModelFile {
    ModelParams params;
    int class_a = 0;   // maps to Plus
    int class_b = 1;   // maps to Minus
};

void save_model(const std::string& path, const ModelFile& m);
ModelFile load_model(const std::string& path);

}  // namespace eaqc
