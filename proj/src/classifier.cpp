#include "eaqc/classifier.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace eaqc {

double embed(const std::vector<double>& x, const std::vector<double>& w) {
    if (x.size() != w.size() || x.empty())
        throw std::invalid_argument("embed: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * x[i];
    return acc;
}

qsim::State1Q forward(const std::vector<double>& x, const ModelParams& p) {
    auto s = qsim::prepare_encoded_state(embed(x, p.w));
    return qsim::su2_rotate(s, p.theta[0], p.theta[1], p.theta[2]);
}

Label decide(double p_minus) {
    return p_minus >= 0.5 ? Label::Plus : Label::Minus;
}

Prediction predict(const std::vector<double>& x, const ModelParams& p) {
    double pm = qsim::prob_minus(forward(x, p));
    return {decide(pm), pm};
}

double accuracy(const std::vector<LabeledSample>& samples,
                const ModelParams& p) {
    if (samples.empty())
        throw std::invalid_argument("accuracy: empty sample list");
    std::size_t correct = 0;
    for (const auto& s : samples)
        if (predict(s.features, p).label == s.label) ++correct;
    return static_cast<double>(correct) / static_cast<double>(samples.size());
}

void save_model(const std::string& path, const ModelFile& m) {
    nlohmann::ordered_json j;
    j["w"] = m.params.w;
    j["theta"] = m.params.theta;
    j["classes"] = {m.class_a, m.class_b};
    j["feature_dim"] = m.params.w.size();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_model: cannot open " + path);
    out << j.dump(2) << "\n";
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_model: cannot open " + path);
    nlohmann::json j;
    in >> j;
    ModelFile m;
    m.params.w = j.at("w").get<std::vector<double>>();
    auto th = j.at("theta").get<std::vector<double>>();
    if (th.size() != 3)
        throw std::runtime_error("load_model: theta must have 3 entries");
    m.params.theta = {th[0], th[1], th[2]};
    auto cls = j.at("classes").get<std::vector<int>>();
    if (cls.size() != 2)
        throw std::runtime_error("load_model: classes must have 2 entries");
    m.class_a = cls[0];
    m.class_b = cls[1];
    if (j.at("feature_dim").get<std::size_t>() != m.params.w.size())
        throw std::runtime_error("load_model: feature_dim inconsistent with w");
    return m;
}

}  // namespace eaqc
