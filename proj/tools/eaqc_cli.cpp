#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eaqc/classifier.hpp"
#include "eaqc/data.hpp"
#include "eaqc/training.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 usage/config, 2 data, 3 numeric.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config_path;
    std::string data_path;
    std::string model_path;
    std::string out_dir = ".";
    std::vector<int> classes = {0, 1};
    std::size_t train_per_class = 40;
    std::size_t test_per_class = 10;
    int epochs = 50;
    std::uint64_t seed = 0;
    double lr = 0.1;
    double fd_step = 1e-4;
    std::string mode = "batch";
    std::string cost = "bell";
    bool normalize_features = false;
};

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct MinMax {
    std::vector<double> lo, hi;
};

MinMax fit_minmax(const std::vector<eaqc::data::Sample>& samples,
                  std::size_t dim) {
    MinMax mm;
    mm.lo.assign(dim, std::numeric_limits<double>::infinity());
    mm.hi.assign(dim, -std::numeric_limits<double>::infinity());
    for (const auto& s : samples)
        for (std::size_t i = 0; i < dim; ++i) {
            mm.lo[i] = std::min(mm.lo[i], s.features[i]);
            mm.hi[i] = std::max(mm.hi[i], s.features[i]);
        }
    return mm;
}

std::vector<double> apply_minmax(const MinMax& mm,
                                 const std::vector<double>& x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double range = mm.hi[i] - mm.lo[i];
        out[i] = range > 0.0 ? (x[i] - mm.lo[i]) / range : 0.0;
    }
    return out;
}

struct PreparedData {
    std::vector<std::vector<double>> train_plus, train_minus;
    std::vector<eaqc::LabeledSample> train_eval, test_eval;
};

// Loads, selects the class pair, splits, optionally min-max scales
// (fit on train). class_a carries the Plus label.
PreparedData prepare(const Options& opt) {
    eaqc::data::Dataset ds;
    try {
        ds = eaqc::data::load_csv(opt.data_path);
    } catch (const std::exception& e) {
        throw DataError(e.what());
    }
    auto binary = eaqc::data::select_binary(ds, opt.classes[0], opt.classes[1]);
    auto sp = eaqc::data::split(
        binary, {opt.train_per_class, opt.test_per_class, opt.seed});

    std::optional<MinMax> mm;
    if (opt.normalize_features)
        mm = fit_minmax(sp.train.samples, sp.train.feature_dim);
    auto feats = [&](const eaqc::data::Sample& s) {
        return mm ? apply_minmax(*mm, s.features) : s.features;
    };

    PreparedData out;
    for (const auto& s : sp.train.samples) {
        auto x = feats(s);
        bool plus = s.class_id == opt.classes[0];
        (plus ? out.train_plus : out.train_minus).push_back(x);
        out.train_eval.push_back(
            {std::move(x), plus ? eaqc::Label::Plus : eaqc::Label::Minus});
    }
    for (const auto& s : sp.test.samples)
        out.test_eval.push_back({feats(s), s.class_id == opt.classes[0]
                                               ? eaqc::Label::Plus
                                               : eaqc::Label::Minus});
    return out;
}

eaqc::training::TrainConfig to_train_config(const Options& opt) {
    eaqc::training::TrainConfig cfg;
    cfg.epochs = opt.epochs;
    cfg.seed = opt.seed;
    cfg.learning_rate = opt.lr;
    cfg.fd_step = opt.fd_step;
    cfg.mode = opt.mode == "stochastic" ? eaqc::training::TrainMode::Stochastic
                                        : eaqc::training::TrainMode::Batch;
    cfg.cost = opt.cost == "baseline" ? eaqc::training::CostKind::Baseline
                                      : eaqc::training::CostKind::Bell;
    return cfg;
}

ordered_json echo_config(const Options& opt) {
    return ordered_json{{"data", opt.data_path},
                        {"classes", opt.classes},
                        {"train_per_class", opt.train_per_class},
                        {"test_per_class", opt.test_per_class},
                        {"epochs", opt.epochs},
                        {"seed", opt.seed},
                        {"lr", opt.lr},
                        {"fd_step", opt.fd_step},
                        {"mode", opt.mode},
                        {"cost", opt.cost},
                        {"normalize_features", opt.normalize_features}};
}

int cmd_train(const Options& opt) {
    auto data = prepare(opt);
    auto cfg = to_train_config(opt);
    eaqc::training::EvalSets eval{data.train_eval, data.test_eval};
    auto result =
        eaqc::training::train(cfg, data.train_plus, data.train_minus, eval);

    fs::create_directories(opt.out_dir);
    {
        std::ofstream curve(fs::path(opt.out_dir) / "curve.csv");
        curve << "epoch,raw_cost,normalized_cost,train_accuracy,test_accuracy\n";
        for (const auto& r : result.records)
            curve << r.epoch << ',' << fmt_double(r.raw_cost) << ','
                  << fmt_double(r.normalized_cost) << ','
                  << fmt_double(r.train_accuracy) << ','
                  << fmt_double(r.test_accuracy) << '\n';
    }

    eaqc::ModelFile model{result.params, opt.classes[0], opt.classes[1]};
    eaqc::save_model((fs::path(opt.out_dir) / "model.json").string(), model);

    const auto& last = result.records.back();
    ordered_json metrics;
    metrics["final_train_accuracy"] = last.train_accuracy;
    metrics["final_test_accuracy"] = last.test_accuracy;
    metrics["final_raw_cost"] = last.raw_cost;
    metrics["final_normalized_cost"] = last.normalized_cost;
    metrics["epochs"] = static_cast<int>(result.records.size());
    metrics["seed"] = opt.seed;
    metrics["config"] = echo_config(opt);
    std::ofstream mout(fs::path(opt.out_dir) / "metrics.json");
    mout << metrics.dump(2) << "\n";
    return 0;
}

int cmd_evaluate(const Options& opt) {
    eaqc::ModelFile model;
    try {
        model = eaqc::load_model(opt.model_path);
    } catch (const std::exception& e) {
        throw DataError(e.what());
    }
    auto data = prepare(opt);
    if (!data.train_eval.empty() &&
        data.train_eval.front().features.size() != model.params.w.size())
        throw DataError("feature_dim mismatch: model expects " +
                        std::to_string(model.params.w.size()));
    ordered_json out;
    out["train_accuracy"] = eaqc::accuracy(data.train_eval, model.params);
    out["test_accuracy"] = eaqc::accuracy(data.test_eval, model.params);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_inspect(const Options& opt) {
    eaqc::ModelFile model;
    try {
        model = eaqc::load_model(opt.model_path);
    } catch (const std::exception& e) {
        throw DataError(e.what());
    }
    auto data = prepare(opt);
    if (!data.train_eval.empty() &&
        data.train_eval.front().features.size() != model.params.w.size())
        throw DataError("feature_dim mismatch: model expects " +
                        std::to_string(model.params.w.size()));
    auto pairs = eaqc::training::make_pairs(data.train_plus, data.train_minus,
                                            opt.seed);
    std::cout << "pair_index,bell,abs_bell,cost\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        double bell = eaqc::training::bell_expectation(
            eaqc::training::training_state(pairs[i], model.params));
        double cost = 2.0 * std::sqrt(2.0) - std::abs(bell);
        std::cout << i << ',' << fmt_double(bell) << ','
                  << fmt_double(std::abs(bell)) << ',' << fmt_double(cost)
                  << '\n';
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_train_flags) {
    cmd->add_option("--config", opt.config_path, "JSON config file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--data", opt.data_path, "input CSV path");
    cmd->add_option("--classes", opt.classes, "class pair A,B (A maps to +)")
        ->delimiter(',')
        ->expected(2);
    cmd->add_option("--train-per-class", opt.train_per_class);
    cmd->add_option("--test-per-class", opt.test_per_class);
    cmd->add_option("--seed", opt.seed);
    cmd->add_flag("--normalize-features", opt.normalize_features,
                  "min-max scale features (fit on the train split)");
    if (with_train_flags) {
        cmd->add_option("--epochs", opt.epochs)->check(CLI::PositiveNumber);
        cmd->add_option("--lr", opt.lr)->check(CLI::PositiveNumber);
        cmd->add_option("--fd-step", opt.fd_step)->check(CLI::PositiveNumber);
        cmd->add_option("--mode", opt.mode)
            ->check(CLI::IsMember({"batch", "stochastic"}));
        cmd->add_option("--cost", opt.cost)
            ->check(CLI::IsMember({"bell", "baseline"}));
    }
}

// Config-file values act as defaults; explicit flags win.
void merge_config(const CLI::App* cmd, Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--config", e.what());
    }
    auto set_if_default = [&](const char* flag, auto& target, const char* key) {
        if (j.contains(key) && cmd->count(flag) == 0)
            target = j.at(key).get<std::decay_t<decltype(target)>>();
    };
    set_if_default("--data", opt.data_path, "data");
    set_if_default("--classes", opt.classes, "classes");
    set_if_default("--train-per-class", opt.train_per_class, "train_per_class");
    set_if_default("--test-per-class", opt.test_per_class, "test_per_class");
    set_if_default("--epochs", opt.epochs, "epochs");
    set_if_default("--seed", opt.seed, "seed");
    set_if_default("--lr", opt.lr, "lr");
    set_if_default("--fd-step", opt.fd_step, "fd_step");
    set_if_default("--mode", opt.mode, "mode");
    set_if_default("--cost", opt.cost, "cost");
    set_if_default("--normalize-features", opt.normalize_features,
                   "normalize_features");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement-assisted quantum classifier"};
    app.require_subcommand(1);
    Options opt;

    auto* train = app.add_subcommand("train", "train a classifier");
    add_common(train, opt, true);
    train->add_option("--out", opt.out_dir, "output directory");

    auto* evaluate =
        app.add_subcommand("evaluate", "evaluate a saved model on a split");
    add_common(evaluate, opt, false);
    evaluate->add_option("--model", opt.model_path, "model.json path")
        ->required();

    auto* inspect = app.add_subcommand(
        "inspect", "per-pair Bell expectations for a saved model");
    add_common(inspect, opt, false);
    inspect->add_option("--model", opt.model_path, "model.json path")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;  // usage errors are exit code 1
    }

    try {
        auto* cmd = app.get_subcommands().front();
        merge_config(cmd, opt);
        if (opt.data_path.empty())
            throw CLI::RequiredError("--data (flag or config file)");
        if (cmd == train) return cmd_train(opt);
        if (cmd == evaluate) return cmd_evaluate(opt);
        return cmd_inspect(opt);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    }
}
