#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eaqc/classifier.hpp"
#include "eaqc/data.hpp"
#include "eaqc/qsim.hpp"
#include "eaqc/training.hpp"

namespace py = pybind11;
using namespace eaqc;

namespace {

ModelParams make_params(const std::vector<double>& w,
                        const std::array<double, 3>& theta) {
    return {w, theta};
}

}  // namespace

PYBIND11_MODULE(_eaqc, m) {
    m.doc() = "Entanglement-assisted quantum classifier core";

    py::class_<qsim::State1Q>(m, "State1Q")
        .def(py::init([](qsim::cd a0, qsim::cd a1) {
            return qsim::State1Q{a0, a1};
        }))
        .def_readonly("a0", &qsim::State1Q::a0)
        .def_readonly("a1", &qsim::State1Q::a1);

    py::class_<qsim::State2Q>(m, "State2Q")
        .def(py::init([](const std::array<qsim::cd, 4>& amps) {
            return qsim::State2Q{amps};
        }))
        .def_readonly("amps", &qsim::State2Q::amps);

    m.def("prepare_encoded_state", &qsim::prepare_encoded_state);
    m.def("su2_rotate", &qsim::su2_rotate);
    m.def("prob_minus", &qsim::prob_minus);
    m.def("bell_operator", [] {
        auto b = qsim::bell_operator();
        std::vector<std::vector<qsim::cd>> rows(4, std::vector<qsim::cd>(4));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) rows[r][c] = b[4 * r + c];
        return rows;
    });

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init(&make_params), py::arg("w"), py::arg("theta"))
        .def_readwrite("w", &ModelParams::w)
        .def_readwrite("theta", &ModelParams::theta);

    py::enum_<Label>(m, "Label")
        .value("PLUS", Label::Plus)
        .value("MINUS", Label::Minus);

    m.def("embed", &embed);
    m.def("forward", &forward);
    m.def("predict", [](const std::vector<double>& x, const ModelParams& p) {
        auto pr = predict(x, p);
        return py::make_tuple(pr.label, pr.p_minus);
    });

    py::class_<training::TrainPair>(m, "TrainPair")
        .def(py::init([](std::vector<double> xp, std::vector<double> xm) {
            return training::TrainPair{std::move(xp), std::move(xm)};
        }))
        .def_readwrite("x_plus", &training::TrainPair::x_plus)
        .def_readwrite("x_minus", &training::TrainPair::x_minus);

    m.def("training_state", &training::training_state);
    m.def("bell_expectation", &training::bell_expectation);
    m.def("closed_form_bell", &training::closed_form_bell);
    m.def("pair_cost", &training::pair_cost);
    m.def("make_pairs", &training::make_pairs);
    m.def("total_cost",
          [](const std::vector<training::TrainPair>& pairs,
             const ModelParams& p) {
              auto r = training::total_cost(pairs, p);
              return py::make_tuple(r.raw, r.normalized, r.per_pair);
          });
    m.def("baseline_cost", &training::baseline_cost);

    py::enum_<training::TrainMode>(m, "TrainMode")
        .value("BATCH", training::TrainMode::Batch)
        .value("STOCHASTIC", training::TrainMode::Stochastic);

    py::class_<training::TrainConfig>(m, "TrainConfig")
        .def(py::init<>())
        .def_readwrite("epochs", &training::TrainConfig::epochs)
        .def_readwrite("seed", &training::TrainConfig::seed)
        .def_readwrite("learning_rate", &training::TrainConfig::learning_rate)
        .def_readwrite("fd_step", &training::TrainConfig::fd_step)
        .def_readwrite("mode", &training::TrainConfig::mode)
        .def_readwrite("reshuffle_pairs",
                       &training::TrainConfig::reshuffle_pairs);

    py::class_<training::RunRecord>(m, "RunRecord")
        .def_readonly("epoch", &training::RunRecord::epoch)
        .def_readonly("raw_cost", &training::RunRecord::raw_cost)
        .def_readonly("normalized_cost", &training::RunRecord::normalized_cost)
        .def_readonly("train_accuracy", &training::RunRecord::train_accuracy)
        .def_readonly("test_accuracy", &training::RunRecord::test_accuracy);

    m.def(
        "train",
        [](const training::TrainConfig& cfg,
           const std::vector<std::vector<double>>& t_plus,
           const std::vector<std::vector<double>>& t_minus) {
            auto r = training::train(cfg, t_plus, t_minus, std::nullopt);
            return py::make_tuple(r.params, r.records);
        },
        py::arg("config"), py::arg("t_plus"), py::arg("t_minus"));

    py::class_<data::Sample>(m, "Sample")
        .def_readonly("features", &data::Sample::features)
        .def_readonly("class_id", &data::Sample::class_id);

    py::class_<data::Dataset>(m, "Dataset")
        .def_readonly("samples", &data::Dataset::samples)
        .def_readonly("feature_dim", &data::Dataset::feature_dim);

    m.def("load_csv", &data::load_csv);
    m.def("select_binary", &data::select_binary);
    m.def("split", [](const data::Dataset& ds, std::size_t train_per_class,
                      std::size_t test_per_class, std::uint64_t seed) {
        auto s = data::split(ds, {train_per_class, test_per_class, seed});
        return py::make_tuple(s.train, s.test);
    });
}
