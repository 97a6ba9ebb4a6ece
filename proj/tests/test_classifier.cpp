#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "eaqc/classifier.hpp"
#include "oracle.hpp"

using namespace eaqc;
using qsim::cd;

namespace {
const double SQRT1_2 = 1.0 / std::sqrt(2.0);
const double PI = 3.14159265358979323846;
}

TEST_CASE("embed is the plain dot product") {
    CHECK(embed({1, 2, 3, 4}, {0, 0, 0, 0}) == 0.0);
    CHECK(embed({1, 2, 3, 4}, {1, 1, 1, 1}) == 10.0);
    CHECK(embed({5, 7, 9}, {1, 0, 0}) == 5.0);
    CHECK_THROWS_AS(embed({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("forward with zero parameters is H|0>") {
    ModelParams p{{0, 0, 0, 0}, {0, 0, 0}};
    auto s = forward({3.1, -2.0, 0.5, 8.0}, p);
    CHECK(std::abs(s.a0 - cd{SQRT1_2}) < 1e-12);
    CHECK(std::abs(s.a1 - cd{SQRT1_2}) < 1e-12);
}

TEST_CASE("forward matches the matrix-product oracle") {
    ModelParams p{{PI / 2.0, 0, 0, 0}, {0, 0, 0}};
    auto s = forward({1, 0, 0, 0}, p);
    CHECK(std::abs(s.a0 - cd{0, SQRT1_2}) < 1e-12);
    CHECK(std::abs(s.a1 - cd{0, -SQRT1_2}) < 1e-12);
}

TEST_CASE("forward depends on the input only through the embedded phase") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        ModelParams p{{u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
        std::vector<double> x{u(rng), u(rng)};
        double xt = embed(x, p.w);
        // a second input with the same phase, constructed along w
        double wn = p.w[0] * p.w[0] + p.w[1] * p.w[1];
        if (wn < 1e-6) continue;
        std::vector<double> y{xt * p.w[0] / wn, xt * p.w[1] / wn};
        auto s1 = forward(x, p);
        auto s2 = forward(y, p);
        CHECK(std::abs(s1.a0 - s2.a0) < 1e-9);
        CHECK(std::abs(s1.a1 - s2.a1) < 1e-9);

        // scaling w -> c w, x -> x / c
        double c = 3.25;
        ModelParams ps{{c * p.w[0], c * p.w[1]}, p.theta};
        auto s3 = forward({x[0] / c, x[1] / c}, ps);
        CHECK(std::abs(s1.a0 - s3.a0) < 1e-12);
        CHECK(std::abs(s1.a1 - s3.a1) < 1e-12);
    }
}

TEST_CASE("predict maps ideal states to labels; tie goes to Plus") {
    // theta = (0, pi/4, -x_tilde - pi/4 ... ) easier: check via prob directly
    ModelParams p{{0.0}, {0, 0, 0}};
    auto pr = predict({1.0}, p);
    CHECK(pr.p_minus == doctest::Approx(0.5));
    CHECK(pr.label == decide(pr.p_minus));
    CHECK(decide(0.5) == Label::Plus);  // tie rule
    CHECK(decide(std::nextafter(0.5, 0.0)) == Label::Minus);

    // e^{i sigma2 (-pi/4)} sends H|0> to |1>: P- = 1
    ModelParams p1{{0.0}, {0, -PI / 4.0, 0}};
    auto pr1 = predict({1.0}, p1);
    CHECK(pr1.p_minus == doctest::Approx(1.0));
    CHECK(pr1.label == Label::Plus);

    ModelParams p0{{0.0}, {0, PI / 4.0, 0}};
    auto pr0 = predict({1.0}, p0);
    CHECK(pr0.p_minus == doctest::Approx(0.0));
    CHECK(pr0.label == Label::Minus);
}

TEST_CASE("accuracy counts matches and is permutation invariant") {
    ModelParams p{{0.0}, {0, -PI / 4.0, 0}};  // everything predicted Plus
    std::vector<LabeledSample> all_plus = {{{1.0}, Label::Plus},
                                           {{2.0}, Label::Plus}};
    CHECK(accuracy(all_plus, p) == 1.0);
    std::vector<LabeledSample> all_minus = {{{1.0}, Label::Minus},
                                            {{2.0}, Label::Minus}};
    CHECK(accuracy(all_minus, p) == 0.0);
    std::vector<LabeledSample> mixed = {{{1.0}, Label::Plus},
                                        {{2.0}, Label::Minus},
                                        {{3.0}, Label::Plus},
                                        {{4.0}, Label::Plus}};
    double a1 = accuracy(mixed, p);
    std::rotate(mixed.begin(), mixed.begin() + 2, mixed.end());
    CHECK(accuracy(mixed, p) == a1);
    CHECK(a1 == doctest::Approx(0.75));
    CHECK_THROWS_AS(accuracy({}, p), std::invalid_argument);
}

TEST_CASE("model json round trip") {
    ModelFile m{{{0.25, -1.5, 3.0, 0.125}, {0.5, -0.75, 2.0}}, 0, 2};
    auto path = std::filesystem::temp_directory_path() / "eaqc_model_test.json";
    save_model(path.string(), m);
    auto back = load_model(path.string());
    CHECK(back.params.w == m.params.w);
    CHECK(back.params.theta == m.params.theta);
    CHECK(back.class_a == 0);
    CHECK(back.class_b == 2);
    std::filesystem::remove(path);
}
