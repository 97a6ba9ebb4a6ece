#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>

#include "eaqc/data.hpp"

using namespace eaqc::data;

#ifndef EAQC_DATA_DIR
#define EAQC_DATA_DIR "data"
#endif

namespace {

const std::string kIris = std::string(EAQC_DATA_DIR) + "/iris.csv";

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::uint64_t fnv1a(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

TEST_CASE("vendored iris fixture is intact") {
    CHECK(fnv1a(kIris) == 0xf743bbb242040baeULL);
    auto ds = load_csv(kIris);
    CHECK(ds.samples.size() == 150);
    CHECK(ds.feature_dim == 4);
    std::map<int, int> counts;
    for (const auto& s : ds.samples) counts[s.class_id]++;
    CHECK(counts[0] == 50);
    CHECK(counts[1] == 50);
    CHECK(counts[2] == 50);
    CHECK(ds.class_names.at(0) == "setosa");
    CHECK(ds.class_names.at(1) == "virginica");
    CHECK(ds.class_names.at(2) == "versicolor");
}

TEST_CASE("csv error paths") {
    auto empty = write_temp("eaqc_empty.csv", "");
    CHECK_THROWS_AS(load_csv(empty.string()), std::runtime_error);

    auto short_row = write_temp("eaqc_short.csv",
                                "1.0,2.0,3.0,4.0,setosa\n1.0,2.0,setosa\n");
    CHECK_THROWS_WITH_AS(load_csv(short_row.string()),
                         doctest::Contains("line 2"), std::runtime_error);

    auto bad_class =
        write_temp("eaqc_badclass.csv", "1.0,2.0,3.0,4.0,petunia\n");
    CHECK_THROWS_AS(load_csv(bad_class.string()), std::runtime_error);

    auto bad_feature =
        write_temp("eaqc_badfeat.csv", "1.0,x,3.0,4.0,setosa\n");
    CHECK_THROWS_AS(load_csv(bad_feature.string()), std::runtime_error);

    CHECK_THROWS_AS(load_csv("/nonexistent/iris.csv"), std::runtime_error);
    for (auto p : {empty, short_row, bad_class, bad_feature})
        std::filesystem::remove(p);
}

TEST_CASE("integer class labels are accepted") {
    auto path = write_temp("eaqc_intcls.csv", "1.0,2.0,0\n3.0,4.0,1\n");
    auto ds = load_csv(path.string());
    CHECK(ds.samples.size() == 2);
    CHECK(ds.feature_dim == 2);
    CHECK(ds.samples[0].class_id == 0);
    CHECK(ds.samples[1].class_id == 1);
    std::filesystem::remove(path);
}

TEST_CASE("select_binary keeps only the chosen pair") {
    auto ds = load_csv(kIris);
    auto bin = select_binary(ds, 0, 1);
    CHECK(bin.samples.size() == 100);
    for (const auto& s : bin.samples) CHECK((s.class_id == 0 || s.class_id == 1));
    CHECK_THROWS_AS(select_binary(ds, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(select_binary(ds, 0, 9), std::invalid_argument);
}

TEST_CASE("split is stratified, disjoint, and deterministic") {
    auto ds = select_binary(load_csv(kIris), 0, 2);
    SplitSpec spec{40, 10, 7};
    auto s1 = split(ds, spec);
    auto s2 = split(ds, spec);
    CHECK(s1.train.samples.size() == 80);
    CHECK(s1.test.samples.size() == 20);

    std::map<int, int> train_counts, test_counts;
    for (const auto& s : s1.train.samples) train_counts[s.class_id]++;
    for (const auto& s : s1.test.samples) test_counts[s.class_id]++;
    CHECK(train_counts[0] == 40);
    CHECK(train_counts[2] == 40);
    CHECK(test_counts[0] == 10);
    CHECK(test_counts[2] == 10);

    // deterministic membership
    for (std::size_t i = 0; i < s1.train.samples.size(); ++i)
        CHECK(s1.train.samples[i].features == s2.train.samples[i].features);

    // disjoint: feature rows in iris are not all unique, so compare by
    // multiset difference of full rows per class count instead
    auto key = [](const Sample& s) {
        std::string k = std::to_string(s.class_id);
        for (double f : s.features) k += "," + std::to_string(f);
        return k;
    };
    std::multiset<std::string> train_keys, test_keys, all_keys;
    for (const auto& s : s1.train.samples) train_keys.insert(key(s));
    for (const auto& s : s1.test.samples) test_keys.insert(key(s));
    for (const auto& s : ds.samples) all_keys.insert(key(s));
    for (const auto& k : test_keys) {
        auto avail = all_keys.count(k);
        CHECK(train_keys.count(k) + test_keys.count(k) <= avail);
    }

    CHECK_THROWS_AS(split(ds, SplitSpec{45, 10, 0}), std::invalid_argument);
}
