#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// CSV ingestion, binary class selection, and seeded stratified splitting.

namespace eaqc::data {

struct Sample {
    std::vector<double> features;
    int class_id = 0;
};

struct Dataset {
    std::vector<Sample> samples;
    std::map<int, std::string> class_names;
    std::size_t feature_dim = 0;
};

struct SplitSpec {
    std::size_t train_per_class = 40;
    std::size_t test_per_class = 10;
    std::uint64_t seed = 0;
};

// Rows are feature_dim numeric columns followed by a class column (species
// name or integer id). A non-numeric first row is treated as a header.
// Species names map to ids: setosa -> 0, virginica -> 1, versicolor -> 2.
// Malformed rows raise std::runtime_error naming the line.
Dataset load_csv(const std::string& path);

// Keeps only the two classes; class_a is oriented to the Plus label
// downstream. Throws std::invalid_argument if a class is missing or the
// classes are equal.
Dataset select_binary(const Dataset& ds, int class_a, int class_b);

struct Split {
    Dataset train;
    Dataset test;
};

// Per-class stratified, disjoint, deterministic given seed.
Split split(const Dataset& ds, const SplitSpec& spec);

}  // namespace eaqc::data
