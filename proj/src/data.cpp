#include "eaqc/data.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eaqc::data {

namespace {

const std::map<std::string, int> kSpeciesIds = {
    {"setosa", 0}, {"virginica", 1}, {"versicolor", 2},
    {"Iris-setosa", 0}, {"Iris-virginica", 1}, {"Iris-versicolor", 2}};

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        auto b = field.find_first_not_of(" \t\r");
        auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return out;
}

bool parse_double(const std::string& s, double& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("csv parse error at line " +
                             std::to_string(line_no) + ": " + what);
}

void seeded_shuffle(std::vector<std::size_t>& idx, std::mt19937_64& rng) {
    for (std::size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[rng() % i]);
}

}  // namespace

Dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    Dataset ds;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_fields(line);
        if (first) {
            first = false;
            double tmp;
            if (!fields.empty() && !parse_double(fields[0], tmp))
                continue;  // header row
        }
        if (fields.size() < 2) parse_fail(line_no, "too few columns");

        Sample s;
        for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
            double v;
            if (!parse_double(fields[i], v))
                parse_fail(line_no, "non-numeric feature '" + fields[i] + "'");
            s.features.push_back(v);
        }
        const std::string& cls = fields.back();
        if (auto it = kSpeciesIds.find(cls); it != kSpeciesIds.end()) {
            s.class_id = it->second;
            ds.class_names[s.class_id] = cls;
        } else {
            double v;
            if (!parse_double(cls, v) || v != static_cast<int>(v))
                parse_fail(line_no, "unknown class '" + cls + "'");
            s.class_id = static_cast<int>(v);
            if (!ds.class_names.count(s.class_id))
                ds.class_names[s.class_id] = cls;
        }
        if (ds.samples.empty()) {
            ds.feature_dim = s.features.size();
        } else if (s.features.size() != ds.feature_dim) {
            parse_fail(line_no, "expected " + std::to_string(ds.feature_dim) +
                                    " features, got " +
                                    std::to_string(s.features.size()));
        }
        ds.samples.push_back(std::move(s));
    }
    if (ds.samples.empty())
        throw std::runtime_error("csv parse error: no data rows in " + path);
    return ds;
}

Dataset select_binary(const Dataset& ds, int class_a, int class_b) {
    if (class_a == class_b)
        throw std::invalid_argument("select_binary: classes must differ");
    Dataset out;
    out.feature_dim = ds.feature_dim;
    for (const auto& s : ds.samples)
        if (s.class_id == class_a || s.class_id == class_b)
            out.samples.push_back(s);
    for (int c : {class_a, class_b}) {
        if (auto it = ds.class_names.find(c); it != ds.class_names.end())
            out.class_names[c] = it->second;
        bool present = std::any_of(out.samples.begin(), out.samples.end(),
                                   [c](const Sample& s) { return s.class_id == c; });
        if (!present)
            throw std::invalid_argument("select_binary: class " +
                                        std::to_string(c) + " not present");
    }
    return out;
}

Split split(const Dataset& ds, const SplitSpec& spec) {
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < ds.samples.size(); ++i)
        by_class[ds.samples[i].class_id].push_back(i);

    std::mt19937_64 rng(spec.seed);
    Split out;
    out.train.feature_dim = out.test.feature_dim = ds.feature_dim;
    out.train.class_names = out.test.class_names = ds.class_names;
    for (auto& [cls, idx] : by_class) {
        if (idx.size() < spec.train_per_class + spec.test_per_class)
            throw std::invalid_argument(
                "split: class " + std::to_string(cls) + " has only " +
                std::to_string(idx.size()) + " samples");
        seeded_shuffle(idx, rng);
        for (std::size_t i = 0; i < spec.train_per_class; ++i)
            out.train.samples.push_back(ds.samples[idx[i]]);
        for (std::size_t i = 0; i < spec.test_per_class; ++i)
            out.test.samples.push_back(
                ds.samples[idx[spec.train_per_class + i]]);
    }
    return out;
}

}  // namespace eaqc::data
