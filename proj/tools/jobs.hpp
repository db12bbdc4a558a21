#pragma once

#include "crystalcone/cartan.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cc::cli {

using nlohmann::json;

// Malformed command-line input (exit code 3), as opposed to cc::Error (exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    std::string command;
    std::string type;
    std::optional<std::vector<int>> word;
    std::optional<std::vector<long>> hw, wt;
    std::optional<std::string> chart;
    std::optional<std::string> delta;
    std::optional<std::string> s_grid;
    std::optional<std::vector<int>> sequence;
    int bound = 3;
    unsigned seed = 1;
    bool raw_cone = false;
    bool string_cone = false;
    int samples = 200;
};

std::vector<long> parse_int_list(const std::string& s, const char* what);
std::vector<double> parse_s_grid(const std::string& s);

json rational(const Q& q);
json rationals(const QVec& v);
json matrix(const QMat& m);

struct JobOutput {
    json result;
    std::string csv;  // converge only
};

JobOutput run_job(const JobSpec& spec);

}  // namespace cc::cli
