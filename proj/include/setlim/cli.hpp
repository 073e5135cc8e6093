#pragma once

#include <cstdint>
#include <string>

namespace setlim::cli {

/// One experiment invocation. Unused fields keep their defaults; everything
/// that affects the run is echoed into the output metadata.
struct ExperimentConfig {
    std::string command;

    std::string space_spec = "l2:2";
    std::string fn;                    // multifunction spec, e.g. "singleton:linear"
    std::string set_a, set_b;          // inline JSON or @path
    std::string target;                // inline JSON or @path
    std::string schedule_kind = "uniform-doubling";
    std::size_t schedule_len = 6;
    std::string partition_spec;        // e.g. "uniform:64:mid"
    std::string n_partition, m_partition;
    double tolerance = 1e-6;
    std::size_t window = 3;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t budget = 3;
    double lambda = 0.5;
    std::string lambda_grid = "0.25,0.5,0.75";
    std::string primes = "2,3,5,7,11";
    int bins = 2310;
    std::size_t directions = 64;
    double p_exponent = 2.0;
    std::size_t n_max = 16;
    int trials = 200;
    double reach_factor = 2.0;
};

struct RunResult {
    int exit_code = 0;     // 0 ok, 1 assertion failure, 2 config error
    std::string json;      // primary artifact
    std::string csv;       // plot columns, when the command produces them
};

/// Executes one command; never throws (errors become exit codes + a JSON
/// error document).
RunResult run(const ExperimentConfig& cfg);

/// 64-bit FNV-1a, used for the determinism checks.
std::uint64_t fnv1a(const std::string& data);

}  // namespace setlim::cli
