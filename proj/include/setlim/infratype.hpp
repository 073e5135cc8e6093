#pragma once

#include "setlim/space.hpp"

#include <cstdint>
#include <vector>

namespace setlim {

struct InfratypeSample {
    int trial = 0;
    std::size_t n = 0;
    double ratio = 0;
};

/// Empirical lower bound for the best constant C at exponent p: the max over
/// seeded trials of min-sign-norm / (sum ||x_k||^p)^(1/p).
struct InfratypeEstimate {
    double p = 2;
    double c_hat = 0;
    int trials = 0;
    std::size_t n_max = 0;
    std::uint64_t seed = 0;
    std::vector<InfratypeSample> samples;
};

/// Exact min over sign patterns of ||sum +- x_k||, by Gray-code enumeration of
/// 2^(n-1) patterns (global sign symmetry halves the space).
double min_sign_norm(const Space& space, const std::vector<Vector>& vectors,
                     std::size_t exact_threshold = 20);

InfratypeEstimate estimate_constant(const Space& space, double p, std::size_t n_max, int trials,
                                    std::uint64_t seed);

/// (2C / (2^(1-1/p) - 1)) * M * d^((p-1)/p).
double shevchenko_rhs(double c, double p, double m, double d);

}  // namespace setlim
