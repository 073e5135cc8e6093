#include "setlim/infratype.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace setlim {

double min_sign_norm(const Space& space, const std::vector<Vector>& vectors,
                     std::size_t exact_threshold) {
    const std::size_t n = vectors.size();
    if (n < 1) throw std::invalid_argument("min_sign_norm: need at least one vector");
    if (n > exact_threshold || n > 62)
        throw std::invalid_argument("min_sign_norm: collection exceeds the exhaustive threshold");
    for (const auto& v : vectors) {
        if (!v.compatible_with(space))
            throw std::invalid_argument("min_sign_norm: vector incompatible with space");
    }
    if (!space.is_dense()) throw std::invalid_argument("min_sign_norm: dense spaces only");

    const std::size_t d = space.dim;
    std::vector<double> sum(d, 0.0);
    for (const auto& v : vectors)
        for (std::size_t i = 0; i < d; ++i) sum[i] += v.coeffs()[i];

    std::vector<int> sign(n, 1);
    double best = lp_norm(space.p, sum);
    const std::uint64_t patterns = n == 1 ? 1 : (std::uint64_t{1} << (n - 1));
    // Gray-code walk: one sign flip per step, first vector's sign fixed.
    for (std::uint64_t t = 1; t < patterns; ++t) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(t)) + 1;
        sign[flip] = -sign[flip];
        const double delta = 2.0 * sign[flip];
        for (std::size_t i = 0; i < d; ++i) sum[i] += delta * vectors[flip].coeffs()[i];
        best = std::min(best, lp_norm(space.p, sum));
    }
    return best;
}

InfratypeEstimate estimate_constant(const Space& space, double p, std::size_t n_max, int trials,
                                    std::uint64_t seed) {
    if (p <= 1) throw std::invalid_argument("estimate_constant: p > 1 required");
    if (!space.is_dense()) throw std::invalid_argument("estimate_constant: dense spaces only");
    if (n_max < 1 || trials < 1) throw std::invalid_argument("estimate_constant: bad sizes");

    InfratypeEstimate est;
    est.p = p;
    est.n_max = n_max;
    est.trials = trials;
    est.seed = seed;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick_n(1, n_max);

    for (int t = 0; t < trials; ++t) {
        std::size_t n = pick_n(rng);
        std::vector<Vector> xs;
        xs.reserve(n);
        double denom = 0;
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<double> c(space.dim);
            for (auto& x : c) x = gauss(rng);
            xs.push_back(Vector::dense(std::move(c)));
            denom += std::pow(norm(space, xs.back()), p);
        }
        denom = std::pow(denom, 1.0 / p);
        double ratio = denom > 0 ? min_sign_norm(space, xs) / denom : 0.0;
        est.samples.push_back(InfratypeSample{t, n, ratio});
        est.c_hat = std::max(est.c_hat, ratio);
    }
    return est;
}

double shevchenko_rhs(double c, double p, double m, double d) {
    if (p <= 1) throw std::invalid_argument("shevchenko_rhs: p > 1 required");
    if (c <= 0) throw std::invalid_argument("shevchenko_rhs: C > 0 required");
    if (m < 0) throw std::invalid_argument("shevchenko_rhs: M >= 0 required");
    if (!(d > 0) || d > 1) throw std::invalid_argument("shevchenko_rhs: d in (0, 1] required");
    const double c1 = 2.0 * c / (std::pow(2.0, 1.0 - 1.0 / p) - 1.0);
    return c1 * m * std::pow(d, (p - 1.0) / p);
}

}  // namespace setlim
