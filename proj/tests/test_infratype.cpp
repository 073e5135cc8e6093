#include "setlim/infratype.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace setlim;

namespace {

// independent full enumeration over all 2^n sign patterns
double min_sign_brute(const Space& sp, const std::vector<Vector>& xs) {
    double best = 1e300;
    for (std::uint32_t mask = 0; mask < (1u << xs.size()); ++mask) {
        Vector acc = Vector::zeros(sp.dim);
        for (std::size_t i = 0; i < xs.size(); ++i)
            acc = add(acc, scaled(mask & (1u << i) ? -1.0 : 1.0, xs[i]));
        best = std::min(best, norm(sp, acc));
    }
    return best;
}

}  // namespace

TEST_CASE("min_sign_norm on worked values") {
    Space l2 = Space::dense(2);
    Vector x = Vector::dense({0.3, -0.4});
    CHECK(min_sign_norm(l2, {x}) == doctest::Approx(0.5));
    CHECK(min_sign_norm(l2, {x, x}) == doctest::Approx(0.0));
    CHECK(min_sign_norm(l2, {Vector::unit(2, 0), Vector::unit(2, 1)}) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(min_sign_norm(l2, std::vector<Vector>(25, x)), std::invalid_argument);
    CHECK_THROWS_AS(min_sign_norm(l2, {}), std::invalid_argument);
}

TEST_CASE("gray-code enumeration equals full brute force") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(-1, 1);
    for (int t = 0; t < 100; ++t) {
        std::size_t d = 1 + t % 3;
        Space sp = t % 2 ? Space::dense(d) : Space::dense(d, PExponent::of(1));
        std::vector<Vector> xs;
        std::size_t n = 1 + rng() % 9;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> c(d);
            for (auto& v : c) v = unif(rng);
            xs.push_back(Vector::dense(std::move(c)));
        }
        CHECK(min_sign_norm(sp, xs) == doctest::Approx(min_sign_brute(sp, xs)).epsilon(1e-12));
    }
}

TEST_CASE("Hilbert estimates stay at or below one") {
    auto est = estimate_constant(Space::dense(3), 2.0, 10, 300, 17);
    CHECK(est.c_hat <= 1.0 + 1e-9);
    CHECK(est.samples.size() == 300);
    // single-vector collections give ratio exactly 1
    auto single = estimate_constant(Space::dense(2), 2.0, 1, 50, 3);
    for (const auto& s : single.samples) CHECK(s.ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the l1 plane witnesses a ratio above one") {
    Space l1 = Space::dense(2, PExponent::of(1));
    std::vector<Vector> pairvec{Vector::unit(2, 0), Vector::unit(2, 1)};
    double msn = min_sign_norm(l1, pairvec);
    CHECK(msn == doctest::Approx(2.0));
    double denom = std::sqrt(2.0);
    CHECK(msn / denom == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("shevchenko rhs closed form") {
    CHECK(shevchenko_rhs(1, 2, 1, 1) == doctest::Approx(2.0 / (std::sqrt(2.0) - 1.0)).epsilon(1e-15));
    CHECK(shevchenko_rhs(1, 2, 0, 0.5) == 0.0);
    double full = shevchenko_rhs(1, 2, 1, 1);
    CHECK(shevchenko_rhs(1, 2, 1, 0.5) == doctest::Approx(full / std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(shevchenko_rhs(1, 1.0, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(shevchenko_rhs(1, 2, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(shevchenko_rhs(0, 2, 1, 0.5), std::invalid_argument);
}

TEST_CASE("min over signs never beats the all-plus sum") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unif(-1, 1);
    Space sp = Space::dense(3);
    for (int t = 0; t < 200; ++t) {
        std::vector<Vector> xs;
        std::size_t n = 1 + rng() % 12;
        Vector acc = Vector::zeros(3);
        double rms = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> c(3);
            for (auto& v : c) v = unif(rng);
            xs.push_back(Vector::dense(c));
            acc = add(acc, xs.back());
            rms += std::pow(norm(sp, xs.back()), 2);
        }
        double msn = min_sign_norm(sp, xs);
        CHECK(msn <= norm(sp, acc) + 1e-12);
        CHECK(msn <= std::sqrt(rms) + 1e-9);
    }
}
