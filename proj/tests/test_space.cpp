#include "setlim/space.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace setlim;

TEST_CASE("lp norms on the worked values") {
    CHECK(norm(Space::dense(2), Vector::dense({3, 4})) == doctest::Approx(5).epsilon(1e-15));
    CHECK(norm(Space::dense(2, PExponent::of(1)), Vector::dense({3, 4})) == doctest::Approx(7));
    CHECK(norm(Space::dense(2, PExponent::inf()), Vector::dense({3, -4})) == doctest::Approx(4));
}

TEST_CASE("pairings") {
    Vector e1 = Vector::unit(2, 0), e2 = Vector::unit(2, 1);
    CHECK(pair(Functional{e1}, e1) == 1.0);
    CHECK(pair(Functional{e1}, e2) == 0.0);
    double s = 1.0 / std::sqrt(2.0);
    CHECK(pair(Functional{Vector::dense({s, s})}, Vector::dense({1, 1})) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("conjugate exponents are exact") {
    CHECK(PExponent::of(2).conjugate().value == 2);
    CHECK(PExponent::of(Rational(3, 2)).conjugate().value == 3);
    CHECK(PExponent::of(1).conjugate().infinite);
    CHECK(PExponent::inf().conjugate().value == 1);
    CHECK_THROWS_AS(PExponent::of(Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("sample_directions contract") {
    Space sp = Space::dense(2);
    auto dirs = sample_directions(sp, 4, 123);
    REQUIRE(dirs.size() == 4);
    // the +-coordinate functionals come first
    CHECK(vec_equal(dirs[0].v, Vector::unit(2, 0, 1)));
    CHECK(vec_equal(dirs[1].v, Vector::unit(2, 0, -1)));
    CHECK(vec_equal(dirs[2].v, Vector::unit(2, 1, 1)));
    CHECK(vec_equal(dirs[3].v, Vector::unit(2, 1, -1)));

    for (auto pexp : {PExponent::of(1), PExponent::of(2), PExponent::of(Rational(3, 2)),
                      PExponent::inf()}) {
        Space s = Space::dense(3, pexp);
        auto ds = sample_directions(s, 16, 9);
        for (const auto& d : ds) CHECK(std::fabs(dual_norm(s, d) - 1.0) <= 1e-12);
    }

    auto again = sample_directions(sp, 12, 123);
    auto again2 = sample_directions(sp, 12, 123);
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(vec_equal(again[i].v, again2[i].v));

    CHECK_THROWS_AS(sample_directions(sp, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_directions(Space::sparse_l2(), 8, 1), std::invalid_argument);
}

TEST_CASE("dimension mismatches throw") {
    CHECK_THROWS_AS(norm(Space::dense(3), Vector::dense({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(add(Vector::dense({1}), Vector::dense({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(pair(Functional{Vector::dense({1})}, Vector::sparse({})),
                    std::invalid_argument);
}

TEST_CASE("sparse vectors store no zeros and agree with dense arithmetic") {
    Vector v = Vector::sparse({{BigInt(3), 0.0}, {BigInt(5), 2.0}});
    CHECK(v.entries().size() == 1);
    Space sp = Space::sparse_l2();
    CHECK(norm(sp, v) == 2.0);

    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unif(-1, 1);
    Space dense = Space::dense(5);
    for (int t = 0; t < 1000; ++t) {
        std::vector<double> a(5), b(5);
        for (auto& x : a) x = unif(rng);
        for (auto& x : b) x = unif(rng);
        SparseEntries ea, eb;
        for (int i = 0; i < 5; ++i) {
            ea[BigInt(i)] = a[i];
            eb[BigInt(i)] = b[i];
        }
        Vector da = Vector::dense(a), db = Vector::dense(b);
        Vector sa = Vector::sparse(ea), sb = Vector::sparse(eb);
        CHECK(norm(dense, da) == doctest::Approx(norm(sp, sa)).epsilon(1e-14));
        CHECK(pair(Functional{da}, db) == doctest::Approx(pair(Functional{sa}, sb)).epsilon(1e-14));
        CHECK(norm(dense, sub(da, db)) == doctest::Approx(norm(sp, sub(sa, sb))).epsilon(1e-14));
    }
}

TEST_CASE("big sparse keys pair biorthogonally") {
    BigInt huge = BigInt(1) << 50000;
    Vector x = Vector::sparse_unit(huge, 2.0);
    Functional f{Vector::sparse_unit(huge, 0.5)};
    Functional g{Vector::sparse_unit(huge + 1, 0.5)};
    CHECK(pair(f, x) == 1.0);
    CHECK(pair(g, x) == 0.0);
    CHECK(norm(Space::sparse_l2(), x) == 2.0);
    CHECK(dual_norm(Space::sparse_l2(), f) == 0.5);
}
