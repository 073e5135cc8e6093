#include "setlim/rational.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace setlim;

TEST_CASE("rational_of_double is exact") {
    CHECK(rational_of_double(0.25) == Rational(1, 4));
    CHECK(rational_of_double(-1.5) == Rational(-3, 2));
    CHECK(rational_of_double(0.0) == 0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        double x = unif(rng);
        CHECK(to_double(rational_of_double(x)) == x);
    }
}

TEST_CASE("reconstruct_rational recovers bounded denominators and rejects generic doubles") {
    auto r = reconstruct_rational(1.0 / 3.0);
    REQUIRE(r);
    CHECK(*r == Rational(1, 3));
    r = reconstruct_rational(2309.0 / 2310.0);
    REQUIRE(r);
    CHECK(*r == Rational(2309, 2310));
    CHECK(reconstruct_rational(0.5) == Rational(1, 2));
    CHECK(reconstruct_rational(0.0) == Rational(0));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int hits = 0;
    for (int i = 0; i < 500; ++i) {
        if (reconstruct_rational(unif(rng))) ++hits;
    }
    CHECK(hits == 0);
}

TEST_CASE("simplest_rational_in picks smallest denominators") {
    CHECK(simplest_rational_in(Rational(1, 5), Rational(2, 5)) == Rational(1, 3));
    CHECK(simplest_rational_in(Rational(5, 8), Rational(7, 8)) == Rational(2, 3));
    CHECK(simplest_rational_in(Rational(0), Rational(1)) == 0);
    CHECK(simplest_rational_in(Rational(1, 2), Rational(1, 2)) == Rational(1, 2));
    CHECK(simplest_rational_in(Rational(-3, 4), Rational(-1, 4)) == Rational(-1, 2));
    CHECK(simplest_rational_in(Rational(7, 16), Rational(15, 32)) == Rational(4, 9));
    // the result always lands inside the interval
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(0, 1000), den(1, 1000);
    for (int i = 0; i < 300; ++i) {
        Rational a(num(rng), den(rng));
        Rational b = a + Rational(1, den(rng));
        Rational s = simplest_rational_in(a, b);
        CHECK(s >= a);
        CHECK(s <= b);
    }
}

TEST_CASE("pairing and zigzag round-trip") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> v(0, 1'000'000);
    for (int i = 0; i < 200; ++i) {
        BigInt x(v(rng)), y(v(rng));
        auto [a, b] = cantor_unpair(cantor_pair(x, y));
        CHECK(a == x);
        CHECK(b == y);
    }
    for (long n = -50; n <= 50; ++n) CHECK(unzigzag(zigzag(BigInt(n))) == n);
    // the decoding is injective on an initial segment
    std::set<std::pair<BigInt, BigInt>> seen;
    for (long z = 0; z < 500; ++z) seen.insert(cantor_unpair(BigInt(z)));
    CHECK(seen.size() == 500);
}

TEST_CASE("primality and parsing") {
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("zzz"));
    CHECK(rational_to_string(Rational(6, 4)) == "3/2");
    CHECK(rational_to_string(Rational(8, 4)) == "2");
}
