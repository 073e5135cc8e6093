#include "setlim/partition.hpp"

#include <doctest.h>

using namespace setlim;

TEST_CASE("diameters") {
    CHECK(uniform_partition(4).diameter_exact() == Rational(1, 4));
    TaggedPartition skew;
    skew.breakpoints = {Rational(0), Rational(1, 10), Rational(1)};
    skew.tags = {Tag::exact(Rational(1, 20)), Tag::exact(Rational(1, 2))};
    skew.validate();
    CHECK(skew.diameter_exact() == Rational(9, 10));
    CHECK(prime_partition(5).diameter_exact() == Rational(1, 5));
}

TEST_CASE("uniform tag rules") {
    auto mid = uniform_partition(2, TagRule::Mid);
    REQUIRE(mid.size() == 2);
    CHECK(*mid.tags[0].rational_value() == Rational(1, 4));
    CHECK(*mid.tags[1].rational_value() == Rational(3, 4));

    auto left = uniform_partition(1, TagRule::Left);
    CHECK(*left.tags[0].rational_value() == 0);

    auto right = uniform_partition(3, TagRule::Right);
    CHECK(*right.tags[0].rational_value() == Rational(1, 3));
    CHECK(*right.tags[1].rational_value() == Rational(2, 3));
    CHECK(*right.tags[2].rational_value() == 1);

    CHECK_THROWS_AS(uniform_partition(2, std::vector<Tag>{Tag::exact(Rational(1, 4))}),
                    std::invalid_argument);
    CHECK_THROWS_AS(uniform_partition(1, std::vector<Tag>{Tag::exact(Rational(2))}),
                    std::invalid_argument);
}

TEST_CASE("prime partitions carry their presentation") {
    auto p2 = prime_partition(2);
    CHECK(p2.breakpoints == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
    CHECK(p2.tags[0].frac->first == 1);
    CHECK(p2.tags[0].frac->second == 4);
    CHECK(p2.tags[1].frac->first == 3);

    auto p3 = prime_partition(3);
    CHECK(*p3.tags[0].rational_value() == Rational(1, 6));
    CHECK(*p3.tags[1].rational_value() == Rational(1, 2));  // value reduces, ...
    CHECK(p3.tags[1].frac->first == 3);                     // ... the presentation does not
    CHECK(p3.tags[1].frac->second == 6);
    CHECK(*p3.tags[2].rational_value() == Rational(5, 6));

    CHECK_THROWS_AS(prime_partition(4), std::invalid_argument);
    CHECK_THROWS_AS(prime_partition(1), std::invalid_argument);

    // exact tiling
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        auto part = prime_partition(p);
        Rational sum(0);
        for (std::size_t i = 0; i < part.size(); ++i) sum += part.length_exact(i);
        CHECK(sum == 1);
    }
}

TEST_CASE("random partitions are deterministic under seed and respect the cap") {
    for (std::uint64_t seed : {1u, 7u, 99u}) {
        auto a = random_partition(0.2, seed);
        auto b = random_partition(0.2, seed);
        REQUIRE(a.size() == b.size());
        CHECK(a.breakpoints == b.breakpoints);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.tags[i].value == b.tags[i].value);
        CHECK(a.diameter_exact() <= rational_of_double(0.2));
        a.validate();
    }
    CHECK_THROWS_AS(random_partition(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_partition(1.5, 1), std::invalid_argument);
}

TEST_CASE("schedules shrink strictly") {
    auto ud = schedule(ScheduleKind::UniformDoubling, 3);
    REQUIRE(ud.size() == 3);
    CHECK(ud[0].size() == 2);
    CHECK(ud[1].size() == 4);
    CHECK(ud[2].size() == 8);

    auto pr = schedule(ScheduleKind::Primes, 4);
    CHECK(pr[0].size() == 2);
    CHECK(pr[1].size() == 3);
    CHECK(pr[2].size() == 5);
    CHECK(pr[3].size() == 7);

    for (auto kind : {ScheduleKind::UniformDoubling, ScheduleKind::Primes, ScheduleKind::Random}) {
        auto s = schedule(kind, 6, TagRule::Mid, 5);
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            CHECK(s[i + 1].diameter_exact() < s[i].diameter_exact());
    }
}

TEST_CASE("validation rejects broken partitions") {
    TaggedPartition bad;
    bad.breakpoints = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(1)};
    bad.tags = {Tag::exact(Rational(1, 4)), Tag::exact(Rational(1, 2)), Tag::exact(Rational(1, 2))};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    TaggedPartition outside;
    outside.breakpoints = {Rational(0), Rational(1, 2), Rational(1)};
    outside.tags = {Tag::exact(Rational(3, 4)), Tag::exact(Rational(3, 4))};
    CHECK_THROWS_AS(outside.validate(), std::invalid_argument);
}

TEST_CASE("tags reconstruct floats and honor the irrational marker") {
    Tag f = Tag::from_double(0.25);
    REQUIRE(f.rational_value());
    CHECK(*f.rational_value() == Rational(1, 4));
    CHECK(f.presented()->second == 4);

    Tag generic = Tag::from_double(0.7234871230981);
    CHECK_FALSE(generic.rational_value());

    Tag irr = Tag::irrational_near(0.5);
    CHECK_FALSE(irr.rational_value());
    CHECK(irr.value == 0.5);
}
