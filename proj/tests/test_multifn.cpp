#include "setlim/multifn.hpp"

#include <doctest.h>

#include <cmath>

using namespace setlim;

namespace {
Vector v2(double x, double y) { return Vector::dense({x, y}); }
}

TEST_CASE("constant multifunctions") {
    Space sp = Space::dense(2);
    auto z = constant_set(sp, CompactSet::cloud({v2(0, 0)}));
    CHECK(z.bound() == 0.0);
    CHECK(exact_equal(z.eval(Tag::from_double(0.3)), CompactSet::cloud({v2(0, 0)})));

    auto sq = constant_set(sp, CompactSet::cloud({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)}));
    CHECK(sq.bound() == doctest::Approx(std::sqrt(2.0)));
    CHECK_FALSE(sq.convex_valued());
    auto sqp = constant_set(sp, CompactSet::polytope({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)}));
    CHECK(sqp.convex_valued());
}

TEST_CASE("singleton rules") {
    Space sp = Space::dense(2);
    auto lin = singleton_linear(sp);
    auto val = lin.eval(Tag::exact(Rational(1, 2)));
    CHECK(vec_close(val.points()[0], v2(0.5, 0), 1e-15));

    auto ind = rational_indicator(sp);
    CHECK(vec_equal(ind.eval(Tag::exact(Rational(1, 3))).points()[0], v2(1, 0)));
    CHECK(vec_equal(ind.eval(Tag::irrational_near(0.33)).points()[0], v2(0, 0)));
    CHECK(vec_equal(ind.eval(Tag::from_double(0.7230912381723)).points()[0], v2(0, 0)));
    // the special-tag generator offers a rational inside any interval
    auto specials = ind.special_tags(Rational(1, 5), Rational(2, 5));
    REQUIRE(specials.size() == 1);
    CHECK(*specials[0].rational_value() == Rational(1, 3));

    auto poly = singleton_poly(sp, {1.0, -2.0});
    CHECK(vec_close(poly.eval(Tag::from_double(0.25)).points()[0], v2(0.5, 0), 1e-15));
    CHECK(poly.bound() == doctest::Approx(3.0));
}

TEST_CASE("step multifunctions tile [0,1]") {
    Space sp = Space::dense(2);
    auto a = CompactSet::cloud({v2(0, 0)});
    auto b = CompactSet::cloud({v2(1, 0)});
    auto f = step_multifunction(sp, {Rational(0), Rational(1, 2), Rational(1)}, {a, b});
    CHECK(exact_equal(f.eval(Tag::from_double(0.2)), a));
    CHECK(exact_equal(f.eval(Tag::exact(Rational(1, 2))), b));  // boundary joins the right piece
    CHECK(exact_equal(f.eval(Tag::exact(Rational(1))), b));
    CHECK(f.bound() == 1.0);

    CHECK_THROWS_AS(step_multifunction(sp, {Rational(0), Rational(1, 2)}, {a, b}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        step_multifunction(sp, {Rational(0), Rational(1, 2), Rational(1, 3), Rational(1)},
                           {a, b, a}),
        std::invalid_argument);
}

TEST_CASE("l1 rule dispatches on the presented fraction") {
    auto f = l1_example(L1Model(2310));

    auto special = f.eval(Tag::exact(BigInt(1), BigInt(4)));  // p=2, n=1
    CHECK(exact_equal(special,
                      CompactSet::esum_interval(Rational(2), Rational(0), Rational(1, 2))));

    CHECK(exact_equal(f.eval(Tag::exact(BigInt(1), BigInt(3))), CompactSet::esum({})));

    // presentation beats the reduced value: 3/6 is the middle piece at p=3,
    // while the same value presented as 1/2 is generic
    auto mid3 = f.eval(Tag::exact(BigInt(3), BigInt(6)));
    CHECK(exact_equal(mid3,
                      CompactSet::esum_interval(Rational(3), Rational(1, 3), Rational(2, 3))));
    CHECK(exact_equal(f.eval(Tag::exact(BigInt(1), BigInt(2))), CompactSet::esum({})));

    // float tags reconstruct to lowest terms
    CHECK(exact_equal(f.eval(Tag::from_double(0.25)),
                      CompactSet::esum_interval(Rational(2), Rational(0), Rational(1, 2))));
    CHECK(exact_equal(f.eval(Tag::from_double(0.5)), CompactSet::esum({})));
    CHECK(exact_equal(f.eval(Tag::from_double(0.2500000001)), CompactSet::esum({})));

    // every special value has set norm exactly 1
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        for (std::uint64_t n = 1; n <= p; ++n) {
            auto val = f.eval(Tag::exact(BigInt(2 * n - 1), BigInt(2 * p)));
            CHECK(set_norm_exact(val.as_esum()) == 1);
        }
    }

    // misaligned prime: 13 does not divide 2310
    CHECK_THROWS_AS(f.eval(Tag::exact(BigInt(1), BigInt(26))), std::invalid_argument);

    auto specials = f.special_tags(Rational(0), Rational(1, 4));
    CHECK(specials.size() >= 2);  // 1/4 at p=2, 1/6 at p=3, 1/10, 3/10? in range...
}

TEST_CASE("biorthogonal system") {
    for (long i = 1; i <= 100; ++i) {
        auto fi = biorth::dual_functional(BigInt(i));
        for (long j = std::max(1L, i - 2); j <= i + 2; ++j) {
            double expected = i == j ? 1.0 : 0.0;
            CHECK(pair(fi, biorth::x_vector(BigInt(j))) == expected);
        }
    }
    Space sp = Space::sparse_l2();
    CHECK(norm(sp, biorth::x_vector(BigInt(42))) == 2.0);
    CHECK(dual_norm(sp, biorth::dual_functional(BigInt(42))) == 0.5);
}

TEST_CASE("base interval enumeration") {
    // some low index decodes to an interval containing 1/4
    bool found = false;
    for (long b = 0; b < 200 && !found; ++b)
        found = biorth::base_contains(BigInt(b), Rational(1, 4));
    CHECK(found);

    // pi over a two-bit index is the union of the two base intervals
    for (long b1 = 0; b1 < 40; ++b1) {
        for (long b2 = b1 + 1; b2 < 40; ++b2) {
            BigInt n = (BigInt(1) << b1) | (BigInt(1) << b2);
            for (int k = 0; k <= 8; ++k) {
                Rational t(k, 8);
                bool expect = biorth::base_contains(BigInt(b1), t) ||
                              biorth::base_contains(BigInt(b2), t);
                CHECK(biorth::pi_contains(n, t) == expect);
            }
        }
    }

    // the separating base contains the point and dodges the avoid set
    std::vector<Rational> avoid{Rational(1, 4), Rational(3, 4)};
    BigInt b = biorth::lowest_separating_base(Rational(1, 8), avoid);
    auto iv = biorth::decode_base(b);
    CHECK(iv.lo < Rational(1, 8));
    CHECK(Rational(1, 8) < iv.hi);
    for (const auto& a : avoid) CHECK_FALSE((iv.lo < a && a < iv.hi));
    // lowest index: no smaller index admits both properties
    for (BigInt smaller(0); smaller < b; ++smaller) {
        auto cand = biorth::decode_base(smaller);
        bool contains = cand.lo < Rational(1, 8) && Rational(1, 8) < cand.hi;
        bool clean = true;
        for (const auto& a : avoid)
            if (cand.lo < a && a < cand.hi) clean = false;
        CHECK_FALSE((contains && clean));
    }
}

TEST_CASE("biorthogonal multifunction evaluation and support rule") {
    auto f = biorthogonal_example();
    Tag t = Tag::exact(Rational(1, 3));
    auto val = f.eval(t);
    CHECK(val.kind() == CompactSet::Kind::Polytope);
    CHECK(val.points().size() >= 1);
    for (const auto& v : val.points()) {
        REQUIRE(v.entries().size() == 1);
        CHECK(v.entries().begin()->second == 2.0);
        // each vertex key is a single-interval union containing the tag
        CHECK(biorth::pi_contains(v.entries().begin()->first, Rational(1, 3)));
    }
    CHECK(set_norm(f.space(), val) == 2.0);
    CHECK_FALSE(f.compact_valued());
    CHECK(f.convex_valued());

    // support rule: 1 on membership, 0 otherwise
    BigInt inside = biorth::lowest_separating_base(Rational(1, 3), {});
    CHECK(f.support_at(t, biorth::dual_functional(BigInt(1) << inside.convert_to<unsigned>())) ==
          1.0);
    std::vector<Rational> avoid{Rational(1, 3)};
    BigInt outside = biorth::lowest_separating_base(Rational(2, 3), avoid);
    CHECK(f.support_at(t, biorth::dual_functional(BigInt(1) << outside.convert_to<unsigned>())) ==
          0.0);

    CHECK_THROWS_AS(f.eval(Tag::irrational_near(0.33)), std::invalid_argument);
}

TEST_CASE("conv lift") {
    Space sp = Space::dense(2);
    auto lin = singleton_linear(sp);
    auto clin = conv_lift(lin);
    Tag t = Tag::from_double(0.4);
    CHECK(hausdorff_distance(sp, convex_hull(lin.eval(t)), clin.eval(t)) == 0.0);

    auto pairf = constant_set(sp, CompactSet::cloud({v2(0, 0), v2(1, 0)}));
    auto cp = conv_lift(pairf);
    auto seg = cp.eval(t);
    CHECK(seg.kind() == CompactSet::Kind::Polytope);
    CHECK(seg.points().size() == 2);
    CHECK(cp.convex_valued());
    CHECK(set_norm(sp, seg) == set_norm(sp, pairf.eval(t)));
}

TEST_CASE("declared bounds are enforced at evaluation") {
    Space sp = Space::dense(2);
    Multifunction lying("lying", sp, 0.5,
                        [](const Tag&) { return CompactSet::cloud({v2(1, 0)}); }, true, true);
    CHECK_THROWS_AS(lying.eval(Tag::from_double(0.1)), std::logic_error);
}

TEST_CASE("evaluation is pure") {
    Space sp = Space::dense(2);
    auto f = rational_indicator(sp);
    auto g = l1_example(L1Model(12));
    for (int i = 0; i < 50; ++i) {
        Tag t1 = Tag::exact(BigInt(i), BigInt(50));
        CHECK(exact_equal(f.eval(t1), f.eval(t1)));
        Tag t2 = Tag::exact(BigInt(2 * (i % 3) + 1), BigInt(6));
        CHECK(exact_equal(g.eval(t2), g.eval(t2)));
    }
}
