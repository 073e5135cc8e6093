#include "setlim/riemann.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace setlim;

namespace {
Vector v2(double x, double y) { return Vector::dense({x, y}); }
}

TEST_CASE("sum of a constant singleton is the point itself") {
    Space sp = Space::dense(2);
    auto f = constant_set(sp, CompactSet::cloud({v2(0.3, -0.2)}));
    for (auto part : {uniform_partition(4), uniform_partition(7, TagRule::Left), prime_partition(5)}) {
        auto s = riemann_sum(f, part);
        REQUIRE(s.points().size() == 1);
        CHECK(vec_close(s.points()[0], v2(0.3, -0.2), 1e-12));
    }
}

TEST_CASE("l1 rule sums to the full characteristic-function set on prime partitions") {
    auto f = l1_example(L1Model(2310));
    auto full = CompactSet::esum_interval(Rational(1), Rational(0), Rational(1));
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        CHECK(exact_equal(riemann_sum(f, prime_partition(p)), full));
    }
    // generic tags only contribute {0}
    auto zero_sum = riemann_sum(f, uniform_partition(4, TagRule::Mid));
    CHECK(exact_equal(zero_sum, CompactSet::esum({})));
}

TEST_CASE("two-point constant values match the subset-sum oracle") {
    Space sp = Space::dense(2);
    auto f = constant_set(sp, CompactSet::cloud({v2(0, 0), v2(1, 0)}));
    for (std::size_t n = 1; n <= 8; ++n) {
        auto part = uniform_partition(n, TagRule::Mid);
        auto s = riemann_sum(f, part);
        // oracle: every subset of intervals contributes its joint length
        std::set<long> counts;
        std::vector<Vector> expected;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            long k = std::popcount(mask);
            if (counts.insert(k).second) {
                double acc = 0;
                for (long i = 0; i < k; ++i) acc += part.length(i);
                expected.push_back(v2(acc, 0));
            }
        }
        auto oracle = CompactSet::cloud(expected);
        CHECK(s.points().size() == n + 1);
        CHECK(hausdorff_distance(sp, s, oracle) <= 1e-12);
    }
}

TEST_CASE("sum_support is linear in the partition") {
    Space sp = Space::dense(2);
    auto f = constant_set(sp, CompactSet::cloud({v2(0.4, 0.1)}));
    auto part = uniform_partition(8);
    CHECK(sum_support(f, part, Functional{v2(0, 0)}) == 0.0);
    CHECK(sum_support(f, part, Functional{v2(1, 2)}) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("linear singleton converges to its integral") {
    Space sp = Space::dense(2);
    auto f = singleton_linear(sp);
    // right tags give the exact closed-form sums (n+1)/(2n) e1
    auto sched = schedule(ScheduleKind::UniformDoubling, 9, TagRule::Right);
    for (const auto& part : sched) {
        auto s = riemann_sum(f, part);
        double n = static_cast<double>(part.size());
        REQUIRE(s.points().size() == 1);
        CHECK(s.points()[0].coeffs()[0] == doctest::Approx((n + 1) / (2 * n)).epsilon(1e-14));
    }
    auto res = converge(f, sched, 5e-3, 3);
    CHECK(res.estimate.verdict == Verdict::Converged);
    CHECK(hausdorff_distance(sp, res.estimate.candidate, CompactSet::cloud({v2(0.5, 0)})) <=
          res.estimate.final_diameter);
    CHECK_FALSE(res.trace.lower_bound_metric);
    // trace diameters strictly decrease
    for (std::size_t i = 0; i + 1 < res.trace.entries.size(); ++i)
        CHECK(res.trace.entries[i + 1].diameter < res.trace.entries[i].diameter);
}

TEST_CASE("constant multifunctions converge within one window") {
    Space sp = Space::dense(2);
    auto f = constant_set(sp, CompactSet::cloud({v2(1, 1)}));
    auto res = converge(f, schedule(ScheduleKind::UniformDoubling, 8), 1e-9, 3);
    CHECK(res.estimate.verdict == Verdict::Converged);
    CHECK(res.trace.entries.size() == 3);  // stops at the first full window
}

TEST_CASE("biorthogonal sums are never Cauchy") {
    auto f = biorthogonal_example(2);
    auto res = converge(f, schedule(ScheduleKind::UniformDoubling, 3), 1e-3, 2);
    CHECK(res.estimate.verdict == Verdict::NotCauchy);
    CHECK(res.trace.lower_bound_metric);
    CHECK(res.estimate.cauchy_tail >= 0.5);
}

TEST_CASE("compare_conv vanishes for convex-valued and singleton rules") {
    Space sp = Space::dense(2);
    auto seg = constant_set(sp, CompactSet::polytope({v2(0, 0), v2(1, 0)}));
    auto r = compare_conv(seg, uniform_partition(8));
    CHECK(r.lhs_ub == 0.0);
    auto lin = singleton_linear(sp);
    CHECK(compare_conv(lin, uniform_partition(8)).lhs_ub == 0.0);
}

TEST_CASE("compare_conv matches the analytic single-pair gap") {
    Space sp = Space::dense(2);
    Vector u = v2(0.8, 0.6);  // norm 1
    auto f = constant_set(sp, CompactSet::cloud({v2(0, 0), u}));
    for (std::size_t n : {2, 4, 8, 16}) {
        auto r = compare_conv(f, uniform_partition(n), 1.0, 2.0, 1e-9);
        double expect = 1.0 / (2.0 * n);  // lattice spacing over two
        CHECK(r.lhs_lb <= expect + 1e-7);
        CHECK(r.lhs_ub >= expect - 1e-7);
        CHECK(r.lhs_ub - r.lhs_lb <= 2e-7);
        CHECK(r.lhs_ub <= r.rhs);
    }
}

TEST_CASE("compare_conv upper bound dominates sampled hull points") {
    Space sp = Space::dense(2);
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> unif(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vector> pts{v2(unif(rng), unif(rng)), v2(unif(rng), unif(rng))};
        auto a = CompactSet::cloud(pts);
        std::vector<Vector> pts2{v2(unif(rng), unif(rng)), v2(unif(rng), unif(rng)),
                                 v2(unif(rng), unif(rng))};
        auto b = CompactSet::cloud(pts2);
        auto f = step_multifunction(sp, {Rational(0), Rational(1, 2), Rational(1)}, {a, b});
        auto part = uniform_partition(6);
        auto r = compare_conv(f, part, 1.0, 2.0, 1e-8);
        auto sum = riemann_sum(f, part);
        // random convex combinations of the materialized sum live in conv(sum)
        const auto& spts = sum.points();
        for (int s = 0; s < 2000; ++s) {
            double w1 = unif(rng), w2 = unif(rng), w3 = unif(rng);
            double tot = w1 + w2 + w3;
            std::size_t i1 = rng() % spts.size(), i2 = rng() % spts.size(),
                        i3 = rng() % spts.size();
            Vector x = add(add(scaled(w1 / tot, spts[i1]), scaled(w2 / tot, spts[i2])),
                           scaled(w3 / tot, spts[i3]));
            double dmin = 1e300;
            for (const auto& p : spts) dmin = std::min(dmin, norm(sp, sub(x, p)));
            CHECK(dmin <= r.lhs_ub + 1e-7);
        }
        CHECK(r.lhs_ub <= r.rhs);
    }
}

TEST_CASE("compare_conv demands uniform partitions and dense spaces") {
    Space sp = Space::dense(2);
    auto f = constant_set(sp, CompactSet::cloud({v2(0, 0), v2(1, 0)}));
    TaggedPartition skew;
    skew.breakpoints = {Rational(0), Rational(1, 3), Rational(1)};
    skew.tags = {Tag::exact(Rational(1, 6)), Tag::exact(Rational(2, 3))};
    CHECK_THROWS_AS(compare_conv(f, skew), std::invalid_argument);
}

TEST_CASE("membership probe reaches the rational-indicator limits") {
    Space sp = Space::dense(2);
    auto f = rational_indicator(sp);
    auto sched = schedule(ScheduleKind::UniformDoubling, 6);
    for (auto [x, y] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.0}}) {
        auto rep = membership_probe(f, CompactSet::cloud({v2(x, y)}), sched, 3, 99);
        CHECK(rep.reached);
        CHECK(rep.final_dist == 0.0);
        for (std::size_t i = 0; i + 1 < rep.steps.size(); ++i)
            CHECK(rep.steps[i + 1].best_so_far <= rep.steps[i].best_so_far);
    }
    // an integrable rule reaches its own limit under any tags
    auto lin = singleton_linear(sp);
    auto lim = converge(lin, sched, 1e-6, 3).estimate.candidate;
    CHECK(membership_probe(lin, lim, sched, 2, 5).reached);
}

TEST_CASE("convex combination probe") {
    Space sp = Space::dense(2);
    auto f = rational_indicator(sp);
    auto sched = schedule(ScheduleKind::UniformDoubling, 5);
    auto zero = CompactSet::cloud({v2(0, 0)});
    auto e1 = CompactSet::cloud({v2(1, 0)});
    for (double lam : {0.0, 1.0, 0.5}) {
        auto rep = convex_combination_probe(f, e1, zero, lam, sched, 3, 7);
        CHECK(rep.reached);
        CHECK(rep.final_dist <= 1e-12);
    }
    CHECK_THROWS_AS(convex_combination_probe(f, e1, zero, 1.5, sched, 3, 7),
                    std::invalid_argument);
}

TEST_CASE("star probe from a center") {
    Space sp = Space::dense(2);
    auto f = rational_indicator(sp);
    auto sched = schedule(ScheduleKind::UniformDoubling, 5);
    auto center = CompactSet::cloud({v2(0.5, 0)});
    std::vector<CompactSet> candidates{CompactSet::cloud({v2(0, 0)}),
                                       CompactSet::cloud({v2(1, 0)})};
    auto rep = star_probe(f, candidates, center, {0.0, 0.5, 1.0}, sched, 3, 13);
    CHECK(rep.all_reached);
    CHECK(rep.probes.size() == 6);
}

TEST_CASE("emptiness certificate on disjoint uniform partitions") {
    auto f = biorthogonal_example();
    std::vector<TaggedPartition> sched{uniform_partition(4), uniform_partition(16)};
    auto cert = empty_example_verifier(f, sched, 0);
    CHECK(cert.ok);
    CHECK(cert.support_at_n == 0);
    CHECK(cert.support_at_m == 1);  // tags are disjoint
    CHECK(cert.gap == 1);
    CHECK(cert.diameter_bound == Rational(3, 4));
    CHECK(cert.separating_bits >= 1);
}

TEST_CASE("emptiness certificate tolerates shared tags") {
    auto f = biorthogonal_example();
    // mid tags of uniform(12) contain all four mid tags of uniform(4)
    std::vector<TaggedPartition> sched{uniform_partition(4), uniform_partition(12)};
    auto cert = empty_example_verifier(f, sched, 0);
    CHECK(cert.ok);
    CHECK(cert.support_at_n == 0);
    CHECK(cert.support_at_m == Rational(2, 3));
    CHECK(cert.gap == Rational(2, 3));
    CHECK(cert.diameter_bound == Rational(2, 3));  // the estimate chain is tight here
}

TEST_CASE("emptiness verifier rejects schedules that violate the diameter precondition") {
    auto f = biorthogonal_example();
    std::vector<TaggedPartition> sched{uniform_partition(4), uniform_partition(6)};
    CHECK_THROWS_AS(empty_example_verifier(f, sched, 0), std::invalid_argument);
    std::vector<TaggedPartition> sched2{uniform_partition(4), uniform_partition(16)};
    CHECK_THROWS_AS(empty_example_verifier(f, sched2, 1), std::invalid_argument);
}

TEST_CASE("support additivity ties sums to sum_support") {
    Space sp = Space::dense(2);
    auto a = CompactSet::polytope({v2(0, 0), v2(1, 0), v2(0, 1)});
    auto b = CompactSet::polytope({v2(-1, 0), v2(0, 2)});
    auto f = step_multifunction(sp, {Rational(0), Rational(2, 5), Rational(1)}, {a, b});
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(-1, 1);
    for (int t = 0; t < 50; ++t) {
        auto part = uniform_partition(2 + t % 5);
        auto s = riemann_sum(f, part);
        Functional dir{v2(unif(rng), unif(rng))};
        CHECK(support_function(s, dir) ==
              doctest::Approx(sum_support(f, part, dir)).epsilon(1e-9));
    }
}
