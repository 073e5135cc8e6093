#include "setlim/selftest.hpp"

#include "setlim/infratype.hpp"
#include "setlim/multifn.hpp"
#include "setlim/partition.hpp"
#include "setlim/radstrom.hpp"
#include "setlim/riemann.hpp"
#include "setlim/sets.hpp"
#include "setlim/space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace setlim {

namespace {

struct Ctx {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> unif{-1.0, 1.0};

    Vector vec(std::size_t d) {
        std::vector<double> c(d);
        for (auto& x : c) x = unif(rng);
        return Vector::dense(std::move(c));
    }
    std::vector<Vector> pts(std::size_t d, std::size_t count) {
        std::vector<Vector> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(vec(d));
        return out;
    }
    std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }
};

using Check = bool (*)(Ctx&, std::string&);

bool check_norm_triangle(Ctx& c, std::string& detail) {
    for (int t = 0; t < 1000; ++t) {
        std::size_t d = c.index(1, 4);
        Space sp = t % 3 == 0 ? Space::dense(d, PExponent::of(1))
                  : t % 3 == 1 ? Space::dense(d, PExponent::of(2))
                               : Space::dense(d, PExponent::of(Rational(3, 2)));
        Vector a = c.vec(d), b = c.vec(d);
        if (norm(sp, add(a, b)) > norm(sp, a) + norm(sp, b) + 1e-12) {
            detail = "triangle inequality violated at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool check_holder(Ctx& c, std::string& detail) {
    for (int t = 0; t < 1000; ++t) {
        std::size_t d = c.index(1, 4);
        Space sp = t % 2 ? Space::dense(d, PExponent::of(Rational(5, 4)))
                         : Space::dense(d, PExponent::of(3));
        Functional f{c.vec(d)};
        Vector v = c.vec(d);
        if (std::fabs(pair(f, v)) > dual_norm(sp, f) * norm(sp, v) + 1e-12) {
            detail = "Hoelder inequality violated at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool check_sparse_dense_agree(Ctx& c, std::string& detail) {
    Space dense = Space::dense(6, PExponent::of(2));
    Space sparse = Space::sparse_l2();
    for (int t = 0; t < 1000; ++t) {
        Vector a = c.vec(6), b = c.vec(6);
        SparseEntries ea, eb;
        for (std::size_t i = 0; i < 6; ++i) {
            if (a.coeffs()[i] != 0) ea[BigInt(i)] = a.coeffs()[i];
            if (b.coeffs()[i] != 0) eb[BigInt(i)] = b.coeffs()[i];
        }
        Vector sa = Vector::sparse(std::move(ea)), sb = Vector::sparse(std::move(eb));
        if (std::fabs(norm(dense, a) - norm(sparse, sa)) > 1e-12 ||
            std::fabs(pair(Functional{a}, b) - pair(Functional{sa}, sb)) > 1e-12 ||
            std::fabs(norm(dense, add(a, b)) - norm(sparse, add(sa, sb))) > 1e-12) {
            detail = "sparse embedding disagreement at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool check_hull_minkowski_commute(Ctx& c, std::string& detail) {
    for (int t = 0; t < 1000; ++t) {
        std::size_t d = t % 2 ? 2 : 3;
        Space sp = Space::dense(d);
        auto a = CompactSet::cloud(c.pts(d, c.index(2, 8)));
        auto b = CompactSet::cloud(c.pts(d, c.index(2, 8)));
        auto hull_of_sum = convex_hull(minkowski_sum(a, b));
        auto sum_of_hulls = minkowski_sum(convex_hull(a), convex_hull(b));
        if (hausdorff_distance(sp, hull_of_sum, sum_of_hulls) > 1e-9) {
            detail = "hull/sum commutation failed at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool check_conv_contraction(Ctx& c, std::string& detail) {
    for (int t = 0; t < 1000; ++t) {
        std::size_t d = t % 2 ? 2 : 3;
        Space sp = Space::dense(d);
        auto a = CompactSet::cloud(c.pts(d, c.index(2, 8)));
        auto b = CompactSet::cloud(c.pts(d, c.index(2, 8)));
        double dc = hausdorff_distance(sp, convex_hull(a), convex_hull(b));
        double dh = hausdorff_distance(sp, a, b);
        if (dc > dh + 1e-9) {
            detail = "d_H(conv A, conv B) exceeded d_H(A, B) at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool check_metric_axioms(Ctx& c, std::string& detail) {
    for (int t = 0; t < 1000; ++t) {
        std::size_t d = c.index(1, 3);
        Space sp = Space::dense(d);
        auto a = CompactSet::cloud(c.pts(d, c.index(1, 6)));
        auto b = CompactSet::cloud(c.pts(d, c.index(1, 6)));
        auto e = CompactSet::cloud(c.pts(d, c.index(1, 6)));
        double ab = hausdorff_distance(sp, a, b);
        double ba = hausdorff_distance(sp, b, a);
        double ae = hausdorff_distance(sp, a, e);
        double eb = hausdorff_distance(sp, e, b);
        if (ab != ba) { detail = "symmetry broke"; return false; }
        if (hausdorff_distance(sp, a, a) != 0.0) { detail = "identity broke"; return false; }
        if (ab > ae + eb + 1e-9) { detail = "triangle broke at trial " + std::to_string(t); return false; }
    }
    return true;
}

bool check_support_lower_bound(Ctx& c, std::string& detail) {
    Space sp = Space::dense(2);
    auto grid = directions_grid_r2(10000);
    for (int t = 0; t < 100; ++t) {
        auto a = convex_hull(CompactSet::cloud(c.pts(2, c.index(3, 8))));
        auto b = convex_hull(CompactSet::cloud(c.pts(2, c.index(3, 8))));
        double exact = hausdorff_distance(sp, a, b);
        double sampled = sample_distance(embed(sp, a, grid), embed(sp, b, grid));
        if (sampled > exact + 1e-9) {
            detail = "sampled distance exceeded exact at trial " + std::to_string(t);
            return false;
        }
        if (exact - sampled > 1e-3) {
            detail = "sampled distance short of exact by " + std::to_string(exact - sampled);
            return false;
        }
    }
    return true;
}

bool check_esum_support_brute(Ctx& c, std::string& detail) {
    std::uniform_int_distribution<int> mbins(2, 12);
    for (int t = 0; t < 200; ++t) {
        int m = mbins(c.rng);
        int lo = static_cast<int>(c.index(0, m - 1));
        int hi = static_cast<int>(c.index(lo + 1, m));
        Rational w(c.index(1, 5), c.index(1, 3));
        auto e = CompactSet::esum_interval(w, Rational(lo, m), Rational(hi, m));
        std::vector<double> fc(m);
        for (auto& x : fc) x = c.unif(c.rng);
        Functional f{Vector::dense(fc)};
        double closed = support_function(e, f);
        // brute force over all subsets of the interval's bins
        double best = 0;
        int bins_in = hi - lo;
        for (std::uint32_t mask = 0; mask < (1u << bins_in); ++mask) {
            double v = 0;
            for (int j = 0; j < bins_in; ++j)
                if (mask & (1u << j)) v += to_double(w) * fc[lo + j] / m;
            best = std::max(best, v);
        }
        if (std::fabs(closed - best) > 1e-12) {
            detail = "e-sum support mismatch at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool check_partition_generators(Ctx& c, std::string& detail) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        auto part = prime_partition(p);
        Rational total(0);
        for (std::size_t i = 0; i < part.size(); ++i) total += part.length_exact(i);
        if (total != 1) { detail = "prime partition does not tile exactly"; return false; }
        if (part.diameter_exact() != Rational(1, p)) { detail = "prime diameter wrong"; return false; }
    }
    for (int t = 0; t < 50; ++t) {
        double cap = 0.05 + 0.4 * std::fabs(c.unif(c.rng));
        auto part = random_partition(cap, c.rng());
        part.validate();
        if (part.diameter() > cap + 1e-15) { detail = "random partition over diameter cap"; return false; }
    }
    for (auto kind : {ScheduleKind::UniformDoubling, ScheduleKind::Primes, ScheduleKind::Random}) {
        auto sched = schedule(kind, 5, TagRule::Mid, 11);
        for (std::size_t i = 0; i + 1 < sched.size(); ++i) {
            if (!(sched[i + 1].diameter_exact() < sched[i].diameter_exact())) {
                detail = "schedule diameters not strictly decreasing";
                return false;
            }
        }
    }
    return true;
}

bool check_multifn_purity(Ctx& c, std::string& detail) {
    Space sp = Space::dense(2);
    auto f = rational_indicator(sp);
    auto g = singleton_linear(sp);
    for (int t = 0; t < 200; ++t) {
        Tag tag = t % 2 ? Tag::from_double(std::fabs(c.unif(c.rng)))
                        : Tag::exact(BigInt(c.index(0, 60)), BigInt(61));
        if (!exact_equal(f.eval(tag), f.eval(tag)) || !exact_equal(g.eval(tag), g.eval(tag))) {
            detail = "re-evaluation differed";
            return false;
        }
        if (set_norm(sp, f.eval(tag)) > f.bound() + 1e-12) {
            detail = "bound violated";
            return false;
        }
    }
    return true;
}

bool check_l1_prime_sums(Ctx&, std::string& detail) {
    auto f = l1_example(L1Model(2310));
    auto full = CompactSet::esum_interval(Rational(1), Rational(0), Rational(1));
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        auto s = riemann_sum(f, prime_partition(p));
        if (!exact_equal(s, full)) {
            detail = "prime sum differs from E[0,1] at p=" + std::to_string(p);
            return false;
        }
    }
    return true;
}

bool check_sum_support_additivity(Ctx& c, std::string& detail) {
    Space sp = Space::dense(2);
    for (int t = 0; t < 100; ++t) {
        auto a = convex_hull(CompactSet::cloud(c.pts(2, 4)));
        auto b = convex_hull(CompactSet::cloud(c.pts(2, 4)));
        auto f = step_multifunction(sp, {Rational(0), Rational(1, 2), Rational(1)}, {a, b});
        auto part = uniform_partition(c.index(2, 6), TagRule::Mid);
        auto sum = riemann_sum(f, part);
        Functional dir{c.vec(2)};
        if (std::fabs(support_function(sum, dir) - sum_support(f, part, dir)) > 1e-9) {
            detail = "sum support not additive at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool check_converged_limits(Ctx&, std::string& detail) {
    Space sp = Space::dense(2);
    auto f = singleton_linear(sp);
    auto res = converge(f, schedule(ScheduleKind::UniformDoubling, 8), 1e-3, 3);
    if (res.estimate.verdict != Verdict::Converged) { detail = "linear baseline did not converge"; return false; }
    auto rep = is_convex_within(sp, res.estimate.candidate, 1e-6);
    if (!rep.convex) { detail = "converged candidate not convex"; return false; }
    if (set_norm(sp, res.estimate.candidate) > f.bound() + 1e-9) {
        detail = "candidate escapes the bound ball";
        return false;
    }
    return true;
}

bool check_compare_conv(Ctx& c, std::string& detail) {
    for (int t = 0; t < 20; ++t) {
        std::size_t d = t % 2 ? 2 : 3;
        Space sp = Space::dense(d);
        auto a = CompactSet::cloud(c.pts(d, 2));
        auto b = CompactSet::cloud(c.pts(d, 2));
        auto f = step_multifunction(sp, {Rational(0), Rational(1, 2), Rational(1)}, {a, b});
        for (std::size_t n : {4, 16, 64}) {
            auto r = compare_conv(f, uniform_partition(n, TagRule::Mid));
            if (r.lhs_ub > r.rhs) {
                detail = "infratype bound violated at trial " + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

bool check_embedding_properties(Ctx& c, std::string& detail) {
    Space sp = Space::dense(2);
    auto dirs = sample_directions(sp, 64, 99);
    for (int t = 0; t < 1000; ++t) {
        auto a = convex_hull(CompactSet::cloud(c.pts(2, c.index(3, 6))));
        auto b = convex_hull(CompactSet::cloud(c.pts(2, c.index(3, 6))));
        auto ea = embed(sp, a, dirs);
        auto eb = embed(sp, b, dirs);
        auto esum_ab = embed(sp, minkowski_sum(a, b), dirs);
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            if (std::fabs(esum_ab.values[i] - ea.values[i] - eb.values[i]) > 1e-9) {
                detail = "additivity defect at trial " + std::to_string(t);
                return false;
            }
        }
        if (scale_property_check(sp, a, std::fabs(c.unif(c.rng)) * 2, dirs) > 1e-9) {
            detail = "homogeneity defect at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool check_sample_monotone(Ctx& c, std::string& detail) {
    Space sp = Space::dense(2);
    for (int t = 0; t < 50; ++t) {
        auto a = convex_hull(CompactSet::cloud(c.pts(2, 5)));
        auto b = convex_hull(CompactSet::cloud(c.pts(2, 5)));
        // nested direction families: the value at a superset never decreases
        auto d1 = directions_grid_r2(64);
        auto d2 = d1;
        auto extra = sample_directions(sp, 16, t);
        d2.insert(d2.end(), extra.begin(), extra.end());
        double v1 = sample_distance(embed(sp, a, d1), embed(sp, b, d1));
        double v2 = sample_distance(embed(sp, a, d2), embed(sp, b, d2));
        if (v2 + 1e-15 < v1) {
            detail = "sample distance decreased when directions were added";
            return false;
        }
    }
    return true;
}

bool check_infratype(Ctx& c, std::string& detail) {
    Space l2 = Space::dense(3);
    for (int t = 0; t < 200; ++t) {
        auto xs = c.pts(3, c.index(1, 10));
        double msn = min_sign_norm(l2, xs);
        double sum_all = 0, rms = 0;
        Vector acc = Vector::zeros(3);
        for (const auto& x : xs) { acc = add(acc, x); rms += std::pow(norm(l2, x), 2); }
        sum_all = norm(l2, acc);
        if (msn > sum_all + 1e-12) { detail = "min over signs exceeded the all-plus sum"; return false; }
        if (msn > std::sqrt(rms) + 1e-9) { detail = "Hilbert p=2 inequality violated"; return false; }
    }
    double base = shevchenko_rhs(1, 2, 1, 0.5);
    if (!(shevchenko_rhs(2, 2, 1, 0.5) > base && shevchenko_rhs(1, 2, 2, 0.5) > base &&
          shevchenko_rhs(1, 2, 1, 0.9) > base)) {
        detail = "shevchenko_rhs not monotone";
        return false;
    }
    return true;
}

}  // namespace

std::vector<CheckResult> run_property_suite(std::uint64_t seed) {
    std::pair<const char*, Check> checks[] = {
        {"space.norm_triangle", check_norm_triangle},
        {"space.hoelder", check_holder},
        {"space.sparse_dense_agreement", check_sparse_dense_agree},
        {"sets.hull_minkowski_commute", check_hull_minkowski_commute},
        {"sets.conv_contraction", check_conv_contraction},
        {"sets.metric_axioms", check_metric_axioms},
        {"sets.support_lower_bound", check_support_lower_bound},
        {"sets.esum_support_brute_force", check_esum_support_brute},
        {"partition.generators", check_partition_generators},
        {"multifn.purity_and_bound", check_multifn_purity},
        {"multifn.l1_prime_sums", check_l1_prime_sums},
        {"riemann.sum_support_additivity", check_sum_support_additivity},
        {"riemann.converged_limits", check_converged_limits},
        {"riemann.compare_conv_bound", check_compare_conv},
        {"radstrom.embedding_properties", check_embedding_properties},
        {"radstrom.sample_monotone", check_sample_monotone},
        {"infratype.inequalities", check_infratype},
    };
    std::vector<CheckResult> out;
    for (auto& [name, fn] : checks) {
        Ctx ctx{std::mt19937_64(seed), {}};
        CheckResult r{name, false, ""};
        try {
            r.pass = fn(ctx, r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace setlim
