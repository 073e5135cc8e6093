#include "setlim/riemann.hpp"

#include "setlim/infratype.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace setlim {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Converged: return "converged";
        case Verdict::NotCauchy: return "not-cauchy";
        default: return "budget-exhausted";
    }
}

CompactSet riemann_sum(const Multifunction& f, const TaggedPartition& part) {
    part.validate();
    CompactSet acc = scale(part.length_exact(0), f.eval(part.tags[0]));
    for (std::size_t i = 1; i < part.size(); ++i) {
        acc = minkowski_sum(acc, scale(part.length_exact(i), f.eval(part.tags[i])));
    }
    return acc;
}

double sum_support(const Multifunction& f, const TaggedPartition& part, const Functional& fn) {
    part.validate();
    double s = 0;
    for (std::size_t i = 0; i < part.size(); ++i)
        s += part.length(i) * f.support_at(part.tags[i], fn);
    return s;
}

namespace {

std::vector<Rational> exact_tags_or_throw(const TaggedPartition& part) {
    std::vector<Rational> out;
    out.reserve(part.size());
    for (const auto& t : part.tags) {
        auto r = t.rational_value();
        if (!r) throw std::invalid_argument("partition tags must be exact rationals here");
        out.push_back(*r);
    }
    return out;
}

// Support-gap lower bound for the distance between two sums of a sparse-model
// multifunction, taken over separating functionals in both directions.
double separator_gap(const Multifunction& f, const TaggedPartition& a, const TaggedPartition& b) {
    auto gap_one = [&](const TaggedPartition& keep, const TaggedPartition& move) -> double {
        auto keep_r = exact_tags_or_throw(keep);
        std::set<Rational> keep_set(keep_r.begin(), keep_r.end());
        std::vector<Tag> hit;
        for (const auto& t : move.tags) {
            auto r = t.rational_value();
            if (r && !keep_set.count(*r)) hit.push_back(t);
        }
        if (hit.empty()) return 0.0;
        Functional fn = f.separator(keep.tags, hit);
        return std::fabs(sum_support(f, move, fn) - sum_support(f, keep, fn));
    };
    return std::max(gap_one(a, b), gap_one(b, a));
}

}  // namespace

ConvergeResult converge(const Multifunction& f, const std::vector<TaggedPartition>& sched,
                        double tolerance, std::size_t window, const CompactSet* target) {
    if (sched.empty()) throw std::invalid_argument("converge: empty schedule");
    if (window < 2) throw std::invalid_argument("converge: window must be >= 2");
    for (std::size_t i = 0; i + 1 < sched.size(); ++i) {
        if (!(sched[i + 1].diameter_exact() < sched[i].diameter_exact()))
            throw std::invalid_argument("converge: schedule diameters must decrease strictly");
    }
    const bool lb_metric = f.has_separator();

    // Sums are computed lazily along the schedule; the run stops at the first
    // window that is pairwise within tolerance.
    std::vector<CompactSet> sums;
    std::vector<std::vector<double>> memo(sched.size(),
                                          std::vector<double>(sched.size(), -1.0));
    auto dist = [&](std::size_t i, std::size_t j) {
        if (i == j) return 0.0;
        if (i > j) std::swap(i, j);
        if (memo[i][j] >= 0) return memo[i][j];
        double d = lb_metric ? separator_gap(f, sched[i], sched[j])
                             : hausdorff_distance(f.space(), sums[i], sums[j]);
        memo[i][j] = d;
        return d;
    };
    auto window_tail = [&](std::size_t end) {  // max pairwise over [end-w, end)
        double m = 0;
        for (std::size_t i = end - window; i < end; ++i)
            for (std::size_t j = i + 1; j < end; ++j) m = std::max(m, dist(i, j));
        return m;
    };

    SumTrace trace;
    trace.lower_bound_metric = lb_metric;
    bool converged = false;
    double tail = 0;
    for (std::size_t i = 0; i < sched.size(); ++i) {
        sums.push_back(riemann_sum(f, sched[i]));
        SumTraceEntry e{sched[i].id, sched[i].diameter(), sums.back(), std::nullopt, std::nullopt};
        if (i > 0) e.dist_prev = dist(i - 1, i);
        if (target && !lb_metric) e.dist_target = hausdorff_distance(f.space(), sums[i], *target);
        trace.entries.push_back(std::move(e));
        if (sums.size() >= window) {
            tail = window_tail(sums.size());
            if (tail <= tolerance) { converged = true; break; }
        }
    }

    LimitEstimate est{sums.back(), tail, sched[sums.size() - 1].diameter(),
                      Verdict::BudgetExhausted};
    if (converged) {
        est.verdict = Verdict::Converged;
    } else if (sums.size() >= window) {
        double first_tail = window_tail(window);
        if (first_tail > tolerance && tail >= 0.5 * first_tail) est.verdict = Verdict::NotCauchy;
    } else {
        double m = 0;
        for (std::size_t i = 0; i < sums.size(); ++i)
            for (std::size_t j = i + 1; j < sums.size(); ++j) m = std::max(m, dist(i, j));
        est.cauchy_tail = m;
    }
    return ConvergeResult{std::move(est), std::move(trace)};
}

// ---------------------------------------------------------------------------
// compare_conv: certified bracket of d_H(S(F), S(conv F)) on uniform
// partitions. The cloud sum is a patch of the lattice spanned by in-value
// point differences; the convexified sum is the same patch with real
// coefficients. Branch-and-bound over the coefficient box, Lipschitz constant
// 1 in the ambient metric.
// ---------------------------------------------------------------------------

namespace {

struct PatchStructure {
    std::vector<std::vector<double>> cols;  // lattice generators, ambient dim each
    std::vector<double> base;
    std::vector<long> caps;        // per-coordinate integer range [0, cap]
    std::vector<std::size_t> group_of;  // coordinate -> group
    std::vector<long> group_caps;  // per-group sum bound
};

double dotv(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Minimum distance from ambient point y to the constrained lattice patch.
// Rounds the least-squares solution and searches an expanding integer window;
// `hint` must be a feasible integer point and caps the result.
double patch_dist(const PatchStructure& ps, const std::vector<double>& y,
                  const std::vector<long>& hint) {
    const std::size_t d = ps.cols.size();
    std::vector<double> rel(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) rel[i] = y[i] - ps.base[i];
    if (d == 0) return std::sqrt(dotv(rel, rel));

    // least squares G c = W^T rel with a small ridge
    std::vector<std::vector<double>> m(d, std::vector<double>(d + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = dotv(ps.cols[i], ps.cols[j]);
        m[i][i] += 1e-12 * (m[i][i] + 1.0);
        m[i][d] = dotv(ps.cols[i], rel);
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        if (std::fabs(m[col][col]) < 1e-300) continue;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col) continue;
            double fac = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= d; ++c) m[r][c] -= fac * m[col][c];
        }
    }
    std::vector<double> c0(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        c0[i] = std::fabs(m[i][i]) < 1e-300 ? 0.0 : m[i][d] / m[i][i];

    auto dist_at = [&](const std::vector<long>& c) {
        double s = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            double diff = rel[i];
            for (std::size_t j = 0; j < d; ++j) diff -= c[j] * ps.cols[j][i];
            s += diff * diff;
        }
        return std::sqrt(s);
    };

    double best = dist_at(hint);
    for (long window = 2; window <= 6; window += 2) {
        std::vector<long> lo(d), hi(d), cur(d);
        for (std::size_t j = 0; j < d; ++j) {
            long center = std::lround(c0[j]);
            lo[j] = std::max(0L, center - window);
            hi[j] = std::min(ps.caps[j], center + window);
            cur[j] = lo[j];
        }
        bool boundary_hit = false;
        // odometer over the window box with per-group sum feasibility
        while (true) {
            bool feasible = true;
            std::vector<long> group_sum(ps.group_caps.size(), 0);
            for (std::size_t j = 0; j < d; ++j) {
                group_sum[ps.group_of[j]] += cur[j];
            }
            for (std::size_t g = 0; g < group_sum.size(); ++g)
                if (group_sum[g] > ps.group_caps[g]) feasible = false;
            if (feasible) {
                double v = dist_at(cur);
                if (v < best) {
                    best = v;
                    for (std::size_t j = 0; j < d; ++j)
                        if (cur[j] == lo[j] || cur[j] == hi[j]) boundary_hit = true;
                }
            }
            std::size_t j = 0;
            while (j < d && ++cur[j] > hi[j]) { cur[j] = lo[j]; ++j; }
            if (j == d) break;
        }
        if (!boundary_hit) break;
    }
    return best;
}

struct BBCell {
    std::vector<double> lo, hi;
    double ub;
};

}  // namespace

ConvCompareResult compare_conv(const Multifunction& f, const TaggedPartition& part, double c,
                               double p, double tol, double stop_below) {
    part.validate();
    if (!f.space().is_dense())
        throw std::invalid_argument("compare_conv: dense finite-dimensional spaces only");
    const std::size_t n = part.size();
    const Rational len = part.length_exact(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (part.length_exact(i) != len)
            throw std::invalid_argument("compare_conv: uniform partitions only");
    }

    ConvCompareResult res;
    res.diameter = part.diameter();
    res.bound_m = f.bound();
    res.rhs = shevchenko_rhs(c, p, f.bound(), res.diameter);

    std::vector<CompactSet> values;
    values.reserve(n);
    bool all_convex = true;
    for (const auto& t : part.tags) {
        values.push_back(f.eval(t));
        all_convex = all_convex && values.back().convex_by_representation();
    }
    if (all_convex) return res;  // S(F) = S(conv F)

    // Group intervals carrying identical value sets.
    std::vector<std::pair<const CompactSet*, long>> groups;
    for (const auto& v : values) {
        bool merged = false;
        for (auto& [rep, count] : groups) {
            if (exact_equal(*rep, v)) { ++count; merged = true; break; }
        }
        if (!merged) groups.emplace_back(&v, 1);
    }

    PatchStructure ps;
    const std::size_t dim = f.space().dim;
    ps.base.assign(dim, 0.0);
    const double lend = to_double(len);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& pts = groups[g].first->points();
        const long k = groups[g].second;
        const auto& a0 = pts.front().coeffs();
        for (std::size_t i = 0; i < dim; ++i) ps.base[i] += k * lend * a0[i];
        for (std::size_t l = 1; l < pts.size(); ++l) {
            std::vector<double> col(dim);
            for (std::size_t i = 0; i < dim; ++i) col[i] = lend * (pts[l].coeffs()[i] - a0[i]);
            ps.cols.push_back(std::move(col));
            ps.caps.push_back(k);
            ps.group_of.push_back(g);
        }
        ps.group_caps.push_back(k);
    }
    const std::size_t D = ps.cols.size();
    if (D == 0) return res;  // all values singletons

    std::vector<double> col_norm(D);
    for (std::size_t j = 0; j < D; ++j) col_norm[j] = std::sqrt(dotv(ps.cols[j], ps.cols[j]));

    // feasible point of a cell (scales groups down toward the cell floor)
    auto feasible_center = [&](const std::vector<double>& lo, const std::vector<double>& hi,
                               std::vector<double>& mu) -> bool {
        mu.resize(D);
        for (std::size_t j = 0; j < D; ++j) mu[j] = 0.5 * (lo[j] + hi[j]);
        for (std::size_t g = 0; g < ps.group_caps.size(); ++g) {
            double lo_sum = 0, mu_sum = 0;
            for (std::size_t j = 0; j < D; ++j) {
                if (ps.group_of[j] != g) continue;
                lo_sum += lo[j];
                mu_sum += mu[j];
            }
            double cap = static_cast<double>(ps.group_caps[g]);
            if (lo_sum > cap) return false;  // the whole cell is infeasible
            if (mu_sum > cap) {
                double s = (cap - lo_sum) / (mu_sum - lo_sum);
                for (std::size_t j = 0; j < D; ++j)
                    if (ps.group_of[j] == g) mu[j] = lo[j] + s * (mu[j] - lo[j]);
            }
        }
        return true;
    };

    auto eval_mu = [&](const std::vector<double>& mu) {
        std::vector<double> y = ps.base;
        for (std::size_t j = 0; j < D; ++j)
            for (std::size_t i = 0; i < dim; ++i) y[i] += mu[j] * ps.cols[j][i];
        // integer hint: rounded mu, trimmed to group feasibility
        std::vector<long> hint(D);
        for (std::size_t j = 0; j < D; ++j)
            hint[j] = std::min(ps.caps[j], std::max(0L, std::lround(mu[j])));
        for (std::size_t g = 0; g < ps.group_caps.size(); ++g) {
            long sum = 0;
            for (std::size_t j = 0; j < D; ++j)
                if (ps.group_of[j] == g) sum += hint[j];
            long over = sum - ps.group_caps[g];
            for (std::size_t j = 0; over > 0 && j < D; ++j) {
                if (ps.group_of[j] != g) continue;
                long cut = std::min(over, hint[j]);
                hint[j] -= cut;
                over -= cut;
            }
        }
        return patch_dist(ps, y, hint);
    };

    auto cell_radius = [&](const std::vector<double>& lo, const std::vector<double>& hi) {
        double r = 0;
        for (std::size_t j = 0; j < D; ++j) r += col_norm[j] * (hi[j] - lo[j]);
        return r;
    };

    auto cmp = [](const BBCell& a, const BBCell& b) { return a.ub < b.ub; };
    std::priority_queue<BBCell, std::vector<BBCell>, decltype(cmp)> heap(cmp);

    double best_lb = 0;
    std::vector<double> lo(D, 0.0), hi(D);
    for (std::size_t j = 0; j < D; ++j) hi[j] = static_cast<double>(ps.caps[j]);
    std::vector<double> mu;
    if (feasible_center(lo, hi, mu)) {
        best_lb = eval_mu(mu);
        heap.push(BBCell{lo, hi, best_lb + cell_radius(lo, hi)});
    }

    std::size_t nodes = 0;
    const std::size_t node_budget = 200000;
    double global_ub = heap.empty() ? 0.0 : heap.top().ub;
    while (!heap.empty() && nodes++ < node_budget) {
        BBCell cell = heap.top();
        global_ub = cell.ub;
        if (cell.ub <= best_lb + tol) break;
        if (stop_below > 0 && cell.ub <= stop_below) break;
        heap.pop();
        // split the coordinate with the largest metric width
        std::size_t split = 0;
        double w = -1;
        for (std::size_t j = 0; j < D; ++j) {
            double m = col_norm[j] * (cell.hi[j] - cell.lo[j]);
            if (m > w) { w = m; split = j; }
        }
        double mid = 0.5 * (cell.lo[split] + cell.hi[split]);
        for (int side = 0; side < 2; ++side) {
            BBCell child{cell.lo, cell.hi, 0};
            (side == 0 ? child.hi : child.lo)[split] = mid;
            if (!feasible_center(child.lo, child.hi, mu)) continue;
            double v = eval_mu(mu);
            best_lb = std::max(best_lb, v);
            child.ub = v + cell_radius(child.lo, child.hi);
            if (child.ub > best_lb + tol * 0.25) heap.push(child);
        }
        if (heap.empty()) global_ub = best_lb;
    }
    if (!heap.empty()) global_ub = heap.top().ub;
    res.lhs_lb = best_lb;
    res.lhs_ub = std::max(global_ub, best_lb);
    return res;
}

// ---------------------------------------------------------------------------
// Tag-search probes
// ---------------------------------------------------------------------------

namespace {

struct TagSearchProblem {
    const Multifunction& f;
    const CompactSet& target;
    const TaggedPartition& part;

    // candidate tags per interval, sorted ascending by value
    std::vector<std::vector<Tag>> pools;
    // evaluated values per interval per candidate
    std::vector<std::vector<CompactSet>> values;
    bool vector_mode = false;  // every value and the target are singletons
};

TagSearchProblem build_problem(const Multifunction& f, const CompactSet& target,
                               const TaggedPartition& part, std::uint64_t seed) {
    TagSearchProblem pr{f, target, part, {}, {}, false};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    pr.pools.resize(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
        const Rational& lo = part.breakpoints[i];
        const Rational& hi = part.breakpoints[i + 1];
        std::vector<Tag> pool;
        pool.push_back(part.tags[i]);
        pool.push_back(Tag::exact(lo));
        pool.push_back(Tag::exact(hi));
        pool.push_back(Tag::exact((lo + hi) / 2));
        pool.push_back(Tag::from_double(to_double(lo) + unif(rng) * to_double(hi - lo)));
        for (auto& t : f.special_tags(lo, hi)) pool.push_back(std::move(t));
        std::sort(pool.begin(), pool.end(), [](const Tag& a, const Tag& b) { return a.value < b.value; });
        pr.pools[i] = std::move(pool);
    }
    bool singletons = target.kind() == CompactSet::Kind::Cloud && target.points().size() == 1;
    pr.values.resize(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
        for (const auto& t : pr.pools[i]) {
            pr.values[i].push_back(f.eval(t));
            const auto& v = pr.values[i].back();
            singletons = singletons && v.kind() == CompactSet::Kind::Cloud && v.points().size() == 1;
        }
    }
    pr.vector_mode = singletons;
    return pr;
}

// Greedy coordinate descent over candidate tags; smallest tag value wins ties.
double tag_descent(const TagSearchProblem& pr, std::size_t budget) {
    const std::size_t n = pr.part.size();
    std::vector<std::size_t> choice(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // start from the partition's own tags (first pool entry equal by value)
        for (std::size_t cnd = 0; cnd < pr.pools[i].size(); ++cnd) {
            if (pr.pools[i][cnd].value == pr.part.tags[i].value) { choice[i] = cnd; break; }
        }
    }

    const Space& space = pr.f.space();
    auto sum_of = [&](const std::vector<std::size_t>& ch) {
        CompactSet acc = scale(pr.part.length_exact(0), pr.values[0][ch[0]]);
        for (std::size_t i = 1; i < n; ++i)
            acc = minkowski_sum(acc, scale(pr.part.length_exact(i), pr.values[i][ch[i]]));
        return acc;
    };

    if (pr.vector_mode) {
        // singleton fast path: the sum is a running vector
        std::vector<std::vector<Vector>> contrib(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& v : pr.values[i])
                contrib[i].push_back(scaled(pr.part.length(i), v.points()[0]));
        }
        Vector total = contrib[0][choice[0]];
        for (std::size_t i = 1; i < n; ++i) total = add(total, contrib[i][choice[i]]);
        const Vector& goal = pr.target.points()[0];
        double best = norm(space, sub(total, goal));
        for (std::size_t cycle = 0; cycle < budget; ++cycle) {
            bool improved = false;
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t best_c = choice[i];
                double best_d = best;
                Vector without = sub(total, contrib[i][choice[i]]);
                for (std::size_t cnd = 0; cnd < pr.pools[i].size(); ++cnd) {
                    double d = norm(space, sub(add(without, contrib[i][cnd]), goal));
                    bool better = d < best_d - 1e-15 ||
                                  (std::fabs(d - best_d) <= 1e-15 &&
                                   pr.pools[i][cnd].value < pr.pools[i][best_c].value);
                    if (better) { best_d = d; best_c = cnd; }
                }
                if (best_c != choice[i]) {
                    total = add(without, contrib[i][best_c]);
                    choice[i] = best_c;
                    best = best_d;
                    improved = true;
                }
            }
            if (!improved) break;
        }
        return best;
    }

    double best = hausdorff_distance(space, sum_of(choice), pr.target);
    for (std::size_t cycle = 0; cycle < budget; ++cycle) {
        bool improved = false;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best_c = choice[i];
            double best_d = best;
            for (std::size_t cnd = 0; cnd < pr.pools[i].size(); ++cnd) {
                if (cnd == choice[i]) continue;
                auto trial = choice;
                trial[i] = cnd;
                double d = hausdorff_distance(space, sum_of(trial), pr.target);
                bool better = d < best_d - 1e-15 ||
                              (std::fabs(d - best_d) <= 1e-15 &&
                               pr.pools[i][cnd].value < pr.pools[i][best_c].value);
                if (better) { best_d = d; best_c = cnd; }
            }
            if (best_c != choice[i]) {
                choice[i] = best_c;
                best = best_d;
                improved = true;
            }
        }
        if (!improved) break;
    }
    return best;
}

}  // namespace

ProbeReport membership_probe(const Multifunction& f, const CompactSet& target,
                             const std::vector<TaggedPartition>& sched, std::size_t budget,
                             std::uint64_t seed, double reach_factor) {
    if (sched.empty()) throw std::invalid_argument("membership_probe: empty schedule");
    if (budget < 1) throw std::invalid_argument("membership_probe: budget >= 1");
    ProbeReport rep;
    rep.reach_factor = reach_factor;
    double best_so_far = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < sched.size(); ++k) {
        auto pr = build_problem(f, target, sched[k], seed + k);
        double d = tag_descent(pr, budget);
        best_so_far = std::min(best_so_far, d);
        rep.steps.push_back(ProbeStep{sched[k].id, sched[k].diameter(), d, best_so_far});
    }
    rep.final_dist = rep.steps.back().best_dist;
    rep.reached = rep.final_dist <= reach_factor * sched.back().diameter();
    return rep;
}

ProbeReport convex_combination_probe(const Multifunction& f, const CompactSet& a,
                                     const CompactSet& b, double lambda,
                                     const std::vector<TaggedPartition>& sched, std::size_t budget,
                                     std::uint64_t seed, double reach_factor) {
    if (lambda < 0 || lambda > 1)
        throw std::invalid_argument("convex_combination_probe: lambda in [0,1]");
    CompactSet target = minkowski_sum(scale(lambda, a), scale(1.0 - lambda, b));
    return membership_probe(f, target, sched, budget, seed, reach_factor);
}

StarReport star_probe(const Multifunction& f, const std::vector<CompactSet>& candidates,
                      const CompactSet& center, const std::vector<double>& lambdas,
                      const std::vector<TaggedPartition>& sched, std::size_t budget,
                      std::uint64_t seed, double reach_factor) {
    if (candidates.empty()) throw std::invalid_argument("star_probe: no candidates");
    StarReport rep;
    rep.all_reached = true;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        for (double lam : lambdas) {
            auto pr = convex_combination_probe(f, center, candidates[ci], lam, sched, budget,
                                               seed + ci, reach_factor);
            rep.all_reached = rep.all_reached && pr.reached;
            rep.probes.push_back(StarProbeEntry{ci, lam, std::move(pr)});
        }
    }
    return rep;
}

EmptyCertificate empty_example_verifier(const Multifunction& f,
                                        const std::vector<TaggedPartition>& sched,
                                        std::size_t n_index) {
    if (!f.has_separator())
        throw std::invalid_argument("empty_example_verifier: multifunction has no separating rule");
    if (n_index >= sched.size()) throw std::invalid_argument("empty_example_verifier: bad index");
    const TaggedPartition& gn = sched[n_index];
    auto tn = exact_tags_or_throw(gn);
    std::set<Rational> tn_set(tn.begin(), tn.end());
    const Rational need(1, 2 * tn_set.size());

    std::size_t m_index = n_index;
    bool found = false;
    for (std::size_t m = n_index + 1; m < sched.size(); ++m) {
        if (sched[m].diameter_exact() < need) { m_index = m; found = true; break; }
    }
    if (!found)
        throw std::invalid_argument(
            "empty_example_verifier: schedule has no partition with d < 1/(2 |T_n|)");
    const TaggedPartition& gm = sched[m_index];

    std::vector<Tag> hit;
    for (const auto& t : gm.tags) {
        auto r = t.rational_value();
        if (!r) throw std::invalid_argument("empty_example_verifier: tags must be exact rationals");
        if (!tn_set.count(*r)) hit.push_back(t);
    }
    Functional fn = f.separator(gn.tags, hit);

    auto exact_sum = [&](const TaggedPartition& part) {
        Rational s(0);
        for (std::size_t i = 0; i < part.size(); ++i) {
            double v = f.support_at(part.tags[i], fn);
            if (v != 0.0 && v != 1.0)
                throw std::logic_error("empty_example_verifier: support values must be 0 or 1");
            if (v == 1.0) s += part.length_exact(i);
        }
        return s;
    };

    EmptyCertificate cert;
    cert.n_index = n_index;
    cert.m_index = m_index;
    cert.support_at_n = exact_sum(gn);
    cert.support_at_m = exact_sum(gm);
    cert.gap = cert.support_at_m >= cert.support_at_n ? cert.support_at_m - cert.support_at_n
                                                      : cert.support_at_n - cert.support_at_m;
    cert.diameter_bound = 1 - Rational(tn_set.size()) * gm.diameter_exact();
    BigInt key = fn.v.entries().begin()->first;
    std::size_t bits = 0;
    while (key > 0) {
        boost::multiprecision::bit_unset(key, boost::multiprecision::lsb(key));
        ++bits;
    }
    cert.separating_bits = bits;
    cert.ok = cert.support_at_n == 0 && cert.gap >= cert.diameter_bound &&
              cert.diameter_bound > Rational(1, 2);
    return cert;
}

}  // namespace setlim
