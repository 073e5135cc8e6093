#include "setlim/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace setlim {

namespace {

constexpr double kDedupTol = 1e-12;

std::vector<Vector> canonical_points(std::vector<Vector> pts, const char* what) {
    if (pts.empty()) throw std::invalid_argument(std::string(what) + ": empty point list");
    const bool sparse = pts.front().is_sparse();
    const std::size_t dim = sparse ? 0 : pts.front().dense_dim();
    for (const auto& p : pts) {
        if (p.is_sparse() != sparse || (!sparse && p.dense_dim() != dim))
            throw std::invalid_argument(std::string(what) + ": mixed vector shapes");
    }
    std::sort(pts.begin(), pts.end(), vec_less);
    std::vector<Vector> out;
    out.reserve(pts.size());
    for (auto& p : pts) {
        if (out.empty() || sup_coeff_gap(out.back(), p) > kDedupTol) out.push_back(std::move(p));
    }
    return out;
}

std::vector<ESumTerm> normalize_terms(std::vector<ESumTerm> terms) {
    for (const auto& t : terms) {
        if (t.weight <= 0) throw std::invalid_argument("ESum: weights must be positive");
        if (t.lo < 0 || t.hi > 1 || t.lo >= t.hi)
            throw std::invalid_argument("ESum: intervals must satisfy 0 <= lo < hi <= 1");
    }
    std::sort(terms.begin(), terms.end(),
              [](const ESumTerm& a, const ESumTerm& b) { return a.lo < b.lo; });
    std::vector<ESumTerm> out;
    for (auto& t : terms) {
        if (!out.empty() && t.lo < out.back().hi)
            throw std::invalid_argument("ESum: overlapping intervals");
        if (!out.empty() && t.lo == out.back().hi && t.weight == out.back().weight) {
            out.back().hi = t.hi;  // tiling union of equal weights
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Affine minimizer of ||sum a_i p_i|| with sum a_i = 1, via the bordered Gram
// system. Returns the coefficient vector.
std::vector<double> affine_minimizer(const std::vector<std::vector<double>>& pts,
                                     const std::vector<int>& corral) {
    const std::size_t k = corral.size();
    if (k == 1) return {1.0};
    const std::size_t n = k + 1;
    std::vector<std::vector<double>> M(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) M[i][j] = dot(pts[corral[i]], pts[corral[j]]);
        M[i][k] = 1.0;
        M[k][i] = 1.0;
    }
    M[k][n] = 1.0;
    // Gaussian elimination with partial pivoting; a tiny ridge keeps nearly
    // affinely dependent corrals solvable.
    double trace = 0;
    for (std::size_t i = 0; i < k; ++i) trace += M[i][i];
    for (std::size_t i = 0; i < k; ++i) M[i][i] += 1e-14 * (trace / k + 1.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
        std::swap(M[col], M[piv]);
        if (std::fabs(M[col][col]) < 1e-300) continue;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = M[r][col] / M[col][col];
            if (f == 0) continue;
            for (std::size_t c = col; c <= n; ++c) M[r][c] -= f * M[col][c];
        }
    }
    std::vector<double> a(k);
    for (std::size_t i = 0; i < k; ++i)
        a[i] = std::fabs(M[i][i]) < 1e-300 ? 0.0 : M[i][n] / M[i][i];
    return a;
}

// Wolfe's min-norm-point over conv(pts); returns the Euclidean norm of the
// nearest point to the origin.
double min_norm_point(const std::vector<std::vector<double>>& pts) {
    const std::size_t m = pts.size();
    double scale2 = 0;
    for (const auto& p : pts) scale2 = std::max(scale2, dot(p, p));
    if (m == 1) return std::sqrt(dot(pts[0], pts[0]));
    const double tol = 1e-12 * (scale2 + 1.0);

    int best = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (dot(pts[i], pts[i]) < dot(pts[best], pts[best])) best = static_cast<int>(i);
    std::vector<int> corral{best};
    std::vector<double> w{1.0};
    std::vector<double> x = pts[best];

    const std::size_t max_major = 100 + 10 * m;
    for (std::size_t major = 0; major < max_major; ++major) {
        int q = 0;
        double qv = dot(x, pts[0]);
        for (std::size_t i = 1; i < m; ++i) {
            double v = dot(x, pts[i]);
            if (v < qv) { qv = v; q = static_cast<int>(i); }
        }
        if (dot(x, x) - qv <= tol) break;
        if (std::find(corral.begin(), corral.end(), q) != corral.end()) break;
        corral.push_back(q);
        w.push_back(0.0);

        for (std::size_t minor = 0; minor < max_major; ++minor) {
            std::vector<double> a = affine_minimizer(pts, corral);
            double amin = *std::min_element(a.begin(), a.end());
            if (amin >= -1e-12) {
                w = a;
                break;
            }
            double theta = 1.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] < 0 && w[i] - a[i] > 0) theta = std::min(theta, w[i] / (w[i] - a[i]));
            }
            for (std::size_t i = 0; i < a.size(); ++i) w[i] = (1 - theta) * w[i] + theta * a[i];
            std::vector<int> nc;
            std::vector<double> nw;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] > 1e-14) { nc.push_back(corral[i]); nw.push_back(w[i]); }
            }
            if (nc.empty()) { nc.push_back(corral[0]); nw.push_back(1.0); }
            corral = std::move(nc);
            w = std::move(nw);
        }
        std::fill(x.begin(), x.end(), 0.0);
        for (std::size_t i = 0; i < corral.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j) x[j] += w[i] * pts[corral[i]][j];
    }
    return std::sqrt(std::max(0.0, dot(x, x)));
}

// Dense coordinates for a family of vectors: dense vectors pass through,
// sparse ones are laid out over their joint key support.
std::vector<std::vector<double>> densify(const Vector& x, const std::vector<Vector>& vs) {
    std::vector<std::vector<double>> out;
    if (!x.is_sparse()) {
        out.reserve(vs.size() + 1);
        out.push_back(x.coeffs());
        for (const auto& v : vs) out.push_back(v.coeffs());
        return out;
    }
    std::set<BigInt> keys;
    for (const auto& [k, val] : x.entries()) keys.insert(k);
    for (const auto& v : vs)
        for (const auto& [k, val] : v.entries()) keys.insert(k);
    std::vector<BigInt> order(keys.begin(), keys.end());
    auto lay = [&](const Vector& v) {
        std::vector<double> c(order.size(), 0.0);
        for (std::size_t i = 0; i < order.size(); ++i) {
            auto it = v.entries().find(order[i]);
            if (it != v.entries().end()) c[i] = it->second;
        }
        return c;
    };
    out.reserve(vs.size() + 1);
    out.push_back(lay(x));
    for (const auto& v : vs) out.push_back(lay(v));
    return out;
}

double cross(const std::vector<double>& o, const std::vector<double>& a, const std::vector<double>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Vector> extreme_points_2d(const std::vector<Vector>& pts) {
    std::vector<std::vector<double>> p;
    p.reserve(pts.size());
    double scale = 1.0;
    for (const auto& v : pts) {
        p.push_back(v.coeffs());
        scale = std::max({scale, std::fabs(v.coeffs()[0]), std::fabs(v.coeffs()[1])});
    }
    std::sort(p.begin(), p.end());
    const double eps = 1e-12 * scale * scale;
    auto build = [&](bool lower) {
        std::vector<std::vector<double>> h;
        auto scan = [&](const std::vector<double>& q) {
            while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), q) <= eps) h.pop_back();
            h.push_back(q);
        };
        if (lower) for (auto it = p.begin(); it != p.end(); ++it) scan(*it);
        else       for (auto it = p.rbegin(); it != p.rend(); ++it) scan(*it);
        return h;
    };
    auto lower = build(true);
    auto upper = build(false);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    std::vector<Vector> out;
    out.reserve(lower.size());
    for (auto& q : lower) out.push_back(Vector::dense(std::move(q)));
    return canonical_points(std::move(out), "extreme_points");
}

}  // namespace

CompactSet CompactSet::cloud(std::vector<Vector> points) {
    CompactSet s;
    s.repr_ = PointCloud{canonical_points(std::move(points), "PointCloud")};
    return s;
}

CompactSet CompactSet::polytope(std::vector<Vector> vertices) {
    CompactSet s;
    s.repr_ = ConvexPolytope{canonical_points(std::move(vertices), "ConvexPolytope")};
    return s;
}

CompactSet CompactSet::esum(std::vector<ESumTerm> terms) {
    CompactSet s;
    s.repr_ = ESum{normalize_terms(std::move(terms))};
    return s;
}

CompactSet CompactSet::esum_interval(const Rational& weight, const Rational& lo, const Rational& hi) {
    return esum({ESumTerm{weight, lo, hi}});
}

CompactSet::Kind CompactSet::kind() const {
    switch (repr_.index()) {
        case 0: return Kind::Cloud;
        case 1: return Kind::Polytope;
        default: return Kind::ESet;
    }
}

const PointCloud& CompactSet::as_cloud() const {
    if (kind() != Kind::Cloud) throw std::invalid_argument("not a point cloud");
    return std::get<PointCloud>(repr_);
}

const ConvexPolytope& CompactSet::as_polytope() const {
    if (kind() != Kind::Polytope) throw std::invalid_argument("not a convex polytope");
    return std::get<ConvexPolytope>(repr_);
}

const ESum& CompactSet::as_esum() const {
    if (kind() != Kind::ESet) throw std::invalid_argument("not an E-sum");
    return std::get<ESum>(repr_);
}

const std::vector<Vector>& CompactSet::points() const {
    if (kind() == Kind::Cloud) return as_cloud().points;
    if (kind() == Kind::Polytope) return as_polytope().vertices;
    throw std::invalid_argument("E-sums have no point list");
}

bool CompactSet::convex_by_representation() const {
    if (kind() == Kind::Polytope) return true;
    if (kind() == Kind::Cloud) return as_cloud().points.size() == 1;
    return as_esum().terms.empty();  // {0}
}

CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b) {
    if (a.kind() != b.kind())
        throw std::invalid_argument("minkowski_sum: mixed representations");
    if (a.kind() == CompactSet::Kind::ESet) {
        auto terms = a.as_esum().terms;
        const auto& bt = b.as_esum().terms;
        terms.insert(terms.end(), bt.begin(), bt.end());
        return CompactSet::esum(std::move(terms));
    }
    const auto& pa = a.points();
    const auto& pb = b.points();
    if (pa.size() * pb.size() > kMaxCloudPoints)
        throw std::length_error("minkowski_sum: materialized point count exceeds cap");
    std::vector<Vector> sums;
    sums.reserve(pa.size() * pb.size());
    for (const auto& x : pa)
        for (const auto& y : pb) sums.push_back(add(x, y));
    if (a.kind() == CompactSet::Kind::Cloud) return CompactSet::cloud(std::move(sums));
    // Polytope vertices: prune to extreme points (dense); sparse generator
    // lists are only deduplicated.
    if (!sums.front().is_sparse()) sums = extreme_points(std::move(sums));
    return CompactSet::polytope(std::move(sums));
}

CompactSet scale(const Rational& lambda, const CompactSet& a) {
    if (a.kind() == CompactSet::Kind::ESet) {
        if (lambda < 0) throw std::invalid_argument("scale: negative factor on an E-sum");
        if (lambda == 0) return CompactSet::esum({});
        auto terms = a.as_esum().terms;
        for (auto& t : terms) t.weight *= lambda;
        return CompactSet::esum(std::move(terms));
    }
    return scale(to_double(lambda), a);
}

CompactSet scale(double lambda, const CompactSet& a) {
    if (a.kind() == CompactSet::Kind::ESet) return scale(rational_of_double(lambda), a);
    if (a.kind() == CompactSet::Kind::Polytope && lambda < 0)
        throw std::invalid_argument("scale: negative factor on a polytope");
    std::vector<Vector> out;
    out.reserve(a.points().size());
    for (const auto& p : a.points()) out.push_back(scaled(lambda, p));
    return a.kind() == CompactSet::Kind::Cloud ? CompactSet::cloud(std::move(out))
                                               : CompactSet::polytope(std::move(out));
}

std::vector<Vector> extreme_points(std::vector<Vector> pts) {
    pts = canonical_points(std::move(pts), "extreme_points");
    if (pts.size() <= 2) return pts;
    if (pts.front().is_sparse())
        throw std::invalid_argument("extreme_points: dense vectors only");
    const std::size_t d = pts.front().dense_dim();
    if (d == 1) {
        return {pts.front(), pts.back()};  // sorted, so min and max
    }
    if (d == 2) return extreme_points_2d(pts);
    // General dimension: p is extreme iff it lies outside conv(others).
    std::vector<Vector> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Vector> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        auto dense = densify(pts[i], others);
        std::vector<std::vector<double>> rel(dense.begin() + 1, dense.end());
        for (auto& r : rel)
            for (std::size_t c = 0; c < r.size(); ++c) r[c] -= dense[0][c];
        if (min_norm_point(rel) > 1e-9) keep.push_back(pts[i]);
    }
    if (keep.empty()) keep.push_back(pts.front());
    return keep;
}

CompactSet convex_hull(const CompactSet& a) {
    if (a.kind() == CompactSet::Kind::ESet)
        throw std::invalid_argument("convex_hull: E-sum hulls are handled through support functions only");
    auto pts = a.points();
    if (!pts.front().is_sparse()) pts = extreme_points(std::move(pts));
    return CompactSet::polytope(std::move(pts));
}

double dist_to_hull(const Space& space, const Vector& x, const std::vector<Vector>& vertices) {
    if (!space.p.is(2)) throw std::invalid_argument("dist_to_hull: l2 spaces only");
    if (vertices.empty()) throw std::invalid_argument("dist_to_hull: empty vertex list");
    auto dense = densify(x, vertices);
    std::vector<std::vector<double>> rel(dense.begin() + 1, dense.end());
    for (auto& r : rel)
        for (std::size_t c = 0; c < r.size(); ++c) r[c] -= dense[0][c];
    return min_norm_point(rel);
}

namespace {

double directed_cloud(const Space& space, const std::vector<Vector>& from,
                      const std::vector<Vector>& to) {
    double worst = 0;
    for (const auto& a : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : to) best = std::min(best, norm(space, sub(a, b)));
        worst = std::max(worst, best);
    }
    return worst;
}

// Per-segment payoff of the farthest-choice/nearest-response game that the
// e-set Hausdorff distance decomposes into.
Rational eset_payoff(const std::optional<Rational>& from_w, const std::optional<Rational>& to_w) {
    if (!from_w) return Rational(0);
    if (!to_w) return *from_w;
    Rational diff = *from_w - *to_w;
    if (diff < 0) diff = -diff;
    return std::min(*from_w, diff);
}

std::optional<Rational> covering_weight(const std::vector<ESumTerm>& terms, const Rational& lo,
                                        const Rational& hi) {
    for (const auto& t : terms) {
        if (t.lo <= lo && t.hi >= hi) return t.weight;
        if (t.lo >= hi) break;
    }
    return std::nullopt;
}

}  // namespace

Rational hausdorff_esum_exact(const ESum& a, const ESum& b) {
    std::set<Rational> cuts{Rational(0), Rational(1)};
    for (const auto& t : a.terms) { cuts.insert(t.lo); cuts.insert(t.hi); }
    for (const auto& t : b.terms) { cuts.insert(t.lo); cuts.insert(t.hi); }
    std::vector<Rational> e(cuts.begin(), cuts.end());
    Rational dab(0), dba(0);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        Rational len = e[i + 1] - e[i];
        auto wa = covering_weight(a.terms, e[i], e[i + 1]);
        auto wb = covering_weight(b.terms, e[i], e[i + 1]);
        dab += len * eset_payoff(wa, wb);
        dba += len * eset_payoff(wb, wa);
    }
    return std::max(dab, dba);
}

double hausdorff_distance(const Space& space, const CompactSet& a, const CompactSet& b) {
    using K = CompactSet::Kind;
    if (a.kind() == K::ESet && b.kind() == K::ESet)
        return to_double(hausdorff_esum_exact(a.as_esum(), b.as_esum()));
    if (a.kind() == K::ESet || b.kind() == K::ESet)
        throw std::invalid_argument("hausdorff_distance: e-set vs point representation is not defined here");

    if (a.kind() == K::Cloud && b.kind() == K::Cloud) {
        return std::max(directed_cloud(space, a.points(), b.points()),
                        directed_cloud(space, b.points(), a.points()));
    }
    // A singleton against a polytope is exact in any norm: the norm is convex,
    // so the farthest point of the polytope is a vertex.
    auto singleton_vs_poly = [&](const Vector& c, const CompactSet& poly) {
        double worst = 0;
        for (const auto& v : poly.points()) worst = std::max(worst, norm(space, sub(v, c)));
        return worst;
    };
    if (a.kind() == K::Cloud && a.points().size() == 1 && b.kind() == K::Polytope)
        return singleton_vs_poly(a.points()[0], b);
    if (b.kind() == K::Cloud && b.points().size() == 1 && a.kind() == K::Polytope)
        return singleton_vs_poly(b.points()[0], a);
    if (a.kind() != K::Polytope || b.kind() != K::Polytope)
        throw std::invalid_argument("hausdorff_distance: cloud vs polytope is only defined for singletons");

    if (!space.p.is(2))
        throw std::invalid_argument("hausdorff_distance: non-l2 polytope distance needs hausdorff_polytope_sampled");
    double worst = 0;
    for (const auto& v : a.points()) worst = std::max(worst, dist_to_hull(space, v, b.points()));
    for (const auto& v : b.points()) worst = std::max(worst, dist_to_hull(space, v, a.points()));
    return worst;
}

SampledDistance hausdorff_polytope_sampled(const Space& space, const CompactSet& a,
                                           const CompactSet& b, std::size_t samples_per_edge) {
    if (!space.is_dense() || space.dim != 2)
        throw std::invalid_argument("hausdorff_polytope_sampled: planar polytopes only");
    if (samples_per_edge < 2) throw std::invalid_argument("need at least 2 samples per edge");
    auto boundary = [&](const CompactSet& s) {
        auto verts = s.points();
        // walk vertices in angular order around the centroid (convex position)
        double cx = 0, cy = 0;
        for (const auto& v : verts) { cx += v.coeffs()[0]; cy += v.coeffs()[1]; }
        cx /= verts.size(); cy /= verts.size();
        std::sort(verts.begin(), verts.end(), [&](const Vector& p, const Vector& q) {
            return std::atan2(p.coeffs()[1] - cy, p.coeffs()[0] - cx) <
                   std::atan2(q.coeffs()[1] - cy, q.coeffs()[0] - cx);
        });
        std::vector<Vector> pts;
        double step = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const auto& p = verts[i];
            const auto& q = verts[(i + 1) % verts.size()];
            for (std::size_t k = 0; k < samples_per_edge; ++k) {
                double t = static_cast<double>(k) / samples_per_edge;
                pts.push_back(add(scaled(1 - t, p), scaled(t, q)));
            }
            step = std::max(step, norm(space, sub(q, p)) / samples_per_edge);
        }
        return std::pair{pts, step};
    };
    auto [pa, sa] = boundary(a);
    auto [pb, sb] = boundary(b);
    double v = std::max(directed_cloud(space, pa, pb), directed_cloud(space, pb, pa));
    return SampledDistance{v, sa + sb};
}

double support_function(const CompactSet& a, const Functional& f) {
    if (a.kind() != CompactSet::Kind::ESet) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& p : a.points()) best = std::max(best, pair(f, p));
        return best;
    }
    // Bin functional against an e-sum: the best subset takes exactly the bins
    // with positive pairing.
    if (f.v.is_sparse()) throw std::invalid_argument("support_function: e-sum needs a bin functional");
    const auto& e = a.as_esum();
    const int m = static_cast<int>(f.v.dense_dim());
    if (m < 1) throw std::invalid_argument("support_function: empty bin functional");
    if (!esum_aligned(e, L1Model(m)))
        throw std::invalid_argument("support_function: e-sum is not aligned with the functional's bin grid");
    double total = 0;
    for (const auto& t : e.terms) {
        const long j0 = (t.lo * m).convert_to<long>();
        const long j1 = (t.hi * m).convert_to<long>();
        double s = 0;
        for (long j = j0; j < j1; ++j) s += std::max(f.v.coeffs()[j], 0.0);
        total += to_double(t.weight) * s / m;
    }
    return total;
}

Rational set_norm_exact(const ESum& a) {
    Rational s(0);
    for (const auto& t : a.terms) s += t.weight * (t.hi - t.lo);
    return s;
}

double set_norm(const Space& space, const CompactSet& a) {
    if (a.kind() == CompactSet::Kind::ESet) return to_double(set_norm_exact(a.as_esum()));
    double worst = 0;
    for (const auto& p : a.points()) worst = std::max(worst, norm(space, p));
    return worst;
}

bool esum_aligned(const ESum& e, const L1Model& model) {
    for (const auto& t : e.terms) {
        Rational lo = t.lo * model.bins;
        Rational hi = t.hi * model.bins;
        if (denominator(lo) != 1 || denominator(hi) != 1) return false;
    }
    return true;
}

Rational dist_point_to_eset(const std::vector<Rational>& bin_values, const ESum& e,
                            const L1Model& model) {
    if (e.terms.size() > 1)
        throw std::invalid_argument("dist_point_to_eset: single-term e-sets only");
    if (static_cast<int>(bin_values.size()) != model.bins)
        throw std::invalid_argument("dist_point_to_eset: bin count mismatch");
    if (!esum_aligned(e, model))
        throw std::invalid_argument("dist_point_to_eset: e-set not aligned with the bin grid");
    const Rational binw(1, model.bins);
    Rational total(0);
    for (int j = 0; j < model.bins; ++j) {
        const Rational lo(j, model.bins), hi(j + 1, model.bins);
        Rational v = bin_values[j];
        if (v < 0) v = -v;
        Rational best;
        if (!e.terms.empty() && e.terms[0].lo <= lo && e.terms[0].hi >= hi) {
            Rational dw = bin_values[j] - e.terms[0].weight;
            if (dw < 0) dw = -dw;
            best = std::min(dw, v);
        } else {
            best = v;
        }
        total += binw * best;
    }
    return total;
}

ConvexityReport is_convex_within(const Space& space, const CompactSet& a, double eps) {
    if (eps <= 0) throw std::invalid_argument("is_convex_within: eps must be positive");
    ConvexityReport rep;
    if (a.kind() == CompactSet::Kind::Polytope) return rep;  // convex by representation
    if (a.kind() == CompactSet::Kind::ESet) {
        const auto& e = a.as_esum();
        if (e.terms.empty()) return rep;  // {0}
        if (e.terms.size() > 1)
            throw std::invalid_argument("is_convex_within: single-term e-sets only");
        // Analytic witness: the midpoint of 0 and the full characteristic
        // function sits at distance (w/2) * |interval| from the e-set.
        const auto& t = e.terms[0];
        Rational d = t.weight / 2 * (t.hi - t.lo);
        rep.exact_distance = d;
        rep.worst_distance = to_double(d);
        rep.convex = d <= rational_of_double(eps);
        return rep;
    }
    const auto& pts = a.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Vector mid = scaled(0.5, add(pts[i], pts[j]));
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : pts) best = std::min(best, norm(space, sub(mid, p)));
            if (best > rep.worst_distance) {
                rep.worst_distance = best;
                rep.witness = mid;
            }
        }
    }
    rep.convex = rep.worst_distance <= eps;
    if (rep.convex) rep.witness.reset();
    return rep;
}

bool exact_equal(const CompactSet& a, const CompactSet& b) {
    if (a.kind() != b.kind()) return false;
    if (a.kind() == CompactSet::Kind::ESet) {
        const auto& ta = a.as_esum().terms;
        const auto& tb = b.as_esum().terms;
        if (ta.size() != tb.size()) return false;
        for (std::size_t i = 0; i < ta.size(); ++i) {
            if (ta[i].weight != tb[i].weight || ta[i].lo != tb[i].lo || ta[i].hi != tb[i].hi)
                return false;
        }
        return true;
    }
    const auto& pa = a.points();
    const auto& pb = b.points();
    if (pa.size() != pb.size()) return false;
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (!vec_equal(pa[i], pb[i])) return false;
    return true;
}

}  // namespace setlim
