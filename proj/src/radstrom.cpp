#include "setlim/radstrom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace setlim {

SupportSample embed(const Space& space, const CompactSet& a,
                    const std::vector<Functional>& directions) {
    SupportSample s;
    s.directions = directions;
    s.values.reserve(directions.size());
    for (const auto& f : directions) {
        if (std::fabs(dual_norm(space, f) - 1.0) > 1e-12)
            throw std::invalid_argument("embed: directions must have unit dual norm");
        s.values.push_back(support_function(a, f));
    }
    return s;
}

double sample_distance(const SupportSample& a, const SupportSample& b) {
    if (a.directions.size() != b.directions.size())
        throw std::invalid_argument("sample_distance: direction sets differ");
    for (std::size_t i = 0; i < a.directions.size(); ++i) {
        if (!vec_equal(a.directions[i].v, b.directions[i].v))
            throw std::invalid_argument("sample_distance: direction sets differ");
    }
    double m = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::fabs(a.values[i] - b.values[i]));
    return m;
}

double scale_property_check(const Space& space, const CompactSet& a, double lambda,
                            const std::vector<Functional>& directions) {
    if (lambda < 0) throw std::invalid_argument("scale_property_check: lambda >= 0");
    SupportSample base = embed(space, a, directions);
    SupportSample scaled_sample = embed(space, scale(lambda, a), directions);
    double defect = 0;
    for (std::size_t i = 0; i < base.values.size(); ++i)
        defect = std::max(defect, std::fabs(scaled_sample.values[i] - lambda * base.values[i]));
    return defect;
}

std::vector<Functional> directions_grid_r2(std::size_t count) {
    if (count < 1) throw std::invalid_argument("directions_grid_r2: count >= 1");
    std::vector<Functional> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
        out.push_back({Vector::dense({std::cos(a), std::sin(a)})});
    }
    return out;
}

namespace {

// Vertices in counterclockwise order around the centroid (convex position).
std::vector<std::vector<double>> ccw_vertices(const CompactSet& s) {
    std::vector<std::vector<double>> v;
    for (const auto& p : s.points()) v.push_back(p.coeffs());
    double cx = 0, cy = 0;
    for (const auto& p : v) { cx += p[0]; cy += p[1]; }
    cx /= v.size();
    cy /= v.size();
    std::sort(v.begin(), v.end(), [&](const auto& p, const auto& q) {
        return std::atan2(p[1] - cy, p[0] - cx) < std::atan2(q[1] - cy, q[0] - cx);
    });
    return v;
}

}  // namespace

double polygon_hausdorff_exact(const Space& space, const CompactSet& a, const CompactSet& b) {
    if (!space.is_dense() || space.dim != 2 || !space.p.is(2))
        throw std::invalid_argument("polygon_hausdorff_exact: l2 plane only");
    auto va = ccw_vertices(a);
    auto vb = ccw_vertices(b);

    std::vector<std::vector<double>> dirs;
    auto push_unit = [&](double x, double y) {
        double n = std::hypot(x, y);
        if (n > 1e-15) dirs.push_back({x / n, y / n});
    };
    auto edge_normals = [&](const std::vector<std::vector<double>>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& p = v[i];
            const auto& q = v[(i + 1) % v.size()];
            push_unit(q[1] - p[1], -(q[0] - p[0]));
        }
    };
    edge_normals(va);
    edge_normals(vb);
    for (const auto& p : va) {
        for (const auto& q : vb) {
            push_unit(p[0] - q[0], p[1] - q[1]);
            push_unit(q[0] - p[0], q[1] - p[1]);
        }
    }
    if (dirs.empty()) return 0.0;  // both singletons at the same point

    auto support = [](const std::vector<std::vector<double>>& v, const std::vector<double>& u) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& p : v) best = std::max(best, p[0] * u[0] + p[1] * u[1]);
        return best;
    };
    double m = 0;
    for (const auto& u : dirs) m = std::max(m, std::fabs(support(va, u) - support(vb, u)));
    return m;
}

}  // namespace setlim
