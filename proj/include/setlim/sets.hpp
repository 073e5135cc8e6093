#pragma once

#include "setlim/rational.hpp"
#include "setlim/space.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace setlim {

/// Uniform discretization of [0,1] into m bins of weight 1/m each; the
/// computational stand-in for L1[0,1].
struct L1Model {
    int bins = 1;
    explicit L1Model(int m) : bins(m) {
        if (m < 1) throw std::invalid_argument("L1Model: bins must be >= 1");
    }
};

struct PointCloud {
    std::vector<Vector> points;  // canonical: sorted, deduplicated
};

struct ConvexPolytope {
    std::vector<Vector> vertices;  // interpreted as the convex hull; sorted, deduplicated
};

/// One formal term w * E[lo, hi]: all functions w * chi_S with S a measurable
/// subset of [lo, hi]. Weights and endpoints stay rational so the set algebra
/// is exact.
struct ESumTerm {
    Rational weight;  // > 0
    Rational lo, hi;  // 0 <= lo < hi <= 1
};

/// Formal sum of E-terms over interior-disjoint intervals. An empty term list
/// is the singleton {0}.
struct ESum {
    std::vector<ESumTerm> terms;  // normalized: sorted by lo, adjacent equal-weight terms merged
};

class CompactSet {
public:
    enum class Kind { Cloud, Polytope, ESet };

    static CompactSet cloud(std::vector<Vector> points);
    static CompactSet singleton(Vector v) { return cloud({std::move(v)}); }
    static CompactSet polytope(std::vector<Vector> vertices);
    static CompactSet esum(std::vector<ESumTerm> terms);
    static CompactSet esum_interval(const Rational& weight, const Rational& lo, const Rational& hi);

    Kind kind() const;
    bool is_esum() const { return kind() == Kind::ESet; }
    const PointCloud& as_cloud() const;
    const ConvexPolytope& as_polytope() const;
    const ESum& as_esum() const;

    /// Point list of a cloud or the vertex list of a polytope.
    const std::vector<Vector>& points() const;

    bool convex_by_representation() const;

private:
    CompactSet() = default;
    std::variant<PointCloud, ConvexPolytope, ESum> repr_;
};

// --- set calculus ---------------------------------------------------------

inline constexpr std::size_t kMaxCloudPoints = 1'000'000;

CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b);
CompactSet scale(double lambda, const CompactSet& a);
CompactSet scale(const Rational& lambda, const CompactSet& a);
CompactSet convex_hull(const CompactSet& a);

double hausdorff_distance(const Space& space, const CompactSet& a, const CompactSet& b);
Rational hausdorff_esum_exact(const ESum& a, const ESum& b);

/// Polytope Hausdorff distance for non-l2 norms in the plane: both boundaries
/// are sampled at the given arc step and compared pointwise. Returns the
/// sampled value and a resolution bound (the true distance differs by at most
/// that much).
struct SampledDistance {
    double value = 0;
    double resolution = 0;
};
SampledDistance hausdorff_polytope_sampled(const Space& space, const CompactSet& a,
                                           const CompactSet& b, std::size_t samples_per_edge = 64);

double support_function(const CompactSet& a, const Functional& f);
double set_norm(const Space& space, const CompactSet& a);
Rational set_norm_exact(const ESum& a);

Rational dist_point_to_eset(const std::vector<Rational>& bin_values, const ESum& e, const L1Model& model);

struct ConvexityReport {
    bool convex = true;
    double worst_distance = 0;
    std::optional<Vector> witness;          // violating midpoint, when applicable
    std::optional<Rational> exact_distance; // e-set path is exact
};
ConvexityReport is_convex_within(const Space& space, const CompactSet& a, double eps);

bool exact_equal(const CompactSet& a, const CompactSet& b);

/// Euclidean distance from a point to the convex hull of the given vertices
/// (Wolfe's min-norm-point method). Requires an l2 space; sparse vectors are
/// handled through their joint finite support.
double dist_to_hull(const Space& space, const Vector& x, const std::vector<Vector>& vertices);

/// Extreme points of a dense point set (exact for d<=2, projection-based for
/// higher dimension).
std::vector<Vector> extreme_points(std::vector<Vector> pts);

bool esum_aligned(const ESum& e, const L1Model& model);

}  // namespace setlim
