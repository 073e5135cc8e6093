#pragma once

#include "setlim/sets.hpp"
#include "setlim/space.hpp"

#include <vector>

namespace setlim {

/// A support function restricted to a finite direction set: the computable
/// image of a bounded convex set under the support-function embedding.
struct SupportSample {
    std::vector<Functional> directions;  // unit dual norm, within 1e-12
    std::vector<double> values;
};

SupportSample embed(const Space& space, const CompactSet& a,
                    const std::vector<Functional>& directions);

/// max_i |a_i - b_i| over shared directions. For convex inputs this bounds the
/// Hausdorff distance from below; it converges to it as the direction set
/// fills the dual sphere.
double sample_distance(const SupportSample& a, const SupportSample& b);

/// Componentwise defect of positive homogeneity: max |embed(lambda A) - lambda embed(A)|.
double scale_property_check(const Space& space, const CompactSet& a, double lambda,
                            const std::vector<Functional>& directions);

/// Equispaced unit directions on the circle (l2 plane).
std::vector<Functional> directions_grid_r2(std::size_t count);

/// Exact planar polygon Hausdorff distance through support functions: the sup
/// over the circle is attained either at an edge normal or along a vertex
/// difference, so a finite candidate set is complete.
double polygon_hausdorff_exact(const Space& space, const CompactSet& a, const CompactSet& b);

}  // namespace setlim
