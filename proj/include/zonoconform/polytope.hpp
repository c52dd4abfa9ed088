#ifndef ZONOCONFORM_POLYTOPE_HPP_
#define ZONOCONFORM_POLYTOPE_HPP_

#include <vector>

#include "zonoconform/sets.hpp"
#include "zonoconform/types.hpp"

namespace zonoconform {

/// Polytope in vertex representation.
struct VPolytope {
  std::vector<Vector> vertices;

  Index dim() const { return vertices.empty() ? 0 : vertices.front().size(); }
};

/// Polytope as an intersection of half-spaces.
struct HPolytope {
  std::vector<HalfSpace> halfspaces;
};

/// Minimal vertex set of the convex hull of the rows. Supported for
/// 2 <= d <= 6; lower-dimensional input raises DegeneracyError, larger d
/// raises UnsupportedDimensionError (use the rotated-box fit instead).
VPolytope convex_hull(const SampleMatrix& points, double tol = 1e-9);

/// Facet half-spaces of a full-dimensional polytope. Facets are simplicial;
/// coincident planes are merged.
HPolytope vrep_to_hrep(const VPolytope& poly, double tol = 1e-9);

/// Deduplicated unsigned facet directions of vrep_to_hrep(poly).
std::vector<Vector> facet_directions(const VPolytope& poly, double tol = 1e-9);

/// Tightest zonotope with generators parallel to the given directions that
/// contains the polytope, by minimising the sum of generator scalings:
///   min sum_k alpha_k  s.t.  v_j = c + sum_k b_kj d_k, |b_kj| <= alpha_k.
/// Zero-scale generators are dropped from the result.
Zonotope overapprox_zonotope(const VPolytope& poly,
                             const std::vector<Vector>& directions,
                             double tol = 1e-9);

bool hpoly_contains(const HPolytope& poly, const Vector& x, double tol = 1e-9);

/// Membership in the convex hull of the vertices, decided by LP feasibility.
bool vpoly_contains(const VPolytope& poly, const Vector& x, double tol = 1e-9);

/// True when the intersection of the half-spaces is bounded (checked by LP
/// in each +-axis direction).
bool hpoly_bounded(const HPolytope& poly);

}  // namespace zonoconform

#endif  // ZONOCONFORM_POLYTOPE_HPP_
