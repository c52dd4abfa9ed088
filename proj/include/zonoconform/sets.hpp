#ifndef ZONOCONFORM_SETS_HPP_
#define ZONOCONFORM_SETS_HPP_

#include <random>
#include <vector>

#include "zonoconform/types.hpp"

namespace zonoconform {

/// Centrally symmetric convex set { c + G xi | xi in [-1,1]^p }.
/// p = 0 denotes the singleton {c}. All set types are immutable values.
struct Zonotope {
  Vector center;
  Matrix generators;  // n x p, one generator per column

  Zonotope() = default;
  Zonotope(Vector c, Matrix g);

  Index dim() const { return center.size(); }
  Index num_generators() const { return generators.cols(); }
};

struct Hyperrectangle {
  Vector center;
  Vector radius;  // entrywise >= 0

  Hyperrectangle() = default;
  Hyperrectangle(Vector c, Vector r);

  Index dim() const { return center.size(); }
};

/// Half-space { x | normal'x <= offset }.
struct HalfSpace {
  Vector normal;
  double offset = 0.0;

  HalfSpace() = default;
  HalfSpace(Vector a, double b);
};

/// A base zonotope together with a core point it contracts towards.
/// Exposes the one-parameter family Z^alpha via nested_at().
struct NestedZonotopeFamily {
  Zonotope base;
  Vector core;

  NestedZonotopeFamily() = default;
  NestedZonotopeFamily(Zonotope z, Vector p, double tol = kDefaultTol);
};

/// Z^alpha = < c(1-alpha) + p*alpha, G(1-alpha) >. alpha=0 returns the base
/// set, alpha=1 the singleton {core}.
Zonotope nested_at(const NestedZonotopeFamily& family, double alpha);

/// Contracting hyperrectangle family: center (1-a)c + a*p, radius (1-a)r.
Hyperrectangle nested_box_at(const Hyperrectangle& box, const Vector& core,
                             double alpha, double tol = kDefaultTol);

/// True iff some xi with ||xi||_inf <= 1+tol satisfies c + G xi = x.
/// Square full-rank generators are solved directly; 2-D sets go through
/// their facet half-spaces; everything else is a feasibility LP.
bool member(const Zonotope& z, const Vector& x, double tol = kDefaultTol);

bool box_member(const Hyperrectangle& box, const Vector& x,
                double tol = kDefaultTol);

/// Smallest ||xi||_inf with c + G xi = x, or +infinity when x is outside
/// the column span. member() is equivalent to min_coeff_norm <= 1+tol.
double min_coeff_norm(const Zonotope& z, const Vector& x);

/// Exact image <Mc, MG>.
Zonotope linear_map(const Matrix& m, const Zonotope& z);

/// Minkowski translation by a point.
Zonotope translate(const Zonotope& z, const Vector& v);

/// Concatenated centers, block-diagonal generators. Factors keep
/// independent coefficients, so membership factorises across the blocks.
Zonotope cartesian_product(const Zonotope& a, const Zonotope& b);

/// Diagonal generator matrix carrying the radii.
Zonotope from_hyperrectangle(const Hyperrectangle& box);

/// Componentwise min/max bounding box of the rows.
Hyperrectangle interval_hull(const SampleMatrix& points);

/// Unsigned facet normal directions of a full-dimensional zonotope.
/// Square invertible generators use rows of G^-T; the general path
/// enumerates (n-1)-subsets of generators (supported for n <= 10).
std::vector<Vector> facet_normals(const Zonotope& z, double tol = kDefaultTol);

/// Area of the projection onto coordinates (i, j):
/// 4 * sum_{a<b} |g_a[i] g_b[j] - g_a[j] g_b[i]|.
double projected_area_2d(const Zonotope& z, Index i, Index j);

/// Per-coordinate interval [c_i - sum_j |G_ij|, c_i + sum_j |G_ij|].
Hyperrectangle axis_aligned_bounds(const Zonotope& z);

/// Point of the set with xi drawn uniformly on [-1,1]^p. Covers the whole
/// set but is not uniform over its volume.
Vector sample_point(const Zonotope& z, std::mt19937_64& rng);

}  // namespace zonoconform

#endif  // ZONOCONFORM_SETS_HPP_
