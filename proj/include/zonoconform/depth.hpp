#ifndef ZONOCONFORM_DEPTH_HPP_
#define ZONOCONFORM_DEPTH_HPP_

#include <vector>

#include "zonoconform/types.hpp"

namespace zonoconform {

/// Depth of every data row plus the selected deepest row (the core
/// candidate p_Z). Ties resolve to the lowest row index.
struct DepthResult {
  Vector depths;
  Index argmax_index = 0;
  Vector core;
};

/// depth_i = (1 + ||X_i - mean||)^-1.
DepthResult euclidean_depth(const SampleMatrix& data);

/// depth_i = (1 + sqrt((X_i-mu)' Sigma^-1 (X_i-mu)))^-1 with the sample
/// covariance. Requires n > d and condition number < 1e12; otherwise raises
/// SingularCovarianceError suggesting the Euclidean fallback.
DepthResult mahalanobis_depth(const SampleMatrix& data);

/// Exact halfspace (Tukey) depth in 2-D:
/// min over directions v of (1/n) #{j : v'(X_j - x) >= 0}, found by an
/// angular sweep over all breakpoints. Oracle-grade; d must be 2, n <= 2000.
double tukey_depth_exact(const SampleMatrix& data, const Vector& x);

/// Directions whose +-span realises the exact 2-D infimum: one probe per
/// open piece of the angular sweep. Feeding these to tukey_depth_approx
/// reproduces tukey_depth_exact.
std::vector<Vector> tukey_candidate_directions_2d(const SampleMatrix& data,
                                                  const Vector& x);

/// Same statistic with the infimum restricted to +-v for each supplied
/// direction (typically the facet normals of an enclosing zonotope). Always
/// an upper bound on the exact depth.
double tukey_depth_approx(const SampleMatrix& data, const Vector& x,
                          const std::vector<Vector>& directions);

/// Row of maximal approximate Tukey depth.
DepthResult tukey_depth_approx_all(const SampleMatrix& data,
                                   const std::vector<Vector>& directions);

}  // namespace zonoconform

#endif  // ZONOCONFORM_DEPTH_HPP_
