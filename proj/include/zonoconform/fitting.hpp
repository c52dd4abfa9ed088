#ifndef ZONOCONFORM_FITTING_HPP_
#define ZONOCONFORM_FITTING_HPP_

#include <optional>
#include <string>

#include "zonoconform/depth.hpp"
#include "zonoconform/sets.hpp"
#include "zonoconform/types.hpp"

namespace zonoconform {

enum class FitMethod { kRotatedBox, kConvexHull };
enum class DepthMethod { kEuclidean, kMahalanobis, kTukeyApprox };

struct FitConfig {
  FitMethod method = FitMethod::kRotatedBox;
  DepthMethod depth = DepthMethod::kMahalanobis;
  double inflation = 0.0;  // relative margin applied to generator lengths
  double tol = kDefaultTol;
};

/// Principal-component basis of a rotated-box fit.
struct FitBasis {
  Matrix v;      // d x d right singular vectors, sign-normalised
  Vector sigma;  // singular values of the centred data
};

struct FitResult {
  NestedZonotopeFamily family;
  std::optional<FitBasis> basis;  // present for rotated-box fits
  double core_depth = 0.0;
  FitMethod method = FitMethod::kRotatedBox;
  DepthMethod depth = DepthMethod::kMahalanobis;
  double inflation = 0.0;
};

/// Enclosing rotated hyperrectangle: bounding box of the data in its
/// principal-component basis, mapped back as <V S c, V S G>. Produces a
/// square generator matrix (zero-variance directions keep a zero column).
FitResult fit_rotated_box(const SampleMatrix& data, const FitConfig& cfg);

/// Enclosing zonotope from the convex hull: hull -> facet normals ->
/// LP overapproximation. Supported for d <= 6.
FitResult fit_convex_hull(const SampleMatrix& data, const FitConfig& cfg);

/// Dispatch on cfg.method.
FitResult fit(const SampleMatrix& data, const FitConfig& cfg);

std::string to_string(FitMethod m);
std::string to_string(DepthMethod m);
FitMethod fit_method_from_string(const std::string& s);
DepthMethod depth_method_from_string(const std::string& s);

}  // namespace zonoconform

#endif  // ZONOCONFORM_FITTING_HPP_
