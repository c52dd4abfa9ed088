#include "zonoconform/fitting.hpp"

#include <cmath>

#include "zonoconform/polytope.hpp"

namespace zonoconform {

namespace {

// Core selection over the original data rows. Tukey needs the facet normals
// of the already-fitted set, so the enclosing zonotope comes first.
DepthResult select_core(const SampleMatrix& data, const Zonotope& fitted,
                        DepthMethod method, double tol) {
  switch (method) {
    case DepthMethod::kEuclidean:
      return euclidean_depth(data);
    case DepthMethod::kMahalanobis:
      return mahalanobis_depth(data);
    case DepthMethod::kTukeyApprox:
      return tukey_depth_approx_all(data, facet_normals(fitted, tol));
  }
  throw std::logic_error("select_core: unknown depth method");
}

Zonotope inflate(Zonotope z, double inflation) {
  check_arg(inflation >= 0.0, "fit: inflation must be nonnegative");
  if (inflation > 0.0) z.generators *= 1.0 + inflation;
  return z;
}

FitResult assemble(const SampleMatrix& data, Zonotope enclosing,
                   std::optional<FitBasis> basis, const FitConfig& cfg) {
  enclosing = inflate(std::move(enclosing), cfg.inflation);
  const DepthResult depth = select_core(data, enclosing, cfg.depth, cfg.tol);
  FitResult res{NestedZonotopeFamily(std::move(enclosing), depth.core, cfg.tol),
                std::move(basis),
                depth.depths[depth.argmax_index],
                cfg.method,
                cfg.depth,
                cfg.inflation};
  return res;
}

}  // namespace

FitResult fit_rotated_box(const SampleMatrix& data, const FitConfig& cfg) {
  const Index n = data.rows();
  const Index d = data.cols();
  check_arg(n >= 2, "fit_rotated_box: need at least two samples");
  check_finite(data, "fit_rotated_box data");

  const Vector mean = data.colwise().mean().transpose();
  const Matrix centered = data.rowwise() - mean.transpose();

  Eigen::BDCSVD<Matrix> svd(centered, Eigen::ComputeThinV);
  Matrix v = svd.matrixV();  // d x r, r = min(n, d)
  Vector sigma = svd.singularValues();
  if (v.cols() < d) {
    // Complete to a full orthonormal basis; extra directions carry sigma 0.
    Matrix full = Matrix::Identity(d, d);
    full.leftCols(v.cols()) = v;
    const Eigen::HouseholderQR<Matrix> qr(full);
    Matrix q = qr.householderQ();
    // Keep the computed directions exactly, orthonormalise the remainder.
    q.leftCols(v.cols()) = v;
    v = q;
    Vector s2 = Vector::Zero(d);
    s2.head(sigma.size()) = sigma;
    sigma = s2;
  }

  // Deterministic sign: first non-negligible component of each column > 0.
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      if (std::abs(v(i, j)) > 1e-12) {
        if (v(i, j) < 0.0) v.col(j) = -v.col(j);
        break;
      }
    }
  }

  const double smax = sigma.size() > 0 ? sigma.maxCoeff() : 0.0;
  // Unit-scale coordinates u = S^-1 V' x; zero-variance directions get 0.
  Matrix coords(n, d);
  for (Index j = 0; j < d; ++j) {
    if (sigma[j] > 1e-13 * std::max(1.0, smax))
      coords.col(j) = centered * v.col(j) / sigma[j];
    else
      coords.col(j).setZero();
  }

  const Hyperrectangle box = interval_hull(coords);
  const Matrix back = v * sigma.asDiagonal();  // maps u back to the data frame
  Zonotope enclosing(mean + back * box.center, back * Matrix(box.radius.asDiagonal()));

  FitConfig used = cfg;
  used.method = FitMethod::kRotatedBox;
  return assemble(data, std::move(enclosing), FitBasis{v, sigma}, used);
}

FitResult fit_convex_hull(const SampleMatrix& data, const FitConfig& cfg) {
  check_arg(data.rows() >= 2, "fit_convex_hull: need at least two samples");
  check_finite(data, "fit_convex_hull data");

  const VPolytope hull = convex_hull(data, cfg.tol);
  const std::vector<Vector> dirs = facet_directions(hull, cfg.tol);
  Zonotope enclosing = overapprox_zonotope(hull, dirs, cfg.tol);

  FitConfig used = cfg;
  used.method = FitMethod::kConvexHull;
  return assemble(data, std::move(enclosing), std::nullopt, used);
}

FitResult fit(const SampleMatrix& data, const FitConfig& cfg) {
  return cfg.method == FitMethod::kRotatedBox ? fit_rotated_box(data, cfg)
                                              : fit_convex_hull(data, cfg);
}

std::string to_string(FitMethod m) {
  return m == FitMethod::kRotatedBox ? "rotated_box" : "convex_hull";
}

std::string to_string(DepthMethod m) {
  switch (m) {
    case DepthMethod::kEuclidean: return "euclidean";
    case DepthMethod::kMahalanobis: return "mahalanobis";
    case DepthMethod::kTukeyApprox: return "tukey_approx";
  }
  return "unknown";
}

FitMethod fit_method_from_string(const std::string& s) {
  if (s == "rotated_box") return FitMethod::kRotatedBox;
  if (s == "convex_hull") return FitMethod::kConvexHull;
  throw std::invalid_argument("unknown fit method: " + s);
}

DepthMethod depth_method_from_string(const std::string& s) {
  if (s == "euclidean") return DepthMethod::kEuclidean;
  if (s == "mahalanobis") return DepthMethod::kMahalanobis;
  if (s == "tukey_approx") return DepthMethod::kTukeyApprox;
  throw std::invalid_argument("unknown depth method: " + s);
}

}  // namespace zonoconform
