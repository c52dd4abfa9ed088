#include "zonoconform/depth.hpp"

#include <algorithm>
#include <cmath>

namespace zonoconform {

namespace {

DepthResult finish(const SampleMatrix& data, Vector depths) {
  DepthResult res;
  res.argmax_index = 0;
  for (Index i = 1; i < depths.size(); ++i)
    if (depths[i] > depths[res.argmax_index]) res.argmax_index = i;
  res.core = data.row(res.argmax_index).transpose();
  res.depths = std::move(depths);
  return res;
}

}  // namespace

DepthResult euclidean_depth(const SampleMatrix& data) {
  check_arg(data.rows() >= 1, "euclidean_depth: empty data");
  check_finite(data, "euclidean_depth data");
  const Vector mean = data.colwise().mean().transpose();
  Vector depths(data.rows());
  for (Index i = 0; i < data.rows(); ++i)
    depths[i] = 1.0 / (1.0 + (data.row(i).transpose() - mean).norm());
  return finish(data, std::move(depths));
}

DepthResult mahalanobis_depth(const SampleMatrix& data) {
  const Index n = data.rows();
  const Index d = data.cols();
  check_arg(n >= 1, "mahalanobis_depth: empty data");
  check_finite(data, "mahalanobis_depth data");
  check_arg(n > d, "mahalanobis_depth: need more samples than dimensions");

  const Vector mean = data.colwise().mean().transpose();
  const Matrix centered = data.rowwise() - mean.transpose();
  const Matrix cov = centered.transpose() * centered / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
  const Vector ev = eig.eigenvalues();
  const double lo = ev.minCoeff(), hi = ev.maxCoeff();
  if (lo <= 0.0 || hi / lo >= 1e12)
    throw SingularCovarianceError(
        "mahalanobis_depth: covariance is singular or badly conditioned; "
        "consider euclidean depth instead");

  const Matrix whiten = eig.operatorInverseSqrt();
  Vector depths(n);
  for (Index i = 0; i < n; ++i)
    depths[i] = 1.0 / (1.0 + (whiten * centered.row(i).transpose()).norm());
  return finish(data, std::move(depths));
}

std::vector<Vector> tukey_candidate_directions_2d(const SampleMatrix& data,
                                                  const Vector& x) {
  const Index n = data.rows();
  check_arg(data.cols() == 2, "tukey_candidate_directions_2d: supported only in 2-D");
  check_arg(x.size() == 2, "tukey_candidate_directions_2d: point dimension mismatch");

  const double kPi = 3.14159265358979323846;
  std::vector<double> breakpoints;
  breakpoints.reserve(static_cast<size_t>(2 * n));
  for (Index j = 0; j < n; ++j) {
    const double zx = data(j, 0) - x[0];
    const double zy = data(j, 1) - x[1];
    if (zx == 0.0 && zy == 0.0) continue;
    const double t = std::atan2(zy, zx);
    breakpoints.push_back(std::remainder(t + kPi / 2, 2 * kPi));
    breakpoints.push_back(std::remainder(t - kPi / 2, 2 * kPi));
  }
  std::vector<Vector> dirs;
  if (breakpoints.empty()) {
    Vector v(2);
    v << 1.0, 0.0;
    dirs.push_back(v);
    return dirs;
  }
  std::sort(breakpoints.begin(), breakpoints.end());

  // The halfspace count is piecewise constant in the direction angle, with
  // pieces delimited by the breakpoints; at a breakpoint the closed count is
  // never below its neighbours, so probing each open piece's midpoint finds
  // the exact infimum.
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b =
        (i + 1 < breakpoints.size()) ? breakpoints[i + 1] : breakpoints[0] + 2 * kPi;
    const double phi = (a + b) / 2;
    Vector v(2);
    v << std::cos(phi), std::sin(phi);
    dirs.push_back(v);
  }
  return dirs;
}

double tukey_depth_exact(const SampleMatrix& data, const Vector& x) {
  const Index n = data.rows();
  check_arg(data.cols() == 2, "tukey_depth_exact: supported only in 2-D");
  check_arg(x.size() == 2, "tukey_depth_exact: point dimension mismatch");
  check_arg(n >= 1 && n <= 2000, "tukey_depth_exact: n must be in [1, 2000]");
  return tukey_depth_approx(data, x, tukey_candidate_directions_2d(data, x));
}

double tukey_depth_approx(const SampleMatrix& data, const Vector& x,
                          const std::vector<Vector>& directions) {
  const Index n = data.rows();
  check_arg(n >= 1, "tukey_depth_approx: empty data");
  check_arg(!directions.empty(), "tukey_depth_approx: empty direction set");
  check_arg(x.size() == data.cols(), "tukey_depth_approx: point dimension mismatch");

  Index best = n;
  for (const Vector& v : directions) {
    check_arg(v.size() == data.cols(), "tukey_depth_approx: direction dimension mismatch");
    Index pos = 0, neg = 0;
    for (Index j = 0; j < n; ++j) {
      const double s = v.dot(data.row(j).transpose() - x);
      if (s >= 0.0) ++pos;
      if (-s >= 0.0) ++neg;
    }
    best = std::min({best, pos, neg});
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

DepthResult tukey_depth_approx_all(const SampleMatrix& data,
                                   const std::vector<Vector>& directions) {
  check_arg(data.rows() >= 1, "tukey_depth_approx_all: empty data");
  Vector depths(data.rows());
  for (Index i = 0; i < data.rows(); ++i)
    depths[i] = tukey_depth_approx(data, data.row(i).transpose(), directions);
  DepthResult res;
  res.argmax_index = 0;
  for (Index i = 1; i < depths.size(); ++i)
    if (depths[i] > depths[res.argmax_index]) res.argmax_index = i;
  res.core = data.row(res.argmax_index).transpose();
  res.depths = std::move(depths);
  return res;
}

}  // namespace zonoconform
