#include "zonoconform/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace zonoconform {

namespace {

constexpr double kSigmaFloor = 1e-12;

// Conservative conformal index ceil((1-eps)(n+1)) clamped to n, on
// ascending scores.
double conformal_quantile(const std::vector<double>& scores, double eps) {
  check_domain(eps > 0.0 && eps < 1.0, "conformal quantile: eps must lie in (0,1)");
  const Index n = static_cast<Index>(scores.size());
  Index k = static_cast<Index>(std::ceil((1.0 - eps) * static_cast<double>(n + 1) - 1e-9));
  k = std::min(k, n);
  k = std::max<Index>(k, 1);
  return scores[static_cast<size_t>(k - 1)];
}

}  // namespace

ModulationModel modulation_calibrate(const SampleMatrix& errors) {
  const Index n = errors.rows();
  const Index l = errors.cols();
  check_arg(n >= 2, "modulation_calibrate: need at least two error rows");
  check_finite(errors, "modulation errors");

  ModulationModel model;
  model.n = n;
  model.sigma_t = (errors.array().square().colwise().sum() / static_cast<double>(n - 1))
                      .sqrt()
                      .matrix()
                      .transpose();
  bool floored = false;
  for (Index t = 0; t < l; ++t) {
    if (model.sigma_t[t] < kSigmaFloor) {
      model.sigma_t[t] = kSigmaFloor;
      floored = true;
    }
  }
  if (floored)
    std::cerr << "warning: modulation sigma(t) floored at " << kSigmaFloor
              << " for zero-variance coordinates\n";

  model.scores.resize(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i)
    model.scores[static_cast<size_t>(i)] =
        (errors.row(i).transpose().cwiseAbs().cwiseQuotient(model.sigma_t)).maxCoeff();
  std::sort(model.scores.begin(), model.scores.end());
  return model;
}

double modulation_quantile(const ModulationModel& model, double eps) {
  return conformal_quantile(model.scores, eps);
}

Band modulation_band(const ModulationModel& model, const Vector& base_point, double eps) {
  check_arg(base_point.size() == model.sigma_t.size(), "modulation_band: dimension mismatch");
  const double q = modulation_quantile(model, eps);
  return Band{base_point - q * model.sigma_t, base_point + q * model.sigma_t};
}

bool band_contains(const Band& band, const Vector& truth, double tol) {
  check_arg(truth.size() == band.lower.size(), "band_contains: dimension mismatch");
  for (Index t = 0; t < truth.size(); ++t) {
    const double slack =
        tol * std::max(1.0, std::abs(band.upper[t]) + std::abs(band.lower[t]));
    if (truth[t] < band.lower[t] - slack || truth[t] > band.upper[t] + slack) return false;
  }
  return true;
}

EllipticalModel elliptical_calibrate(const SampleMatrix& errors) {
  const Index n = errors.rows();
  const Index l = errors.cols();
  check_arg(l <= 32, "elliptical_calibrate: dimension capped at 32; reduce via SVD first");
  check_arg(n > l, "elliptical_calibrate: need more samples than dimensions");
  check_finite(errors, "elliptical errors");

  const Vector mean = errors.colwise().mean().transpose();
  const Matrix centered = errors.rowwise() - mean.transpose();
  EllipticalModel model;
  model.n = n;
  model.sigma_hat = centered.transpose() * centered / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(model.sigma_hat);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (lo <= 0.0 || hi / lo >= 1e12)
    throw SingularCovarianceError("elliptical_calibrate: singular error covariance");
  model.inv_sqrt = eig.operatorInverseSqrt();

  model.scores.resize(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i)
    model.scores[static_cast<size_t>(i)] =
        (model.inv_sqrt * errors.row(i).transpose()).norm();
  std::sort(model.scores.begin(), model.scores.end());
  return model;
}

double elliptical_quantile(const EllipticalModel& model, double eps) {
  return conformal_quantile(model.scores, eps);
}

double elliptical_score(const EllipticalModel& model, const Vector& base_point,
                        const Vector& truth) {
  check_arg(truth.size() == base_point.size() && truth.size() == model.sigma_hat.rows(),
            "elliptical_score: dimension mismatch");
  return (model.inv_sqrt * (truth - base_point)).norm();
}

bool elliptical_contains(const EllipticalModel& model, const Vector& base_point,
                         const Vector& truth, double eps) {
  return elliptical_score(model, base_point, truth) <= elliptical_quantile(model, eps);
}

}  // namespace zonoconform
