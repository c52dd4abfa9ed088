#ifndef ZONOCONFORM_BASELINES_HPP_
#define ZONOCONFORM_BASELINES_HPP_

#include <vector>

#include "zonoconform/types.hpp"

namespace zonoconform {

/// Supremum-score conformal band with per-coordinate standard-deviation
/// modulation: score_i = max_t |e_i(t)| / sigma(t). Uses the standard
/// conservative conformal quantile ceil((1-eps)(n+1)) (its source papers'
/// convention, unlike the membership rule used by the zonotope method).
struct ModulationModel {
  Vector sigma_t;              // per-coordinate error std, floored
  std::vector<double> scores;  // ascending
  Index n = 0;
};

ModulationModel modulation_calibrate(const SampleMatrix& errors);

double modulation_quantile(const ModulationModel& model, double eps);

struct Band {
  Vector lower;
  Vector upper;
};

/// base_point -+ q(eps) * sigma(t).
Band modulation_band(const ModulationModel& model, const Vector& base_point, double eps);

bool band_contains(const Band& band, const Vector& truth, double tol = kDefaultTol);

/// Mahalanobis-score conformal ellipsoid. Dimension-capped at 32; for
/// functional problems it runs on SVD-reduced coordinates (an adaptation
/// that evaluates kept-coordinate coverage only).
struct EllipticalModel {
  Matrix sigma_hat;            // sample covariance of the errors
  Matrix inv_sqrt;             // Sigma^-1/2 factor for scoring
  std::vector<double> scores;  // ascending
  Index n = 0;
};

EllipticalModel elliptical_calibrate(const SampleMatrix& errors);

double elliptical_quantile(const EllipticalModel& model, double eps);

double elliptical_score(const EllipticalModel& model, const Vector& base_point,
                        const Vector& truth);

bool elliptical_contains(const EllipticalModel& model, const Vector& base_point,
                         const Vector& truth, double eps);

}  // namespace zonoconform

#endif  // ZONOCONFORM_BASELINES_HPP_
