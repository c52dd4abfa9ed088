#ifndef ZONOCONFORM_FUNCTIONAL_HPP_
#define ZONOCONFORM_FUNCTIONAL_HPP_

#include <vector>

#include "zonoconform/calibration.hpp"
#include "zonoconform/fitting.hpp"
#include "zonoconform/sets.hpp"
#include "zonoconform/types.hpp"

namespace zonoconform {

/// Thin SVD of the raw (uncentred) error matrix with a variance-fraction
/// truncation rank. Rows of the error matrix decompose as e = V S u with
/// unit-scale coordinates u, so the fitted sets stay well conditioned and
/// the back-map is x = V S u.
struct ErrorSvd {
  Matrix v;          // l x r, orthonormal columns
  Vector sigma;      // r, nonincreasing positive
  Index k = 0;       // kept modes
  double variance_fraction = 1.0;
  bool degenerate = false;  // all-zero errors: prediction sets collapse

  Index rank() const { return sigma.size(); }
  Index output_dim() const { return v.rows(); }
};

/// Row-wise surrogate errors e_i = truth_i - prediction_i.
SampleMatrix compute_errors(const SampleMatrix& truths, const SampleMatrix& predictions);

ErrorSvd error_svd(const SampleMatrix& errors, double variance_fraction);

struct ProjectedErrors {
  SampleMatrix kept;       // n x k
  SampleMatrix truncated;  // n x (r-k)
  Vector residual_norms;   // component outside span(V) per row
};

ProjectedErrors project_errors(const ErrorSvd& svd, const SampleMatrix& errors);

/// SVD + enclosing-set fit + truncation bounding box, learned from one error
/// sample (typically a training split held out from calibration).
struct FunctionalFit {
  ErrorSvd svd;
  FitResult fit;           // family over the kept coordinates
  Hyperrectangle trunc_box;  // over the truncated coordinates, inflated
  double trunc_inflation = 0.0;
};

FunctionalFit fit_functional(const SampleMatrix& errors, const FitConfig& cfg,
                             double variance_fraction, double trunc_inflation = 0.0);

struct FunctionalConformalModel {
  ErrorSvd svd;
  CalibratedFamily calibrated;  // over the kept coordinates
  Hyperrectangle trunc_box;
  Index output_dim = 0;
  bool degenerate = false;
};

/// Scores fresh calibration errors against a fitted reduction. Rows whose
/// truncated coordinates escape the box score below-grid (conservative).
FunctionalConformalModel calibrate_functional(const FunctionalFit& fit,
                                              const SampleMatrix& errors,
                                              const AlphaGrid& grid,
                                              double tol = kDefaultTol);

/// Single-sample convenience: fit and calibrate on the same errors, in which
/// case the truncation box never changes any score.
FunctionalConformalModel build_model(const SampleMatrix& errors, const FitConfig& cfg,
                                     double variance_fraction, const AlphaGrid& grid,
                                     double trunc_inflation = 0.0,
                                     double tol = kDefaultTol);

struct FunctionalPredictionSet {
  Vector base_point;
  std::vector<double> eps_levels;
  std::vector<Zonotope> sets;  // output-space sets, nested across sorted eps
};

/// C(eps) = base_point + V S (Z^{s(eps)} x E): the calibrated kept-space set
/// times the truncation box, mapped back exactly and translated.
FunctionalPredictionSet predict(const FunctionalConformalModel& model,
                                const Vector& base_point,
                                const std::vector<double>& eps_levels);

/// Full-function containment test used by coverage evaluation: kept-set
/// membership and truncation-box membership of the projected error, plus a
/// residual gate for components outside span(V). residual_tol defaults to
/// infinity (residuals are reported, not enforced), matching the guarantee
/// which covers the in-span representation.
bool contains_function(const FunctionalConformalModel& model, double eps,
                       const Vector& base_point, const Vector& truth,
                       double residual_tol = kLpInfinity, double tol = kDefaultTol);

/// Residual norm of a single test function against the model's SVD span.
double residual_norm(const FunctionalConformalModel& model, const Vector& base_point,
                     const Vector& truth);

/// Axis-projection envelopes: for each eps level, per-output-dimension
/// lower/upper interval bounds of the prediction set.
struct Envelope {
  std::vector<double> eps_levels;
  Matrix lower;  // l x n_eps
  Matrix upper;  // l x n_eps
};

Envelope axis_envelopes(const FunctionalPredictionSet& pred);

}  // namespace zonoconform

#endif  // ZONOCONFORM_FUNCTIONAL_HPP_
