#include "zonoconform/functional.hpp"

#include <algorithm>
#include <cmath>

#include "zonoconform/parallel.hpp"

namespace zonoconform {

SampleMatrix compute_errors(const SampleMatrix& truths, const SampleMatrix& predictions) {
  check_arg(truths.rows() == predictions.rows() && truths.cols() == predictions.cols(),
            "compute_errors: shape mismatch between truths and predictions");
  return truths - predictions;
}

ErrorSvd error_svd(const SampleMatrix& errors, double variance_fraction) {
  check_arg(errors.rows() >= 2, "error_svd: need at least two error rows");
  check_arg(variance_fraction > 0.0 && variance_fraction <= 1.0,
            "error_svd: variance_fraction must lie in (0,1]");
  check_finite(errors, "error_svd errors");

  ErrorSvd out;
  out.variance_fraction = variance_fraction;

  Eigen::BDCSVD<Matrix> svd(errors, Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  if (smax <= 0.0) {
    out.degenerate = true;
    out.v = Matrix::Zero(errors.cols(), 0);
    out.sigma = Vector::Zero(0);
    out.k = 0;
    return out;
  }

  // Numerical rank: drop the zero tail.
  const double cut = smax * 1e-13 * std::max(errors.rows(), errors.cols());
  Index r = 0;
  while (r < sv.size() && sv[r] > cut) ++r;

  out.v = svd.matrixV().leftCols(r);
  out.sigma = sv.head(r);

  // Deterministic sign convention on the basis columns.
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < out.v.rows(); ++i) {
      if (std::abs(out.v(i, j)) > 1e-12) {
        if (out.v(i, j) < 0.0) out.v.col(j) = -out.v.col(j);
        break;
      }
    }
  }

  // Smallest k capturing the requested variance fraction.
  const double total = out.sigma.squaredNorm();
  double acc = 0.0;
  out.k = r;
  for (Index j = 0; j < r; ++j) {
    acc += out.sigma[j] * out.sigma[j];
    if (acc / total >= variance_fraction - 1e-15) {
      out.k = j + 1;
      break;
    }
  }
  return out;
}

ProjectedErrors project_errors(const ErrorSvd& svd, const SampleMatrix& errors) {
  check_arg(errors.cols() == svd.output_dim() || svd.rank() == 0,
            "project_errors: error dimension mismatch");
  const Index n = errors.rows();
  const Index r = svd.rank();
  const Index k = svd.k;

  ProjectedErrors out;
  if (r == 0) {
    out.kept = SampleMatrix::Zero(n, 0);
    out.truncated = SampleMatrix::Zero(n, 0);
    out.residual_norms = errors.rowwise().norm();
    return out;
  }

  // u = S^-1 V' e per row; rows of the coordinate matrix are u_i'.
  SampleMatrix coords = errors * svd.v;
  for (Index j = 0; j < r; ++j) coords.col(j) /= svd.sigma[j];

  out.kept = coords.leftCols(k);
  out.truncated = coords.rightCols(r - k);

  // Residual outside span(V): e - V S u = e - V V' e.
  SampleMatrix recon = coords;
  for (Index j = 0; j < r; ++j) recon.col(j) *= svd.sigma[j];
  out.residual_norms = (errors - recon * svd.v.transpose()).rowwise().norm();
  return out;
}

FunctionalFit fit_functional(const SampleMatrix& errors, const FitConfig& cfg,
                             double variance_fraction, double trunc_inflation) {
  check_arg(trunc_inflation >= 0.0, "fit_functional: negative truncation inflation");
  FunctionalFit out;
  out.svd = error_svd(errors, variance_fraction);
  out.trunc_inflation = trunc_inflation;

  if (out.svd.degenerate) {
    out.trunc_box = Hyperrectangle(Vector::Zero(0), Vector::Zero(0));
    return out;
  }

  const ProjectedErrors proj = project_errors(out.svd, errors);
  out.fit = fit(proj.kept, cfg);
  if (proj.truncated.cols() > 0) {
    Hyperrectangle box = interval_hull(proj.truncated);
    box.radius *= 1.0 + trunc_inflation;
    out.trunc_box = std::move(box);
  } else {
    out.trunc_box = Hyperrectangle(Vector::Zero(0), Vector::Zero(0));
  }
  return out;
}

FunctionalConformalModel calibrate_functional(const FunctionalFit& fitted,
                                              const SampleMatrix& errors,
                                              const AlphaGrid& grid, double tol) {
  check_arg(errors.rows() >= 1, "calibrate_functional: empty calibration errors");

  FunctionalConformalModel model;
  model.svd = fitted.svd;
  model.trunc_box = fitted.trunc_box;
  model.output_dim = errors.cols();
  model.degenerate = fitted.svd.degenerate;
  if (model.degenerate) return model;

  const ProjectedErrors proj = project_errors(fitted.svd, errors);

  // Scores live on the kept coordinates; rows escaping the truncation box
  // are below-grid. The box never changes the score of a row it contains,
  // because the product-set indicator factorises.
  std::vector<double> scores(static_cast<size_t>(errors.rows()));
  const NestedZonotopeFamily& family = fitted.fit.family;
  parallel_for(errors.rows(), [&](Index i) {
    const bool in_box = model.trunc_box.dim() == 0 ||
                        box_member(model.trunc_box, proj.truncated.row(i).transpose(), tol);
    scores[static_cast<size_t>(i)] =
        in_box ? membership_score(family, proj.kept.row(i).transpose(), grid, tol)
               : kBelowGridScore;
  });
  model.calibrated = calibrate_from_scores(family, std::move(scores), grid);
  return model;
}

FunctionalConformalModel build_model(const SampleMatrix& errors, const FitConfig& cfg,
                                     double variance_fraction, const AlphaGrid& grid,
                                     double trunc_inflation, double tol) {
  const FunctionalFit fitted = fit_functional(errors, cfg, variance_fraction, trunc_inflation);
  FunctionalConformalModel model = calibrate_functional(fitted, errors, grid, tol);
  model.output_dim = errors.cols();
  return model;
}

namespace {

Matrix back_map(const ErrorSvd& svd) { return svd.v * svd.sigma.asDiagonal(); }

}  // namespace

FunctionalPredictionSet predict(const FunctionalConformalModel& model,
                                const Vector& base_point,
                                const std::vector<double>& eps_levels) {
  check_arg(base_point.size() == model.output_dim, "predict: base point dimension mismatch");
  check_arg(!eps_levels.empty(), "predict: no eps levels requested");

  FunctionalPredictionSet out;
  out.base_point = base_point;
  out.eps_levels = eps_levels;

  if (model.degenerate) {
    for (size_t i = 0; i < eps_levels.size(); ++i)
      out.sets.emplace_back(base_point, Matrix::Zero(base_point.size(), 0));
    return out;
  }

  const Matrix vs = back_map(model.svd);
  const Zonotope box_zono = from_hyperrectangle(model.trunc_box);
  for (const double eps : eps_levels) {
    const LevelSetResult level = level_set(model.calibrated, eps);
    const Zonotope product = cartesian_product(level.set, box_zono);
    out.sets.push_back(translate(linear_map(vs, product), base_point));
  }
  return out;
}

double residual_norm(const FunctionalConformalModel& model, const Vector& base_point,
                     const Vector& truth) {
  check_arg(truth.size() == model.output_dim && base_point.size() == model.output_dim,
            "residual_norm: dimension mismatch");
  const Vector e = truth - base_point;
  if (model.svd.rank() == 0) return e.norm();
  return (e - model.svd.v * (model.svd.v.transpose() * e)).norm();
}

bool contains_function(const FunctionalConformalModel& model, double eps,
                       const Vector& base_point, const Vector& truth,
                       double residual_tol, double tol) {
  check_arg(truth.size() == model.output_dim && base_point.size() == model.output_dim,
            "contains_function: dimension mismatch");

  const Vector e = truth - base_point;
  if (model.degenerate)
    return e.norm() <= (std::isinf(residual_tol) ? tol * (1.0 + base_point.norm())
                                                 : residual_tol);

  if (residual_norm(model, base_point, truth) > residual_tol) return false;

  const Index r = model.svd.rank();
  const Index k = model.svd.k;
  Vector u = model.svd.v.transpose() * e;
  for (Index j = 0; j < r; ++j) u[j] /= model.svd.sigma[j];

  if (model.trunc_box.dim() > 0 && !box_member(model.trunc_box, u.tail(r - k), tol))
    return false;
  const LevelSetResult level = level_set(model.calibrated, eps);
  return member(level.set, u.head(k), tol);
}

Envelope axis_envelopes(const FunctionalPredictionSet& pred) {
  Envelope env;
  env.eps_levels = pred.eps_levels;
  const Index l = pred.base_point.size();
  const Index ne = static_cast<Index>(pred.sets.size());
  env.lower.resize(l, ne);
  env.upper.resize(l, ne);
  for (Index s = 0; s < ne; ++s) {
    const Hyperrectangle bounds = axis_aligned_bounds(pred.sets[static_cast<size_t>(s)]);
    env.lower.col(s) = bounds.center - bounds.radius;
    env.upper.col(s) = bounds.center + bounds.radius;
  }
  return env;
}

}  // namespace zonoconform
