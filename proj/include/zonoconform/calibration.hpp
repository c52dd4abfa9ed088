#ifndef ZONOCONFORM_CALIBRATION_HPP_
#define ZONOCONFORM_CALIBRATION_HPP_

#include <functional>
#include <random>
#include <vector>

#include "zonoconform/sets.hpp"
#include "zonoconform/types.hpp"

namespace zonoconform {

/// Strictly increasing grid of alpha levels spanning exactly [0, 1].
class AlphaGrid {
 public:
  AlphaGrid() = default;
  explicit AlphaGrid(std::vector<double> values);

  /// m uniformly spaced levels {i/(m-1)}, m >= 2.
  static AlphaGrid uniform(Index m);

  /// Default sizing rule: max(1000, n+1) levels for n calibration points.
  static AlphaGrid default_for(Index n_calibration);

  const std::vector<double>& values() const { return values_; }
  Index size() const { return static_cast<Index>(values_.size()); }
  double operator[](Index i) const { return values_[static_cast<size_t>(i)]; }

 private:
  std::vector<double> values_;
};

/// Largest grid level at which x is still a member of the family, found by
/// binary search (valid because membership is monotone in alpha). Points
/// outside the base set map to kBelowGridScore.
double membership_score(const NestedZonotopeFamily& family, const Vector& x,
                        const AlphaGrid& grid, double tol = kDefaultTol);

struct CalibratedFamily {
  NestedZonotopeFamily family;
  std::vector<double> scores;  // ascending
  AlphaGrid grid;
  Index n = 0;
};

/// Scores every row of data and stores the sorted result.
CalibratedFamily calibrate(const NestedZonotopeFamily& family, const SampleMatrix& data,
                           const AlphaGrid& grid, double tol = kDefaultTol);

/// Calibration from precomputed scores (used when scoring involves extra
/// structure, e.g. a truncation box).
CalibratedFamily calibrate_from_scores(const NestedZonotopeFamily& family,
                                       std::vector<double> scores, const AlphaGrid& grid);

struct LevelSetResult {
  Zonotope set;
  double alpha = 0.0;
  /// True when eps < 1/n (or the quantile hit a below-grid score) and the
  /// full base set was returned as the conservative fallback.
  bool conservative_fallback = false;
};

/// Quantile rule s(eps) = alpha_(ceil(eps n)) over the ascending scores,
/// guaranteeing P(X in Z^s) >= 1 - eps under exchangeability. With
/// strict_rule the index is floor(eps (n+1)) instead.
LevelSetResult level_set(const CalibratedFamily& cf, double eps, bool strict_rule = false);

/// Fraction of calibration scores at or above the eps-level threshold.
double calibration_coverage(const CalibratedFamily& cf, double eps, bool strict_rule = false);

/// Monotone map alpha -> s(alpha) = 1 - P(X in Z^alpha) estimated from
/// mc_samples draws of the caller-supplied sampler, with binomial standard
/// errors per grid level.
struct DensityCalibration {
  AlphaGrid grid;
  std::vector<double> s_values;
  std::vector<double> stderrs;
};

DensityCalibration calibrate_from_sampler(const NestedZonotopeFamily& family,
                                          const std::function<Vector(std::mt19937_64&)>& sampler,
                                          const AlphaGrid& grid, Index mc_samples,
                                          std::uint64_t seed, double tol = kDefaultTol);

}  // namespace zonoconform

#endif  // ZONOCONFORM_CALIBRATION_HPP_
