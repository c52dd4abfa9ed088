#include "zonoconform/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "zonoconform/parallel.hpp"

namespace zonoconform {

namespace {

// ceil(eps * n) robust against cases like 0.1 * 100 = 10.000000000000002.
Index quantile_index(double eps, Index n, bool strict_rule) {
  if (strict_rule) return static_cast<Index>(std::floor(eps * (n + 1) + 1e-9));
  return static_cast<Index>(std::ceil(eps * static_cast<double>(n) - 1e-9));
}

}  // namespace

AlphaGrid::AlphaGrid(std::vector<double> values) : values_(std::move(values)) {
  check_arg(values_.size() >= 2, "AlphaGrid: need at least two levels");
  check_arg(values_.front() == 0.0 && values_.back() == 1.0,
            "AlphaGrid: endpoints must be exactly 0 and 1");
  for (size_t i = 1; i < values_.size(); ++i)
    check_arg(values_[i] > values_[i - 1], "AlphaGrid: values must be strictly increasing");
}

AlphaGrid AlphaGrid::uniform(Index m) {
  check_arg(m >= 2, "AlphaGrid::uniform: need at least two levels");
  std::vector<double> v(static_cast<size_t>(m));
  for (Index i = 0; i < m; ++i)
    v[static_cast<size_t>(i)] = static_cast<double>(i) / static_cast<double>(m - 1);
  v.front() = 0.0;
  v.back() = 1.0;
  return AlphaGrid(std::move(v));
}

AlphaGrid AlphaGrid::default_for(Index n_calibration) {
  return uniform(std::max<Index>(1000, n_calibration + 1));
}

double membership_score(const NestedZonotopeFamily& family, const Vector& x,
                        const AlphaGrid& grid, double tol) {
  if (!member(family.base, x, tol)) return kBelowGridScore;
  // Invariant: member at grid[lo], not a member at grid[hi].
  Index lo = 0;
  Index hi = grid.size() - 1;
  if (member(nested_at(family, grid[hi]), x, tol)) return grid[hi];
  while (hi - lo > 1) {
    const Index mid = lo + (hi - lo) / 2;
    if (member(nested_at(family, grid[mid]), x, tol))
      lo = mid;
    else
      hi = mid;
  }
  return grid[lo];
}

CalibratedFamily calibrate(const NestedZonotopeFamily& family, const SampleMatrix& data,
                           const AlphaGrid& grid, double tol) {
  check_arg(data.rows() >= 1, "calibrate: empty calibration data");
  check_arg(data.cols() == family.base.dim(), "calibrate: dimension mismatch");
  std::vector<double> scores(static_cast<size_t>(data.rows()));
  parallel_for(data.rows(), [&](Index i) {
    scores[static_cast<size_t>(i)] = membership_score(family, data.row(i).transpose(), grid, tol);
  });
  return calibrate_from_scores(family, std::move(scores), grid);
}

CalibratedFamily calibrate_from_scores(const NestedZonotopeFamily& family,
                                       std::vector<double> scores, const AlphaGrid& grid) {
  check_arg(!scores.empty(), "calibrate_from_scores: no scores");
  std::sort(scores.begin(), scores.end());
  CalibratedFamily cf;
  cf.family = family;
  cf.n = static_cast<Index>(scores.size());
  cf.scores = std::move(scores);
  cf.grid = grid;
  return cf;
}

LevelSetResult level_set(const CalibratedFamily& cf, double eps, bool strict_rule) {
  check_domain(eps > 0.0 && eps < 1.0, "level_set: eps must lie in (0,1)");
  const Index k = quantile_index(eps, cf.n, strict_rule);
  LevelSetResult res;
  if (k < 1) {
    res.set = nested_at(cf.family, 0.0);
    res.alpha = 0.0;
    res.conservative_fallback = true;
    return res;
  }
  const double s = cf.scores[static_cast<size_t>(k - 1)];
  if (s < 0.0) {
    // Quantile landed on a below-grid score; only the full set is safe.
    res.set = nested_at(cf.family, 0.0);
    res.alpha = 0.0;
    res.conservative_fallback = true;
    return res;
  }
  res.set = nested_at(cf.family, s);
  res.alpha = s;
  return res;
}

double calibration_coverage(const CalibratedFamily& cf, double eps, bool strict_rule) {
  const LevelSetResult ls = level_set(cf, eps, strict_rule);
  const auto at = std::lower_bound(cf.scores.begin(), cf.scores.end(), ls.alpha);
  return static_cast<double>(cf.scores.end() - at) / static_cast<double>(cf.n);
}

DensityCalibration calibrate_from_sampler(const NestedZonotopeFamily& family,
                                          const std::function<Vector(std::mt19937_64&)>& sampler,
                                          const AlphaGrid& grid, Index mc_samples,
                                          std::uint64_t seed, double tol) {
  check_arg(mc_samples >= 1000, "calibrate_from_sampler: need at least 1000 samples");
  std::mt19937_64 rng(seed);

  // One score per draw; P(X in Z^alpha) = P(score >= alpha) on the grid.
  std::vector<double> scores(static_cast<size_t>(mc_samples));
  for (Index i = 0; i < mc_samples; ++i) {
    const Vector x = sampler(rng);
    check_arg(x.allFinite(), "calibrate_from_sampler: sampler produced non-finite values");
    scores[static_cast<size_t>(i)] = membership_score(family, x, grid, tol);
  }
  std::sort(scores.begin(), scores.end());

  DensityCalibration dc;
  dc.grid = grid;
  dc.s_values.resize(static_cast<size_t>(grid.size()));
  dc.stderrs.resize(static_cast<size_t>(grid.size()));
  for (Index g = 0; g < grid.size(); ++g) {
    const auto at = std::lower_bound(scores.begin(), scores.end(), grid[g]);
    const double coverage =
        static_cast<double>(scores.end() - at) / static_cast<double>(mc_samples);
    dc.s_values[static_cast<size_t>(g)] = 1.0 - coverage;
    dc.stderrs[static_cast<size_t>(g)] =
        std::sqrt(std::max(coverage * (1.0 - coverage), 0.0) /
                  static_cast<double>(mc_samples));
  }
  return dc;
}

}  // namespace zonoconform
