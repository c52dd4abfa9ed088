#ifndef ZONOCONFORM_EVAL_HPP_
#define ZONOCONFORM_EVAL_HPP_

#include <functional>
#include <string>
#include <vector>

#include "zonoconform/baselines.hpp"
#include "zonoconform/sets.hpp"
#include "zonoconform/types.hpp"

namespace zonoconform {

struct CoverageReport {
  std::string method;
  double eps = 0.0;
  Index n_test = 0;
  Index covered = 0;
  double coverage = 0.0;
  double mc_stderr = 0.0;
};

struct EfficiencyReport {
  std::string method;
  double eps = 0.0;
  double mean_projected_area = 0.0;
  Index pairs_sampled = 0;
  std::uint64_t seed = 0;
};

/// Counts full-vector containment over the test rows; the evaluator decides
/// membership per row (inclusive at boundaries).
CoverageReport empirical_coverage(const std::function<bool(Index)>& contains_row,
                                  Index n_test, double eps, const std::string& method);

/// Coordinate pairs for the projected-area average: all pairs when their
/// count fits the budget, otherwise a seeded uniform sample without
/// replacement.
std::vector<std::pair<Index, Index>> sample_coordinate_pairs(Index dim, Index pair_budget,
                                                             std::uint64_t seed);

/// Mean 2-D projected area of a zonotope over sampled coordinate pairs.
EfficiencyReport efficiency(const Zonotope& set, double eps, Index pair_budget,
                            std::uint64_t seed, const std::string& method);

/// Same metric for an interval band (projections are rectangles).
EfficiencyReport efficiency(const Band& band, double eps, Index pair_budget,
                            std::uint64_t seed, const std::string& method);

/// Deterministic comparison table, sorted by (method, eps), in the
/// X.XXXe+YY scientific style. Returns the text table; the CSV twins are
/// written by the io helpers.
std::string compare_report(const std::vector<CoverageReport>& coverage,
                           const std::vector<EfficiencyReport>& efficiency);

std::string coverage_csv(const std::vector<CoverageReport>& reports);
std::string efficiency_csv(const std::vector<EfficiencyReport>& reports);
std::vector<CoverageReport> parse_coverage_csv(const std::string& text);
std::vector<EfficiencyReport> parse_efficiency_csv(const std::string& text);

}  // namespace zonoconform

#endif  // ZONOCONFORM_EVAL_HPP_
