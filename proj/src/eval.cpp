#include "zonoconform/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace zonoconform {

CoverageReport empirical_coverage(const std::function<bool(Index)>& contains_row,
                                  Index n_test, double eps, const std::string& method) {
  check_arg(n_test >= 1, "empirical_coverage: empty test set");
  CoverageReport rep;
  rep.method = method;
  rep.eps = eps;
  rep.n_test = n_test;
  for (Index i = 0; i < n_test; ++i)
    if (contains_row(i)) ++rep.covered;
  rep.coverage = static_cast<double>(rep.covered) / static_cast<double>(n_test);
  rep.mc_stderr = std::sqrt(std::max(rep.coverage * (1.0 - rep.coverage), 0.0) /
                            static_cast<double>(n_test));
  return rep;
}

std::vector<std::pair<Index, Index>> sample_coordinate_pairs(Index dim, Index pair_budget,
                                                             std::uint64_t seed) {
  check_arg(dim >= 2, "sample_coordinate_pairs: need at least two dimensions");
  check_arg(pair_budget >= 1, "sample_coordinate_pairs: pair budget must be positive");
  const Index total = dim * (dim - 1) / 2;
  std::vector<std::pair<Index, Index>> pairs;
  if (total <= pair_budget) {
    for (Index i = 0; i < dim; ++i)
      for (Index j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);
    return pairs;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, dim - 1);
  std::vector<char> used(static_cast<size_t>(dim * dim), 0);
  while (static_cast<Index>(pairs.size()) < pair_budget) {
    Index i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    char& flag = used[static_cast<size_t>(i * dim + j)];
    if (flag) continue;
    flag = 1;
    pairs.emplace_back(i, j);
  }
  return pairs;
}

EfficiencyReport efficiency(const Zonotope& set, double eps, Index pair_budget,
                            std::uint64_t seed, const std::string& method) {
  EfficiencyReport rep;
  rep.method = method;
  rep.eps = eps;
  rep.seed = seed;
  const auto pairs = sample_coordinate_pairs(set.dim(), pair_budget, seed);
  double sum = 0.0;
  for (const auto& [i, j] : pairs) sum += projected_area_2d(set, i, j);
  rep.pairs_sampled = static_cast<Index>(pairs.size());
  rep.mean_projected_area = sum / static_cast<double>(pairs.size());
  return rep;
}

EfficiencyReport efficiency(const Band& band, double eps, Index pair_budget,
                            std::uint64_t seed, const std::string& method) {
  EfficiencyReport rep;
  rep.method = method;
  rep.eps = eps;
  rep.seed = seed;
  const Vector width = band.upper - band.lower;
  const auto pairs = sample_coordinate_pairs(width.size(), pair_budget, seed);
  double sum = 0.0;
  for (const auto& [i, j] : pairs) sum += width[i] * width[j];
  rep.pairs_sampled = static_cast<Index>(pairs.size());
  rep.mean_projected_area = sum / static_cast<double>(pairs.size());
  return rep;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

std::string compare_report(const std::vector<CoverageReport>& coverage,
                           const std::vector<EfficiencyReport>& efficiency) {
  std::vector<CoverageReport> cov = coverage;
  std::vector<EfficiencyReport> eff = efficiency;
  auto by_key = [](const auto& a, const auto& b) {
    return a.method != b.method ? a.method < b.method : a.eps < b.eps;
  };
  std::stable_sort(cov.begin(), cov.end(), by_key);
  std::stable_sort(eff.begin(), eff.end(), by_key);

  std::ostringstream out;
  out << "method            eps    coverage   stderr      efficiency\n";
  out << "-----------------------------------------------------------\n";
  for (const CoverageReport& c : cov) {
    const EfficiencyReport* match = nullptr;
    for (const EfficiencyReport& e : eff)
      if (e.method == c.method && e.eps == c.eps) {
        match = &e;
        break;
      }
    char line[160];
    std::snprintf(line, sizeof(line), "%-16s  %-5g  %-9.4f  %-10s  %s\n", c.method.c_str(),
                  c.eps, c.coverage, sci(c.mc_stderr).c_str(),
                  match ? sci(match->mean_projected_area).c_str() : "-");
    out << line;
  }
  for (const EfficiencyReport& e : eff) {
    bool seen = false;
    for (const CoverageReport& c : cov)
      if (e.method == c.method && e.eps == c.eps) seen = true;
    if (!seen) {
      char line[160];
      std::snprintf(line, sizeof(line), "%-16s  %-5g  %-9s  %-10s  %s\n", e.method.c_str(),
                    e.eps, "-", "-", sci(e.mean_projected_area).c_str());
      out << line;
    }
  }
  return out.str();
}

std::string coverage_csv(const std::vector<CoverageReport>& reports) {
  std::ostringstream out;
  out << "method,eps,n_test,covered,coverage,mc_stderr\n";
  for (const CoverageReport& r : reports)
    out << r.method << ',' << num(r.eps) << ',' << r.n_test << ',' << r.covered << ','
        << num(r.coverage) << ',' << num(r.mc_stderr) << '\n';
  return out.str();
}

std::string efficiency_csv(const std::vector<EfficiencyReport>& reports) {
  std::ostringstream out;
  out << "method,eps,mean_projected_area,pairs_sampled,seed\n";
  for (const EfficiencyReport& r : reports)
    out << r.method << ',' << num(r.eps) << ',' << num(r.mean_projected_area) << ','
        << r.pairs_sampled << ',' << r.seed << '\n';
  return out.str();
}

std::vector<CoverageReport> parse_coverage_csv(const std::string& text) {
  std::vector<CoverageReport> out;
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);  // header
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    const auto cells = split_line(line);
    check_arg(cells.size() == 6, "coverage csv: expected 6 columns");
    CoverageReport r;
    r.method = cells[0];
    r.eps = std::stod(cells[1]);
    r.n_test = std::stol(cells[2]);
    r.covered = std::stol(cells[3]);
    r.coverage = std::stod(cells[4]);
    r.mc_stderr = std::stod(cells[5]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<EfficiencyReport> parse_efficiency_csv(const std::string& text) {
  std::vector<EfficiencyReport> out;
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    const auto cells = split_line(line);
    check_arg(cells.size() == 5, "efficiency csv: expected 5 columns");
    EfficiencyReport r;
    r.method = cells[0];
    r.eps = std::stod(cells[1]);
    r.mean_projected_area = std::stod(cells[2]);
    r.pairs_sampled = std::stol(cells[3]);
    r.seed = std::stoull(cells[4]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace zonoconform
