#include "zonoconform/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zonoconform/eval.hpp"
#include "zonoconform/io.hpp"

namespace zonoconform {

namespace {

struct CommonOpts {
  std::string input;
  std::string truths;
  std::string predictions;
  std::string method = "rotated_box";
  std::string depth = "mahalanobis";
  double variance_fraction = 0.99;
  double inflation = 0.0;
  double trunc_inflation = 0.0;
  Index grid_size = 0;  // 0: default rule max(1000, n+1)
  std::string eps_list = "0.1";
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  bool header = false;
  bool strict_quantile = false;
  std::string out = "out.json";
  std::string format = "json";
};

std::vector<double> parse_eps(const std::string& list) {
  std::vector<double> eps;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const double e = std::stod(item);
    check_domain(e > 0.0 && e < 1.0, "--eps values must lie in (0,1)");
    eps.push_back(e);
  }
  check_arg(!eps.empty(), "--eps produced an empty list");
  return eps;
}

FitConfig make_fit_config(const CommonOpts& o) {
  FitConfig cfg;
  cfg.method = fit_method_from_string(o.method);
  cfg.depth = depth_method_from_string(o.depth);
  cfg.inflation = o.inflation;
  cfg.tol = o.tol;
  return cfg;
}

bool functional_mode(const CommonOpts& o) {
  check_arg(o.truths.empty() == o.predictions.empty(),
            "--truths and --predictions must be given together");
  return !o.truths.empty();
}

std::string sibling(const std::string& path, const std::string& stem_suffix,
                    const std::string& ext) {
  std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + stem_suffix + ext)).string();
}

int cmd_fit(const CommonOpts& o) {
  if (functional_mode(o)) {
    const SampleMatrix truths = read_csv_matrix(o.truths, o.header);
    const SampleMatrix preds = read_csv_matrix(o.predictions, o.header);
    const SampleMatrix errors = compute_errors(truths, preds);
    const FunctionalFit fitted =
        fit_functional(errors, make_fit_config(o), o.variance_fraction, o.trunc_inflation);
    save_functional_fit(fitted, o.out);
    if (fitted.svd.degenerate) {
      std::cout << "fit: degenerate zero-error input; prediction sets collapse to the"
                   " base point\n";
    } else {
      std::cout << "fit: output_dim=" << fitted.svd.output_dim() << " rank=" << fitted.svd.rank()
                << " kept=" << fitted.svd.k << " trunc_dim=" << fitted.trunc_box.dim()
                << " generators=" << fitted.fit.family.base.num_generators()
                << " core_depth=" << fitted.fit.core_depth << '\n';
    }
    return 0;
  }
  const SampleMatrix data = read_csv_matrix(o.input, o.header);
  const FitResult fitted = fit(data, make_fit_config(o));
  write_text_file(o.out, to_json(fitted).dump(2));
  std::cout << "fit: dims=" << fitted.family.base.dim()
            << " generators=" << fitted.family.base.num_generators()
            << " core_depth=" << fitted.core_depth << '\n';
  return 0;
}

int cmd_calibrate(const CommonOpts& o, const std::string& fit_path) {
  const Json fit_json = Json::parse(read_text_file(fit_path));
  const bool functional_fit = fit_json.value("functional", false);

  if (functional_mode(o)) {
    check_arg(functional_fit, "calibrate: functional inputs need a functional fit file");
    const FunctionalFit fitted = load_functional_fit(fit_path);
    const SampleMatrix truths = read_csv_matrix(o.truths, o.header);
    const SampleMatrix preds = read_csv_matrix(o.predictions, o.header);
    const SampleMatrix errors = compute_errors(truths, preds);
    check_arg(fitted.svd.degenerate || errors.cols() == fitted.svd.output_dim(),
              "calibrate: dimension mismatch between fit and data");
    const AlphaGrid grid =
        o.grid_size > 0 ? AlphaGrid::uniform(o.grid_size) : AlphaGrid::default_for(errors.rows());
    FunctionalConformalModel model = calibrate_functional(fitted, errors, grid, o.tol);
    save_model(model, o.out);
    std::cout << "calibrate: n=" << errors.rows() << " grid=" << grid.size()
              << " trunc_dim=" << model.trunc_box.dim() << '\n';
    if (!model.degenerate) {
      for (const double eps : parse_eps(o.eps_list))
        std::cout << "  eps=" << eps << " coverage_on_calibration="
                  << calibration_coverage(model.calibrated, eps, o.strict_quantile) << '\n';
    }
    return 0;
  }

  check_arg(!functional_fit, "calibrate: --input expects a multivariate fit file");
  const FitResult fitted = fit_result_from_json(fit_json);
  const SampleMatrix data = read_csv_matrix(o.input, o.header);
  check_arg(data.cols() == fitted.family.base.dim(),
            "calibrate: dimension mismatch between fit and data");
  const AlphaGrid grid =
      o.grid_size > 0 ? AlphaGrid::uniform(o.grid_size) : AlphaGrid::default_for(data.rows());
  const CalibratedFamily cf = calibrate(fitted.family, data, grid, o.tol);
  write_text_file(o.out, to_json(cf).dump(2));
  std::cout << "calibrate: n=" << cf.n << " grid=" << grid.size() << '\n';
  for (const double eps : parse_eps(o.eps_list))
    std::cout << "  eps=" << eps
              << " coverage_on_calibration=" << calibration_coverage(cf, eps, o.strict_quantile)
              << '\n';
  return 0;
}

int cmd_predict(const CommonOpts& o, const std::string& model_path) {
  const Json model_json = Json::parse(read_text_file(model_path));
  const std::vector<double> eps = parse_eps(o.eps_list);

  if (model_json.value("functional", false)) {
    const FunctionalConformalModel model = load_model(model_path);
    const SampleMatrix bases = read_csv_matrix(o.input, o.header);
    check_arg(bases.cols() == model.output_dim, "predict: base point dimension mismatch");
    for (Index i = 0; i < bases.rows(); ++i) {
      const FunctionalPredictionSet pred = predict(model, bases.row(i).transpose(), eps);
      const std::string suffix = bases.rows() > 1 ? "_row" + std::to_string(i) : "";
      write_text_file(sibling(o.out, suffix, ".json"), to_json(pred).dump(2));
      write_text_file(sibling(o.out, suffix + "_envelope", ".csv"),
                      envelope_csv(axis_envelopes(pred)));
    }
    std::cout << "predict: " << bases.rows() << " base point(s), " << eps.size()
              << " eps level(s)\n";
    return 0;
  }

  const CalibratedFamily cf = calibrated_family_from_json(model_json);
  Json out = Json::array();
  for (const double e : eps) {
    const LevelSetResult level = level_set(cf, e, o.strict_quantile);
    if (level.conservative_fallback)
      std::cerr << "warning: eps=" << e << " below 1/n; returning the full base set\n";
    out.push_back(Json{{"eps", e}, {"alpha", level.alpha}, {"set", to_json(level.set)}});
  }
  write_text_file(o.out, out.dump(2));
  std::cout << "predict: " << eps.size() << " level set(s)\n";
  return 0;
}

int cmd_coverage(const CommonOpts& o, const std::string& model_path,
                 const std::string& cal_truths, const std::string& cal_predictions,
                 Index pair_budget) {
  const FunctionalConformalModel model = load_model(model_path);
  const SampleMatrix truths = read_csv_matrix(o.truths, o.header);
  const SampleMatrix preds = read_csv_matrix(o.predictions, o.header);
  check_arg(truths.rows() == preds.rows() && truths.cols() == preds.cols(),
            "coverage: truths/predictions shape mismatch");
  check_arg(truths.cols() == model.output_dim, "coverage: dimension mismatch with model");
  const std::vector<double> eps = parse_eps(o.eps_list);
  const Index n_test = truths.rows();

  std::vector<CoverageReport> cov;
  std::vector<EfficiencyReport> eff;

  for (const double e : eps) {
    cov.push_back(empirical_coverage(
        [&](Index i) {
          return contains_function(model, e, preds.row(i).transpose(),
                                   truths.row(i).transpose(), kLpInfinity, o.tol);
        },
        n_test, e, "zonotope"));
    const FunctionalPredictionSet pred = predict(model, Vector::Zero(model.output_dim), eps);
    const size_t at = static_cast<size_t>(&e - eps.data());
    eff.push_back(efficiency(pred.sets[at], e, pair_budget, o.seed, "zonotope"));
  }

  // Baselines need the calibration errors; skip with a notice when absent.
  if (!cal_truths.empty() && !cal_predictions.empty()) {
    const SampleMatrix ct = read_csv_matrix(cal_truths, o.header);
    const SampleMatrix cp = read_csv_matrix(cal_predictions, o.header);
    const SampleMatrix cal_errors = compute_errors(ct, cp);
    check_arg(cal_errors.cols() == model.output_dim,
              "coverage: calibration errors dimension mismatch");

    const ModulationModel mod = modulation_calibrate(cal_errors);
    for (const double e : eps) {
      const Band band0 = modulation_band(mod, Vector::Zero(model.output_dim), e);
      cov.push_back(empirical_coverage(
          [&](Index i) {
            const Band band = modulation_band(mod, preds.row(i).transpose(), e);
            return band_contains(band, truths.row(i).transpose(), o.tol);
          },
          n_test, e, "modulation"));
      eff.push_back(efficiency(band0, e, pair_budget, o.seed, "modulation"));
    }

    // Elliptical sets run on the SVD-reduced coordinates when the output
    // dimension exceeds the cap (flagged as an adaptation).
    if (model.degenerate) {
      std::cerr << "note: elliptical baseline skipped (degenerate model)\n";
    } else if (model.svd.k > 32) {
      std::cerr << "note: elliptical baseline skipped (kept dimension > 32)\n";
    } else {
      const ProjectedErrors cal_proj = project_errors(model.svd, cal_errors);
      const bool reduced = model.output_dim > 32;
      const SampleMatrix& cal_coords = reduced ? cal_proj.kept : cal_errors;
      if (reduced)
        std::cerr << "note: elliptical baseline runs on " << model.svd.k
                  << " SVD coordinates (adaptation for high-dimensional outputs)\n";
      try {
        const EllipticalModel ell = elliptical_calibrate(cal_coords);
        const SampleMatrix test_errors = compute_errors(truths, preds);
        const ProjectedErrors test_proj = project_errors(model.svd, test_errors);
        const SampleMatrix& test_coords = reduced ? test_proj.kept : test_errors;
        const Vector zero = Vector::Zero(test_coords.cols());
        for (const double e : eps) {
          cov.push_back(empirical_coverage(
              [&](Index i) {
                return elliptical_contains(ell, zero, test_coords.row(i).transpose(), e);
              },
              n_test, e, reduced ? "elliptical_svd" : "elliptical"));
        }
      } catch (const std::exception& ex) {
        std::cerr << "note: elliptical baseline skipped (" << ex.what() << ")\n";
      }
    }
  } else {
    std::cerr << "note: baselines skipped; pass --cal-truths/--cal-predictions to enable\n";
  }

  write_text_file(sibling(o.out, "_coverage", ".csv"), coverage_csv(cov));
  write_text_file(sibling(o.out, "_efficiency", ".csv"), efficiency_csv(eff));
  std::cout << compare_report(cov, eff);
  return 0;
}

int cmd_compare(const std::vector<std::string>& coverage_files,
                const std::vector<std::string>& efficiency_files, const CommonOpts& o) {
  std::vector<CoverageReport> cov;
  std::vector<EfficiencyReport> eff;
  for (const std::string& f : coverage_files) {
    const auto part = parse_coverage_csv(read_text_file(f));
    cov.insert(cov.end(), part.begin(), part.end());
  }
  for (const std::string& f : efficiency_files) {
    const auto part = parse_efficiency_csv(read_text_file(f));
    eff.insert(eff.end(), part.begin(), part.end());
  }
  const std::string table = compare_report(cov, eff);
  if (o.format == "csv") {
    write_text_file(sibling(o.out, "_coverage", ".csv"), coverage_csv(cov));
    write_text_file(sibling(o.out, "_efficiency", ".csv"), efficiency_csv(eff));
  } else {
    write_text_file(o.out, table);
  }
  std::cout << table;
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"conformal multivariate prediction sets from calibrated nested zonotopes"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string fit_path, model_path, cal_truths, cal_predictions;
  Index pair_budget = 512;
  std::vector<std::string> coverage_files, efficiency_files;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "input CSV (rows = samples)");
    cmd->add_option("--truths", o.truths, "truth CSV for functional mode");
    cmd->add_option("--predictions", o.predictions, "prediction CSV for functional mode");
    cmd->add_option("--eps", o.eps_list, "comma-separated miscoverage levels");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--tol", o.tol, "membership tolerance");
    cmd->add_option("--out", o.out, "output path");
    cmd->add_option("--format", o.format, "output format: json|csv");
    cmd->add_flag("--header", o.header, "input CSVs carry a header row");
    cmd->add_flag("--strict-quantile", o.strict_quantile,
                  "use the floor(eps(n+1)) quantile variant");
  };

  CLI::App* fit_cmd = app.add_subcommand("fit", "fit an enclosing set and core point");
  add_common(fit_cmd);
  fit_cmd->add_option("--method", o.method, "rotated_box|convex_hull");
  fit_cmd->add_option("--depth", o.depth, "euclidean|mahalanobis|tukey_approx");
  fit_cmd->add_option("--inflation", o.inflation, "relative margin on generator lengths");
  fit_cmd->add_option("--trunc-inflation", o.trunc_inflation,
                      "relative margin on the truncation box radii");
  fit_cmd->add_option("--variance-fraction", o.variance_fraction,
                      "SVD variance fraction for functional fits");

  CLI::App* cal_cmd = app.add_subcommand("calibrate", "score calibration data against a fit");
  add_common(cal_cmd);
  cal_cmd->add_option("--fit", fit_path, "fit JSON from the fit command")->required();
  cal_cmd->add_option("--grid-size", o.grid_size, "alpha grid size (default max(1000,n+1))");

  CLI::App* pred_cmd = app.add_subcommand("predict", "emit prediction sets");
  add_common(pred_cmd);
  pred_cmd->add_option("--model", model_path, "calibrated model JSON")->required();

  CLI::App* cov_cmd = app.add_subcommand("coverage", "empirical coverage and efficiency");
  add_common(cov_cmd);
  cov_cmd->add_option("--model", model_path, "calibrated functional model JSON")->required();
  cov_cmd->add_option("--cal-truths", cal_truths, "calibration truths (enables baselines)");
  cov_cmd->add_option("--cal-predictions", cal_predictions,
                      "calibration predictions (enables baselines)");
  cov_cmd->add_option("--pair-budget", pair_budget, "coordinate pairs for efficiency");

  CLI::App* cmp_cmd = app.add_subcommand("compare", "merge report CSVs into one table");
  add_common(cmp_cmd);
  cmp_cmd->add_option("--coverage", coverage_files, "coverage CSV files");
  cmp_cmd->add_option("--efficiency", efficiency_files, "efficiency CSV files");

  try {
    app.parse(argc, argv);
    if (fit_cmd->parsed()) return cmd_fit(o);
    if (cal_cmd->parsed()) return cmd_calibrate(o, fit_path);
    if (pred_cmd->parsed()) return cmd_predict(o, model_path);
    if (cov_cmd->parsed())
      return cmd_coverage(o, model_path, cal_truths, cal_predictions, pair_budget);
    if (cmp_cmd->parsed()) return cmd_compare(coverage_files, efficiency_files, o);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace zonoconform
