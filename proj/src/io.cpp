#include "zonoconform/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace zonoconform {

namespace {

double parse_cell(const std::string& cell, Index row, Index col) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
  double value = 0.0;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw std::invalid_argument("csv: non-numeric cell at row " + std::to_string(row + 1) +
                                ", column " + std::to_string(col + 1) + ": '" + cell + "'");
  return value;
}

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vector vector_from_json(const Json& arr) {
  Vector v(static_cast<Index>(arr.size()));
  for (size_t i = 0; i < arr.size(); ++i) v[static_cast<Index>(i)] = arr[i].get<double>();
  return v;
}

Json matrix_rows_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i).transpose()));
  return rows;
}

Matrix matrix_rows_from_json(const Json& rows) {
  if (rows.empty()) return Matrix(0, 0);
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows[0].size());
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    check_arg(static_cast<Index>(rows[static_cast<size_t>(i)].size()) == c,
              "json matrix: ragged rows");
    for (Index j = 0; j < c; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)].get<double>();
  }
  return m;
}

std::string sibling_path(const std::string& json_path, const std::string& name) {
  return (std::filesystem::path(json_path).parent_path() / name).string();
}

}  // namespace

SampleMatrix read_csv_matrix(const std::string& path, bool skip_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  Index lineno = 0;
  if (skip_header && std::getline(in, line)) ++lineno;
  Index data_row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      ++lineno;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    Index col = 0;
    while (std::getline(ss, cell, ',')) row.push_back(parse_cell(cell, data_row, col++));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("csv: row " + std::to_string(data_row + 1) + " has " +
                                  std::to_string(row.size()) + " columns, expected " +
                                  std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
    ++data_row;
    ++lineno;
  }
  if (rows.empty()) throw std::invalid_argument("csv: no data rows in " + path);
  SampleMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

void write_csv_matrix(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.precision(17);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

Json to_json(const Zonotope& z) {
  Json j;
  j["center"] = vector_to_json(z.center);
  Json gens = Json::array();
  for (Index k = 0; k < z.num_generators(); ++k) gens.push_back(vector_to_json(z.generators.col(k)));
  j["generators"] = gens;
  return j;
}

Zonotope zonotope_from_json(const Json& j) {
  const Vector center = vector_from_json(j.at("center"));
  const Json& gens = j.at("generators");
  Matrix g(center.size(), static_cast<Index>(gens.size()));
  for (size_t k = 0; k < gens.size(); ++k) {
    const Vector col = vector_from_json(gens[k]);
    check_arg(col.size() == center.size(), "zonotope json: generator length mismatch");
    g.col(static_cast<Index>(k)) = col;
  }
  return Zonotope(center, std::move(g));
}

Json to_json(const Hyperrectangle& box) {
  return Json{{"center", vector_to_json(box.center)}, {"radius", vector_to_json(box.radius)}};
}

Hyperrectangle hyperrectangle_from_json(const Json& j) {
  return Hyperrectangle(vector_from_json(j.at("center")), vector_from_json(j.at("radius")));
}

Json to_json(const NestedZonotopeFamily& family) {
  return Json{{"base", to_json(family.base)}, {"core", vector_to_json(family.core)}};
}

NestedZonotopeFamily family_from_json(const Json& j) {
  return NestedZonotopeFamily(zonotope_from_json(j.at("base")), vector_from_json(j.at("core")));
}

Json to_json(const AlphaGrid& grid) {
  return Json{{"size", grid.size()}, {"values", grid.values()}};
}

AlphaGrid grid_from_json(const Json& j) {
  return AlphaGrid(j.at("values").get<std::vector<double>>());
}

Json to_json(const CalibratedFamily& cf) {
  return Json{{"family", to_json(cf.family)},
              {"scores", cf.scores},
              {"grid", to_json(cf.grid)},
              {"n", cf.n}};
}

CalibratedFamily calibrated_family_from_json(const Json& j) {
  CalibratedFamily cf;
  cf.family = family_from_json(j.at("family"));
  cf.scores = j.at("scores").get<std::vector<double>>();
  cf.grid = grid_from_json(j.at("grid"));
  cf.n = j.at("n").get<Index>();
  check_arg(cf.n == static_cast<Index>(cf.scores.size()), "calibrated family json: n mismatch");
  check_arg(std::is_sorted(cf.scores.begin(), cf.scores.end()),
            "calibrated family json: scores must be ascending");
  return cf;
}

Json to_json(const FitResult& fit) {
  Json j;
  j["method"] = to_string(fit.method);
  j["depth"] = to_string(fit.depth);
  j["inflation"] = fit.inflation;
  j["core_depth"] = fit.core_depth;
  j["family"] = to_json(fit.family);
  if (fit.basis) {
    j["basis"] = Json{{"v", matrix_rows_to_json(fit.basis->v)},
                      {"sigma", vector_to_json(fit.basis->sigma)}};
  } else {
    j["basis"] = nullptr;
  }
  return j;
}

FitResult fit_result_from_json(const Json& j) {
  FitResult fit;
  fit.method = fit_method_from_string(j.at("method").get<std::string>());
  fit.depth = depth_method_from_string(j.at("depth").get<std::string>());
  fit.inflation = j.at("inflation").get<double>();
  fit.core_depth = j.at("core_depth").get<double>();
  fit.family = family_from_json(j.at("family"));
  if (!j.at("basis").is_null()) {
    FitBasis basis;
    basis.v = matrix_rows_from_json(j.at("basis").at("v"));
    basis.sigma = vector_from_json(j.at("basis").at("sigma"));
    fit.basis = std::move(basis);
  }
  return fit;
}

namespace {

Json svd_to_json(const ErrorSvd& svd, const std::string& v_file) {
  return Json{{"sigma", vector_to_json(svd.sigma)},
              {"k", svd.k},
              {"variance_fraction", svd.variance_fraction},
              {"degenerate", svd.degenerate},
              {"output_dim", svd.output_dim()},
              {"v_file", v_file}};
}

ErrorSvd svd_from_json(const Json& j, const std::string& json_path) {
  ErrorSvd svd;
  svd.sigma = vector_from_json(j.at("sigma"));
  svd.k = j.at("k").get<Index>();
  svd.variance_fraction = j.at("variance_fraction").get<double>();
  svd.degenerate = j.at("degenerate").get<bool>();
  const Index l = j.at("output_dim").get<Index>();
  if (svd.sigma.size() == 0) {
    svd.v = Matrix::Zero(l, 0);
  } else {
    svd.v = read_csv_matrix(sibling_path(json_path, j.at("v_file").get<std::string>()));
    check_arg(svd.v.rows() == l && svd.v.cols() == svd.sigma.size(),
              "model json: V matrix shape mismatch");
    const Matrix gram = svd.v.transpose() * svd.v;
    check_arg((gram - Matrix::Identity(svd.v.cols(), svd.v.cols())).cwiseAbs().maxCoeff() < 1e-8,
              "model json: V columns are not orthonormal");
  }
  check_arg(svd.k >= 0 && svd.k <= svd.sigma.size(), "model json: invalid truncation rank");
  for (Index i = 1; i < svd.sigma.size(); ++i)
    check_arg(svd.sigma[i] <= svd.sigma[i - 1] + 1e-12, "model json: sigma must be nonincreasing");
  return svd;
}

std::string v_file_name(const std::string& json_path) {
  return std::filesystem::path(json_path).stem().string() + "_V.csv";
}

}  // namespace

void save_functional_fit(const FunctionalFit& fit, const std::string& json_path) {
  const std::string v_name = v_file_name(json_path);
  Json j;
  j["functional"] = true;
  j["svd"] = svd_to_json(fit.svd, v_name);
  j["fit"] = fit.svd.degenerate ? Json(nullptr) : to_json(fit.fit);
  j["trunc_box"] = to_json(fit.trunc_box);
  j["trunc_inflation"] = fit.trunc_inflation;
  write_text_file(json_path, j.dump(2));
  if (!fit.svd.degenerate) write_csv_matrix(sibling_path(json_path, v_name), fit.svd.v);
}

FunctionalFit load_functional_fit(const std::string& json_path) {
  const Json j = Json::parse(read_text_file(json_path));
  check_arg(j.value("functional", false), "not a functional fit file");
  FunctionalFit fit;
  fit.svd = svd_from_json(j.at("svd"), json_path);
  if (!j.at("fit").is_null()) fit.fit = fit_result_from_json(j.at("fit"));
  fit.trunc_box = hyperrectangle_from_json(j.at("trunc_box"));
  fit.trunc_inflation = j.at("trunc_inflation").get<double>();
  return fit;
}

void save_model(const FunctionalConformalModel& model, const std::string& json_path) {
  const std::string v_name = v_file_name(json_path);
  Json j;
  j["functional"] = true;
  j["svd"] = svd_to_json(model.svd, v_name);
  j["calibrated"] = model.degenerate ? Json(nullptr) : to_json(model.calibrated);
  j["trunc_box"] = to_json(model.trunc_box);
  j["output_dim"] = model.output_dim;
  write_text_file(json_path, j.dump(2));
  if (!model.degenerate) write_csv_matrix(sibling_path(json_path, v_name), model.svd.v);
}

FunctionalConformalModel load_model(const std::string& json_path) {
  const Json j = Json::parse(read_text_file(json_path));
  check_arg(j.value("functional", false), "not a functional model file");
  FunctionalConformalModel model;
  model.svd = svd_from_json(j.at("svd"), json_path);
  if (!j.at("calibrated").is_null())
    model.calibrated = calibrated_family_from_json(j.at("calibrated"));
  model.trunc_box = hyperrectangle_from_json(j.at("trunc_box"));
  model.output_dim = j.at("output_dim").get<Index>();
  model.degenerate = j.at("svd").at("degenerate").get<bool>();
  return model;
}

Json to_json(const FunctionalPredictionSet& pred) {
  Json levels = Json::array();
  for (size_t i = 0; i < pred.eps_levels.size(); ++i)
    levels.push_back(Json{{"eps", pred.eps_levels[i]}, {"set", to_json(pred.sets[i])}});
  return Json{{"base_point", vector_to_json(pred.base_point)}, {"levels", levels}};
}

std::string envelope_csv(const Envelope& env) {
  std::ostringstream out;
  out.precision(17);
  out << "index";
  for (double eps : env.eps_levels) out << ",lower_eps" << eps << ",upper_eps" << eps;
  out << '\n';
  for (Index i = 0; i < env.lower.rows(); ++i) {
    out << i;
    for (Index s = 0; s < env.lower.cols(); ++s)
      out << ',' << env.lower(i, s) << ',' << env.upper(i, s);
    out << '\n';
  }
  return out.str();
}

}  // namespace zonoconform
