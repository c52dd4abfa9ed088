#ifndef ZONOCONFORM_IO_HPP_
#define ZONOCONFORM_IO_HPP_

#include <string>

#include <json.hpp>

#include "zonoconform/calibration.hpp"
#include "zonoconform/fitting.hpp"
#include "zonoconform/functional.hpp"
#include "zonoconform/sets.hpp"
#include "zonoconform/types.hpp"

namespace zonoconform {

using Json = nlohmann::json;

/// CSV convention: rows are samples, columns are dimensions, no header
/// unless skip_header. Malformed cells report their row and column.
SampleMatrix read_csv_matrix(const std::string& path, bool skip_header = false);
void write_csv_matrix(const std::string& path, const Matrix& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// JSON schemas. Zonotope generators are listed column-wise (one array per
// generator); plain matrices (e.g. the SVD basis) are row-major.
Json to_json(const Zonotope& z);
Zonotope zonotope_from_json(const Json& j);

Json to_json(const Hyperrectangle& box);
Hyperrectangle hyperrectangle_from_json(const Json& j);

Json to_json(const NestedZonotopeFamily& family);
NestedZonotopeFamily family_from_json(const Json& j);

Json to_json(const AlphaGrid& grid);
AlphaGrid grid_from_json(const Json& j);

Json to_json(const CalibratedFamily& cf);
CalibratedFamily calibrated_family_from_json(const Json& j);

Json to_json(const FitResult& fit);
FitResult fit_result_from_json(const Json& j);

/// Functional artifacts keep the SVD basis in a sibling CSV file named in
/// the JSON ("v_file"), resolved relative to the JSON's directory.
void save_functional_fit(const FunctionalFit& fit, const std::string& json_path);
FunctionalFit load_functional_fit(const std::string& json_path);

void save_model(const FunctionalConformalModel& model, const std::string& json_path);
FunctionalConformalModel load_model(const std::string& json_path);

Json to_json(const FunctionalPredictionSet& pred);

/// Envelope CSV: one row per output dimension; columns are
/// index, then lower/upper per eps level.
std::string envelope_csv(const Envelope& env);

}  // namespace zonoconform

#endif  // ZONOCONFORM_IO_HPP_
