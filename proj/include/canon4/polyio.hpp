#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "canon4/matrix.hpp"
#include "canon4/model.hpp"
#include "canon4/poly.hpp"

namespace canon4 {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts either {"vars": [...], "terms": [...]} or an expression string.
// When expected_vars is nonempty the polynomial is re-expressed in it.
MultiPoly poly_from_json(const json& j, const std::vector<std::string>& expected_vars,
                         const std::string& where = "");
json poly_to_json(const MultiPoly& p);

RatMatrix matrix_from_json(const json& j, const std::string& where = "");
json matrix_to_json(const RatMatrix& m);
json matrix_to_json(const IntMatrix& m);

json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j, const FieldPtr& field, const std::string& where);

TwoThreeScheme parse_scheme(const json& j);
CubicThreefold parse_cubic(const json& j);
json emit_scheme(const TwoThreeScheme& C);
json emit_cubic(const CubicThreefold& X);

json load_json_file(const std::string& path);

}  // namespace canon4
