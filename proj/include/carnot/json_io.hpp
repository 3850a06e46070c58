#ifndef CARNOT_JSON_IO_HPP
#define CARNOT_JSON_IO_HPP

#include <json.hpp>

#include "carnot/holonomy.hpp"
#include "carnot/liecore.hpp"
#include "carnot/modelcheck.hpp"

/// JSON interchange. ordered_json everywhere so identical inputs produce
/// byte-identical output; rationals serialize as "p/q" ("p" when q = 1).
namespace jsonio {

using json = nlohmann::ordered_json;
using liecore::LieAlgebra;
using ratlin::Mat;
using ratlin::Rational;
using ratlin::Subspace;
using ratlin::Vec;

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

/// { "dim", "basis", "layers"?, "brackets": [ {"i","j","coeffs":{"k":"p/q"}} ] }
json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const json& j);

/// rows of the canonical basis
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, std::size_t ambient);

/// LieAlgebra JSON + "marks": { "horizontal", "isotropy", "gram" }
json homogeneous_to_json(const modelcheck::HomogeneousModelData& H);
modelcheck::HomogeneousModelData homogeneous_from_json(const json& j);

json model_report_to_json(const modelcheck::ModelCheckReport& r);
json holonomy_to_json(const holonomy::HolonomyResult& r);

}  // namespace jsonio

#endif
