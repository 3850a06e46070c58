#include "carnot/json_io.hpp"

#include <stdexcept>

namespace jsonio {

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(c.str());
  return arr;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector JSON must be an array");
  Vec v;
  for (const auto& e : j) v.push_back(Rational::parse(e.get<std::string>()));
  return v;
}

json mat_to_json(const Mat& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(vec_to_json(m.row(i)));
  return arr;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  if (rows.empty()) return Mat();
  return Mat::from_rows(rows, rows[0].size());
}

json algebra_to_json(const LieAlgebra& L) {
  json out;
  out["dim"] = L.dim();
  out["basis"] = L.basis_labels();
  if (L.layers()) out["layers"] = *L.layers();
  json brackets = json::array();
  for (const auto& [ij, coeffs] : L.brackets()) {
    json entry;
    entry["i"] = ij.first;
    entry["j"] = ij.second;
    json cj;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero()) cj[std::to_string(k)] = coeffs[k].str();
    entry["coeffs"] = std::move(cj);
    brackets.push_back(std::move(entry));
  }
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra algebra_from_json(const json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) labels = j["basis"].get<std::vector<std::string>>();
  LieAlgebra L(dim, std::move(labels));
  for (const auto& entry : j.at("brackets")) {
    std::size_t i = entry.at("i").get<std::size_t>();
    std::size_t jj = entry.at("j").get<std::size_t>();
    Vec coeffs = ratlin::zero_vec(dim);
    for (const auto& [key, val] : entry.at("coeffs").items()) {
      std::size_t k = std::stoul(key);
      if (k >= dim) throw std::invalid_argument("bracket coefficient index out of range");
      coeffs[k] = Rational::parse(val.get<std::string>());
    }
    L.set_bracket(i, jj, std::move(coeffs));
  }
  if (j.contains("layers")) L.set_layers(j["layers"].get<std::vector<int>>());
  return L;
}

json subspace_to_json(const Subspace& s) { return mat_to_json(s.basis()); }

Subspace subspace_from_json(const json& j, std::size_t ambient) {
  std::vector<Vec> rows;
  for (const auto& r : j) {
    Vec v = vec_from_json(r);
    if (v.size() != ambient)
      throw std::invalid_argument("subspace row has wrong ambient dimension");
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, ambient);
}

json homogeneous_to_json(const modelcheck::HomogeneousModelData& H) {
  json out = algebra_to_json(H.g);
  json marks;
  marks["horizontal"] = subspace_to_json(H.p1);
  marks["isotropy"] = subspace_to_json(H.k);
  marks["gram"] = mat_to_json(H.gram);
  out["marks"] = std::move(marks);
  return out;
}

modelcheck::HomogeneousModelData homogeneous_from_json(const json& j) {
  LieAlgebra g = algebra_from_json(j);
  std::size_t dim = g.dim();
  modelcheck::HomogeneousModelData H;
  if (j.contains("marks")) {
    const json& m = j["marks"];
    H.p1 = m.contains("horizontal") ? subspace_from_json(m["horizontal"], dim)
                                    : Subspace(dim);
    H.k = m.contains("isotropy") ? subspace_from_json(m["isotropy"], dim)
                                 : Subspace(dim);
    H.gram = m.contains("gram") ? mat_from_json(m["gram"]) : Mat::identity(H.p1.dim());
  } else if (g.layers()) {
    // bare stratified algebra: horizontal = layer 1, no isotropy
    H.p1 = g.layer_span(1);
    H.k = Subspace(dim);
    H.gram = Mat::identity(H.p1.dim());
  } else {
    throw std::invalid_argument("input has neither marks nor a layer grading");
  }
  H.g = std::move(g);
  return H;
}

json model_report_to_json(const modelcheck::ModelCheckReport& r) {
  json out;
  if (!r.error.empty()) {
    out["error"] = r.error;
    return out;
  }
  out["verdict"] = r.verdict;
  if (r.witness) {
    json w;
    w["action"] = r.witness->reflection ? "reflection" : "derivation";
    if (!r.witness->reflection) w["generator"] = r.witness->generator;
    w["vector"] = vec_to_json(r.witness->vector);
    w["image"] = vec_to_json(r.witness->image);
    out["witness"] = std::move(w);
  }
  out["invariance_dims"] = {{"ideal", r.ideal_dim},
                            {"orbit_closure", r.orbit_closure_dim}};
  return out;
}

json holonomy_to_json(const holonomy::HolonomyResult& r) {
  json out;
  if (!r.error.empty()) {
    out["error"] = r.error;
    return out;
  }
  out["verdict"] = holonomy::to_string(r.verdict);
  out["decomposition"] = r.decomposition_kind;
  out["generated_dim"] = r.generated.dim();
  return out;
}

}  // namespace jsonio
