#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/catalog.hpp"
#include "carnot/json_io.hpp"

using namespace ratlin;
using jsonio::json;

TEST_CASE("algebras round-trip through JSON exactly") {
  auto L = catalog::carnot_c(2, 3);
  json j = jsonio::algebra_to_json(L);
  auto back = jsonio::algebra_from_json(j);
  CHECK(back.dim() == L.dim());
  CHECK(back.basis_labels() == L.basis_labels());
  CHECK(back.brackets() == L.brackets());
  REQUIRE(back.layers());
  CHECK(*back.layers() == *L.layers());
  // and the serialization itself is stable
  CHECK(jsonio::algebra_to_json(back).dump() == j.dump());
}

TEST_CASE("rationals serialize as reduced fraction strings") {
  liecore::LieAlgebra L(3);
  L.set_bracket(0, 1, {Rational(0), Rational(0), Rational(2, 4)});
  json j = jsonio::algebra_to_json(L);
  CHECK(j["brackets"][0]["coeffs"]["2"] == "1/2");
  // zero coefficients are omitted
  CHECK(j["brackets"][0]["coeffs"].size() == 1);
}

TEST_CASE("homogeneous data keeps its marks") {
  auto mm = catalog::model_m(2, Rational(1), Rational(-1));
  modelcheck::HomogeneousModelData H{mm.algebra, mm.k, mm.horizontal, mm.gram};
  json j = jsonio::homogeneous_to_json(H);
  auto back = jsonio::homogeneous_from_json(j);
  CHECK(back.p1 == H.p1);
  CHECK(back.k == H.k);
  CHECK(back.gram == H.gram);
  CHECK(back.g.brackets() == H.g.brackets());
}

TEST_CASE("a bare stratified algebra reads as carnot data") {
  json j = jsonio::algebra_to_json(catalog::heisenberg(1));
  auto H = jsonio::homogeneous_from_json(j);
  CHECK(H.k.dim() == 0);
  CHECK(H.p1.dim() == 2);
  CHECK(H.gram == Mat::identity(2));
}

TEST_CASE("malformed input is rejected, not guessed at") {
  CHECK_THROWS(jsonio::vec_from_json(json{{"not", "array"}}));
  json bad = jsonio::algebra_to_json(catalog::engel());
  bad["brackets"][0]["coeffs"]["99"] = "1";
  CHECK_THROWS(jsonio::algebra_from_json(bad));
  liecore::LieAlgebra plain(3);  // no layers, no marks
  CHECK_THROWS(jsonio::homogeneous_from_json(jsonio::algebra_to_json(plain)));
}
