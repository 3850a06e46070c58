#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/catalog.hpp"
#include "carnot/equisolve.hpp"

using namespace ratlin;
using namespace equisolve;

TEST_CASE("builders produce honest representations") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK(validate(vector_rep(n, GroupTag::O)).empty());
    CHECK(validate(adjoint_rep(n, GroupTag::O)).empty());
    CHECK(validate(vector_rep(n, GroupTag::SO)).empty());
  }
  auto t = tensor_rep(adjoint_rep(3, GroupTag::O), vector_rep(3, GroupTag::O));
  CHECK(t.module_dim == 9);
  CHECK(validate(t).empty());
  auto w = wedge2_rep(adjoint_rep(3, GroupTag::O));
  CHECK(w.module_dim == 3);
  CHECK(validate(w).empty());
  CHECK(wedge2_rep(adjoint_rep(2, GroupTag::O)).module_dim == 0);
}

TEST_CASE("validation rejects a broken action") {
  auto rep = vector_rep(3, GroupTag::O);
  rep.inf_generators[0].at(0, 0) = Rational(1);
  CHECK(!validate(rep).empty());
  auto rep2 = vector_rep(3, GroupTag::O);
  rep2.reflection = Mat::identity(3).scaled(Rational(2));
  CHECK(!validate(rep2).empty());
}

TEST_CASE("commutant dimensions certify irreducibility") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(commutant_dim(vector_rep(n, GroupTag::O)) == 1);
    CHECK(commutant_dim(adjoint_rep(n, GroupTag::O)) == 1);
  }
  CHECK(commutant_dim(adjoint_rep(3, GroupTag::SO)) == 1);
  CHECK(commutant_dim(adjoint_rep(4, GroupTag::SO)) == 2);  // splits into self-dual halves
  CHECK(commutant_dim(adjoint_rep(2, GroupTag::SO)) == 1);  // trivial 1-dim module
}

TEST_CASE("restricting to the full group can only cut the space down") {
  for (std::size_t n : {std::size_t(3), std::size_t(4)}) {
    auto so_dim_space =
        equivariant_maps(adjoint_rep(n, GroupTag::SO), adjoint_rep(n, GroupTag::SO)).dim();
    auto o_dim_space =
        equivariant_maps(adjoint_rep(n, GroupTag::O), adjoint_rep(n, GroupTag::O)).dim();
    CHECK(o_dim_space <= so_dim_space);
  }
}

TEST_CASE("the rank-3 star operator intertwines vector and adjoint") {
  auto e = equivariant_maps(vector_rep(3, GroupTag::SO), adjoint_rep(3, GroupTag::SO));
  REQUIRE(e.dim() == 1);
  Mat star = catalog::hodge_star(3, 1).matrix;
  // star itself must lie in the solution line
  const Mat& b = e.basis[0].matrix;
  Rational lam;
  bool found = false;
  for (std::size_t i = 0; i < 3 && !found; ++i)
    for (std::size_t j = 0; j < 3 && !found; ++j)
      if (!b.at(i, j).is_zero()) {
        lam = star.at(i, j) / b.at(i, j);
        found = true;
      }
  REQUIRE(found);
  CHECK(star == b.scaled(lam));
  // and the intertwining relation holds for the star as a direct identity
  auto vec3 = vector_rep(3, GroupTag::SO);
  auto adj3 = adjoint_rep(3, GroupTag::SO);
  for (std::size_t p = 0; p < 3; ++p)
    CHECK(star * vec3.inf_generators[p] == adj3.inf_generators[p] * star);
  // over the full group the line disappears
  CHECK(equivariant_maps(vector_rep(3, GroupTag::O), adjoint_rep(3, GroupTag::O)).dim() == 0);
}

TEST_CASE("identity is always equivariant") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto rep = adjoint_rep(n, GroupTag::O);
    auto space = equivariant_maps(rep, rep);
    REQUIRE(space.dim() >= 1);
    bool has_identity_direction = false;
    for (const auto& b : space.basis) {
      Mat m = b.matrix;
      Rational c = m.at(0, 0);
      if (!c.is_zero() && m == Mat::identity(rep.module_dim).scaled(c))
        has_identity_direction = true;
    }
    CHECK(has_identity_direction);
  }
}

TEST_CASE("parallel and serial constraint assembly build the same system") {
  auto src = tensor_rep(adjoint_rep(3, GroupTag::O), vector_rep(3, GroupTag::O));
  auto dst = vector_rep(3, GroupTag::O);
  CHECK(assemble_constraints(src, dst) == assemble_constraints_serial(src, dst));
  auto a4 = adjoint_rep(4, GroupTag::SO);
  CHECK(assemble_constraints(a4, a4) == assemble_constraints_serial(a4, a4));
}

TEST_CASE("the three lemma shapes at small ranks") {
  auto r2 = verify_tensor_lemma(2);
  CHECK(r2.dim_s == 1);
  CHECK(r2.dim_t == 1);
  CHECK(r2.dim_w == 0);
  CHECK(r2.pass);
  auto r3 = verify_tensor_lemma(3);
  CHECK(r3.dim_s == 1);
  CHECK(r3.dim_t == 1);
  CHECK(r3.dim_w == 1);
  CHECK(r3.s_is_identity);
  CHECK(r3.t_is_evaluation);
  CHECK(r3.w_is_bracket);
  CHECK(r3.pass);
}
