#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/catalog.hpp"
#include "carnot/modelcheck.hpp"

using namespace ratlin;
using namespace modelcheck;
using catalog::carnot_c;
using freenilp::build_free;

TEST_CASE("the zero ideal is invariant, and the verdict tracks orbit closure") {
  auto F = build_free(3, 3);
  auto rep = carnot_model_check(F, Subspace(F.dim()));
  CHECK(rep.verdict);
  CHECK(rep.orbit_closure_dim == 0);
}

TEST_CASE("the evaluation-kernel ideal is invariant") {
  auto q = catalog::c3_quotient(3);
  auto rep = carnot_model_check(q.free3, q.ideal);
  CHECK(rep.verdict);
  CHECK(rep.orbit_closure_dim == rep.ideal_dim);
}

TEST_CASE("a non-invariant ideal yields a re-verifiable witness") {
  auto F = build_free(2, 3);
  // the ideal generated by [A1,[A1,A2]] alone is not rotation-invariant
  std::vector<Vec> rows = {unit_vec(F.dim(), 3)};
  Subspace ideal = Subspace::span(rows, F.dim());
  REQUIRE(liecore::is_ideal(F.algebra(), ideal));
  auto rep = carnot_model_check(F, ideal);
  CHECK(!rep.verdict);
  REQUIRE(rep.witness);
  CHECK(ideal.contains(rep.witness->vector));
  CHECK(!ideal.contains(rep.witness->image));
  CHECK(rep.orbit_closure_dim > rep.ideal_dim);
}

TEST_CASE("model check rejects non-ideals and unstratified algebras") {
  auto F = build_free(2, 3);
  Subspace not_ideal = Subspace::span({unit_vec(F.dim(), 0)}, F.dim());
  CHECK(!carnot_model_check(F, not_ideal).error.empty());
  liecore::LieAlgebra bare(3);
  CHECK(!lie_model_check(bare).error.empty());
}

TEST_CASE("verdicts for the named algebras") {
  CHECK(lie_model_check(carnot_c(2, 4)).verdict);
  CHECK(lie_model_check(catalog::heisenberg(1)).verdict);
  auto eng = lie_model_check(catalog::engel());
  CHECK(!eng.verdict);
  CHECK(eng.witness.has_value());
  auto h2 = lie_model_check(catalog::heisenberg(2));
  CHECK(!h2.verdict);
}

TEST_CASE("nilpotentize recovers the grading of a stratified algebra") {
  // feed the engel algebra as filtered data with trivial isotropy
  auto L = catalog::engel();
  HomogeneousModelData H{L, Subspace(4),
                         Subspace::span({unit_vec(4, 0), unit_vec(4, 1)}, 4),
                         Mat::identity(2)};
  auto nil = nilpotentize(H);
  REQUIRE(nil.ok);
  CHECK((nil.layer_dims == std::vector<std::size_t>{2, 1, 1}));
  CHECK(liecore::jacobi_check(nil.graded).pass);
  CHECK(!liecore::graded_check(nil.graded));
  CHECK(carnot_isomorphic(nil.graded, L) == IsoAnswer::Yes);
}

TEST_CASE("riemannian data nilpotentizes to the abelian algebra") {
  auto rm = catalog::riemannian_model(3, Rational(2));
  HomogeneousModelData H{rm.algebra, rm.rotations, rm.translations, rm.gram};
  auto nil = nilpotentize(H);
  REQUIRE(nil.ok);
  CHECK((nil.layer_dims == std::vector<std::size_t>{3}));
  CHECK(nil.graded.brackets().empty());
  CHECK(nil.layer1_gram == rm.gram);
}

TEST_CASE("nilpotentize output obeys the stratification law") {
  catalog::RollingSpec spec{2, {Rational(1), Rational(-1)}};
  auto rs = catalog::rolling_sum_algebra(spec);
  auto nil = nilpotentize({rs.algebra, rs.k, rs.p, rs.gram});
  REQUIRE(nil.ok);
  CHECK((nil.layer_dims == std::vector<std::size_t>{2, 1, 2}));
  CHECK(liecore::jacobi_check(nil.graded).pass);
  CHECK(!liecore::graded_check(nil.graded));
  // [layer 1, layer j] spans layer j+1, not just lands inside it
  const auto& G = nil.graded;
  for (int j = 1; j < G.max_layer(); ++j) {
    Subspace l1 = G.layer_span(1), lj = G.layer_span(j);
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < l1.dim(); ++a)
      for (std::size_t b = 0; b < lj.dim(); ++b)
        rows.push_back(G.bracket(l1.basis_row(a), lj.basis_row(b)));
    CHECK(Subspace::span(rows, G.dim()) == G.layer_span(j + 1));
  }
}

TEST_CASE("nilpotentize reports non-generating horizontal data") {
  auto h = catalog::heisenberg(2);
  HomogeneousModelData H{h, Subspace(5),
                         Subspace::span({unit_vec(5, 0), unit_vec(5, 1)}, 5),
                         Mat::identity(2)};
  auto nil = nilpotentize(H);  // [X1, X2] = 0: the flag stalls at dim 2
  CHECK(!nil.ok);
  CHECK((nil.stabilized_growth == std::vector<std::size_t>{2}));
}

TEST_CASE("carnot isomorphism answers") {
  CHECK(carnot_isomorphic(carnot_c(2, 3), carnot_c(2, 3)) == IsoAnswer::Yes);
  CHECK(carnot_isomorphic(carnot_c(2, 3), carnot_c(3, 3)) == IsoAnswer::No);
  // same layer dims (2,1,2) but the free quotients differ by invariant ideals
  CHECK(carnot_isomorphic(carnot_c(2, 3), build_free(2, 3).algebra()) ==
        IsoAnswer::Yes);  // f_{2,3} has layer dims (2,1,2) = C_{2,3}
  CHECK(carnot_isomorphic(catalog::heisenberg(2), carnot_c(2, 2)) == IsoAnswer::No);
}
