#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/catalog.hpp"
#include "carnot/freenilp.hpp"

using namespace ratlin;
using freenilp::build_free;
using freenilp::witt_ranks;

TEST_CASE("necklace formula gives the classical layer ranks") {
  CHECK(witt_ranks(2, 5) == std::vector<std::size_t>{2, 1, 2, 3, 6});
  CHECK(witt_ranks(3, 3) == std::vector<std::size_t>{3, 3, 8});
  CHECK(witt_ranks(2, 2) == std::vector<std::size_t>{2, 1});
  CHECK(witt_ranks(4, 2) == std::vector<std::size_t>{4, 6});
}

TEST_CASE("hall enumeration matches the necklace formula independently") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t r = 1; r <= 4; ++r) {
      auto F = build_free(n, r);
      CHECK(F.layer_ranks() == witt_ranks(n, r));
    }
}

TEST_CASE("structure constants satisfy jacobi exhaustively") {
  CHECK(liecore::jacobi_check(build_free(2, 5).algebra()).pass);
  CHECK(liecore::jacobi_check(build_free(3, 4).algebra()).pass);
}

TEST_CASE("low-degree hall words are the expected bracket trees") {
  auto F = build_free(2, 3);
  REQUIRE(F.dim() == 5);
  const auto& basis = F.hall_basis();
  CHECK(basis[0].label == "A1");
  CHECK(basis[1].label == "A2");
  CHECK(basis[2].label == "[A1,A2]");
  CHECK(basis[3].label == "[A1,[A1,A2]]");
  CHECK(basis[4].label == "[A2,[A1,A2]]");
  // [e1, e2] = e3 exactly
  CHECK(F.basis_bracket(0, 1) == unit_vec(5, 2));
  CHECK(F.basis_bracket(0, 2) == unit_vec(5, 3));
  CHECK(F.basis_bracket(1, 2) == unit_vec(5, 4));
  // step truncation: degree 4 products vanish
  CHECK(is_zero(F.basis_bracket(2, 3)));
}

TEST_CASE("induced endomorphisms are multiplicative, derivations satisfy leibniz") {
  auto F = build_free(2, 4);
  std::size_t d = F.dim();
  Mat q(2, 2);  // a generic invertible substitution
  q.at(0, 0) = Rational(1); q.at(0, 1) = Rational(2);
  q.at(1, 0) = Rational(-1); q.at(1, 1) = Rational(1);
  auto phi = freenilp::induced_endomorphism(F, q);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      CHECK(phi.apply(F.basis_bracket(i, j)) ==
            F.algebra().bracket(phi.apply(unit_vec(d, i)), phi.apply(unit_vec(d, j))));

  Mat a(2, 2);
  a.at(0, 1) = Rational(3); a.at(1, 0) = Rational(-3);
  auto der = freenilp::induced_derivation(F, a);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      CHECK(der.apply(F.basis_bracket(i, j)) ==
            F.algebra().bracket(der.apply(unit_vec(d, i)), unit_vec(d, j)) +
                F.algebra().bracket(unit_vec(d, i), der.apply(unit_vec(d, j))));
}

TEST_CASE("canonical surjection onto a quotient, with kernel") {
  auto F = build_free(2, 2);  // dim 3, the heisenberg algebra
  auto H = catalog::heisenberg(1);
  std::vector<Vec> images = {unit_vec(3, 0), unit_vec(3, 1)};
  auto s = freenilp::canonical_surjection(F, H, images);
  REQUIRE(s.ok);
  CHECK(s.kernel.dim() == 0);
  CHECK(liecore::homomorphism_check(s.map, F.algebra(), H).is_isomorphism);

  // collapsing both generators to the same image cannot span layer 1
  auto bad = freenilp::canonical_surjection(F, H, {unit_vec(3, 0), unit_vec(3, 0)});
  CHECK(!bad.ok);
}

TEST_CASE("dimension guard refuses oversized free algebras") {
  CHECK_THROWS(build_free(4, 5, 100));  // would be dim 294
}
