#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/catalog.hpp"
#include "carnot/liecore.hpp"

using namespace ratlin;
using namespace liecore;

namespace {

LieAlgebra sl2() {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h on basis (h, e, f)
  LieAlgebra L(3, {"h", "e", "f"});
  L.set_bracket(0, 1, {Rational(0), Rational(2), Rational(0)});
  L.set_bracket(0, 2, {Rational(0), Rational(0), Rational(-2)});
  L.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});
  return L;
}

}  // namespace

TEST_CASE("bracket is antisymmetric and bilinear") {
  LieAlgebra L = sl2();
  Vec x = {Rational(1), Rational(2), Rational(-1)};
  Vec y = {Rational(0), Rational(1, 2), Rational(3)};
  CHECK(L.bracket(x, y) == Rational(-1) * L.bracket(y, x));
  CHECK(is_zero(L.bracket(x, x)));
  Vec z = {Rational(1), Rational(0), Rational(1)};
  CHECK(L.bracket(x + y, z) == L.bracket(x, z) + L.bracket(y, z));
  CHECK(L.bracket_basis(1, 0) == Rational(-1) * L.bracket_basis(0, 1));
}

TEST_CASE("jacobi check passes on a real algebra and pinpoints corruption") {
  LieAlgebra L = sl2();
  CHECK(jacobi_check(L).pass);
  CHECK(jacobi_check_serial(L).pass);

  LieAlgebra bad = sl2();
  bad.set_bracket(1, 2, {Rational(1), Rational(1), Rational(0)});  // break [e,f]
  auto r = jacobi_check(bad);
  auto rs = jacobi_check_serial(bad);
  REQUIRE(!r.pass);
  REQUIRE(!rs.pass);
  CHECK(r.i == rs.i);
  CHECK(r.j == rs.j);
  CHECK(r.k == rs.k);
  CHECK(r.residual == rs.residual);
  // the reported triple really violates the identity
  Vec check = bad.bracket(bad.bracket_basis(r.i, r.j), unit_vec(3, r.k)) +
              bad.bracket(bad.bracket_basis(r.j, r.k), unit_vec(3, r.i)) +
              bad.bracket(bad.bracket_basis(r.k, r.i), unit_vec(3, r.j));
  CHECK(check == r.residual);
}

TEST_CASE("parallel and serial jacobi agree on a large graded algebra") {
  LieAlgebra L = catalog::carnot_c(3, 5);
  CHECK(jacobi_check(L).pass == jacobi_check_serial(L).pass);
}

TEST_CASE("graded check accepts stratified brackets and flags violations") {
  LieAlgebra L = catalog::carnot_c(2, 3);
  CHECK(!graded_check(L));
  LieAlgebra bad = L;
  Vec c = zero_vec(L.dim());
  c[0] = Rational(1);  // layer-1 component in a layer-(1+2) bracket
  bad.set_bracket(0, 2, std::move(c));
  CHECK(graded_check(bad).has_value());
}

TEST_CASE("subalgebra generation and flag growth") {
  LieAlgebra L = sl2();
  Subspace e_line = Subspace::span({unit_vec(3, 1)}, 3);
  CHECK(subalgebra_generated(L, e_line).dim() == 1);  // e is nilpotent
  Subspace ef = Subspace::span({unit_vec(3, 1), unit_vec(3, 2)}, 3);
  CHECK(subalgebra_generated(L, ef).dim() == 3);  // e, f generate sl2
  auto flag = flag_growth(catalog::engel(), Subspace::span({unit_vec(4, 0), unit_vec(4, 1)}, 4));
  CHECK(growth_dims(flag) == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("ideals, quotients and the projection homomorphism") {
  LieAlgebra L = catalog::engel();
  Subspace center = Subspace::span({unit_vec(4, 3)}, 4);
  CHECK(is_ideal(L, center));
  Subspace notideal = Subspace::span({unit_vec(4, 0)}, 4);
  CHECK(!is_ideal(L, notideal));

  auto q = quotient(L, center);
  CHECK(q.algebra.dim() == 3);
  CHECK(jacobi_check(q.algebra).pass);
  auto hom = homomorphism_check(q.projection, L, q.algebra);
  CHECK(hom.pass);
  CHECK(!hom.is_isomorphism);
}

TEST_CASE("homomorphism check rejects a non-homomorphism") {
  LieAlgebra L = sl2();
  Mat swap(3, 3);  // exchanging e and f is not an automorphism without fixing h
  swap.at(0, 0) = Rational(1);
  swap.at(1, 2) = Rational(1);
  swap.at(2, 1) = Rational(1);
  CHECK(!homomorphism_check(LinearMap{swap}, L, L).pass);
  CHECK(homomorphism_check(LinearMap{Mat::identity(3)}, L, L).is_isomorphism);
}

TEST_CASE("direct sums bracket factor-wise") {
  LieAlgebra s = direct_sum({sl2(), catalog::engel()});
  CHECK(s.dim() == 7);
  CHECK(jacobi_check(s).pass);
  // cross-factor brackets vanish
  CHECK(is_zero(s.bracket(unit_vec(7, 0), unit_vec(7, 5))));
}
