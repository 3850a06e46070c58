#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/ratlin.hpp"

using namespace ratlin;

TEST_CASE("rationals are always canonical") {
  CHECK(Rational(4, 6).str() == "2/3");
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rref fixes a canonical representative of the row space") {
  Mat m(3, 4);
  m.at(0, 0) = Rational(2); m.at(0, 1) = Rational(4); m.at(0, 3) = Rational(2);
  m.at(1, 0) = Rational(1); m.at(1, 1) = Rational(2); m.at(1, 2) = Rational(1);
  m.at(2, 2) = Rational(3); m.at(2, 3) = Rational(-3);
  auto r = rref(m);
  CHECK(r.pivots.size() == 2);
  CHECK(rank(m) == 2);
  // scaling rows and permuting them yields the same rref
  Mat m2 = Mat::from_rows({Rational(5) * m.row(2), m.row(0), m.row(1)}, 4);
  CHECK(rref(m2).mat == r.mat);
}

TEST_CASE("kernel rows annihilate the matrix and have full complement rank") {
  Mat m(2, 4);
  m.at(0, 0) = Rational(1); m.at(0, 2) = Rational(-1);
  m.at(1, 1) = Rational(2); m.at(1, 3) = Rational(2);
  Mat k = kernel(m);
  CHECK(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero(m.apply(k.row(i))));
}

TEST_CASE("determinant and inverse") {
  Mat m(3, 3);
  m.at(0, 0) = Rational(1); m.at(0, 1) = Rational(1, 2); m.at(0, 2) = Rational(3);
  m.at(1, 1) = Rational(2); m.at(1, 2) = Rational(-1);
  m.at(2, 0) = Rational(4); m.at(2, 2) = Rational(1);
  Rational d = det(m);
  CHECK(!d.is_zero());
  CHECK(inverse(m) * m == Mat::identity(3));
  Mat sing(2, 2);
  sing.at(0, 0) = Rational(1); sing.at(0, 1) = Rational(2);
  sing.at(1, 0) = Rational(2); sing.at(1, 1) = Rational(4);
  CHECK(det(sing).is_zero());
  CHECK_THROWS(inverse(sing));
}

TEST_CASE("solve_linear distinguishes consistent from inconsistent") {
  Mat a(3, 2);
  a.at(0, 0) = Rational(1);
  a.at(1, 1) = Rational(1);
  a.at(2, 0) = Rational(1); a.at(2, 1) = Rational(1);
  Vec rhs = {Rational(2), Rational(3), Rational(5)};
  auto sol = solve_linear(a, rhs);
  REQUIRE(sol.consistent);
  CHECK(a.apply(sol.particular) == rhs);
  rhs[2] = Rational(4);
  CHECK(!solve_linear(a, rhs).consistent);
}

TEST_CASE("subspaces compare by value through the canonical basis") {
  Vec v1 = {Rational(1), Rational(2), Rational(0)};
  Vec v2 = {Rational(0), Rational(1), Rational(1)};
  Subspace s = Subspace::span({v1, v2}, 3);
  Subspace t = Subspace::span({v1 + v2, Rational(3) * v2, v1}, 3);
  CHECK(s == t);
  CHECK(s.contains(Rational(2) * v1 - v2));
  CHECK(!s.contains(Vec{Rational(1), Rational(0), Rational(0)}));
  Vec c = s.coordinates(v1 + Rational(5) * v2);
  Vec rebuilt = zero_vec(3);
  for (std::size_t i = 0; i < s.dim(); ++i) rebuilt = rebuilt + c[i] * s.basis_row(i);
  CHECK(rebuilt == v1 + Rational(5) * v2);
}

TEST_CASE("sum, intersection and complements satisfy dimension arithmetic") {
  Vec e0 = unit_vec(4, 0), e1 = unit_vec(4, 1), e2 = unit_vec(4, 2);
  Subspace a = Subspace::span({e0, e1}, 4);
  Subspace b = Subspace::span({e1 + e2, e0 - e1}, 4);
  Subspace u = sum(a, b);
  Subspace i = intersect(a, b);
  CHECK(u.dim() + i.dim() == a.dim() + b.dim());
  CHECK(u.contains(a));
  CHECK(a.contains(i));
  Subspace c = complement_in(a, u);
  CHECK(intersect(a, c).dim() == 0);
  CHECK(sum(a, c) == u);
}
