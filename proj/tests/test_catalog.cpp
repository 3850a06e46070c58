#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/catalog.hpp"

using namespace ratlin;
using namespace catalog;

TEST_CASE("pair coordinates on antisymmetric matrices round-trip") {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::size_t m = so_dim(n);
    for (std::size_t p = 0; p < m; ++p) {
      Mat b = so_basis_matrix(n, p);
      CHECK(b + b.transpose() == Mat(n, n));
      CHECK(so_coordinates(n, b) == unit_vec(m, p));
    }
  }
}

TEST_CASE("the wedge of the first two axes is the standard rotation generator") {
  Mat w = wedge_to_so(2, unit_vec(2, 0), unit_vec(2, 1));
  CHECK(w.at(0, 0) == Rational(0));
  CHECK(w.at(0, 1) == Rational(-1));
  CHECK(w.at(1, 0) == Rational(1));
  CHECK(w.at(1, 1) == Rational(0));
  // identification is the identity on coordinates
  CHECK(wedge_coords(2, unit_vec(2, 0), unit_vec(2, 1)) == unit_vec(1, 0));
}

TEST_CASE("coordinate commutator equals the matrix commutator") {
  std::size_t n = 4, m = so_dim(n);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      Mat a = so_basis_matrix(n, p), b = so_basis_matrix(n, q);
      CHECK(so_commutator(n, unit_vec(m, p), unit_vec(m, q)) ==
            so_coordinates(n, a * b - b * a));
    }
}

TEST_CASE("hodge star squares to the sign of the degree pairing") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto s = hodge_star(n, k);
      auto s2 = hodge_star(n, n - k);
      Mat prod = s2.matrix * s.matrix;
      int sign = ((k * (n - k)) % 2 == 0) ? 1 : -1;
      CHECK(prod == Mat::identity(binomial(n, k)).scaled(Rational(sign)));
    }
}

TEST_CASE("curvature models bracket as specified and are jacobi-closed") {
  for (int rho : {-1, 0, 2}) {
    auto rm = riemannian_model(3, Rational(rho));
    CHECK(rm.algebra.dim() == 6);
    CHECK(liecore::jacobi_check(rm.algebra).pass);
    // [x, y] lands in the rotation slot scaled by rho
    Vec br = rm.algebra.bracket(unit_vec(6, 0), unit_vec(6, 1));
    Vec expect = zero_vec(6);
    expect[3] = Rational(rho);  // the (1,2) rotation coordinate
    CHECK(br == expect);
  }
}

TEST_CASE("alternating-layer algebras are graded with the right dims") {
  auto L = carnot_c(2, 3);
  CHECK(L.dim() == 5);
  REQUIRE(L.layers());
  CHECK(!liecore::graded_check(L));
  CHECK(liecore::jacobi_check(L).pass);
  CHECK(L.layer_span(1).dim() == 2);
  CHECK(L.layer_span(2).dim() == 1);
  CHECK(L.layer_span(3).dim() == 2);
  auto L2 = carnot_c(3, 4);
  CHECK(L2.dim() == 3 + 3 + 3 + 3);
  CHECK(liecore::jacobi_check(L2).pass);
}

TEST_CASE("step-3 quotient has the expected dimension and grading") {
  auto q = c3_quotient(3);
  CHECK(q.algebra.dim() == 9);  // 2n + n(n-1)/2
  CHECK(liecore::jacobi_check(q.algebra).pass);
  CHECK(!liecore::graded_check(q.algebra));
  CHECK(liecore::is_ideal(q.free3.algebra(), q.ideal));
}

TEST_CASE("forced structure constants are exactly the jacobi-closed ones") {
  Rational a1(2), a2(-1);
  CHECK(liecore::jacobi_check(model_m(2, a1, a2).algebra).pass);
  CHECK(liecore::jacobi_check(model_m(3, a1, a2).algebra).pass);
  auto bad = model_m_raw(2, a1, a2, a2 + a1 * a1 + Rational(1), a1 * a2);
  CHECK(!liecore::jacobi_check(bad.algebra).pass);
  auto bad2 = model_m_raw(3, a1, a2, a2 + a1 * a1, a1 * a2 + Rational(1));
  CHECK(!liecore::jacobi_check(bad2.algebra).pass);
}

TEST_CASE("heisenberg and engel have their defining brackets") {
  auto h = heisenberg(2);
  CHECK(h.dim() == 5);
  CHECK(h.bracket_basis(0, 2) == unit_vec(5, 4));  // [X1, Y1] = Z
  CHECK(is_zero(h.bracket_basis(0, 3)));           // [X1, Y2] = 0
  auto e = engel();
  CHECK(e.bracket_basis(0, 1) == unit_vec(4, 2));
  CHECK(e.bracket_basis(0, 2) == unit_vec(4, 3));
  CHECK(is_zero(e.bracket_basis(1, 2)));
  CHECK(liecore::jacobi_check(h).pass);
  CHECK(liecore::jacobi_check(e).pass);
}

TEST_CASE("rolling-sum brackets follow the weighted product laws") {
  RollingSpec spec{2, {Rational(1), Rational(-1)}};
  auto rs = rolling_sum_algebra(spec);
  CHECK(rs.algebra.dim() == 6);
  CHECK(liecore::jacobi_check(rs.algebra).pass);
  Vec ones(2, Rational(1));
  Vec x = unit_vec(2, 0), y = unit_vec(2, 1), w = unit_vec(1, 0);
  // [x(u), y(v)] = (x ^ y)(rho . u . v)
  Vec lhs = rs.algebra.bracket(rolling_x(spec, x, ones), rolling_x(spec, y, ones));
  CHECK(lhs == rolling_a(spec, wedge_coords(2, x, y), odot(spec.rhos, odot(ones, ones))));
  // [A(u), x(v)] = (A x)(u . v)
  Vec lhs2 = rs.algebra.bracket(rolling_a(spec, w, spec.rhos), rolling_x(spec, x, ones));
  CHECK(lhs2 == rolling_x(spec, so_apply(2, w, x), odot(spec.rhos, ones)));
}

TEST_CASE("vandermonde matrices and their determinants") {
  RollingSpec spec{2, {Rational(1), Rational(2), Rational(3)}};
  CHECK(!det(vandermonde_rho(spec)).is_zero());
  CHECK(!det(vandermonde_mu(spec)).is_zero());
  RollingSpec zero_col{2, {Rational(1), Rational(0)}};
  CHECK(!det(vandermonde_rho(zero_col)).is_zero());
  CHECK(det(vandermonde_mu(zero_col)).is_zero());
  RollingSpec repeated{2, {Rational(1), Rational(1)}};
  CHECK(det(vandermonde_rho(repeated)).is_zero());
}

TEST_CASE("cayley samples are exactly orthogonal and vary with the seed") {
  std::mt19937 rng(7);
  Mat prev;
  bool saw_different = false;
  for (int t = 0; t < 10; ++t) {
    Mat a = random_rational_orthogonal(3, rng);
    CHECK(a.transpose() * a == Mat::identity(3));
    if (t > 0 && !(a == prev)) saw_different = true;
    prev = a;
  }
  CHECK(saw_different);
}
