#ifndef CARNOT_CATALOG_HPP
#define CARNOT_CATALOG_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "carnot/freenilp.hpp"
#include "carnot/liecore.hpp"

/// Explicit constructors for the concrete algebras and homogeneous data:
/// the wedge <-> so(n) identification, Hodge star, curvature-model algebras
/// g_n(rho), the graded families C_{n,r} and c_{n,3}, the M(n,a1,a2)
/// family, Heisenberg, Engel, and rolling-sum algebras.
namespace catalog {

using freenilp::FreeNilpotent;
using liecore::LieAlgebra;
using liecore::LinearMap;
using ratlin::Mat;
using ratlin::Rational;
using ratlin::Subspace;
using ratlin::Vec;

/// --- so(n) coordinates -------------------------------------------------
/// Basis ordering: pairs (i,j), i < j, lexicographic; element E_{ji} - E_{ij}
/// (the image of e_i ^ e_j). With this ordering the wedge <-> so(n)
/// identification is the identity on coordinates.

std::size_t so_dim(std::size_t n);
std::size_t so_pair_index(std::size_t n, std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> so_index_pair(std::size_t n, std::size_t p);

/// The n x n matrix of the p-th basis element.
Mat so_basis_matrix(std::size_t n, std::size_t p);

/// All n(n-1)/2 basis matrices, in order.
std::vector<Mat> so_basis(std::size_t n);

/// so(n) coordinates of an antisymmetric matrix.
Vec so_coordinates(std::size_t n, const Mat& a);

/// Commutator in so(n) coordinates.
Vec so_commutator(std::size_t n, const Vec& a, const Vec& b);

/// so(n) coordinates of x ^ y.
Vec wedge_coords(std::size_t n, const Vec& x, const Vec& y);

/// Matrix action A x for A in so(n) coordinates.
Vec so_apply(std::size_t n, const Vec& a, const Vec& x);

/// y x^T - x y^T.
Mat wedge_to_so(std::size_t n, const Vec& x, const Vec& y);

/// --- Hodge star ---------------------------------------------------------

std::size_t binomial(std::size_t n, std::size_t k);

/// Map wedge^k R^n -> wedge^{n-k} R^n defined by
/// alpha ^ (star beta) = <alpha, beta> e_1 ^ ... ^ e_n,
/// on the lexicographic k-subset bases.
LinearMap hodge_star(std::size_t n, std::size_t k);

/// --- concrete algebras --------------------------------------------------

struct RiemannianModel {
  LieAlgebra algebra;      // dim n + n(n-1)/2
  Subspace translations;   // marked horizontal subspace
  Subspace rotations;      // isotropy subalgebra
  Mat gram;                // identity on translations
};

/// g_n(rho): [(x,A),(y,B)] = (Ay - Bx, [A,B] + rho x ^ y).
RiemannianModel riemannian_model(std::size_t n, const Rational& rho);

/// Graded algebra of step r whose layers alternate R^n and so(n).
LieAlgebra carnot_c(std::size_t n, std::size_t r);

struct C3Quotient {
  FreeNilpotent free3;     // f_{n,3}
  Subspace ideal;          // the evaluation-kernel ideal inside f_{n,3}
  LieAlgebra algebra;      // the quotient, dim 2n + n(n-1)/2
  LinearMap projection;
};

C3Quotient c3_quotient(std::size_t n);

struct ModelM {
  LieAlgebra algebra;      // dim n(n+1), slots (x, A, u, C)
  Subspace a1, a2, a3, k;  // the four slots
  Subspace horizontal;     // = a1
  Mat gram;                // identity on a1
};

/// The two-parameter step-3 family; the remaining structure constants are
/// forced: b1 = c2 = a1, b2 = c1 = a2, d1 = a2 + a1^2, d2 = a1 a2.
ModelM model_m(std::size_t n, const Rational& a1, const Rational& a2);

/// Same slots but with explicitly supplied d1, d2 (for perturbation
/// experiments; Jacobi is expected to fail off the forced values).
ModelM model_m_raw(std::size_t n, const Rational& a1, const Rational& a2,
                   const Rational& d1, const Rational& d2);

/// Heisenberg algebra with k pairs: [X_i, Y_j] = delta_ij Z.
LieAlgebra heisenberg(std::size_t k);

/// Engel algebra: [X1,X2] = Z1, [X1,Z1] = Z2.
LieAlgebra engel();

struct RollingSpec {
  std::size_t n = 2;
  std::vector<Rational> rhos;
};

struct RollingSum {
  RollingSpec spec;
  LieAlgebra algebra;   // direct sum of the g_n(rho_j)
  Subspace p;           // { x(1) }
  Subspace k;           // { A(1) }
  Mat gram;             // identity on p
};

RollingSum rolling_sum_algebra(const RollingSpec& spec);

/// x(u): the element whose j-th factor translation component is u_j x.
Vec rolling_x(const RollingSpec& spec, const Vec& x, const Vec& u);
/// A(u) for A in so(n) coordinates.
Vec rolling_a(const RollingSpec& spec, const Vec& a, const Vec& u);

/// Coordinate-wise product used in the bracket laws.
Vec odot(const Vec& u, const Vec& v);
Vec rho_power(const RollingSpec& spec, std::size_t j);  // rho^{odot j}, j = 0 -> all ones

/// Vandermonde matrices (rho_i^{j-1}) and (rho_i^j).
Mat vandermonde_rho(const RollingSpec& spec);
Mat vandermonde_mu(const RollingSpec& spec);

/// --- exact orthogonal samples --------------------------------------------

/// Cayley transform of a random rational antisymmetric matrix, optionally
/// composed with a signed permutation; exactly orthogonal.
Mat random_rational_orthogonal(std::size_t n, std::mt19937& rng);

}  // namespace catalog

#endif
