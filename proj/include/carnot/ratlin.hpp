#ifndef CARNOT_RATLIN_HPP
#define CARNOT_RATLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Exact rational scalars and dense linear algebra. Everything here is a
/// value type; all operations are pure and safe to call concurrently.
namespace ratlin {

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. No rounding ever happens.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// Serializes as "p/q", or "p" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

private:
  mpq_class q_;
};

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense row-major matrix of rationals.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);
  Vec col(std::size_t j) const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rational& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  Mat mat;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with pivot column indices; row space preserved.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Canonical basis of { x : m x = 0 }, as rows of the result, in RREF.
Mat kernel(const Mat& m);

Rational det(const Mat& m);

/// Exact inverse; throws if the matrix is singular.
Mat inverse(const Mat& m);

struct LinearSolution {
  bool consistent = false;
  Vec particular;  // one solution of system * x = rhs, when consistent
  Mat kernel;      // rows span the homogeneous solution space, RREF
};

/// Exact affine solution set of system * x = rhs (rhs a column vector).
LinearSolution solve_linear(const Mat& system, const Vec& rhs);

/// Linear subspace of Q^ambient in canonical form: the basis rows are a
/// reduced-row-echelon basis, so equal subspaces compare equal byte-wise.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const Mat& rows);
  static Subspace span(const std::vector<Vec>& rows, std::size_t ambient);
  static Subspace full(std::size_t ambient) { return span(Mat::identity(ambient)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in this subspace's basis; throws if v is outside.
  Vec coordinates(const Vec& v) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  Mat basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Canonical complement c of a inside b, so that a + c = b and
/// a intersect c = 0. Requires a to be contained in b.
Subspace complement_in(const Subspace& a, const Subspace& b);

}  // namespace ratlin

#endif
