#include "carnot/ratlin.hpp"

#include <algorithm>

namespace ratlin {

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec +: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec -: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("Mat::set_row: size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat *: shape mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat +: shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat -: shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::scaled(const Rational& c) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

RrefResult rref(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
    Rational inv = Rational(1) / a.at(lead, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.mat.at(i, free);
    basis.push_back(std::move(v));
  }
  return rref(Mat::from_rows(basis, m.cols())).mat;
}

Rational det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  Mat a = m;
  Rational d(1);
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    Rational inv = Rational(1) / a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
  std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  RrefResult r = rref(aug);
  if (r.pivots.size() != n || r.pivots.back() != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

LinearSolution solve_linear(const Mat& system, const Vec& rhs) {
  if (rhs.size() != system.rows())
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  Mat aug(system.rows(), system.cols() + 1);
  for (std::size_t i = 0; i < system.rows(); ++i) {
    for (std::size_t j = 0; j < system.cols(); ++j) aug.at(i, j) = system.at(i, j);
    aug.at(i, system.cols()) = rhs[i];
  }
  RrefResult r = rref(aug);
  LinearSolution sol;
  for (std::size_t p : r.pivots)
    if (p == system.cols()) return sol;  // row (0 ... 0 | 1): inconsistent
  sol.consistent = true;
  sol.particular = Vec(system.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    sol.particular[r.pivots[i]] = r.mat.at(i, system.cols());
  sol.kernel = kernel(system);
  return sol;
}

Subspace Subspace::span(const Mat& rows) {
  Subspace s(rows.cols());
  RrefResult r = rref(rows);
  Mat b(r.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) b.set_row(i, r.mat.row(i));
  s.basis_ = std::move(b);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& rows, std::size_t ambient) {
  return span(Mat::from_rows(rows, ambient));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dim mismatch");
  // reduce v against the RREF basis
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t lead = 0;
    while (lead < ambient_ && basis_.at(i, lead).is_zero()) ++lead;
    if (lead == ambient_) continue;
    if (!w[lead].is_zero()) {
      Rational f = w[lead];
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: dim mismatch");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  LinearSolution sol = solve_linear(basis_.transpose(), v);
  if (!sol.consistent)
    throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
  return sol.particular;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("sum: ambient mismatch");
  Mat stacked(a.dim() + b.dim(), a.ambient_);
  for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_.row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_.row(i));
  return Subspace::span(stacked);
}

// Zassenhaus: rref of [A | A; B | 0], rows with zero left half carry the
// intersection in the right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
  std::size_t n = a.ambient_;
  Mat block(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block.at(i, j) = a.basis_.at(i, j);
      block.at(i, n + j) = a.basis_.at(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis_.at(i, j);
  RrefResult r = rref(block);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (!r.mat.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = r.mat.at(i, n + j);
    if (!is_zero(v)) rows.push_back(std::move(v));
  }
  return Subspace::span(rows, n);
}

Subspace complement_in(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("complement_in: ambient mismatch");
  if (!b.contains(a)) throw std::invalid_argument("complement_in: a not contained in b");
  // greedily extend a by rows of b's canonical basis
  Subspace cur = a;
  std::vector<Vec> chosen;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Vec v = b.basis_row(i);
    if (cur.contains(v)) continue;
    chosen.push_back(v);
    std::vector<Vec> ext = chosen;
    for (std::size_t k = 0; k < a.dim(); ++k) ext.push_back(a.basis_row(k));
    cur = Subspace::span(ext, a.ambient_dim());
  }
  return Subspace::span(chosen, a.ambient_dim());
}

}  // namespace ratlin
