#include "carnot/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace catalog {

std::size_t so_dim(std::size_t n) { return n * (n - 1) / 2; }

std::size_t so_pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw std::invalid_argument("so_pair_index: need i < j < n");
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> so_index_pair(std::size_t n, std::size_t p) {
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t row = n - 1 - i;
    if (p < row) return {i, i + 1 + p};
    p -= row;
  }
  throw std::invalid_argument("so_index_pair: index out of range");
}

Mat so_basis_matrix(std::size_t n, std::size_t p) {
  auto [i, j] = so_index_pair(n, p);
  Mat m(n, n);
  m.at(j, i) = Rational(1);
  m.at(i, j) = Rational(-1);
  return m;
}

std::vector<Mat> so_basis(std::size_t n) {
  std::vector<Mat> out;
  for (std::size_t p = 0; p < so_dim(n); ++p) out.push_back(so_basis_matrix(n, p));
  return out;
}

Vec so_coordinates(std::size_t n, const Mat& a) {
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("so_coordinates: shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a.at(i, j) + a.at(j, i)).is_zero())
        throw std::invalid_argument("so_coordinates: matrix not antisymmetric");
  Vec c(so_dim(n));
  for (std::size_t p = 0; p < c.size(); ++p) {
    auto [i, j] = so_index_pair(n, p);
    c[p] = a.at(j, i);
  }
  return c;
}

namespace {

Mat so_from_coords(std::size_t n, const Vec& a) {
  Mat m(n, n);
  for (std::size_t p = 0; p < a.size(); ++p) {
    auto [i, j] = so_index_pair(n, p);
    m.at(j, i) = a[p];
    m.at(i, j) = -a[p];
  }
  return m;
}

}  // namespace

Vec so_commutator(std::size_t n, const Vec& a, const Vec& b) {
  Mat ma = so_from_coords(n, a), mb = so_from_coords(n, b);
  return so_coordinates(n, ma * mb - mb * ma);
}

Vec wedge_coords(std::size_t n, const Vec& x, const Vec& y) {
  Vec c(so_dim(n));
  for (std::size_t p = 0; p < c.size(); ++p) {
    auto [i, j] = so_index_pair(n, p);
    c[p] = x[i] * y[j] - x[j] * y[i];
  }
  return c;
}

Vec so_apply(std::size_t n, const Vec& a, const Vec& x) {
  return so_from_coords(n, a).apply(x);
}

Mat wedge_to_so(std::size_t n, const Vec& x, const Vec& y) {
  if (x.size() != n || y.size() != n) throw std::invalid_argument("wedge_to_so: length");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = y[i] * x[j] - x[i] * y[j];
  return m;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    // next lex subset
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

int concat_sign(const std::vector<std::size_t>& s, const std::vector<std::size_t>& c) {
  std::vector<std::size_t> perm = s;
  perm.insert(perm.end(), c.begin(), c.end());
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

}  // namespace

LinearMap hodge_star(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("hodge_star: need 0 <= k <= n");
  auto src = k_subsets(n, k);
  auto dst = k_subsets(n, n - k);
  Mat m(dst.size(), src.size());
  for (std::size_t a = 0; a < src.size(); ++a) {
    std::vector<std::size_t> comp;
    std::vector<bool> in(n, false);
    for (std::size_t v : src[a]) in[v] = true;
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v]) comp.push_back(v);
    std::size_t b = static_cast<std::size_t>(
        std::find(dst.begin(), dst.end(), comp) - dst.begin());
    m.at(b, a) = Rational(concat_sign(src[a], comp));
  }
  return {std::move(m)};
}

RiemannianModel riemannian_model(std::size_t n, const Rational& rho) {
  if (n < 2) throw std::invalid_argument("riemannian_model: n >= 2");
  std::size_t m = so_dim(n);
  std::size_t dim = n + m;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
  for (std::size_t p = 0; p < m; ++p) {
    auto [i, j] = so_index_pair(n, p);
    labels.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  LieAlgebra L(dim, labels);
  // [(x,A),(y,B)] = (Ay - Bx, [A,B] + rho x ^ y)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c = ratlin::zero_vec(dim);
      Vec w = wedge_coords(n, ratlin::unit_vec(n, i), ratlin::unit_vec(n, j));
      for (std::size_t p = 0; p < m; ++p) c[n + p] = rho * w[p];
      L.set_bracket(i, j, std::move(c));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      // [X_i, A_p] = -(A_p e_i)
      Vec ax = so_apply(n, ratlin::unit_vec(m, p), ratlin::unit_vec(n, i));
      Vec c = ratlin::zero_vec(dim);
      for (std::size_t k = 0; k < n; ++k) c[k] = -ax[k];
      L.set_bracket(i, n + p, std::move(c));
    }
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      Vec comm = so_commutator(n, ratlin::unit_vec(m, p), ratlin::unit_vec(m, q));
      Vec c = ratlin::zero_vec(dim);
      for (std::size_t s = 0; s < m; ++s) c[n + s] = comm[s];
      L.set_bracket(p + n, q + n, std::move(c));
    }
  std::vector<Vec> trans, rot;
  for (std::size_t i = 0; i < n; ++i) trans.push_back(ratlin::unit_vec(dim, i));
  for (std::size_t p = 0; p < m; ++p) rot.push_back(ratlin::unit_vec(dim, n + p));
  return {std::move(L), Subspace::span(trans, dim), Subspace::span(rot, dim),
          Mat::identity(n)};
}

namespace {

// basis layout of carnot_c: layers 1..r in order; odd layer = R^n slot,
// even layer = so(n) slot
struct CSlot {
  bool is_vector;      // R^n slot (odd layer) vs so(n) slot (even layer)
  std::size_t stage;   // j in x^{(j)} / A^{(j)}, 1-based
  std::size_t offset;  // basis offset of this layer
  std::size_t size;
};

std::vector<CSlot> c_slots(std::size_t n, std::size_t r) {
  std::vector<CSlot> slots;
  std::size_t off = 0;
  for (std::size_t layer = 1; layer <= r; ++layer) {
    bool vec = layer % 2 == 1;
    std::size_t sz = vec ? n : so_dim(n);
    slots.push_back({vec, (layer + 1) / 2, off, sz});
    off += sz;
  }
  return slots;
}

}  // namespace

LieAlgebra carnot_c(std::size_t n, std::size_t r) {
  if (n < 2 || r < 1) throw std::invalid_argument("carnot_c: n >= 2, r >= 1");
  auto slots = c_slots(n, r);
  std::size_t dim = slots.back().offset + slots.back().size;
  std::size_t m = so_dim(n);
  std::vector<std::string> labels(dim);
  std::vector<int> layers(dim);
  for (std::size_t l = 0; l < slots.size(); ++l)
    for (std::size_t t = 0; t < slots[l].size; ++t) {
      std::string base;
      if (slots[l].is_vector)
        base = "x" + std::to_string(t + 1);
      else {
        auto [i, j] = so_index_pair(n, t);
        base = "A" + std::to_string(i + 1) + std::to_string(j + 1);
      }
      labels[slots[l].offset + t] = base + "(" + std::to_string(slots[l].stage) + ")";
      layers[slots[l].offset + t] = static_cast<int>(l + 1);
    }
  LieAlgebra L(dim, labels);

  auto put = [&](Vec& acc, std::size_t layer /*1-based*/, const Vec& comp) {
    if (layer > r) return;  // truncation
    const CSlot& s = slots[layer - 1];
    for (std::size_t t = 0; t < s.size; ++t) acc[s.offset + t] += comp[t];
  };

  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      // locate slots
      std::size_t la = 0, lb = 0;
      while (a >= slots[la].offset + slots[la].size) ++la;
      while (b >= slots[lb].offset + slots[lb].size) ++lb;
      std::size_t ta = a - slots[la].offset, tb = b - slots[lb].offset;
      Vec acc = ratlin::zero_vec(dim);
      if (slots[la].is_vector && slots[lb].is_vector) {
        Vec w = wedge_coords(n, ratlin::unit_vec(n, ta), ratlin::unit_vec(n, tb));
        put(acc, 2 * (slots[la].stage + slots[lb].stage - 1), w);
      } else if (!slots[la].is_vector && slots[lb].is_vector) {
        Vec ax = so_apply(n, ratlin::unit_vec(m, ta), ratlin::unit_vec(n, tb));
        put(acc, 2 * (slots[la].stage + slots[lb].stage) - 1, ax);
      } else if (slots[la].is_vector && !slots[lb].is_vector) {
        Vec ax = so_apply(n, ratlin::unit_vec(m, tb), ratlin::unit_vec(n, ta));
        Vec neg = Rational(-1) * ax;
        put(acc, 2 * (slots[la].stage + slots[lb].stage) - 1, neg);
      } else {
        Vec comm = so_commutator(n, ratlin::unit_vec(m, ta), ratlin::unit_vec(m, tb));
        put(acc, 2 * (slots[la].stage + slots[lb].stage), comm);
      }
      L.set_bracket(a, b, std::move(acc));
    }
  L.set_layers(std::move(layers));
  return L;
}

C3Quotient c3_quotient(std::size_t n) {
  FreeNilpotent F = freenilp::build_free(n, 3);
  std::size_t m = so_dim(n);
  std::size_t dim = F.dim();
  // Degree-2 Hall words are [A_i, A_j], i < j, in lexicographic order, which
  // matches the so(n) pair ordering.
  std::size_t deg2_off = n;
  // evaluation map so(n) (x) R^n -> R^n, (A, x) -> A x
  Mat ev(n, m * n);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i) {
      Vec ax = so_apply(n, ratlin::unit_vec(m, p), ratlin::unit_vec(n, i));
      for (std::size_t k = 0; k < n; ++k) ev.at(k, p * n + i) = ax[k];
    }
  Mat ker = ratlin::kernel(ev);
  // push each kernel element through (A, x) -> [A, x] computed in F
  std::vector<Vec> ideal_rows;
  for (std::size_t row = 0; row < ker.rows(); ++row) {
    Vec acc = ratlin::zero_vec(dim);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& c = ker.at(row, p * n + i);
        if (c.is_zero()) continue;
        Vec br = F.algebra().bracket(ratlin::unit_vec(dim, deg2_off + p),
                                     ratlin::unit_vec(dim, i));
        acc = acc + c * br;
      }
    ideal_rows.push_back(std::move(acc));
  }
  Subspace ideal = Subspace::span(ideal_rows, dim);
  auto q = liecore::quotient(F.algebra(), ideal);
  // grading on the quotient inherited from degrees (the ideal is graded)
  std::vector<int> layers;
  for (std::size_t i = 0; i < q.complement.dim(); ++i) {
    Vec v = q.complement.basis_row(i);
    int layer = 0;
    for (std::size_t k = 0; k < dim; ++k)
      if (!v[k].is_zero()) layer = std::max(layer, static_cast<int>(F.hall_basis()[k].degree));
    layers.push_back(layer);
  }
  q.algebra.set_layers(std::move(layers));
  return {std::move(F), std::move(ideal), std::move(q.algebra), std::move(q.projection)};
}

ModelM model_m_raw(std::size_t n, const Rational& a1, const Rational& a2,
                   const Rational& d1, const Rational& d2) {
  if (n < 2) throw std::invalid_argument("model_m: n >= 2");
  std::size_t m = so_dim(n);
  std::size_t dim = 2 * n + 2 * m;  // = n(n+1)
  auto xo = [&](std::size_t i) { return i; };
  auto Ao = [&](std::size_t p) { return n + p; };
  auto uo = [&](std::size_t i) { return n + m + i; };
  auto Co = [&](std::size_t p) { return 2 * n + m + p; };

  std::vector<std::string> labels(dim);
  for (std::size_t i = 0; i < n; ++i) labels[xo(i)] = "x" + std::to_string(i + 1);
  for (std::size_t p = 0; p < m; ++p) labels[Ao(p)] = "A" + std::to_string(p + 1);
  for (std::size_t i = 0; i < n; ++i) labels[uo(i)] = "u" + std::to_string(i + 1);
  for (std::size_t p = 0; p < m; ++p) labels[Co(p)] = "C" + std::to_string(p + 1);
  LieAlgebra L(dim, labels);

  struct Parts {
    Vec x, A, u, C;
  };
  auto split = [&](std::size_t idx) {
    Parts pr{ratlin::zero_vec(n), ratlin::zero_vec(m), ratlin::zero_vec(n),
             ratlin::zero_vec(m)};
    if (idx < n)
      pr.x[idx] = Rational(1);
    else if (idx < n + m)
      pr.A[idx - n] = Rational(1);
    else if (idx < 2 * n + m)
      pr.u[idx - n - m] = Rational(1);
    else
      pr.C[idx - 2 * n - m] = Rational(1);
    return pr;
  };

  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      Parts pa = split(a), pb = split(b);
      Vec x_out = ratlin::zero_vec(n), u_out = ratlin::zero_vec(n);
      Vec A_out = ratlin::zero_vec(m), C_out = ratlin::zero_vec(m);

      Vec av_bu = so_apply(n, pa.A, pb.u) - so_apply(n, pb.A, pa.u);
      Vec ay_bx = so_apply(n, pa.A, pb.x) - so_apply(n, pb.A, pa.x);
      Vec xy = wedge_coords(n, pa.x, pb.x);
      Vec xv_uy = wedge_coords(n, pa.x, pb.u) + wedge_coords(n, pa.u, pb.x);
      Vec ab = so_commutator(n, pa.A, pb.A);
      Vec uv = wedge_coords(n, pa.u, pb.u);

      x_out = x_out + a2 * av_bu;
      A_out = A_out + xy + a1 * xv_uy + a1 * ab + d1 * uv;
      u_out = u_out + ay_bx + a1 * av_bu;
      C_out = C_out + a2 * xv_uy + a2 * ab + d2 * uv;

      // isotropy action of the C slot
      x_out = x_out + so_apply(n, pa.C, pb.x) - so_apply(n, pb.C, pa.x);
      A_out = A_out + so_commutator(n, pa.C, pb.A) - so_commutator(n, pb.C, pa.A);
      u_out = u_out + so_apply(n, pa.C, pb.u) - so_apply(n, pb.C, pa.u);
      C_out = C_out + so_commutator(n, pa.C, pb.C);

      Vec c = ratlin::zero_vec(dim);
      for (std::size_t i = 0; i < n; ++i) {
        c[xo(i)] = x_out[i];
        c[uo(i)] = u_out[i];
      }
      for (std::size_t p = 0; p < m; ++p) {
        c[Ao(p)] = A_out[p];
        c[Co(p)] = C_out[p];
      }
      L.set_bracket(a, b, std::move(c));
    }

  auto unit_block = [&](std::size_t off, std::size_t sz) {
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < sz; ++t) rows.push_back(ratlin::unit_vec(dim, off + t));
    return Subspace::span(rows, dim);
  };
  ModelM out{std::move(L), unit_block(0, n), unit_block(n, m), unit_block(n + m, n),
             unit_block(2 * n + m, m), Subspace(), Mat::identity(n)};
  out.horizontal = out.a1;
  return out;
}

ModelM model_m(std::size_t n, const Rational& a1, const Rational& a2) {
  return model_m_raw(n, a1, a2, a2 + a1 * a1, a1 * a2);
}

LieAlgebra heisenberg(std::size_t k) {
  if (k < 1) throw std::invalid_argument("heisenberg: k >= 1");
  std::size_t dim = 2 * k + 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("X" + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i) labels.push_back("Y" + std::to_string(i + 1));
  labels.push_back("Z");
  LieAlgebra L(dim, labels);
  for (std::size_t i = 0; i < k; ++i) {
    Vec c = ratlin::zero_vec(dim);
    c[2 * k] = Rational(1);
    L.set_bracket(i, k + i, std::move(c));
  }
  std::vector<int> layers(dim, 1);
  layers[2 * k] = 2;
  L.set_layers(std::move(layers));
  return L;
}

LieAlgebra engel() {
  LieAlgebra L(4, {"X1", "X2", "Z1", "Z2"});
  Vec c1 = ratlin::zero_vec(4);
  c1[2] = Rational(1);
  L.set_bracket(0, 1, std::move(c1));  // [X1,X2] = Z1
  Vec c2 = ratlin::zero_vec(4);
  c2[3] = Rational(1);
  L.set_bracket(0, 2, std::move(c2));  // [X1,Z1] = Z2
  L.set_layers({1, 1, 2, 3});
  return L;
}

Vec odot(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("odot: size mismatch");
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] * v[i];
  return r;
}

Vec rho_power(const RollingSpec& spec, std::size_t j) {
  Vec r(spec.rhos.size(), Rational(1));
  for (std::size_t e = 0; e < j; ++e) r = odot(r, spec.rhos);
  return r;
}

Vec rolling_x(const RollingSpec& spec, const Vec& x, const Vec& u) {
  std::size_t n = spec.n, m = so_dim(n), r = spec.rhos.size();
  Vec out = ratlin::zero_vec(r * (n + m));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) out[j * (n + m) + i] = u[j] * x[i];
  return out;
}

Vec rolling_a(const RollingSpec& spec, const Vec& a, const Vec& u) {
  std::size_t n = spec.n, m = so_dim(n), r = spec.rhos.size();
  Vec out = ratlin::zero_vec(r * (n + m));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t p = 0; p < m; ++p) out[j * (n + m) + n + p] = u[j] * a[p];
  return out;
}

RollingSum rolling_sum_algebra(const RollingSpec& spec) {
  if (spec.n < 2 || spec.rhos.empty())
    throw std::invalid_argument("rolling_sum_algebra: n >= 2, r >= 1");
  std::vector<LieAlgebra> factors;
  for (const auto& rho : spec.rhos)
    factors.push_back(riemannian_model(spec.n, rho).algebra);
  LieAlgebra g = liecore::direct_sum(factors);
  std::size_t n = spec.n, m = so_dim(n), r = spec.rhos.size();
  Vec ones(r, Rational(1));
  std::vector<Vec> prows, krows;
  for (std::size_t i = 0; i < n; ++i)
    prows.push_back(rolling_x(spec, ratlin::unit_vec(n, i), ones));
  for (std::size_t p = 0; p < m; ++p)
    krows.push_back(rolling_a(spec, ratlin::unit_vec(m, p), ones));
  return {spec, std::move(g), Subspace::span(prows, r * (n + m)),
          Subspace::span(krows, r * (n + m)), Mat::identity(n)};
}

Mat vandermonde_rho(const RollingSpec& spec) {
  std::size_t r = spec.rhos.size();
  Mat m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational pw(1);
    for (std::size_t j = 0; j < r; ++j) {
      m.at(i, j) = pw;
      pw *= spec.rhos[i];
    }
  }
  return m;
}

Mat vandermonde_mu(const RollingSpec& spec) {
  std::size_t r = spec.rhos.size();
  Mat m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational pw = spec.rhos[i];
    for (std::size_t j = 0; j < r; ++j) {
      m.at(i, j) = pw;
      pw *= spec.rhos[i];
    }
  }
  return m;
}

Mat random_rational_orthogonal(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  Mat s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v(num(rng), den(rng));
      s.at(i, j) = v;
      s.at(j, i) = -v;
    }
  Mat id = Mat::identity(n);
  Mat q = (id + s) * ratlin::inverse(id - s);  // Cayley transform, exactly orthogonal
  // compose with a signed permutation to reach both components of O(n)
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Mat sp(n, n);
  for (std::size_t i = 0; i < n; ++i) sp.at(perm[i], i) = Rational(coin(rng) ? 1 : -1);
  return q * sp;
}

}  // namespace catalog
