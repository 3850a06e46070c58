#include "carnot/equisolve.hpp"

#include <stdexcept>

namespace equisolve {

namespace {

using catalog::so_basis_matrix;
using catalog::so_commutator;
using catalog::so_coordinates;
using catalog::so_dim;

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat combine(const std::vector<Mat>& gens, const Vec& coeffs, std::size_t d) {
  Mat out(d, d);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) out = out + gens[k].scaled(coeffs[k]);
  return out;
}

Mat reflection_matrix(std::size_t n) {
  Mat s = Mat::identity(n);
  s.at(0, 0) = Rational(-1);
  return s;
}

// true iff a = lambda * b for some scalar lambda
bool proportional(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Rational lambda;
  bool found = false;
  for (std::size_t i = 0; i < b.rows() && !found; ++i)
    for (std::size_t j = 0; j < b.cols() && !found; ++j)
      if (!b.at(i, j).is_zero()) {
        lambda = a.at(i, j) / b.at(i, j);
        found = true;
      }
  if (!found) {  // b = 0: proportional iff a = 0
    return a == Mat(a.rows(), a.cols());
  }
  return a == b.scaled(lambda);
}

// the (P, Q) pairs whose intertwining constraint L P = Q L must hold
std::vector<std::pair<Mat, Mat>> constraint_pairs(const Representation& src,
                                                  const Representation& dst) {
  if (src.n != dst.n) throw std::invalid_argument("equivariant_maps: different n");
  std::vector<std::pair<Mat, Mat>> pairs;
  for (std::size_t g = 0; g < src.inf_generators.size(); ++g)
    pairs.emplace_back(src.inf_generators[g], dst.inf_generators[g]);
  if (src.group_tag == GroupTag::O && dst.group_tag == GroupTag::O)
    pairs.emplace_back(*src.reflection, *dst.reflection);
  return pairs;
}

// rows [base, base + d2*d1) of `out`: entries of L P - Q L, unknowns
// L_{r,s} at column r*d1 + s
void fill_block(Mat& out, std::size_t base, const Mat& p, const Mat& q,
                std::size_t d1, std::size_t d2) {
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; b < d1; ++b) {
      std::size_t row = base + a * d1 + b;
      for (std::size_t c = 0; c < d1; ++c)
        out.at(row, a * d1 + c) += p.at(c, b);
      for (std::size_t c = 0; c < d2; ++c)
        out.at(row, c * d1 + b) -= q.at(a, c);
    }
}

}  // namespace

std::string validate(const Representation& rep) {
  std::size_t m = so_dim(rep.n);
  if (rep.inf_generators.size() != m) return "wrong number of infinitesimal generators";
  for (const auto& g : rep.inf_generators)
    if (g.rows() != rep.module_dim || g.cols() != rep.module_dim)
      return "generator size differs from module_dim";
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      Vec c = so_commutator(rep.n, ratlin::unit_vec(m, p), ratlin::unit_vec(m, q));
      if (!(commutator(rep.inf_generators[p], rep.inf_generators[q]) ==
            combine(rep.inf_generators, c, rep.module_dim)))
        return "so(n) commutation relations fail in the module";
    }
  if (rep.group_tag == GroupTag::O) {
    if (!rep.reflection) return "O representation without reflection";
    const Mat& s = *rep.reflection;
    if (!(s * s == Mat::identity(rep.module_dim))) return "reflection squared is not id";
    Mat sn = reflection_matrix(rep.n);
    for (std::size_t p = 0; p < m; ++p) {
      Vec c = so_coordinates(rep.n, sn * so_basis_matrix(rep.n, p) * sn);
      if (!(s * rep.inf_generators[p] * s ==
            combine(rep.inf_generators, c, rep.module_dim)))
        return "reflection is incompatible with the infinitesimal action";
    }
  }
  return "";
}

Representation vector_rep(std::size_t n, GroupTag tag) {
  Representation rep;
  rep.n = n;
  rep.module_dim = n;
  rep.group_tag = tag;
  for (std::size_t p = 0; p < so_dim(n); ++p)
    rep.inf_generators.push_back(so_basis_matrix(n, p));
  if (tag == GroupTag::O) rep.reflection = reflection_matrix(n);
  return rep;
}

Representation adjoint_rep(std::size_t n, GroupTag tag) {
  Representation rep;
  rep.n = n;
  std::size_t m = so_dim(n);
  rep.module_dim = m;
  rep.group_tag = tag;
  for (std::size_t p = 0; p < m; ++p) {
    Mat g(m, m);
    for (std::size_t q = 0; q < m; ++q) {
      Vec col = so_commutator(n, ratlin::unit_vec(m, p), ratlin::unit_vec(m, q));
      for (std::size_t i = 0; i < m; ++i) g.at(i, q) = col[i];
    }
    rep.inf_generators.push_back(std::move(g));
  }
  if (tag == GroupTag::O) {
    Mat sn = reflection_matrix(n);
    Mat s(m, m);
    for (std::size_t q = 0; q < m; ++q) {
      Vec col = so_coordinates(n, sn * so_basis_matrix(n, q) * sn);
      for (std::size_t i = 0; i < m; ++i) s.at(i, q) = col[i];
    }
    rep.reflection = std::move(s);
  }
  return rep;
}

Representation tensor_rep(const Representation& r1, const Representation& r2) {
  if (r1.n != r2.n) throw std::invalid_argument("tensor_rep: different n");
  if (r1.group_tag != r2.group_tag)
    throw std::invalid_argument("tensor_rep: mixed group tags");
  std::size_t d1 = r1.module_dim, d2 = r2.module_dim;
  Representation rep;
  rep.n = r1.n;
  rep.module_dim = d1 * d2;
  rep.group_tag = r1.group_tag;
  for (std::size_t p = 0; p < so_dim(rep.n); ++p) {
    const Mat& a = r1.inf_generators[p];
    const Mat& b = r2.inf_generators[p];
    Mat g(d1 * d2, d1 * d2);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d2; ++j) {
        for (std::size_t c = 0; c < d1; ++c) g.at(i * d2 + j, c * d2 + j) += a.at(i, c);
        for (std::size_t c = 0; c < d2; ++c) g.at(i * d2 + j, i * d2 + c) += b.at(j, c);
      }
    rep.inf_generators.push_back(std::move(g));
  }
  if (rep.group_tag == GroupTag::O) {
    const Mat& s1 = *r1.reflection;
    const Mat& s2 = *r2.reflection;
    Mat s(d1 * d2, d1 * d2);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d2; ++j)
        for (std::size_t c = 0; c < d1; ++c)
          for (std::size_t e = 0; e < d2; ++e)
            s.at(i * d2 + j, c * d2 + e) = s1.at(i, c) * s2.at(j, e);
    rep.reflection = std::move(s);
  }
  return rep;
}

Representation wedge2_rep(const Representation& r) {
  std::size_t d = r.module_dim;
  std::size_t m = d < 2 ? 0 : d * (d - 1) / 2;  // lex pairs (a,b), a < b
  Representation rep;
  rep.n = r.n;
  rep.module_dim = m;
  rep.group_tag = r.group_tag;
  auto act = [&](const Mat& p, bool multiplicative) {
    Mat g(m, m);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        std::size_t col = catalog::so_pair_index(d, a, b);
        Vec image;
        if (multiplicative) {
          image = catalog::wedge_coords(d, p.col(a), p.col(b));
        } else {
          image = catalog::wedge_coords(d, p.col(a), ratlin::unit_vec(d, b)) +
                  catalog::wedge_coords(d, ratlin::unit_vec(d, a), p.col(b));
        }
        for (std::size_t i = 0; i < m; ++i) g.at(i, col) = image[i];
      }
    return g;
  };
  for (const auto& p : r.inf_generators) rep.inf_generators.push_back(act(p, false));
  if (rep.group_tag == GroupTag::O) rep.reflection = act(*r.reflection, true);
  return rep;
}

Mat assemble_constraints_serial(const Representation& src, const Representation& dst) {
  auto pairs = constraint_pairs(src, dst);
  std::size_t d1 = src.module_dim, d2 = dst.module_dim;
  Mat out(pairs.size() * d1 * d2, d1 * d2);
  for (std::size_t g = 0; g < pairs.size(); ++g)
    fill_block(out, g * d1 * d2, pairs[g].first, pairs[g].second, d1, d2);
  return out;
}

Mat assemble_constraints(const Representation& src, const Representation& dst) {
  auto pairs = constraint_pairs(src, dst);
  std::size_t d1 = src.module_dim, d2 = dst.module_dim;
  Mat out(pairs.size() * d1 * d2, d1 * d2);
  // blocks touch disjoint row ranges, so this is safely parallel
#pragma omp parallel for schedule(dynamic)
  for (std::size_t g = 0; g < pairs.size(); ++g)
    fill_block(out, g * d1 * d2, pairs[g].first, pairs[g].second, d1, d2);
  return out;
}

EquivariantSpace equivariant_maps(const Representation& src, const Representation& dst) {
  std::size_t d1 = src.module_dim, d2 = dst.module_dim;
  EquivariantSpace space;
  if (d1 == 0 || d2 == 0) return space;
  Mat ker = ratlin::kernel(assemble_constraints(src, dst));
  auto pairs = constraint_pairs(src, dst);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Mat L(d2, d1);
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t b = 0; b < d1; ++b) L.at(a, b) = ker.at(r, a * d1 + b);
    for (const auto& [p, q] : pairs)
      if (!(L * p == q * L))
        throw std::logic_error("equivariant_maps: solution fails re-verification");
    space.basis.push_back(liecore::LinearMap{std::move(L)});
  }
  return space;
}

std::size_t commutant_dim(const Representation& rep) {
  return equivariant_maps(rep, rep).dim();
}

TensorLemmaReport verify_tensor_lemma(std::size_t n) {
  TensorLemmaReport rep;
  std::size_t m = so_dim(n);
  Representation adj = adjoint_rep(n, GroupTag::O);
  Representation vec = vector_rep(n, GroupTag::O);

  EquivariantSpace s = equivariant_maps(adj, adj);
  rep.dim_s = s.dim();
  rep.s_is_identity =
      rep.dim_s == 1 && proportional(s.basis[0].matrix, Mat::identity(m));

  EquivariantSpace t = equivariant_maps(tensor_rep(adj, vec), vec);
  rep.dim_t = t.dim();
  Mat eval(n, m * n);  // A_p (x) e_j -> A_p e_j
  for (std::size_t p = 0; p < m; ++p) {
    Mat a = so_basis_matrix(n, p);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) eval.at(i, p * n + j) = a.at(i, j);
  }
  rep.t_is_evaluation = rep.dim_t == 1 && proportional(t.basis[0].matrix, eval);

  EquivariantSpace w = equivariant_maps(wedge2_rep(adj), adj);
  rep.dim_w = w.dim();
  if (n == 2) {
    rep.w_is_bracket = rep.dim_w == 0;  // the wedge square is zero-dimensional
  } else {
    Mat br(m, m * (m - 1) / 2);  // A_p ^ A_q -> [A_p, A_q]
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        Vec c = so_commutator(n, ratlin::unit_vec(m, p), ratlin::unit_vec(m, q));
        std::size_t col = catalog::so_pair_index(m, p, q);
        for (std::size_t i = 0; i < m; ++i) br.at(i, col) = c[i];
      }
    rep.w_is_bracket = rep.dim_w == 1 && proportional(w.basis[0].matrix, br);
  }
  rep.pass = rep.dim_s == 1 && rep.dim_t == 1 &&
             rep.dim_w == (n == 2 ? 0u : 1u) && rep.s_is_identity &&
             rep.t_is_evaluation && rep.w_is_bracket;
  return rep;
}

}  // namespace equisolve
