#include "carnot/holonomy.hpp"

namespace holonomy {

namespace {

Rational pairing(const Mat& gram, const Vec& a, const Vec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      s += a[i] * gram.at(i, j) * b[j];
  return s;
}

}  // namespace

ValidationReport validate(const HomogeneousModelData& H) {
  ValidationReport rep;
  auto fail = [&](std::string why) {
    rep.pass = false;
    rep.violated = std::move(why);
    return rep;
  };
  std::size_t dim = H.g.dim();
  if (H.k.ambient_dim() != dim || H.p1.ambient_dim() != dim)
    return fail("subspace ambient dimension differs from the algebra");
  if (H.gram.rows() != H.p1.dim() || H.gram.cols() != H.p1.dim())
    return fail("gram size differs from dim p1");
  if (!liecore::is_subalgebra(H.g, H.k)) return fail("k is not a subalgebra");
  if (intersect(H.k, H.p1).dim() != 0) return fail("k and p1 intersect nontrivially");
  for (std::size_t c = 0; c < H.k.dim(); ++c)
    for (std::size_t x = 0; x < H.p1.dim(); ++x)
      if (!H.p1.contains(H.g.bracket(H.k.basis_row(c), H.p1.basis_row(x))))
        return fail("[k, p1] is not contained in p1");
  if (!(H.gram == H.gram.transpose())) return fail("gram is not symmetric");
  // Sylvester: all leading principal minors positive
  for (std::size_t m = 1; m <= H.gram.rows(); ++m) {
    Mat lead(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) lead.at(i, j) = H.gram.at(i, j);
    if (ratlin::det(lead).sign() <= 0) return fail("gram is not positive definite");
  }
  // <[C,x],y> + <x,[C,y]> = 0 in p1-coordinates
  for (std::size_t c = 0; c < H.k.dim(); ++c) {
    Vec C = H.k.basis_row(c);
    std::vector<Vec> acted(H.p1.dim());
    for (std::size_t x = 0; x < H.p1.dim(); ++x)
      acted[x] = H.p1.coordinates(H.g.bracket(C, H.p1.basis_row(x)));
    for (std::size_t x = 0; x < H.p1.dim(); ++x)
      for (std::size_t y = x; y < H.p1.dim(); ++y) {
        Rational s = pairing(H.gram, acted[x], ratlin::unit_vec(H.p1.dim(), y)) +
                     pairing(H.gram, ratlin::unit_vec(H.p1.dim(), x), acted[y]);
        if (!s.is_zero()) return fail("gram is not invariant under ad(k)");
      }
  }
  return rep;
}

HolonomyResult holonomy_dichotomy(const HomogeneousModelData& H) {
  HolonomyResult res;
  res.generated = liecore::subalgebra_generated(H.g, H.p1);
  bool complement = intersect(res.generated, H.k).dim() == 0 &&
                    res.generated.dim() + H.k.dim() == H.g.dim();
  if (complement) {
    res.verdict = HolonomyVerdict::Trivial;
    res.decomposition_kind = "ghat = phat (+) k";
  } else if (res.generated.dim() == H.g.dim()) {
    res.verdict = HolonomyVerdict::Full;
    res.decomposition_kind = "ghat = g";
  } else {
    res.error = "dichotomy violated: input is not model-space data";
  }
  return res;
}

FlatnessResult flatness_check(const HomogeneousModelData& H) {
  FlatnessResult res;
  HolonomyResult h = holonomy_dichotomy(H);
  res.error = h.error;
  if (h.error.empty() && h.verdict == HolonomyVerdict::Trivial) {
    res.is_flat = true;
    res.group_algebra = h.generated;
  }
  return res;
}

HomogeneousModelData frame_lift(const HomogeneousModelData& H) {
  return HomogeneousModelData{H.g, Subspace(H.g.dim()), H.p1, H.gram};
}

std::vector<std::size_t> step_and_growth(const HomogeneousModelData& H) {
  auto flag = liecore::flag_growth(H.g, H.p1);
  std::vector<std::size_t> growth;
  for (const auto& pj : flag) {
    std::size_t d = sum(pj, H.k).dim() - H.k.dim();
    if (!growth.empty() && d == growth.back()) break;
    growth.push_back(d);
  }
  return growth;
}

std::string to_string(HolonomyVerdict v) {
  return v == HolonomyVerdict::Trivial ? "Trivial" : "Full";
}

}  // namespace holonomy
