#include "carnot/modelcheck.hpp"

#include <stdexcept>

namespace modelcheck {

ModelCheckReport carnot_model_check(const FreeNilpotent& F, const Subspace& ideal) {
  ModelCheckReport rep;
  rep.ideal_dim = ideal.dim();
  if (ideal.ambient_dim() != F.dim()) {
    rep.error = "ideal ambient dimension mismatch";
    return rep;
  }
  if (!liecore::is_ideal(F.algebra(), ideal)) {
    rep.error = "subspace is not an ideal";
    return rep;
  }
  std::size_t n = F.generators();

  std::vector<LinearMap> actions;
  for (std::size_t p = 0; p < catalog::so_dim(n); ++p)
    actions.push_back(freenilp::induced_derivation(F, catalog::so_basis_matrix(n, p)));
  Mat refl = Mat::identity(n);
  refl.at(0, 0) = Rational(-1);
  actions.push_back(freenilp::induced_endomorphism(F, refl));

  rep.verdict = true;
  for (std::size_t a = 0; a < actions.size() && rep.verdict; ++a) {
    bool is_refl = a + 1 == actions.size();
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
      Vec v = ideal.basis_row(i);
      Vec img = actions[a].apply(v);
      if (!ideal.contains(img)) {
        rep.verdict = false;
        rep.witness = ModelCheckReport::Witness{is_refl, is_refl ? 0 : a, v, img};
        break;
      }
    }
  }

  // orbit closure: smallest action-stable subspace containing the ideal
  Subspace orbit = ideal;
  for (;;) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < orbit.dim(); ++i) {
      rows.push_back(orbit.basis_row(i));
      for (const auto& act : actions) rows.push_back(act.apply(orbit.basis_row(i)));
    }
    Subspace next = Subspace::span(rows, F.dim());
    if (next.dim() == orbit.dim()) break;
    orbit = next;
  }
  rep.orbit_closure_dim = orbit.dim();
  return rep;
}

namespace {

std::vector<std::size_t> layer_indices(const LieAlgebra& L, int layer) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < L.dim(); ++i)
    if ((*L.layers())[i] == layer) idx.push_back(i);
  return idx;
}

}  // namespace

ModelCheckReport lie_model_check(const LieAlgebra& L) {
  ModelCheckReport rep;
  if (!L.layers()) {
    rep.error = "algebra is not stratified (no layer grading)";
    return rep;
  }
  auto gen_idx = layer_indices(L, 1);
  std::size_t n = gen_idx.size();
  std::size_t r = static_cast<std::size_t>(L.max_layer());
  if (n < 2) {
    rep.error = "layer 1 must have rank >= 2";
    return rep;
  }
  // generated by layer 1?
  Subspace layer1 = L.layer_span(1);
  if (liecore::subalgebra_generated(L, layer1).dim() != L.dim()) {
    rep.error = "algebra is not generated by layer 1";
    return rep;
  }
  FreeNilpotent F = freenilp::build_free(n, r);
  std::vector<Vec> images;
  for (std::size_t i : gen_idx) images.push_back(ratlin::unit_vec(L.dim(), i));
  auto surj = freenilp::canonical_surjection(F, L, images);
  if (!surj.ok) {
    rep.error = "canonical surjection failed: " + surj.error;
    return rep;
  }
  return carnot_model_check(F, surj.kernel);
}

NilpotentizeResult nilpotentize(const HomogeneousModelData& H) {
  NilpotentizeResult res;
  std::size_t dim = H.g.dim();
  auto flag = liecore::flag_growth(H.g, H.p1);
  std::vector<Subspace> filt;  // F_j = p^j + k, with F_0 = k
  filt.push_back(H.k);
  for (const auto& pj : flag) {
    Subspace next = sum(pj, H.k);
    // the p-flag can keep growing inside k after the quotient stabilizes
    if (next.dim() == filt.back().dim()) break;
    filt.push_back(std::move(next));
  }
  for (std::size_t j = 1; j < filt.size(); ++j)
    res.stabilized_growth.push_back(filt[j].dim() - H.k.dim());
  if (filt.back().dim() != dim) {
    res.error = "horizontal subspace is not bracket-generating modulo k";
    return res;
  }

  // layer representatives: V_1 = p1 itself, higher layers canonical
  std::vector<Mat> reps;
  reps.push_back(H.p1.basis());
  for (std::size_t j = 2; j < filt.size(); ++j)
    reps.push_back(complement_in(filt[j - 1], filt[j]).basis());

  std::size_t s = reps.size();
  std::vector<std::size_t> offsets{0};
  for (const auto& m : reps) offsets.push_back(offsets.back() + m.rows());
  std::size_t qdim = offsets.back();
  LieAlgebra graded(qdim);
  std::vector<int> layers(qdim);
  for (std::size_t j = 0; j < s; ++j) {
    res.layer_dims.push_back(reps[j].rows());
    for (std::size_t t = offsets[j]; t < offsets[j + 1]; ++t)
      layers[t] = static_cast<int>(j + 1);
  }

  for (std::size_t li = 0; li < s; ++li)
    for (std::size_t lj = li; lj < s; ++lj)
      for (std::size_t a = 0; a < reps[li].rows(); ++a)
        for (std::size_t b = (li == lj ? a + 1 : 0); b < reps[lj].rows(); ++b) {
          std::size_t ia = offsets[li] + a, ib = offsets[lj] + b;
          std::size_t t = li + lj + 2;  // target layer, 1-based
          if (t > s) continue;          // quotient bracket vanishes
          Vec w = H.g.bracket(reps[li].row(a), reps[lj].row(b));
          if (!filt[t].contains(w)) {
            res.error = "bracket left the filtration (not homogeneous data)";
            return res;
          }
          // w = (element of F_{t-1}) + sum c_e V_t[e]
          std::size_t lower = filt[t - 1].dim(), upper = reps[t - 1].rows();
          Mat sys(dim, lower + upper);
          for (std::size_t e = 0; e < lower; ++e)
            for (std::size_t q = 0; q < dim; ++q)
              sys.at(q, e) = filt[t - 1].basis().at(e, q);
          for (std::size_t e = 0; e < upper; ++e)
            for (std::size_t q = 0; q < dim; ++q)
              sys.at(q, lower + e) = reps[t - 1].at(e, q);
          auto sol = ratlin::solve_linear(sys, w);
          if (!sol.consistent) {
            res.error = "internal: filtration coordinates inconsistent";
            return res;
          }
          Vec c = ratlin::zero_vec(qdim);
          for (std::size_t e = 0; e < upper; ++e)
            c[offsets[t - 1] + e] = sol.particular[lower + e];
          graded.set_bracket(ia, ib, std::move(c));
        }
  graded.set_layers(std::move(layers));
  res.graded = std::move(graded);
  res.layer1_gram = H.gram;
  res.ok = true;
  return res;
}

IsoAnswer carnot_isomorphic(const LieAlgebra& gr, const LieAlgebra& target) {
  if (!gr.layers() || !target.layers()) return IsoAnswer::Inconclusive;
  int r1 = gr.max_layer(), r2 = target.max_layer();
  if (r1 != r2 || gr.dim() != target.dim()) return IsoAnswer::No;
  for (int l = 1; l <= r1; ++l)
    if (layer_indices(gr, l).size() != layer_indices(target, l).size())
      return IsoAnswer::No;
  auto gi1 = layer_indices(gr, 1);
  std::size_t n = gi1.size();
  FreeNilpotent F = freenilp::build_free(n, static_cast<std::size_t>(r1));

  auto kernel_of = [&](const LieAlgebra& L) -> std::optional<Subspace> {
    std::vector<Vec> images;
    for (std::size_t i : layer_indices(L, 1)) images.push_back(ratlin::unit_vec(L.dim(), i));
    auto surj = freenilp::canonical_surjection(F, L, images);
    if (!surj.ok) return std::nullopt;
    return surj.kernel;
  };
  auto k1 = kernel_of(gr), k2 = kernel_of(target);
  if (!k1 || !k2) return IsoAnswer::Inconclusive;
  if (*k1 == *k2) return IsoAnswer::Yes;
  if (carnot_model_check(F, *k1).verdict || carnot_model_check(F, *k2).verdict)
    return IsoAnswer::No;
  return IsoAnswer::Inconclusive;
}

std::string to_string(IsoAnswer a) {
  switch (a) {
    case IsoAnswer::Yes: return "yes";
    case IsoAnswer::No: return "no";
    default: return "inconclusive";
  }
}

}  // namespace modelcheck
