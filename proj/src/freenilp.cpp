#include "carnot/freenilp.hpp"

#include <algorithm>
#include <stdexcept>

namespace freenilp {

std::vector<std::size_t> witt_ranks(std::size_t n, std::size_t r) {
  std::vector<std::size_t> ranks;
  for (std::size_t k = 1; k <= r; ++k) {
    long long acc = 0;
    for (std::size_t d = 1; d <= k; ++d) {
      if (k % d != 0) continue;
      // Moebius mu(d)
      std::size_t m = d;
      int mu = 1;
      for (std::size_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) { mu = 0; break; }
        mu = -mu;
      }
      if (mu != 0 && m > 1) mu = -mu;
      if (mu == 0) continue;
      long long pw = 1;
      for (std::size_t e = 0; e < k / d; ++e) pw *= static_cast<long long>(n);
      acc += mu * pw;
    }
    ranks.push_back(static_cast<std::size_t>(acc / static_cast<long long>(k)));
  }
  return ranks;
}

FreeNilpotent::FreeNilpotent(std::size_t n, std::size_t r, std::size_t max_dim)
    : n_(n), r_(r) {
  if (n < 2 || r < 1) throw std::invalid_argument("FreeNilpotent: need n >= 2, r >= 1");
  {
    std::size_t total = 0;
    for (std::size_t w : witt_ranks(n, r)) total += w;
    if (total > max_dim)
      throw std::invalid_argument("FreeNilpotent: dimension " + std::to_string(total) +
                                  " exceeds limit " + std::to_string(max_dim));
  }
  for (std::size_t i = 0; i < n; ++i) {
    HallWord w;
    w.generator = static_cast<int>(i);
    w.degree = 1;
    w.label = "A" + std::to_string(i + 1);
    words_.push_back(std::move(w));
  }
  for (std::size_t d = 2; d <= r; ++d) {
    std::vector<std::pair<std::size_t, std::size_t>> cands;
    for (std::size_t u = 0; u < words_.size(); ++u)
      for (std::size_t v = u + 1; v < words_.size(); ++v) {
        if (words_[u].degree + words_[v].degree != d) continue;
        if (!words_[v].is_generator() && words_[v].left > u) continue;
        cands.emplace_back(u, v);
      }
    std::sort(cands.begin(), cands.end());
    for (auto [u, v] : cands) {
      HallWord w;
      w.left = u;
      w.right = v;
      w.degree = d;
      w.label = "[" + words_[u].label + "," + words_[v].label + "]";
      pair_index_[{u, v}] = words_.size();
      words_.push_back(std::move(w));
    }
  }

  std::vector<std::string> labels;
  for (const auto& w : words_) labels.push_back(w.label);
  algebra_ = LieAlgebra(words_.size(), labels);
  for (std::size_t u = 0; u < words_.size(); ++u)
    for (std::size_t v = u + 1; v < words_.size(); ++v)
      algebra_.set_bracket(u, v, product(u, v));
  std::vector<int> layers;
  for (const auto& w : words_) layers.push_back(static_cast<int>(w.degree));
  algebra_.set_layers(std::move(layers));
  memo_.clear();
  state_.clear();
}

Vec FreeNilpotent::signed_product(std::size_t u, std::size_t v) {
  if (u == v) return ratlin::zero_vec(words_.size());
  if (u < v) return product(u, v);
  return Rational(-1) * product(v, u);
}

// Hall rewriting: for u < v with [u,v] not a basis word, v = [v1,v2] with
// v1 > u, and [u,[v1,v2]] = [[u,v1],v2] + [v1,[u,v2]].
const Vec& FreeNilpotent::product(std::size_t u, std::size_t v) {
  auto key = std::make_pair(u, v);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  auto& st = state_[key];
  if (st == 1) throw std::logic_error("FreeNilpotent: rewriting cycle");
  st = 1;

  const std::size_t dim = words_.size();
  Vec out = ratlin::zero_vec(dim);
  std::size_t d = words_[u].degree + words_[v].degree;
  if (d > r_) {
    // truncated
  } else if (auto pi = pair_index_.find(key); pi != pair_index_.end()) {
    out[pi->second] = Rational(1);
  } else {
    std::size_t v1 = words_[v].left, v2 = words_[v].right;
    Vec a = product(u, v1);  // u < v1 since the Hall condition failed
    for (std::size_t w = 0; w < dim; ++w)
      if (!a[w].is_zero()) out = out + a[w] * signed_product(w, v2);
    Vec b = product(u, v2);  // u < v1 < v2
    for (std::size_t w = 0; w < dim; ++w)
      if (!b[w].is_zero()) out = out + b[w] * signed_product(v1, w);
  }
  state_[key] = 2;
  return memo_.emplace(key, std::move(out)).first->second;
}

std::vector<std::size_t> FreeNilpotent::layer_ranks() const {
  std::vector<std::size_t> ranks(r_, 0);
  for (const auto& w : words_) ++ranks[w.degree - 1];
  return ranks;
}

FreeNilpotent build_free(std::size_t n, std::size_t r, std::size_t max_dim) {
  return FreeNilpotent(n, r, max_dim);
}

LinearMap induced_endomorphism(const FreeNilpotent& F, const Mat& q) {
  if (q.rows() != F.generators() || q.cols() != F.generators())
    throw std::invalid_argument("induced_endomorphism: q must be n x n");
  const auto& L = F.algebra();
  std::size_t dim = F.dim();
  std::vector<Vec> image(dim);
  const auto& words = F.hall_basis();
  for (std::size_t w = 0; w < dim; ++w) {
    if (words[w].is_generator()) {
      Vec v = ratlin::zero_vec(dim);
      for (std::size_t k = 0; k < F.generators(); ++k)
        v[k] = q.at(k, static_cast<std::size_t>(words[w].generator));
      image[w] = std::move(v);
    } else {
      image[w] = L.bracket(image[words[w].left], image[words[w].right]);
    }
  }
  Mat m(dim, dim);
  for (std::size_t w = 0; w < dim; ++w)
    for (std::size_t k = 0; k < dim; ++k) m.at(k, w) = image[w][k];
  return {std::move(m)};
}

LinearMap induced_derivation(const FreeNilpotent& F, const Mat& a) {
  if (a.rows() != F.generators() || a.cols() != F.generators())
    throw std::invalid_argument("induced_derivation: matrix must be n x n");
  const auto& L = F.algebra();
  std::size_t dim = F.dim();
  std::vector<Vec> der(dim);
  const auto& words = F.hall_basis();
  for (std::size_t w = 0; w < dim; ++w) {
    if (words[w].is_generator()) {
      Vec v = ratlin::zero_vec(dim);
      for (std::size_t k = 0; k < F.generators(); ++k)
        v[k] = a.at(k, static_cast<std::size_t>(words[w].generator));
      der[w] = std::move(v);
    } else {
      std::size_t l = words[w].left, r = words[w].right;
      der[w] = L.bracket(der[l], ratlin::unit_vec(dim, r)) +
               L.bracket(ratlin::unit_vec(dim, l), der[r]);
    }
  }
  Mat m(dim, dim);
  for (std::size_t w = 0; w < dim; ++w)
    for (std::size_t k = 0; k < dim; ++k) m.at(k, w) = der[w][k];
  return {std::move(m)};
}

SurjectionResult canonical_surjection(const FreeNilpotent& F, const LieAlgebra& target,
                                      const std::vector<Vec>& generator_images) {
  SurjectionResult res;
  if (generator_images.size() != F.generators()) {
    res.error = "expected one image per generator";
    return res;
  }
  if (!target.layers()) {
    res.error = "target is not stratified (no layer grading)";
    return res;
  }
  if (static_cast<std::size_t>(target.max_layer()) > F.step()) {
    res.error = "target step exceeds free algebra step";
    return res;
  }
  Subspace layer1 = target.layer_span(1);
  Subspace image_span = Subspace::span(generator_images, target.dim());
  for (const auto& v : generator_images)
    if (!layer1.contains(v)) {
      res.error = "generator image outside layer 1";
      return res;
    }
  if (image_span != layer1) {
    res.error = "generator images do not span layer 1";
    return res;
  }

  std::size_t dim = F.dim();
  std::vector<Vec> image(dim);
  const auto& words = F.hall_basis();
  for (std::size_t w = 0; w < dim; ++w) {
    if (words[w].is_generator())
      image[w] = generator_images[static_cast<std::size_t>(words[w].generator)];
    else
      image[w] = target.bracket(image[words[w].left], image[words[w].right]);
  }
  Mat m(target.dim(), dim);
  for (std::size_t w = 0; w < dim; ++w)
    for (std::size_t k = 0; k < target.dim(); ++k) m.at(k, w) = image[w][k];
  LinearMap phi{std::move(m)};
  auto hom = liecore::homomorphism_check(phi, F.algebra(), target);
  if (!hom.pass) {
    res.error = "induced map is not a homomorphism (target is not a quotient): pair (" +
                std::to_string(hom.i) + "," + std::to_string(hom.j) + ")";
    return res;
  }
  res.ok = true;
  res.kernel = Subspace::span(ratlin::kernel(phi.matrix));
  res.map = std::move(phi);
  return res;
}

}  // namespace freenilp
