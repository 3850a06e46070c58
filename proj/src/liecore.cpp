#include "carnot/liecore.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liecore {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) labels_[i] = "e" + std::to_string(i + 1);
  }
  if (labels_.size() != dim_)
    throw std::invalid_argument("LieAlgebra: label count != dim");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, Vec coeffs) {
  if (i >= j || j >= dim_) throw std::invalid_argument("set_bracket: need i < j < dim");
  if (coeffs.size() != dim_) throw std::invalid_argument("set_bracket: coeff size");
  if (ratlin::is_zero(coeffs))
    brackets_.erase({i, j});
  else
    brackets_[{i, j}] = std::move(coeffs);
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::invalid_argument("bracket_basis: index");
  if (i == j) return ratlin::zero_vec(dim_);
  bool flip = i > j;
  auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets_.end()) return ratlin::zero_vec(dim_);
  return flip ? Rational(-1) * it->second : it->second;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec out = ratlin::zero_vec(dim_);
  for (const auto& [ij, coeffs] : brackets_) {
    auto [i, j] = ij;
    Rational c = x[i] * y[j] - x[j] * y[i];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!coeffs[k].is_zero()) out[k] += c * coeffs[k];
  }
  return out;
}

void LieAlgebra::set_layers(std::vector<int> layers) {
  if (layers.size() != dim_) throw std::invalid_argument("set_layers: size");
  for (int l : layers)
    if (l < 1) throw std::invalid_argument("set_layers: layers are positive");
  layers_ = std::move(layers);
}

Subspace LieAlgebra::layer_span(int layer) const {
  if (!layers_) throw std::invalid_argument("layer_span: algebra has no grading");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim_; ++i)
    if ((*layers_)[i] == layer) rows.push_back(ratlin::unit_vec(dim_, i));
  return Subspace::span(rows, dim_);
}

int LieAlgebra::max_layer() const {
  if (!layers_) throw std::invalid_argument("max_layer: algebra has no grading");
  return *std::max_element(layers_->begin(), layers_->end());
}

namespace {

// structure constants flattened for O(1) pair lookup; rows keep only their
// nonzero entries, which is what makes the exhaustive triple scan feasible
struct SparseBrackets {
  std::size_t dim;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> storage;
  std::vector<int> table;  // index into storage at i*dim + j (i < j), else -1

  explicit SparseBrackets(const LieAlgebra& L)
      : dim(L.dim()), table(L.dim() * L.dim(), -1) {
    for (const auto& [ij, coeffs] : L.brackets()) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (std::size_t k = 0; k < dim; ++k)
        if (!coeffs[k].is_zero()) row.emplace_back(k, coeffs[k]);
      table[ij.first * dim + ij.second] = static_cast<int>(storage.size());
      storage.push_back(std::move(row));
    }
  }

  const std::vector<std::pair<std::size_t, Rational>>* row(std::size_t i,
                                                           std::size_t j) const {
    int idx = table[i * dim + j];
    return idx < 0 ? nullptr : &storage[idx];
  }
};

// residual of the triple (i,j,k), i < j < k, as a dense vector
Vec sparse_jacobi_residual(const SparseBrackets& sb, std::size_t i, std::size_t j,
                           std::size_t k) {
  Vec acc = ratlin::zero_vec(sb.dim);
  // term([e_a,e_b], e_c) with the cyclic signs for a < b < c
  auto add_term = [&](std::size_t a, std::size_t b, std::size_t c, int sign) {
    const auto* r1 = sb.row(a, b);
    if (!r1) return;
    for (const auto& [l, cf] : *r1) {
      if (l == c) continue;
      bool flip = l > c;
      const auto* r2 = flip ? sb.row(c, l) : sb.row(l, c);
      if (!r2) continue;
      Rational factor = (sign < 0) != flip ? -cf : cf;
      for (const auto& [t, cf2] : *r2) acc[t] += factor * cf2;
    }
  };
  add_term(i, j, k, 1);   // [[e_i,e_j],e_k]
  add_term(j, k, i, 1);   // [[e_j,e_k],e_i]
  add_term(i, k, j, -1);  // [[e_k,e_i],e_j] = -[[e_i,e_k],e_j]
  return acc;
}

}  // namespace

JacobiReport jacobi_check_serial(const LieAlgebra& L) {
  SparseBrackets sb(L);
  for (std::size_t i = 0; i + 2 < L.dim(); ++i)
    for (std::size_t j = i + 1; j + 1 < L.dim(); ++j) {
      bool row_ij = sb.row(i, j) != nullptr;
      for (std::size_t k = j + 1; k < L.dim(); ++k) {
        if (!row_ij && !sb.row(j, k) && !sb.row(i, k)) continue;
        Vec r = sparse_jacobi_residual(sb, i, j, k);
        if (!ratlin::is_zero(r)) return {false, i, j, k, std::move(r)};
      }
    }
  return {};
}

JacobiReport jacobi_check(const LieAlgebra& L) {
#ifndef _OPENMP
  return jacobi_check_serial(L);
#else
  const std::size_t n = L.dim();
  if (n < 3) return {};
  SparseBrackets sb(L);
  std::atomic<bool> failed{false};
  JacobiReport report;
#pragma omp parallel
  {
    JacobiReport local;
    bool local_fail = false;
#pragma omp for schedule(dynamic) nowait
    for (long long i = 0; i < static_cast<long long>(n) - 2; ++i) {
      if (failed.load(std::memory_order_relaxed) || local_fail) continue;
      for (std::size_t j = i + 1; j + 1 < n && !local_fail; ++j) {
        bool row_ij = sb.row(i, j) != nullptr;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (!row_ij && !sb.row(j, k) && !sb.row(i, k)) continue;
          Vec r = sparse_jacobi_residual(sb, static_cast<std::size_t>(i), j, k);
          if (!ratlin::is_zero(r)) {
            local = {false, static_cast<std::size_t>(i), j, k, std::move(r)};
            local_fail = true;
            break;
          }
        }
      }
    }
    if (local_fail) {
#pragma omp critical
      {
        // keep the lexicographically first failure for determinism
        if (report.pass || std::tie(local.i, local.j, local.k) <
                               std::tie(report.i, report.j, report.k))
          report = local;
        failed.store(true, std::memory_order_relaxed);
      }
    }
  }
  return report;
#endif
}

std::optional<std::pair<std::size_t, std::size_t>> graded_check(const LieAlgebra& L) {
  if (!L.layers()) throw std::invalid_argument("graded_check: algebra has no grading");
  const auto& layers = *L.layers();
  for (const auto& [ij, coeffs] : L.brackets()) {
    auto [i, j] = ij;
    int expect = layers[i] + layers[j];
    for (std::size_t k = 0; k < L.dim(); ++k)
      if (!coeffs[k].is_zero() && layers[k] != expect) return ij;
  }
  return std::nullopt;
}

Subspace subalgebra_generated(const LieAlgebra& L, const Subspace& seed) {
  if (seed.ambient_dim() != L.dim())
    throw std::invalid_argument("subalgebra_generated: ambient mismatch");
  Subspace cur = seed;
  for (;;) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < cur.dim(); ++i) rows.push_back(cur.basis_row(i));
    for (std::size_t i = 0; i < cur.dim(); ++i)
      for (std::size_t j = i + 1; j < cur.dim(); ++j)
        rows.push_back(L.bracket(cur.basis_row(i), cur.basis_row(j)));
    Subspace next = Subspace::span(rows, L.dim());
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

std::vector<Subspace> flag_growth(const LieAlgebra& L, const Subspace& horizontal) {
  if (horizontal.ambient_dim() != L.dim())
    throw std::invalid_argument("flag_growth: ambient mismatch");
  std::vector<Subspace> flag{horizontal};
  for (;;) {
    const Subspace& prev = flag.back();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < prev.dim(); ++i) rows.push_back(prev.basis_row(i));
    for (std::size_t i = 0; i < horizontal.dim(); ++i)
      for (std::size_t j = 0; j < prev.dim(); ++j)
        rows.push_back(L.bracket(horizontal.basis_row(i), prev.basis_row(j)));
    Subspace next = Subspace::span(rows, L.dim());
    if (next.dim() == prev.dim()) return flag;
    flag.push_back(next);
  }
}

std::vector<std::size_t> growth_dims(const std::vector<Subspace>& flag) {
  std::vector<std::size_t> dims;
  dims.reserve(flag.size());
  for (const auto& s : flag) dims.push_back(s.dim());
  return dims;
}

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(L.bracket(ratlin::unit_vec(L.dim(), i), s.basis_row(j))))
        return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(L.bracket(s.basis_row(i), s.basis_row(j)))) return false;
  return true;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  return {f.matrix * g.matrix};
}

QuotientResult quotient(const LieAlgebra& L, const Subspace& ideal) {
  if (!is_ideal(L, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  Subspace comp = complement_in(ideal, Subspace::full(L.dim()));
  std::size_t q = comp.dim();
  // projection: write v = (ideal part) + sum c_a comp_a, keep the c_a
  Mat basis(L.dim(), L.dim());
  for (std::size_t i = 0; i < ideal.dim(); ++i) basis.set_row(i, ideal.basis_row(i));
  for (std::size_t i = 0; i < q; ++i) basis.set_row(ideal.dim() + i, comp.basis_row(i));
  Mat to_coords = basis.transpose();
  LinearMap proj{Mat(q, L.dim())};
  for (std::size_t j = 0; j < L.dim(); ++j) {
    auto sol = ratlin::solve_linear(to_coords, ratlin::unit_vec(L.dim(), j));
    for (std::size_t a = 0; a < q; ++a) proj.matrix.at(a, j) = sol.particular[ideal.dim() + a];
  }
  LieAlgebra quot(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      quot.set_bracket(a, b, proj.apply(L.bracket(comp.basis_row(a), comp.basis_row(b))));
  return {std::move(quot), std::move(proj), std::move(comp)};
}

HomReport homomorphism_check(const LinearMap& phi, const LieAlgebra& src,
                             const LieAlgebra& dst) {
  if (phi.source_dim() != src.dim() || phi.target_dim() != dst.dim())
    throw std::invalid_argument("homomorphism_check: shape mismatch");
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      Vec lhs = phi.apply(src.bracket_basis(i, j));
      Vec rhs = dst.bracket(phi.apply(ratlin::unit_vec(src.dim(), i)),
                            phi.apply(ratlin::unit_vec(src.dim(), j)));
      if (!ratlin::is_zero(lhs - rhs)) return {false, i, j, false};
    }
  bool iso = src.dim() == dst.dim() && ratlin::rank(phi.matrix) == src.dim();
  return {true, 0, 0, iso};
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
  std::size_t dim = 0;
  for (const auto& p : parts) dim += p.dim();
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t pi = 0; pi < parts.size(); ++pi)
    for (const auto& l : parts[pi].basis_labels())
      labels.push_back(parts.size() > 1 ? l + "#" + std::to_string(pi + 1) : l);
  LieAlgebra out(dim, std::move(labels));
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (const auto& [ij, coeffs] : p.brackets()) {
      Vec c = ratlin::zero_vec(dim);
      for (std::size_t k = 0; k < p.dim(); ++k) c[off + k] = coeffs[k];
      out.set_bracket(off + ij.first, off + ij.second, std::move(c));
    }
    off += p.dim();
  }
  return out;
}

}  // namespace liecore
