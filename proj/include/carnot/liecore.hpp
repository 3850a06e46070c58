#ifndef CARNOT_LIECORE_HPP
#define CARNOT_LIECORE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carnot/ratlin.hpp"

/// Finite-dimensional Lie algebras over the rationals given by sparse
/// structure constants on a named basis.
namespace liecore {

using ratlin::Mat;
using ratlin::Rational;
using ratlin::Subspace;
using ratlin::Vec;

/// Structure constants are stored only for i < j; [e_i,e_i] = 0 and
/// antisymmetry are implicit. An optional positive integer layer per basis
/// element records a grading.
class LieAlgebra {
public:
  LieAlgebra() : dim_(0) {}
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  void set_label(std::size_t i, std::string s) { labels_[i] = std::move(s); }

  const std::map<std::pair<std::size_t, std::size_t>, Vec>& brackets() const {
    return brackets_;
  }

  /// Sets [e_i, e_j] = coeffs for i < j. Zero vectors are dropped.
  void set_bracket(std::size_t i, std::size_t j, Vec coeffs);

  /// [e_i, e_j] for any i, j (antisymmetry applied).
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;

  const std::optional<std::vector<int>>& layers() const { return layers_; }
  void set_layers(std::vector<int> layers);

  /// Subspace spanned by basis elements of the given layer.
  Subspace layer_span(int layer) const;
  int max_layer() const;

private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> brackets_;
  std::optional<std::vector<int>> layers_;
};

struct JacobiReport {
  bool pass = true;
  std::size_t i = 0, j = 0, k = 0;  // failing triple when !pass
  Vec residual;
};

/// Exhaustive Jacobi scan over all basis triples i < j < k.
/// The default entry point runs the triples in parallel when OpenMP is
/// enabled; jacobi_check_serial is the reference kept for testing.
JacobiReport jacobi_check(const LieAlgebra& L);
JacobiReport jacobi_check_serial(const LieAlgebra& L);

/// For a layered algebra: [layer i, layer j] may only have support in
/// layer i+j. Returns a failing basis pair, or nullopt on pass.
std::optional<std::pair<std::size_t, std::size_t>> graded_check(const LieAlgebra& L);

/// Smallest bracket-closed subspace containing the seed.
Subspace subalgebra_generated(const LieAlgebra& L, const Subspace& seed);

/// Flag p^1 <= p^2 <= ... with p^{j+1} = p^j + [p^1, p^j], until stable.
std::vector<Subspace> flag_growth(const LieAlgebra& L, const Subspace& horizontal);

std::vector<std::size_t> growth_dims(const std::vector<Subspace>& flag);

bool is_ideal(const LieAlgebra& L, const Subspace& s);
bool is_subalgebra(const LieAlgebra& L, const Subspace& s);

/// Linear map between algebras (or plain spaces); matrix is
/// target_dim x source_dim, acting on column vectors.
struct LinearMap {
  Mat matrix;
  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  Vec apply(const Vec& v) const { return matrix.apply(v); }
};

LinearMap compose(const LinearMap& f, const LinearMap& g);  // f after g

struct QuotientResult {
  LieAlgebra algebra;
  LinearMap projection;           // L -> quotient
  Subspace complement;            // canonical complement of the ideal in L
};

/// Quotient by a verified ideal, on the canonical RREF complement basis.
QuotientResult quotient(const LieAlgebra& L, const Subspace& ideal);

struct HomReport {
  bool pass = true;
  std::size_t i = 0, j = 0;  // failing basis pair when !pass
  bool is_isomorphism = false;
};

/// pass iff Phi[e_i,e_j] = [Phi e_i, Phi e_j] for all i < j;
/// is_isomorphism iff additionally rank(Phi) = dim.
HomReport homomorphism_check(const LinearMap& phi, const LieAlgebra& src,
                             const LieAlgebra& dst);

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

}  // namespace liecore

#endif
