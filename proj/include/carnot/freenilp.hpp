#ifndef CARNOT_FREENILP_HPP
#define CARNOT_FREENILP_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "carnot/liecore.hpp"

/// Free nilpotent Lie algebras on n generators of step r, realized on a
/// Hall basis with exact structure constants.
namespace freenilp {

using liecore::LieAlgebra;
using liecore::LinearMap;
using ratlin::Mat;
using ratlin::Rational;
using ratlin::Subspace;
using ratlin::Vec;

/// A Hall word is a generator or an ordered pair of Hall words. Words are
/// stored flat; left/right are indices into the owning basis list.
struct HallWord {
  int generator = -1;  // >= 0 for leaves
  std::size_t left = 0, right = 0;
  std::size_t degree = 1;
  std::string label;
  bool is_generator() const { return generator >= 0; }
};

class FreeNilpotent {
public:
  /// Hall set with order: degree first, then recursive comparison of
  /// (left, right); generators ordered by index. Brackets of degree > r
  /// are truncated to zero. Throws if the resulting dimension exceeds
  /// max_dim.
  FreeNilpotent(std::size_t n, std::size_t r, std::size_t max_dim = 4096);

  std::size_t generators() const { return n_; }
  std::size_t step() const { return r_; }
  std::size_t dim() const { return words_.size(); }
  const std::vector<HallWord>& hall_basis() const { return words_; }
  const LieAlgebra& algebra() const { return algebra_; }

  std::vector<std::size_t> layer_ranks() const;

  /// [e_u, e_v] of two Hall basis elements, as coefficients over the basis.
  Vec basis_bracket(std::size_t u, std::size_t v) const {
    return algebra_.bracket_basis(u, v);
  }

private:
  const Vec& product(std::size_t u, std::size_t v);  // memoized, u < v
  Vec signed_product(std::size_t u, std::size_t v);

  std::size_t n_, r_;
  std::vector<HallWord> words_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> memo_;
  std::map<std::pair<std::size_t, std::size_t>, char> state_;
  LieAlgebra algebra_;
};

FreeNilpotent build_free(std::size_t n, std::size_t r, std::size_t max_dim = 4096);

/// Layer ranks of the free nilpotent algebra by the Moebius/necklace
/// formula; independent of the Hall enumeration.
std::vector<std::size_t> witt_ranks(std::size_t n, std::size_t r);

/// The unique graded multiplicative extension of q on the generators:
/// leaf substitution through the Hall trees, re-expressed in the basis.
LinearMap induced_endomorphism(const FreeNilpotent& F, const Mat& q);

/// Derivation extension of an n x n matrix acting on the generators
/// (Leibniz through the Hall trees).
LinearMap induced_derivation(const FreeNilpotent& F, const Mat& a);

struct SurjectionResult {
  bool ok = false;
  std::string error;
  LinearMap map;      // F -> target
  Subspace kernel;    // canonical subspace of F
};

/// The graded homomorphism sending generator i to generator_images[i] in a
/// stratified target. Failure to span layer 1 or to satisfy the
/// homomorphism law is reported, not silent.
SurjectionResult canonical_surjection(const FreeNilpotent& F, const LieAlgebra& target,
                                      const std::vector<Vec>& generator_images);

}  // namespace freenilp

#endif
