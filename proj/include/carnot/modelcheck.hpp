#ifndef CARNOT_MODELCHECK_HPP
#define CARNOT_MODELCHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "carnot/catalog.hpp"
#include "carnot/freenilp.hpp"
#include "carnot/liecore.hpp"

/// Deciding the Carnot model-space property via O(n)-equivariance of
/// defining ideals, nilpotentizations, and kernel comparison of graded
/// algebras.
namespace modelcheck {

using freenilp::FreeNilpotent;
using liecore::LieAlgebra;
using liecore::LinearMap;
using ratlin::Mat;
using ratlin::Rational;
using ratlin::Subspace;
using ratlin::Vec;

struct ModelCheckReport {
  bool verdict = false;
  // failure witness: which action moved a vector out of the ideal
  struct Witness {
    bool reflection = false;      // else infinitesimal generator
    std::size_t generator = 0;    // so(n) basis index when !reflection
    Vec vector;                   // element of the ideal
    Vec image;                    // its image, outside the ideal
  };
  std::optional<Witness> witness;
  std::size_t ideal_dim = 0;
  std::size_t orbit_closure_dim = 0;
  std::string error;  // nonempty when the check could not run
};

/// verdict true iff the ideal is invariant under the induced derivations of
/// the so(n) basis and under the induced automorphism of the reflection
/// diag(-1,1,...,1). O(n) has two components, so this is complete.
ModelCheckReport carnot_model_check(const FreeNilpotent& F, const Subspace& ideal);

/// Reduction for a stratified algebra generated by layer 1 (orthonormal
/// basis assumed): build the canonical surjection from the free algebra and
/// check its kernel.
ModelCheckReport lie_model_check(const LieAlgebra& L);

struct HomogeneousModelData {
  LieAlgebra g;
  Subspace k;
  Subspace p1;
  Mat gram;  // inner product on p1 in its basis rows
};

struct NilpotentizeResult {
  bool ok = false;
  std::string error;
  LieAlgebra graded;                    // stratified output, layers set
  std::vector<std::size_t> layer_dims;
  std::vector<std::size_t> stabilized_growth;  // reported on failure too
  Mat layer1_gram;
};

/// Graded algebra on the quotients (p^j + k)/(p^{j-1} + k), brackets
/// induced from g modulo lower layers and k.
NilpotentizeResult nilpotentize(const HomogeneousModelData& H);

enum class IsoAnswer { Yes, No, Inconclusive };

/// Compare stratified algebras via canonical-surjection kernels in the free
/// algebra. Equal kernels mean yes; mismatching kernels are definitive only
/// when one of them is O(n)-invariant.
IsoAnswer carnot_isomorphic(const LieAlgebra& gr, const LieAlgebra& target);

std::string to_string(IsoAnswer a);

}  // namespace modelcheck

#endif
