#ifndef CARNOT_HOLONOMY_HPP
#define CARNOT_HOLONOMY_HPP

#include <string>
#include <vector>

#include "carnot/liecore.hpp"
#include "carnot/modelcheck.hpp"

/// Horizontal holonomy of homogeneous model data (g, k, p1): validation of
/// the K-invariance assumptions, the algebraic trivial/full dichotomy,
/// flatness detection, the frame lift, and growth accounting modulo k.
namespace holonomy {

using liecore::LieAlgebra;
using modelcheck::HomogeneousModelData;
using ratlin::Mat;
using ratlin::Rational;
using ratlin::Subspace;
using ratlin::Vec;

struct ValidationReport {
  bool pass = true;
  std::string violated;  // the first violated invariant, human-readable
};

/// Checks: k is a subalgebra, k and p1 intersect trivially, [k, p1] <= p1,
/// gram symmetric positive definite, gram invariant under ad of k.
ValidationReport validate(const HomogeneousModelData& H);

enum class HolonomyVerdict { Trivial, Full };

struct HolonomyResult {
  HolonomyVerdict verdict = HolonomyVerdict::Trivial;
  Subspace generated;             // p-hat, the subalgebra generated by p1
  std::string decomposition_kind; // "ghat = phat (+) k" or "ghat = g"
  std::string error;              // dichotomy violated: not model data
};

/// Trivial iff the subalgebra generated by p1 is a complement of k;
/// Full iff it is all of g. Anything else is reported as an error.
HolonomyResult holonomy_dichotomy(const HomogeneousModelData& H);

struct FlatnessResult {
  bool is_flat = false;
  Subspace group_algebra;  // p-hat, the flat group structure, when flat
  std::string error;
};

FlatnessResult flatness_check(const HomogeneousModelData& H);

/// Same algebra with empty isotropy: the structure on the full group.
HomogeneousModelData frame_lift(const HomogeneousModelData& H);

/// Dims of (p^j + k)/k along the flag of p1, up to stabilization.
std::vector<std::size_t> step_and_growth(const HomogeneousModelData& H);

std::string to_string(HolonomyVerdict v);

}  // namespace holonomy

#endif
