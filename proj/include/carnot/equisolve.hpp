#ifndef CARNOT_EQUISOLVE_HPP
#define CARNOT_EQUISOLVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "carnot/catalog.hpp"
#include "carnot/liecore.hpp"

/// Exact solver for spaces of equivariant linear maps between O(n)/SO(n)
/// representations: intertwiner constraints assembled as one rational
/// linear system, kernel returned in canonical form.
namespace equisolve {

using liecore::LinearMap;
using ratlin::Mat;
using ratlin::Rational;
using ratlin::Vec;

enum class GroupTag { O, SO };

struct Representation {
  std::size_t n = 0;           // the underlying O(n)/SO(n)
  std::size_t module_dim = 0;
  std::vector<Mat> inf_generators;  // action of the so(n) basis, in order
  std::optional<Mat> reflection;    // action of diag(-1,1,...,1); O only
  GroupTag group_tag = GroupTag::SO;
};

/// Checks the so(n) commutation relations in the module and, for O,
/// reflection^2 = id plus compatibility with the infinitesimal action.
/// Returns an empty string on pass, else the violated relation.
std::string validate(const Representation& rep);

Representation vector_rep(std::size_t n, GroupTag tag);
Representation adjoint_rep(std::size_t n, GroupTag tag);
Representation tensor_rep(const Representation& r1, const Representation& r2);
Representation wedge2_rep(const Representation& r);

struct EquivariantSpace {
  std::vector<LinearMap> basis;
  std::size_t dim() const { return basis.size(); }
};

/// All L with L rho_src(A) = rho_dst(A) L for the so(n) basis, plus the
/// reflection constraint when both representations carry one. Each basis
/// map is re-verified against the constraints after solving.
EquivariantSpace equivariant_maps(const Representation& src, const Representation& dst);

std::size_t commutant_dim(const Representation& rep);

/// The stacked constraint matrix; the parallel entry point is used by the
/// solver, the serial one is the reference kept for testing.
Mat assemble_constraints(const Representation& src, const Representation& dst);
Mat assemble_constraints_serial(const Representation& src, const Representation& dst);

struct TensorLemmaReport {
  // maps: so(n) -> so(n); so(n) (x) R^n -> R^n; wedge^2 so(n) -> so(n)
  std::size_t dim_s = 0, dim_t = 0, dim_w = 0;
  bool s_is_identity = false;   // up to scale
  bool t_is_evaluation = false; // A (x) x -> Ax, up to scale
  bool w_is_bracket = false;    // A ^ B -> [A,B], up to scale
  bool pass = false;
};

/// O(n)-equivariant maps in the three shapes above: dims (1,1,1) for
/// n >= 3 and (1,1,0) for n = 2, each basis map proportional to the
/// canonical one.
TensorLemmaReport verify_tensor_lemma(std::size_t n);

}  // namespace equisolve

#endif
