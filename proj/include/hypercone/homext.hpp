#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercone/cone.hpp"
#include "hypercone/simplex.hpp"

namespace hypercone {

struct HypothesisFailed : std::runtime_error {
  explicit HypothesisFailed(const std::string& what) : std::runtime_error(what) {}
};

// Riesz-Kantorovich join/meet with the optimal decomposition attached.
struct RkResult {
  ExtNonneg join_value, meet_value;
  ConeVec join_v1, join_v2;  // v = v1 + v2 attaining the join
  ConeVec meet_v1, meet_v2;
};
RkResult rk_join_meet(const DiscreteCone& cone, const DualVector& f1, const DualVector& f2,
                      const ConeVec& v);

// Brute-force decomposition oracle on a rational grid with the given step;
// returns the best join/meet values it can see.
std::pair<ExtNonneg, ExtNonneg> rk_grid_oracle(const DiscreteCone& cone, const DualVector& f1,
                                               const DualVector& f2, const ConeVec& v,
                                               const Rat& step);
// Exact corner oracle: decompositions assigning each coordinate wholly to one
// side; attains the closed forms on the discrete cone.
std::pair<ExtNonneg, ExtNonneg> rk_corner_oracle(const DiscreteCone& cone, const DualVector& f1,
                                                 const DualVector& f2, const ConeVec& v);

// ---------------------------------------------------------------------------
// constructive extension of linear maps

// Ambient wedge W = {x in Q^dim : wedge_rows . x >= 0 componentwise}; an
// empty row list means the nonnegative orthant. The subwedge is generated by
// `gens` with assigned `values`; bounds are the zero map / infinity map when
// the optional coefficient vectors are absent (coefficients carry their
// weights already folded in).
struct ExtensionProblem {
  int dim = 0;
  std::vector<std::vector<Rat>> wedge_rows;
  std::vector<std::vector<Rat>> gens;
  std::vector<ExtNonneg> values;
  std::optional<std::vector<ExtNonneg>> phi_coeff;  // superadditive lower bound, linear form
  std::optional<std::vector<ExtNonneg>> psi_coeff;  // subadditive upper bound, linear form
};

// Verifies the sandwich hypothesis by exact LP; throws HypothesisFailed with
// the violating combination otherwise.
void check_hypothesis(const ExtensionProblem& p);

// Consistency of the assigned generator values (they must define one linear
// map on nonnegative combinations).
void check_consistency(const ExtensionProblem& p);

// The single extension step: the infimum defining M(v), as an exact LP over
// generator coefficients, +inf when the constraint family is empty.
ExtNonneg extension_step(const ExtensionProblem& p, const std::vector<Rat>& v);

struct ExtendAllResult {
  DualVector dual;                    // the extended functional as a dual vector
  std::vector<ExtNonneg> raw_values;  // M(e_i) in extension order
  bool bounds_hold = true;            // phi <= L <= psi on the sample grid
  bool extends_up_to_eps = true;      // L = M on generators up to eps-absorption
};

// Extends over the coordinate directions of the orthant in the given order,
// then lands in the dual through the weighted projection.
ExtendAllResult extend_all(const DiscreteCone& cone, ExtensionProblem p,
                           const std::vector<int>& order, uint64_t grid_seed = 11);

// ---------------------------------------------------------------------------
// classical Hahn-Banach through the future-cone construction

struct PolyhedralSublinear {
  std::vector<std::vector<Rat>> forms;  // p(v) = max_j forms[j] . v
};
Rat eval_sublinear(const PolyhedralSublinear& p, const std::vector<Rat>& v);

struct HahnBanachResult {
  std::vector<Rat> t_hat;  // coefficients of the extension
  bool extends = true;     // agrees with T on the subspace basis
  bool below_p = true;     // T_hat <= p, exact (conv-hull membership + grid)
  std::vector<ExtNonneg> cone_values;  // the raw extension values on the added rays
};

HahnBanachResult hahn_banach(const PolyhedralSublinear& p,
                             const std::vector<std::vector<Rat>>& subspace_basis,
                             const std::vector<Rat>& t_values,
                             const std::vector<int>& extension_order = {});

// T <= p on the span, decided exactly (conv-hull membership of the restricted
// forms).
bool dominated_on_span(const PolyhedralSublinear& p, const std::vector<std::vector<Rat>>& basis,
                       const std::vector<Rat>& t_values);

}  // namespace hypercone
