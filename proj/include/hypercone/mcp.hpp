#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypercone/extreal.hpp"
#include "hypercone/finite_poset.hpp"
#include "hypercone/rng.hpp"

namespace hypercone {

// A map presented through its behavior on declared chains of the source.
// Chains carry their genuine suprema; adversarial chains may in addition
// declare an exact upper bound for the map's values along the chain, which
// turns a failure of the Monotone Convergence Property into a finite witness.
template <class E>
struct ValueChain {
  std::string label;
  std::function<E(long long)> at;
  E sup;
  std::optional<ExtNonneg> value_bound;
};

struct McpVerdict {
  bool pass = true;
  bool budget_limited = false;
  std::string witness;              // failing chain and the two values
  ExtNonneg chain_value, sup_value; // sup of sampled values vs value at the sup
  int chains_checked = 0;
};

// Budget-relative check of T(sup D) = sup T(D) over the supplied chains.
// "pass" means no counterexample was found within the budget; a returned
// failure is exact (monotonicity broken on sampled points, or the declared
// value bound pins sup T(D) strictly below T(sup D)).
template <class E>
McpVerdict check_mcp(const std::function<bool(const E&, const E&)>& leq,
                     const std::vector<ValueChain<E>>& chains,
                     const std::function<ExtNonneg(const E&)>& T, int budget) {
  McpVerdict v;
  for (const auto& c : chains) {
    ++v.chains_checked;
    ExtNonneg tv = T(c.sup);
    ExtNonneg best(Rat(0));
    bool attained = false;
    for (long long k = 0; k <= budget; ++k) {
      E e = c.at(k);
      if (!leq(e, c.sup)) {
        v.pass = false;
        v.witness = c.label + ": declared sup is not an upper bound";
        return v;
      }
      ExtNonneg val = T(e);
      if (!(val <= tv)) {
        v.pass = false;
        v.witness = c.label + ": map not monotone toward the sup";
        v.chain_value = val;
        v.sup_value = tv;
        return v;
      }
      best = ext_max(best, val);
      if (val == tv) attained = true;
    }
    if (attained) continue;
    if (c.value_bound && *c.value_bound < tv) {
      bool bound_ok = true;
      for (long long k = 0; k <= budget; ++k)
        if (!(T(c.at(k)) <= *c.value_bound)) bound_ok = false;
      if (bound_ok) {
        v.pass = false;
        v.witness = c.label;
        v.chain_value = *c.value_bound;
        v.sup_value = tv;
        return v;
      }
    }
    // unattained sup: consistent, but the verdict rests on sampled values
    if (!(best == tv)) v.budget_limited = true;
  }
  return v;
}

// ---------------------------------------------------------------------------
// finite-poset side

// Greatest monotone (= Mcp, on finite posets) minorant of T, target a finite
// complete lattice: x -> meet of T over the up-set of x.
std::vector<int> pr_project_finite(const FinitePoset& src, const FinitePoset& lat,
                                   const std::vector<int>& T);

// Independent oracle: pointwise join of every monotone map below T.
std::vector<int> pr_project_finite_oracle(const FinitePoset& src, const FinitePoset& lat,
                                          const std::vector<int>& T);

// One step of the directed-inf construction: x -> inf over directed A with
// sup x of sup T(A). On a finite poset every such A contains x, so this
// returns T itself; the audit asserts that literally.
std::vector<int> defprt_step(const FinitePoset& src, const FinitePoset& lat,
                             const std::vector<int>& T);

struct EquivalenceAudit {
  int posets = 0;
  int maps_checked = 0;
  bool all_agree = true;
  bool reduce_to_monotone = true;  // on finite posets all five collapse
  std::string witness;
};

// Characterizations (a)-(e) of the Mcp evaluated literally on all maps
// between all labeled posets with at most max_n elements. n = 3 runs in
// milliseconds; 4 takes minutes and 5 is only for patient offline runs.
EquivalenceAudit equivalences_audit(int max_n);

// The five characterizations of one map, evaluated literally.
std::array<bool, 5> mcp_characterizations(const FinitePoset& p, const FinitePoset& q,
                                          const std::vector<int>& f);

std::vector<FinitePoset> all_labeled_posets(int n);

// ---------------------------------------------------------------------------
// weighted functionals on the discrete function cone

// L(g) = sum over the support of w_i g_i mu_i, and +inf as soon as g carries
// mass outside the support.
struct WeightedFunctionalSpec {
  std::vector<Rat> mu;            // strictly positive weights
  std::vector<ExtNonneg> w;       // base vector
  std::vector<bool> support;      // finiteness support S
};

ExtNonneg weighted_eval(const WeightedFunctionalSpec& spec, const std::vector<ExtNonneg>& g);

// The projection onto functionals with the Mcp, in closed form: w on the
// support, +inf off it.
std::vector<ExtNonneg> pr_project_weighted(const WeightedFunctionalSpec& spec);

// The obstruction to a two-sided completion on the discrete window {1..N}:
// the filtered family A_i (i zeros then +inf) has inf 0, while the sum
// functional is +inf on every A_i.
struct FilteredInfDemo {
  ExtNonneg t_of_inf;   // value at the infimum
  ExtNonneg inf_of_t;   // infimum of the values
  bool chain_filtered;  // the witness family is genuinely decreasing
};
FilteredInfDemo filtered_inf_demo(int n);

}  // namespace hypercone
