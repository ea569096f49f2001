#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypercone/extreal.hpp"
#include "hypercone/mcp.hpp"
#include "hypercone/rng.hpp"

namespace hypercone {

struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownCatalogId : std::runtime_error {
  explicit UnknownCatalogId(const std::string& id) : std::runtime_error("unknown catalog cone " + id) {}
};

// The discrete function cone: vectors over a finite index set with strictly
// positive rational weights, coordinatewise order.
struct DiscreteCone {
  std::vector<Rat> mu;
  int size() const { return (int)mu.size(); }
  static DiscreteCone uniform(int n) {
    DiscreteCone c;
    c.mu.assign(n, Rat(1, (long long)n));
    return c;
  }
  static DiscreteCone ones(int n) {
    DiscreteCone c;
    c.mu.assign(n, Rat(1));
    return c;
  }
};

using ConeVec = std::vector<ExtNonneg>;

ConeVec cv_add(const ConeVec& a, const ConeVec& b);
ConeVec cv_scale(const Rat& l, const ConeVec& a);
ConeVec cv_meet(const ConeVec& a, const ConeVec& b);
ConeVec cv_join(const ConeVec& a, const ConeVec& b);
ConeVec cv_eps(const ConeVec& a);
ConeVec cv_inf_mul(const ConeVec& a);  // sup of lambda * a over lambda > 0
ConeVec cv_diff(const ConeVec& hi, const ConeVec& lo);  // lattice difference, lo <= hi
bool cv_leq(const ConeVec& a, const ConeVec& b);
bool cv_eq(const ConeVec& a, const ConeVec& b);
std::string cv_str(const ConeVec& a);

ConeVec random_cone_vec(Rng& rng, int n, bool allow_inf = true);

// A functional on the discrete cone: L_f(g) = sum_i f_i g_i mu_i.
struct DualVector {
  std::vector<ExtNonneg> f;
};
ExtNonneg dual_eval(const DiscreteCone& cone, const DualVector& l, const ConeVec& v);

// One exact evaluation of every lattice law on a sampled triple; throws on
// the first violated identity (tests count successes instead).
struct LatticeLawReport {
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;
};
LatticeLawReport lattice_law_suite(int n, long long cases, uint64_t seed);

// Decomposition witnesses from v1+v2 = w1+w2, built the constructive way:
// z11 = v1 meet w1, z22 = v2 meet w2 and lattice differences for the rest.
struct DecompositionWitness {
  ConeVec z11, z12, z21, z22;
  bool relations_hold;
};
DecompositionWitness decomposition_witness(const ConeVec& v1, const ConeVec& v2,
                                           const ConeVec& w1, const ConeVec& w2);

// The four-case split of a chain below v = g + h into chains below g and h.
struct DdpSplit {
  std::vector<ConeVec> g_chain, h_chain;
  bool sums_match;  // G(f) + H(f) = f for every chain element
  bool sups_match;  // the split chains rise to g and h
};
DdpSplit ddp_split(const std::vector<ConeVec>& chain, const ConeVec& v, const ConeVec& g,
                   const ConeVec& h);
// The pointwise split of one element.
std::pair<ExtNonneg, ExtNonneg> gh_split(const ExtNonneg& f, const ExtNonneg& g,
                                         const ExtNonneg& h);

// ---------------------------------------------------------------------------
// the finite-dimensional catalog of two-dimensional cones

// Element of a catalog cone: a pair over [0,inf] plus the distinguished top
// present in the one-point-compactified instances.
struct CatalogElem {
  ExtNonneg a, b;
  bool is_top = false;  // the single adjoined infinity element of (c) and (d)
};

struct CatalogQuery {
  bool valid_pair = true;          // (lambda, eta) parametrizes a functional on the instance
  bool is_cone_element_functional = true;  // linear and nonnegative on the instance
  bool has_mcp = true;
  std::string witness_label;       // failing chain when has_mcp is false
  std::vector<CatalogElem> witness_chain;  // a prefix of it
  ExtNonneg witness_sup_value, witness_bound;
  std::string note;
};

// Classification of L_{lambda,eta}(x,y) = lambda x + eta y on catalog cone
// `id` in {a,b,c,d,e,f}; witnesses follow the instance's own failing chains.
CatalogQuery catalog_cone_query(char id, const ExtNonneg& lambda, const ExtNonneg& eta,
                                int budget = 64);

// In the lexicographic-plane instance, (1,0) bounds {t(1,0) : t < 1} from
// above without being the least such bound, so the scaling-supremum axiom
// fails there.
struct RomanSupCheck {
  bool one_zero_is_upper_bound;
  bool smaller_bound_exists;   // (1,-1) also bounds and sits strictly below
  bool axiom_iv_fails;         // conjunction of the above
};
RomanSupCheck roman_sup_check();

// Wedge axioms of the coordinatewise cone, evaluated exactly on samples.
bool wedge_axioms_hold(int n, int cases, uint64_t seed, std::string* fail = nullptr);

}  // namespace hypercone
