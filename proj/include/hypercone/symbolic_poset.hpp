#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercone/rng.hpp"

namespace hypercone {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedPresentation : std::runtime_error {
  explicit UnsupportedPresentation(const std::string& what) : std::runtime_error(what) {}
};

// Element of a finitely-presented countable poset. The meaning of the entries
// is private to each instance; codes are only compared through the instance.
using Code = std::vector<long long>;

inline std::string code_str(const Code& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

// A declared monotone chain k -> element together with its sup status.
struct ChainDecl {
  enum SupKind {
    kSupIn,       // the supremum exists in the poset and is given below
    kSupAbsent,   // provably no supremum; a completion is expected to add one
    kSupNone,     // provably no supremum and the instance adds none (claim targets)
    kSupUnknown,  // the presentation does not decide
  };
  std::string label;
  std::function<Code(long long)> at;  // defined for k >= 0, strictly increasing
  SupKind sup_kind = kSupUnknown;
  Code sup;  // meaningful for kSupIn
};

// The answer of a sup oracle for an externally supplied chain.
struct SupAnswer {
  enum Kind { kIs, kNone, kUnknown } kind = kUnknown;
  Code sup;  // for kIs
};

// Strata partition the carrier into finitely many pieces (the nodes of the
// "branch graph"); limit edges say where sups of chains inside a piece land.
struct Stratum {
  std::string name;
  bool finite = false;
  std::vector<Code> all;                   // full listing when finite
  std::function<Code(long long)> sample;   // k-th sample element otherwise
  long long sample_count = 0;              // how many samples make sense
};

struct LimitEdge {
  std::vector<int> need;  // chains feeding this edge live inside these strata
  int target;             // their suprema fill this stratum
};

// Finitely presented countable partial order. Instances provide exact order
// decisions; everything quantified over infinitely many elements is either
// derived from the presentation (strata/edges/chains) or checked within an
// explicit budget by the callers.
class SymbolicPoset {
 public:
  virtual ~SymbolicPoset() = default;

  virtual std::string name() const = 0;
  virtual bool leq(const Code& a, const Code& b) const = 0;

  virtual const std::vector<Stratum>& strata() const = 0;
  virtual const std::vector<LimitEdge>& limit_edges() const { return no_edges_; }
  virtual std::vector<ChainDecl> chains(int budget) const = 0;

  // Exact dominance test: c >= every element of the stratum.
  virtual bool dominates_stratum(const Code& c, int stratum) const = 0;

  // Down closure of a stratum, as a union of strata (instances keep their
  // strata down-union-closed).
  virtual std::vector<int> down_of_stratum(int stratum) const { return {stratum}; }

  // Sup of an externally supplied monotone chain (exact where the instance
  // can pattern-match it, unknown otherwise).
  virtual SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const {
    (void)at;
    (void)budget;
    return {};
  }

  virtual bool first_countable() const { return true; }

  // Binary meet where the instance has one in closed form.
  virtual std::optional<Code> meet_of(const Code& a, const Code& b) const {
    (void)a;
    (void)b;
    return std::nullopt;
  }

  // Membership of a in the lower directed-sup closure of the chain B. The
  // default covers instances where hat B = down B on the sampled window.
  virtual bool hat_contains_chain(const Code& a, const std::function<Code(long long)>& b,
                                  int budget) const {
    for (long long k = 0; k <= budget; ++k)
      if (leq(a, b(k))) return true;
    return false;
  }

  std::vector<Code> sample_elements(int budget) const {
    std::vector<Code> out;
    for (const auto& s : strata()) {
      if (s.finite) {
        out.insert(out.end(), s.all.begin(), s.all.end());
      } else {
        long long n = std::min<long long>(s.sample_count ? s.sample_count : budget, budget);
        for (long long k = 0; k < n; ++k) out.push_back(s.sample(k));
      }
    }
    return out;
  }

 private:
  std::vector<LimitEdge> no_edges_;
};

// A subset of a symbolic poset presented as a union of whole strata plus an
// explicit finite part.
struct SetSpec {
  std::set<int> strata;
  std::vector<Code> extra;
  bool contains_stratum(int s) const { return strata.count(s) > 0; }
};

struct SymbolicClosure {
  SetSpec up_closure;   // fixpoint of the sup-adding iteration
  SetSpec bar;
  SetSpec hat;
  int bar_steps = 0;    // sup-adding steps until the bar fixpoint
  int hat_steps = 0;
};

// The sup-adding step on stratum unions: apply every limit edge whose feeding
// strata are contained in the current set. Faithful by the instance contract
// that directed subsets of a stratum union only have the declared sups.
inline bool up_step(const SymbolicPoset& p, SetSpec& s) {
  const std::set<int> before = s.strata;  // one step adds sups of chains already inside
  bool changed = false;
  for (const auto& e : p.limit_edges()) {
    bool ready = true;
    for (int n : e.need)
      if (!before.count(n)) { ready = false; break; }
    if (ready && !s.contains_stratum(e.target)) {
      s.strata.insert(e.target);
      changed = true;
    }
  }
  return changed;
}

inline void down_step(const SymbolicPoset& p, SetSpec& s) {
  std::set<int> grown = s.strata;
  for (int i : s.strata)
    for (int j : p.down_of_stratum(i)) grown.insert(j);
  s.strata = grown;
}

inline SymbolicClosure closure_suite(const SymbolicPoset& p, const SetSpec& a, int depth_budget = 8) {
  SymbolicClosure r;
  r.bar = a;
  int steps = 0;
  while (up_step(p, r.bar)) {
    if (++steps > depth_budget) throw BudgetExceeded("closure iteration depth exceeded");
  }
  r.bar_steps = steps;
  r.up_closure = r.bar;

  r.hat = a;
  down_step(p, r.hat);
  steps = (r.hat.strata == a.strata) ? 0 : 1;
  for (;;) {
    SetSpec next = r.hat;
    bool grew = up_step(p, next);
    down_step(p, next);
    if (next.strata == r.hat.strata) break;
    (void)grew;
    r.hat = next;
    if (++steps > depth_budget) throw BudgetExceeded("closure iteration depth exceeded");
  }
  r.hat_steps = steps;
  return r;
}

// tip A = max(bar A) when it exists: a candidate from the finite strata of
// bar A that dominates every stratum and extra element of bar A.
inline std::optional<Code> symbolic_tip(const SymbolicPoset& p, const SetSpec& a, int depth_budget = 8) {
  SymbolicClosure c = closure_suite(p, a, depth_budget);
  std::vector<Code> candidates = c.bar.extra;
  for (int s : c.bar.strata) {
    const Stratum& st = p.strata()[s];
    if (st.finite) candidates.insert(candidates.end(), st.all.begin(), st.all.end());
  }
  for (const Code& cand : candidates) {
    bool top = true;
    for (int s : c.bar.strata)
      if (!p.dominates_stratum(cand, s)) { top = false; break; }
    for (const Code& e : c.bar.extra)
      if (top && !p.leq(e, cand)) top = false;
    if (top) return cand;
  }
  return std::nullopt;
}

}  // namespace hypercone
