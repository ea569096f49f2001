#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypercone/poset_catalog.hpp"

namespace hypercone {

// A claim "(Y, embed) is the directed completion of X", to be audited within
// an explicit budget. Density witnesses name, for an element of Y, a chain in
// X whose image should rise to it.
struct CompletionClaim {
  PosetPtr source;
  PosetPtr target;
  std::function<Code(const Code&)> embed;
  std::function<std::optional<ChainDecl>(const Code& y)> density_witness;  // may be null
  std::vector<ChainDecl> adversarial;  // registered counterexample chains in the source
};

struct ClaimReport {
  bool consistent = true;
  bool budget_limited = false;  // some verdicts relied on sampled tails
  std::string counterexample;   // first concrete failure, empty when consistent
  int chains_checked = 0;
  int criterion_pairs_checked = 0;
  std::vector<std::string> density_witnesses;
  std::vector<std::string> notes;
};

ClaimReport check_completion_claim(const CompletionClaim& claim, int budget);

// Convenience: claim that `cp` really completes `x`, using cp's own chains as
// density witnesses.
CompletionClaim claim_from_completion(const PosetPtr& x, const CompletionPair& cp);

struct TruncationReport {
  bool passes = true;
  std::string witness;  // failing (B, a) pair when not
  int cases_checked = 0;
  std::vector<std::string> notes;
};

// For sampled B with tip and a in X with a <= tip B, checks membership of a
// in hat((down B) cap (down a)). `in_sub` selects the lower subset X of Y;
// pass nullptr for X = Y.
TruncationReport truncation_check(const PosetPtr& y, std::function<bool(const Code&)> in_sub,
                                  int budget);

// Meet-map variant: Mcp of x -> x meet b on declared chains, for sampled b.
// Requires the instance to expose meets (subset_window and glued_chains do).
TruncationReport truncation_check_meetmap(const PosetPtr& y,
                                          std::function<std::optional<Code>(const Code&, const Code&)> meet,
                                          std::function<bool(const Code&)> in_sub, int budget);

// Comparison of the Dedekind-MacNeille completion with the enhanced directed
// completion on a finite poset with binary joins.
struct CompareReport {
  bool ts_identity = true;      // T o S = id on all cuts
  bool t_injective = true;
  std::string t_witness;        // two order-distinct ideals with the same cut
  int cuts = 0;
  int directed_size = 0;
};

struct NoJoins : std::runtime_error {
  NoJoins() : std::runtime_error("poset lacks a binary join") {}
};

CompareReport compare_completions(const FinitePoset& p);

// The four-branch fixture: the directed completion adds one point per branch
// while the DM completion collapses three of them into the top cut.
CompareReport compare_completions_four_branches(int budget);

}  // namespace hypercone
