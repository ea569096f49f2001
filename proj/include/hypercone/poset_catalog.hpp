#pragma once

#include <memory>

#include "hypercone/finite_poset.hpp"
#include "hypercone/symbolic_poset.hpp"

namespace hypercone {

using PosetPtr = std::shared_ptr<const SymbolicPoset>;

// A materialized directed completion: the completed poset and the embedding.
struct CompletionPair {
  PosetPtr bar;
  std::function<Code(const Code&)> embed;
};

// Built-in countable posets. Every instance decides its order exactly; the
// strata/edges/chains expose the finite presentation the algorithms consume.
PosetPtr omega_chain();                    // N
PosetPtr omega_chain_completed();          // N + cap
PosetPtr finite_chain_sym(int k);
PosetPtr notip_poset();                    // chain + attached antichain + cap
PosetPtr doppiafreccia();                  // N^2 grid, spine of column limits, top
PosetPtr alphafreccia(int depth);          // tower of nested column limits, depth 1..3
PosetPtr example6_poset();                 // grid of capped chains, linked across columns
PosetPtr example6_completed();             // + per-column limit points + their joint limit
PosetPtr two_caps();                       // N with two incomparable upper caps
PosetPtr glued_chains();                   // bottom + two chains + shared top
PosetPtr four_branches();                  // four chains, cross rules into branch 4 / out of 1
PosetPtr four_branches_completed(bool enhanced_bottom);
PosetPtr finite_subsets();                 // finite subsets of N, by inclusion
PosetPtr subset_window();                  // finite and finite-plus-tail subsets of N
PosetPtr seq_window_finite();              // finitely supported N-valued sequences
PosetPtr seq_window_full();                // sequences with a constant tail, values in N+inf
PosetPtr two_chains();                     // disjoint pair of chains
PosetPtr top_glued_chains();               // two chains sharing one top
PosetPtr minkowski_window();               // rational causal plane, d = 2
PosetPtr minkowski_completed();            // + null-infinity rays and the future point
PosetPtr chain_bundle(const std::vector<long long>& lengths);  // -1 = an omega chain
PosetPtr wrap_finite(const FinitePoset& p);  // adapter
PosetPtr product_poset(PosetPtr a, PosetPtr b);

// Directed completion for the supported presentations; throws
// UnsupportedPresentation when the instance's chain table does not decide
// every sup, and BudgetExceeded when layering does not close.
CompletionPair directed_completion_branch(const PosetPtr& p, bool enhanced_bottom = false);

}  // namespace hypercone
