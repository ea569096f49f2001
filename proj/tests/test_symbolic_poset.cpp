#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercone/completion_check.hpp"
#include "hypercone/poset_catalog.hpp"

using namespace hypercone;

namespace {

// Sanity shared by every catalog instance: the order axioms on samples, the
// declared chains monotone below their declared sups.
void check_instance(const PosetPtr& p, int budget = 12) {
  auto xs = p->sample_elements(budget);
  for (const Code& a : xs) CHECK(p->leq(a, a));
  for (const Code& a : xs)
    for (const Code& b : xs) {
      if (p->leq(a, b) && p->leq(b, a)) CHECK(a == b);
      for (const Code& c : xs)
        if (p->leq(a, b) && p->leq(b, c)) CHECK(p->leq(a, c));
    }
  for (const auto& ch : p->chains(budget)) {
    for (int k = 0; k + 1 < budget; ++k) CHECK(p->leq(ch.at(k), ch.at(k + 1)));
    if (ch.sup_kind == ChainDecl::kSupIn)
      for (int k = 0; k < budget; ++k) CHECK(p->leq(ch.at(k), ch.sup));
  }
}

}  // namespace

TEST_CASE("catalog instances satisfy the order axioms on samples") {
  for (const auto& p :
       {omega_chain(), omega_chain_completed(), finite_chain_sym(4), notip_poset(),
        doppiafreccia(), alphafreccia(1), alphafreccia(2), alphafreccia(3), example6_poset(),
        example6_completed(), two_caps(), glued_chains(), four_branches(),
        four_branches_completed(true), finite_subsets(), subset_window(), seq_window_finite(),
        seq_window_full()}) {
    INFO(p->name());
    check_instance(p);
  }
}

TEST_CASE("grid needs exactly two sup-adding steps") {
  auto p = doppiafreccia();
  SetSpec grid;
  grid.strata = {0};
  auto c = closure_suite(*p, grid);
  CHECK(c.bar_steps == 2);
  CHECK(c.bar.strata == std::set<int>{0, 1, 2});
  // one step reaches the spine but not the top
  SetSpec one = grid;
  up_step(*p, one);
  CHECK(one.strata == std::set<int>{0, 1});
}

TEST_CASE("tower depth equals the iteration count") {
  for (int d = 1; d <= 3; ++d) {
    auto p = alphafreccia(d);
    SetSpec base;
    base.strata = {0};
    CHECK(closure_suite(*p, base).bar_steps == d);
  }
}

TEST_CASE("budget exceeded surfaces as an error") {
  auto p = alphafreccia(3);
  SetSpec base;
  base.strata = {0};
  CHECK_THROWS_AS(closure_suite(*p, base, 2), BudgetExceeded);
}

TEST_CASE("bar of a finite-poset subset is itself") {
  auto p = finite_chain_sym(5);
  SetSpec s;
  s.strata = {0};
  auto c = closure_suite(*p, s);
  CHECK(c.bar_steps == 0);
}

TEST_CASE("the attached antichain has no tip while its hat has a maximum") {
  auto p = notip_poset();
  SetSpec antichain;
  antichain.strata = {1};
  CHECK(!symbolic_tip(*p, antichain));
  auto c = closure_suite(*p, antichain);
  CHECK(c.hat.contains_stratum(2));  // the cap entered through the chain below
  // the cap dominates the hat
  CHECK(p->dominates_stratum(Code{2, 0}, 0));
  CHECK(p->dominates_stratum(Code{2, 0}, 1));
}

TEST_CASE("singletons always have tips") {
  auto p = doppiafreccia();
  SetSpec s;
  s.extra.push_back(Code{0, 2, 5});
  auto t = symbolic_tip(*p, s);
  REQUIRE(t);
  CHECK(*t == Code{0, 2, 5});
}

TEST_CASE("directed completion of the omega chain adds one cap") {
  auto cp = directed_completion_branch(omega_chain());
  CHECK(cp.bar->name() == "omega_chain_completed");
  auto rep = check_completion_claim(claim_from_completion(omega_chain(), cp), 32);
  CHECK(rep.consistent);
}

TEST_CASE("finite chains complete to themselves") {
  auto cp = directed_completion_branch(finite_chain_sym(4));
  CHECK(cp.bar->name() == "finite_chain_4");
}

TEST_CASE("the linked grid completes in two layers") {
  auto x = example6_poset();
  auto cp = directed_completion_branch(x);
  // the embedded image needs two sup-adding steps to fill the completion
  SetSpec image;
  image.strata = {0, 1};
  auto c = closure_suite(*cp.bar, image);
  CHECK(c.bar_steps == 2);
  auto rep = check_completion_claim(claim_from_completion(x, cp), 24);
  INFO(rep.counterexample);
  CHECK(rep.consistent);
}

TEST_CASE("two incomparable caps are rejected as a completion") {
  CompletionClaim claim;
  claim.source = omega_chain();
  claim.target = two_caps();
  claim.embed = [](const Code& c) { return c; };
  auto rep = check_completion_claim(claim, 32);
  CHECK(!rep.consistent);
  CHECK(rep.counterexample.find("no supremum") != std::string::npos);
}

TEST_CASE("identity on an already complete instance is consistent") {
  auto p = glued_chains();
  CompletionClaim claim;
  claim.source = p;
  claim.target = p;
  claim.embed = [](const Code& c) { return c; };
  auto rep = check_completion_claim(claim, 24);
  INFO(rep.counterexample);
  CHECK(rep.consistent);
}

TEST_CASE("subset window is recognized as the completion of finite subsets") {
  auto cp = directed_completion_branch(finite_subsets());
  auto rep = check_completion_claim(claim_from_completion(finite_subsets(), cp), 32);
  INFO(rep.counterexample);
  CHECK(rep.consistent);
}

TEST_CASE("sequence window is recognized as the completion of finite support") {
  auto cp = directed_completion_branch(seq_window_finite());
  auto rep = check_completion_claim(claim_from_completion(seq_window_finite(), cp), 24);
  INFO(rep.counterexample);
  CHECK(rep.consistent);
}

TEST_CASE("completion of a product is the product of completions") {
  auto prod = product_poset(omega_chain(), finite_chain_sym(3));
  auto cp = directed_completion_branch(prod);
  auto rep = check_completion_claim(claim_from_completion(prod, cp), 16);
  INFO(rep.counterexample);
  CHECK(rep.consistent);
}

TEST_CASE("undecided chains are rejected") {
  CHECK_THROWS_AS(directed_completion_branch(two_caps()), UnsupportedPresentation);
}

TEST_CASE("truncation fails on the glued chains and passes on windows") {
  auto glued = truncation_check(glued_chains(), nullptr, 24);
  CHECK(!glued.passes);
  CHECK(glued.witness.find("left") != std::string::npos);

  auto window = truncation_check(subset_window(),
                                 [](const Code& c) { return c[0] == 0; }, 24);
  INFO(window.witness);
  CHECK(window.passes);

  auto chain = truncation_check(finite_chain_sym(4), nullptr, 12);
  CHECK(chain.passes);
}

TEST_CASE("meet-map variant localizes the truncation failure") {
  auto p = glued_chains();
  auto meet = [p](const Code& a, const Code& b) { return p->meet_of(a, b); };
  auto rep = truncation_check_meetmap(p, meet, nullptr, 24);
  CHECK(!rep.passes);

  auto win = subset_window();
  auto wmeet = [win](const Code& a, const Code& b) { return win->meet_of(a, b); };
  auto wrep = truncation_check_meetmap(win, wmeet,
                                       [](const Code& c) { return c[0] == 0; }, 24);
  INFO(wrep.witness);
  CHECK(wrep.passes);
}

TEST_CASE("four branches: T collapses the two middle ideals") {
  auto rep = compare_completions_four_branches(24);
  CHECK(rep.ts_identity);
  CHECK(!rep.t_injective);
  CHECK(rep.t_witness.find("w2,w3") != std::string::npos);
}

TEST_CASE("four-branch completion is recognized") {
  auto cp = directed_completion_branch(four_branches());
  auto rep = check_completion_claim(claim_from_completion(four_branches(), cp), 24);
  INFO(rep.counterexample);
  CHECK(rep.consistent);
}

TEST_CASE("the four-branch cut structure adds exactly a bottom and a top") {
  // constructive facts behind "cuts = empty + principals + everything":
  auto x = four_branches();
  auto samples = x->sample_elements(16);
  // (1) principal cuts: lower bounds of the up-set of x recover down(x);
  //     generic, because x itself sits in its up-set
  // (2) no minimum: each sampled element misses the base of another branch
  for (const Code& c : samples) {
    long long other = c[1] == 1 ? 2 : 1;
    CHECK(!x->leq(c, Code{0, other, 0}));
  }
  // (3) no sampled element dominates a whole branch: the next position of the
  //     same branch escapes every candidate
  for (const Code& c : samples)
    for (long long i = 1; i <= 4; ++i)
      CHECK(!x->leq(Code{0, i, c[2] + 1}, c));
  // (4) a bounded union of two principals closes to a principal again:
  //     ub{(n,2),(n,3)} starts at (n+1,4), whose down-set swallows both
  for (long long n = 0; n < 4; ++n) {
    Code j{0, 4, n + 1};
    CHECK(x->leq(Code{0, 2, n}, j));
    CHECK(x->leq(Code{0, 3, n}, j));
    CHECK(!x->leq(Code{0, 2, n + 1}, j));  // cross moves stay strictly increasing
  }
}

TEST_CASE("two omega chains complete factorwise") {
  auto prod = product_poset(omega_chain(), omega_chain());
  auto cp = directed_completion_branch(prod);
  auto rep = check_completion_claim(claim_from_completion(prod, cp), 16);
  INFO(rep.counterexample);
  CHECK(rep.consistent);
}

TEST_CASE("a shifted embedding is rejected for missing the base element") {
  // j(n) = n + 1 is an order embedding into the completed chain, but the
  // bottom of the target is no longer risen to
  CompletionClaim claim;
  claim.source = omega_chain();
  claim.target = omega_chain_completed();
  claim.embed = [](const Code& c) { return Code{c[0], c[1] + 1}; };
  auto rep = check_completion_claim(claim, 24);
  CHECK(!rep.consistent);
}

TEST_CASE("a collapsing embedding is rejected as non-injective") {
  CompletionClaim claim;
  claim.source = omega_chain();
  claim.target = omega_chain_completed();
  claim.embed = [](const Code& c) { return Code{c[0], c[1] / 2}; };
  auto rep = check_completion_claim(claim, 24);
  CHECK(!rep.consistent);
}

TEST_CASE("a wrong sup declaration is caught by the order-embedding leg") {
  // claiming the glued chains complete the two disjoint chains identifies
  // unrelated elements below the shared top: the criterion must object
  CompletionClaim claim;
  claim.source = two_chains();
  claim.target = top_glued_chains();
  claim.embed = [](const Code& c) { return c; };
  auto rep = check_completion_claim(claim, 32);
  CHECK(!rep.consistent);
  CHECK(rep.counterexample.find("criterion") != std::string::npos);
}

TEST_CASE("attachment-free chain bundles complete by capping the infinite ones") {
  auto p = chain_bundle({-1, 4, -1});
  auto cp = directed_completion_branch(p);
  CHECK(cp.bar->name() == "chain_bundle_completed");
  // caps exist exactly over the two infinite chains
  CHECK(cp.bar->leq(Code{0, 0, 7}, Code{1, 0}));
  CHECK(!cp.bar->leq(Code{0, 1, 2}, Code{1, 0}));
  auto rep = check_completion_claim(claim_from_completion(p, cp), 24);
  INFO(rep.counterexample);
  CHECK(rep.consistent);
}
