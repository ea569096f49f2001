#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercone/hypernorm.hpp"

using namespace hypercone;

namespace {
ConeVec cv(std::initializer_list<long long> xs) {
  ConeVec v;
  for (long long x : xs) v.push_back(x < 0 ? ExtNonneg::inf() : ExtNonneg(Rat(x)));
  return v;
}
}  // namespace

TEST_CASE("norm values on the documented inputs") {
  DiscreteCone half = DiscreteCone::uniform(2);
  // constant one has norm one whatever the tag
  for (const auto& tag : {LpTag::of(Rat(1)), LpTag::of(Rat(-1)), LpTag::minus_inf(),
                          LpTag::zero_plus(), LpTag::zero_minus(), LpTag::of(rat(1, 2))}) {
    auto e = lp_norm_exact(half, cv({1, 1}), tag);
    REQUIRE(e);
    CHECK(*e == ExtNonneg(1));
  }
  // f = (0,1), p = -1: a zero forces the harmonic mean to 0
  CHECK(*lp_norm_exact(half, cv({0, 1}), LpTag::of(Rat(-1))) == ExtNonneg(Rat(0)));
  // f = (0,4): the split-zero tags take the forced values
  CHECK(lp_norm_exact(half, cv({0, -1}), LpTag::zero_plus())->is_inf());
  CHECK(lp_norm_exact(half, cv({0, -1}), LpTag::zero_minus())->is_zero());
  // the geometric mean of (1,4) under the uniform law
  CHECK(*lp_norm_exact(half, cv({1, 4}), LpTag::zero_plus()) == ExtNonneg(2));
  // the -inf tag is the minimum
  CHECK(*lp_norm_exact(half, cv({3, 1}), LpTag::minus_inf()) == ExtNonneg(1));
}

TEST_CASE("the 0 tags reject non-probability weights") {
  DiscreteCone ones = DiscreteCone::ones(2);
  CHECK_THROWS_AS(lp_norm(ones, cv({1, 2}), LpTag::zero_plus()), NotProbability);
}

TEST_CASE("harmonic norm of (1,4)") {
  DiscreteCone half = DiscreteCone::uniform(2);
  // ||f||_{-1} = (1/2 * 1 + 1/2 * 1/4)^{-1} = 8/5
  CHECK(*lp_norm_exact(half, cv({1, 4}), LpTag::of(Rat(-1))) == ExtNonneg(rat(8, 5)));
}

TEST_CASE("dual attainment closed forms") {
  DiscreteCone half = DiscreteCone::uniform(2);
  // p = -1, f = (1,4): pairing attains 8/5 with exact data
  auto att = dual_attain(half, cv({1, 4}), LpTag::of(Rat(-1)));
  REQUIRE(att.pairing_exact);
  CHECK(*att.pairing_exact == ExtNonneg(rat(8, 5)));
  CHECK(std::abs(att.gq_norm - 1.0) < 1e-9);
  // tag 0+, f = (1,4): g* = 2/f, pairing 2
  auto att0 = dual_attain(half, cv({1, 4}), LpTag::zero_plus());
  REQUIRE(att0.g_exact);
  CHECK((*att0.g_exact)[0] == ExtNonneg(2));
  CHECK((*att0.g_exact)[1] == ExtNonneg(rat(1, 2)));
  REQUIRE(att0.pairing_exact);
  CHECK(*att0.pairing_exact == ExtNonneg(2));
  // constant f: g* is constant one, the pairing is the constant
  auto attc = dual_attain(half, cv({3, 3}), LpTag::of(rat(1, 2)));
  CHECK(std::abs(attc.pairing - 3.0) < 1e-9);
  // boundary data is rejected
  CHECK_THROWS_AS(dual_attain(half, cv({0, 1}), LpTag::of(Rat(-1))), BoundaryCase);
}

TEST_CASE("grid infimum confirms attainment and refines downward") {
  DiscreteCone half = DiscreteCone::uniform(2);
  ConeVec f = cv({1, 4});
  auto att = dual_attain(half, f, LpTag::of(Rat(-1)));
  LpTag q = LpTag::of(Rat(-1)).conjugate();
  CHECK(q.p == rat(1, 2));
  double coarse = dual_grid_inf(half, f, q, 8);
  double fine = dual_grid_inf(half, f, q, 16);
  CHECK(fine <= coarse + 1e-12);       // refinement never increases
  CHECK(att.pairing <= fine + 1e-9);   // the closed form is the infimum
}

TEST_CASE("reverse holder on random pairs for the main exponents") {
  for (const Rat& p : {Rat(1), Rat(-1), rat(-1, 2), rat(1, 2), Rat(-2)}) {
    auto rep = reverse_holder_audit(3, LpTag::of(p), 800, 99 + (uint64_t)numerator(p).convert_to<long long>());
    INFO("p = ", to_string(p), " first failure ", rep.first_failure);
    CHECK(rep.failures == 0);
  }
  auto rep0 = reverse_holder_audit(3, LpTag::zero_plus(), 500, 5);
  CHECK(rep0.failures == 0);
}

TEST_CASE("p=1 against -inf is the plain average-min inequality") {
  DiscreteCone third = DiscreteCone::uniform(3);
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    ConeVec f = random_cone_vec(rng, 3, false), g = random_cone_vec(rng, 3, false);
    auto lhs = pairing_exact(third, f, g);
    auto a = lp_norm_exact(third, f, LpTag::of(Rat(1)));
    auto b = lp_norm_exact(third, g, LpTag::minus_inf());
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*a * *b <= lhs);
  }
}

TEST_CASE("reciprocal identity exact under the conventions") {
  DiscreteCone half = DiscreteCone::uniform(2);
  auto ids = l0_identities(half, cv({0, -1}), cv({2, 2}));
  CHECK(ids.reciprocal_exact);
  auto ids2 = l0_identities(half, cv({1, 1}), cv({1, 1}));
  CHECK(ids2.reciprocal_exact);
  CHECK(ids2.product_ok);
  // ||fg||_0 = 4 = ||f||_0 ||g||_0 for f=(1,4), g=(2,2)
  auto ids3 = l0_identities(half, cv({1, 4}), cv({2, 2}));
  CHECK(ids3.reciprocal_exact);
  CHECK(ids3.product_ok);
}

TEST_CASE("superadditivity exact for the closed tags") {
  Rng rng(55);
  DiscreteCone cone = DiscreteCone::uniform(3);
  for (int t = 0; t < 300; ++t) {
    ConeVec f = random_cone_vec(rng, 3), g = random_cone_vec(rng, 3);
    ConeVec s(3);
    for (int i = 0; i < 3; ++i) s[i] = f[i] + g[i];
    for (const auto& tag : {LpTag::of(Rat(1)), LpTag::of(Rat(-1)), LpTag::minus_inf()}) {
      auto ns = lp_norm_exact(cone, s, tag);
      auto nf = lp_norm_exact(cone, f, tag);
      auto ng = lp_norm_exact(cone, g, tag);
      REQUIRE(ns);
      REQUIRE(nf);
      REQUIRE(ng);
      CHECK(*nf + *ng <= *ns);
    }
  }
}

TEST_CASE("operator norm closed forms") {
  DiscreteCone half = DiscreteCone::uniform(2);
  DualVector zero{cv({0, 0})};
  CHECK(operator_norm(half, zero, LpTag::of(rat(1, 2))).closed_form == 0.0);
  DualVector lf{cv({1, 4})};
  auto r = operator_norm(half, lf, LpTag::of(rat(1, 2)), 16);
  // source q = 1/2, so the closed form is the conjugate p = -1 norm of f
  CHECK(std::abs(r.closed_form - 8.0 / 5) < 1e-12);
  CHECK(r.closed_form <= r.grid_value + 1e-9);
}

TEST_CASE("norms of the cut-off family stay in the documented window") {
  // f_n = 1 + inf * indicator(first k of N coords): q < 0 keeps the norm in [1, 2^{1/q}]
  const int n = 8;
  DiscreteCone cone = DiscreteCone::uniform(n);
  for (int k = 1; k <= n / 2; ++k) {
    ConeVec f(n, ExtNonneg(1));
    for (int i = 0; i < k; ++i) f[i] = ExtNonneg::inf();
    auto norm = lp_norm_exact(cone, f, LpTag::of(Rat(-1)));
    REQUIRE(norm);
    CHECK(ExtNonneg(1) <= *norm);
    CHECK(*norm <= ExtNonneg(2));  // 2^{1/q} with q = -1 is 1/2... the window at q=-1 is [1,2]
  }
}

TEST_CASE("bidual equality for p in (0,1] on interior data") {
  DiscreteCone half = DiscreteCone::uniform(2);
  auto a = bidual_audit(half, cv({1, 1}), LpTag::of(rat(1, 2)), 1e-8, 32);
  CHECK(a.equality_within);
  Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    ConeVec f{ExtNonneg(rng.rational(6, 3) + Rat(1)), ExtNonneg(rng.rational(6, 3) + Rat(1))};
    auto b = bidual_audit(half, f, LpTag::of(rat(1, 2)), 1e-6, 48);
    INFO(b.hn, " vs ", b.hn_bidual);
    CHECK(b.equality_within);
  }
  // boundary data keeps the one-sided inequality
  auto c = bidual_audit(half, cv({0, 1}), LpTag::of(rat(1, 2)), 1e-8, 32);
  CHECK(c.hn_bidual >= c.hn - 1e-9);
}

TEST_CASE("indicator chain breaks the norm for p < 0") {
  auto ce = lp_mcp_counterexample(4, Rat(-1));
  REQUIRE(ce.chain_norms.size() == 4);
  for (int k = 0; k < 3; ++k) CHECK(ce.chain_norms[k].is_zero());
  CHECK(ce.sup_norm == ExtNonneg(1));
  // p = 1 on the same chain rises with k/N
  auto ok = lp_mcp_counterexample(4, Rat(1));
  for (int k = 0; k < 4; ++k) CHECK(ok.chain_norms[k] == ExtNonneg(rat(k + 1, 4)));
}

TEST_CASE("the shifted norm map passes the chain audit for p < 0") {
  // g -> ||g + f||_p with ||f||_p > 0 regains the convergence property
  const int n = 4;
  DiscreteCone cone = DiscreteCone::uniform(n);
  ConeVec f(n, ExtNonneg(1));
  LpTag p = LpTag::of(Rat(-1));
  // along the indicator chain: values ||chain_k + f||_p rise to ||sup + f||_p
  ConeVec sup(n, ExtNonneg(1));
  for (int i = 0; i < n; ++i) sup[i] = ExtNonneg(2);
  ExtNonneg target = *lp_norm_exact(cone, sup, p);
  ExtNonneg prev(Rat(0));
  for (int k = 1; k <= n; ++k) {
    ConeVec g(n, ExtNonneg(Rat(0)));
    for (int i = 0; i < k; ++i) g[i] = ExtNonneg(1);
    ConeVec shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = g[i] + f[i];
    auto val = lp_norm_exact(cone, shifted, p);
    REQUIRE(val);
    CHECK(prev <= *val);
    prev = *val;
  }
  CHECK(prev == target);
}

TEST_CASE("exact homogeneity for the closed tags") {
  Rng rng(606);
  DiscreteCone cone = DiscreteCone::uniform(3);
  for (int t = 0; t < 200; ++t) {
    ConeVec f = random_cone_vec(rng, 3);
    Rat l = rng.rational(7, 3) + Rat(1, 5);
    ConeVec lf = cv_scale(l, f);
    for (const auto& tag : {LpTag::of(Rat(1)), LpTag::of(Rat(-1)), LpTag::minus_inf()}) {
      auto a = lp_norm_exact(cone, lf, tag);
      auto b = lp_norm_exact(cone, f, tag);
      REQUIRE(a);
      REQUIRE(b);
      CHECK(*a == scale(l, *b));
    }
  }
  // the split-zero tags on powers of a shared base stay exact
  DiscreteCone half = DiscreteCone::uniform(2);
  ConeVec f2{ExtNonneg(2), ExtNonneg(8)};  // 2^1, 2^3
  auto n0 = lp_norm_exact(half, f2, LpTag::zero_plus());
  REQUIRE(n0);
  CHECK(*n0 == ExtNonneg(4));  // 2^((1+3)/2)
  auto scaled = lp_norm_exact(half, cv_scale(Rat(4), f2), LpTag::zero_plus());
  REQUIRE(scaled);
  CHECK(*scaled == ExtNonneg(16));
}

TEST_CASE("negative exponents record their bidual gap without a verdict") {
  DiscreteCone half = DiscreteCone::uniform(2);
  Rng rng(88);
  for (int t = 0; t < 10; ++t) {
    ConeVec f{ExtNonneg(rng.rational(5, 2) + Rat(1)), ExtNonneg(rng.rational(5, 2) + Rat(1))};
    auto a = bidual_audit(half, f, LpTag::of(Rat(-1)), 1e-6, 48);
    // the one-sided inequality is a theorem; the gap is only observed
    CHECK(a.hn_bidual >= a.hn - 1e-9 * std::max(1.0, a.hn));
    CHECK(a.gap >= 0);
  }
}

TEST_CASE("three refinement levels descend toward the closed form") {
  DiscreteCone half = DiscreteCone::uniform(2);
  ConeVec f = cv({1, 4});
  LpTag q = LpTag::of(Rat(-1)).conjugate();
  double closed = dual_attain(half, f, LpTag::of(Rat(-1))).pairing;
  double g8 = dual_grid_inf(half, f, q, 8);
  double g16 = dual_grid_inf(half, f, q, 16);
  double g32 = dual_grid_inf(half, f, q, 32);
  CHECK(g16 <= g8 + 1e-12);
  CHECK(g32 <= g16 + 1e-12);
  CHECK(std::abs(g32 - closed) <= std::abs(g8 - closed) + 1e-12);
  CHECK(closed <= g32 + 1e-9);
}
