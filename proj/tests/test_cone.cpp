#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercone/cone.hpp"

using namespace hypercone;

namespace {
ConeVec cv(std::initializer_list<long long> xs) {
  ConeVec v;
  for (long long x : xs) v.push_back(x < 0 ? ExtNonneg::inf() : ExtNonneg(Rat(x)));
  return v;
}
}  // namespace

TEST_CASE("coordinatewise operations with the fixed conventions") {
  CHECK(cv_eq(cv_eps(cv({2, -1})), cv({0, -1})));               // eps spots the inf slots
  CHECK(cv_eq(cv_diff(cv({5, -1}), cv({2, 3})), cv({3, -1})));  // difference forced at inf
  CHECK(cv_eq(cv_inf_mul(cv({2, 0})), cv({-1, 0})));            // inf * (2,0) = (inf,0)
  CHECK_THROWS_AS(cv_diff(cv({1, 1}), cv({2, 0})), NotComparable);
}

TEST_CASE("wedge axioms hold exactly on sampled data") {
  std::string why;
  bool ok = wedge_axioms_hold(4, 500, 99, &why);
  INFO(why);
  CHECK(ok);
}

TEST_CASE("lattice law suite on the documented triple") {
  // x=(1,3), y=(2,1), z=(2,2): modularity with join (2,3) and meet (1,1)
  ConeVec x = cv({1, 3}), y = cv({2, 1});
  CHECK(cv_eq(cv_join(x, y), cv({2, 3})));
  CHECK(cv_eq(cv_meet(x, y), cv({1, 1})));
  CHECK(cv_eq(cv_add(x, y), cv_add(cv_join(x, y), cv_meet(x, y))));
}

TEST_CASE("scaled cancellation distinguishes nothing, eps cancellation everything") {
  // v=(inf,0), a=(1,0), b=(0,0): a+v <= b+v and a+eps v <= b+eps v while a !<= b
  ConeVec v = cv({-1, 0}), a = cv({1, 0}), b = cv({0, 0});
  CHECK(cv_leq(cv_add(a, v), cv_add(b, v)));
  CHECK(cv_leq(cv_add(a, cv_eps(v)), cv_add(b, cv_eps(v))));
  CHECK(!cv_leq(a, b));
  // all-finite v reduces eps-cancellation to plain cancellation
  ConeVec vf = cv({2, 3});
  CHECK(cv_eq(cv_eps(vf), cv({0, 0})));
}

TEST_CASE("suite holds on bulk samples") {
  auto rep = lattice_law_suite(4, 2000, 12345);
  INFO(rep.first_failure);
  CHECK(rep.failures == 0);
}

TEST_CASE("decomposition witnesses on the documented identity") {
  // (3,0)+(0,3) = (2,1)+(1,2)
  auto wit = decomposition_witness(cv({3, 0}), cv({0, 3}), cv({2, 1}), cv({1, 2}));
  CHECK(cv_eq(wit.z11, cv({2, 0})));
  CHECK(cv_eq(wit.z22, cv({0, 2})));
  CHECK(cv_eq(wit.z12, cv({1, 0})));
  CHECK(cv_eq(wit.z21, cv({0, 1})));
  CHECK(wit.relations_hold);
  // equal decompositions leave eps-padding only
  auto same = decomposition_witness(cv({2, 5}), cv({1, 1}), cv({2, 5}), cv({1, 1}));
  CHECK(same.relations_hold);
  // infinite coordinates absorb through the eps terms
  auto inf_case = decomposition_witness(cv({-1, 1}), cv({0, 1}), cv({-1, 0}), cv({0, 2}));
  CHECK(inf_case.relations_hold);
  CHECK_THROWS_AS(decomposition_witness(cv({1, 0}), cv({0, 0}), cv({0, 1}), cv({0, 0})),
                  PreconditionFailed);
}

TEST_CASE("sup and inf respect sums and scalings on sampled families") {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    ConeVec a = random_cone_vec(rng, 3), b = random_cone_vec(rng, 3),
            v = random_cone_vec(rng, 3);
    Rat l = rng.rational(5, 2) + Rat(1, 7);
    ConeVec sup = cv_join(a, b), inf = cv_meet(a, b);
    CHECK(cv_eq(cv_join(cv_scale(l, a), cv_scale(l, b)), cv_scale(l, sup)));
    CHECK(cv_eq(cv_join(cv_add(v, a), cv_add(v, b)), cv_add(v, sup)));
    CHECK(cv_eq(cv_meet(cv_add(v, a), cv_add(v, b)), cv_add(v, inf)));
    // eps of a difference keeps the upper part's eps
    ConeVec w = cv_add(a, v);
    CHECK(cv_eq(cv_eps(cv_diff(w, a)), cv_eps(w)));
    // self-difference is the part at infinity
    CHECK(cv_eq(cv_diff(w, w), cv_eps(w)));
    // linearity of differences: (w-a) + ((a+b)-a) = (w+a+b) - (a+a)
    CHECK(cv_eq(cv_add(cv_diff(w, a), cv_diff(cv_add(a, b), a)),
                cv_diff(cv_add(w, cv_add(a, b)), cv_add(a, a))));
  }
}

TEST_CASE("chain split per the four-case table") {
  // all-finite: G = g meet f, H = f - f meet g
  auto [g1, h1] = gh_split(ExtNonneg(5), ExtNonneg(3), ExtNonneg(4));
  CHECK(g1 == ExtNonneg(3));
  CHECK(h1 == ExtNonneg(2));
  // g infinite, h finite: the h side is clipped
  auto [g2, h2] = gh_split(ExtNonneg(5), ExtNonneg::inf(), ExtNonneg(2));
  CHECK(h2 == ExtNonneg(2));
  CHECK(g2 == ExtNonneg(3));
  // both infinite: halved
  auto [g3, h3] = gh_split(ExtNonneg(5), ExtNonneg::inf(), ExtNonneg::inf());
  CHECK(g3 == ExtNonneg(rat(5, 2)));
  CHECK(h3 == g3);
  auto [g4, h4] = gh_split(ExtNonneg::inf(), ExtNonneg::inf(), ExtNonneg::inf());
  CHECK(g4.is_inf());
  CHECK(h4.is_inf());
}

TEST_CASE("ddp split of a saturating chain") {
  const int n = 2;
  ConeVec v = cv({4, -1});
  ConeVec g = cv({1, -1}), h = cv({3, -1});
  std::vector<ConeVec> chain;
  for (int k = 1; k <= 8; ++k)
    chain.push_back(ConeVec{ExtNonneg(Rat(4 * k, k + 1)), ExtNonneg(Rat(k))});
  auto split = ddp_split(chain, v, g, h);
  CHECK(split.sums_match);
  CHECK(split.sups_match);
  // g = v, h = 0: the split returns the chain itself and zeros
  auto trivial = ddp_split(chain, v, v, ConeVec(n, ExtNonneg(Rat(0))));
  CHECK(trivial.sums_match);
  for (size_t k = 0; k < chain.size(); ++k) {
    CHECK(cv_eq(trivial.g_chain[k], chain[k]));
    CHECK(cv_eq(trivial.h_chain[k], ConeVec(n, ExtNonneg(Rat(0)))));
  }
  CHECK_THROWS_AS(ddp_split(chain, v, g, g), PreconditionFailed);
}

TEST_CASE("catalog classifications") {
  // (a): every parameter pair works
  CHECK(catalog_cone_query('a', ExtNonneg(Rat(0)), ExtNonneg(1)).has_mcp);
  CHECK(catalog_cone_query('a', ExtNonneg::inf(), ExtNonneg(Rat(0))).has_mcp);
  CHECK(catalog_cone_query('b', ExtNonneg(Rat(0)), ExtNonneg(1)).has_mcp);
  // (c): the mixed-zero pairs fail with the chain (n, 0)
  auto c = catalog_cone_query('c', ExtNonneg(Rat(0)), ExtNonneg(1));
  CHECK(!c.has_mcp);
  CHECK(c.witness_label == "(n,0)");
  CHECK(c.witness_sup_value.is_inf());
  CHECK(c.witness_bound == ExtNonneg(Rat(0)));
  CHECK(catalog_cone_query('c', ExtNonneg(1), ExtNonneg(2)).has_mcp);
  CHECK(catalog_cone_query('c', ExtNonneg(Rat(0)), ExtNonneg(Rat(0))).has_mcp);
  // (d): the witness rises along (n, 1 - 1/n)
  auto d = catalog_cone_query('d', ExtNonneg(Rat(0)), ExtNonneg(1));
  CHECK(!d.has_mcp);
  CHECK(d.witness_label == "(n,1-1/n)");
  CHECK(d.witness_bound == ExtNonneg(1));
  // (e): the first coefficient must vanish
  CHECK(!catalog_cone_query('e', ExtNonneg(1), ExtNonneg(1)).is_cone_element_functional);
  CHECK(catalog_cone_query('e', ExtNonneg(Rat(0)), ExtNonneg(1)).is_cone_element_functional);
  // (f): not a wedge at all
  CHECK(!catalog_cone_query('f', ExtNonneg(1), ExtNonneg(1)).valid_pair);
  CHECK_THROWS_AS(catalog_cone_query('z', ExtNonneg(1), ExtNonneg(1)), UnknownCatalogId);
}

TEST_CASE("witness chains are genuinely monotone with the declared bound") {
  auto q = catalog_cone_query('d', ExtNonneg(Rat(0)), ExtNonneg(1));
  REQUIRE(q.witness_chain.size() >= 2);
  for (size_t k = 0; k + 1 < q.witness_chain.size(); ++k) {
    CHECK(q.witness_chain[k].a <= q.witness_chain[k + 1].a);
    CHECK(q.witness_chain[k].b <= q.witness_chain[k + 1].b);
    CHECK(q.witness_chain[k].b <= q.witness_bound);
  }
}

TEST_CASE("lexicographic instance: the sub-unit multiples have no least bound") {
  auto r = roman_sup_check();
  CHECK(r.one_zero_is_upper_bound);
  CHECK(r.smaller_bound_exists);
  CHECK(r.axiom_iv_fails);
}

TEST_CASE("the eps and inf operator calculus, exact per coordinate") {
  Rng rng(313);
  for (int t = 0; t < 300; ++t) {
    ConeVec v = random_cone_vec(rng, 3), w = random_cone_vec(rng, 3);
    Rat l = rng.rational(6, 3) + Rat(1, 7);
    ConeVec ev = cv_eps(v), iv = cv_inf_mul(v);
    CHECK(cv_leq(cv_add(cv_eps(v), cv_eps(w)), cv_eps(cv_add(v, w))));
    CHECK(cv_eq(cv_inf_mul(cv_add(v, w)), cv_add(cv_inf_mul(v), cv_inf_mul(w))));
    CHECK(cv_eq(cv_add(cv_scale(l, v), ev), cv_scale(l, v)));
    CHECK(cv_eq(cv_add(cv_scale(l, v), iv), iv));
    CHECK(cv_eq(cv_scale(l, ev), ev));
    CHECK(cv_eq(cv_scale(l, iv), iv));
    CHECK(cv_eq(cv_eps(ev), ev));
    CHECK(cv_eq(cv_inf_mul(iv), iv));
    CHECK(cv_eq(cv_inf_mul(ev), ev));
    CHECK(cv_eq(cv_eps(iv), iv));
    CHECK(cv_eq(cv_add(iv, ev), iv));
  }
}
