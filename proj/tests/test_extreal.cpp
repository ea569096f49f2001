#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercone/extreal.hpp"
#include "hypercone/json_io.hpp"
#include "hypercone/rng.hpp"

using namespace hypercone;

TEST_CASE("arithmetic conventions") {
  ExtNonneg inf = ExtNonneg::inf();
  CHECK(inf + ExtNonneg(3) == inf);                 // absorbing element
  CHECK(ExtNonneg(Rat(0)) * inf == ExtNonneg(Rat(0)));  // 0 * inf = 0
  CHECK(scale(Rat(5), inf) == inf);
  CHECK(scale(Rat(0), inf) == ExtNonneg(Rat(0)));
  CHECK(ExtNonneg(rat(2, 3)) + ExtNonneg(rat(1, 3)) == ExtNonneg(1));
}

TEST_CASE("power conventions") {
  ExtNonneg zero{Rat(0)}, inf = ExtNonneg::inf();
  CHECK(*ext_pow_exact(zero, Rat(-2)) == inf);       // 0^p = inf for p < 0
  CHECK(*ext_pow_exact(zero, rat(1, 2)) == zero);    // 0^p = 0 for p in (0,1)
  CHECK(*ext_pow_exact(inf, rat(1, 2)) == inf);
  CHECK(*ext_pow_exact(inf, Rat(-3)) == zero);
  CHECK(*ext_pow_exact(ExtNonneg(4), rat(1, 2)) == ExtNonneg(2));
  CHECK(!ext_pow_exact(ExtNonneg(2), rat(1, 2)));    // sqrt(2) escapes Q
  CHECK_THROWS_AS(ext_pow_exact(ExtNonneg(2), Rat(0)), PowerZeroExponent);
}

TEST_CASE("lattice difference and eps") {
  CHECK(ext_diff(ExtNonneg(5), ExtNonneg(3)) == ExtNonneg(2));
  CHECK(ext_diff(ExtNonneg::inf(), ExtNonneg(3)) == ExtNonneg::inf());
  CHECK(ext_diff(ExtNonneg::inf(), ExtNonneg::inf()) == ExtNonneg::inf());
  CHECK_THROWS_AS(ext_diff(ExtNonneg(1), ExtNonneg(2)), NotComparable);
  CHECK(ext_eps(ExtNonneg(7)) == ExtNonneg(Rat(0)));
  CHECK(ext_eps(ExtNonneg::inf()) == ExtNonneg::inf());
  // eps idempotent, scaling-invariant
  CHECK(ext_eps(ext_eps(ExtNonneg::inf())) == ext_eps(ExtNonneg::inf()));
  CHECK(scale(Rat(9), ext_eps(ExtNonneg::inf())) == ext_eps(ExtNonneg::inf()));
}

TEST_CASE("monoid laws on random triples plus the inf cases") {
  Rng rng(42);
  auto rand_ext = [&](bool allow_inf) {
    if (allow_inf && rng.below(5) == 0) return ExtNonneg::inf();
    return ExtNonneg(rng.rational(20, 7));
  };
  for (int t = 0; t < 500; ++t) {
    ExtNonneg a = rand_ext(true), b = rand_ext(true), c = rand_ext(true);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a + ExtNonneg(Rat(0)) == a);
  }
}

TEST_CASE("difference is the maximum solution of b + z = a") {
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    ExtNonneg b = rng.below(6) ? ExtNonneg(rng.rational(9, 4)) : ExtNonneg::inf();
    ExtNonneg z = rng.below(6) ? ExtNonneg(rng.rational(9, 4)) : ExtNonneg::inf();
    ExtNonneg a = b + z;
    ExtNonneg d = ext_diff(a, b);
    CHECK(b + d == a);
    // every candidate solving b + z = a on a grid stays below d
    for (int k = 0; k <= 8; ++k) {
      ExtNonneg cand = k == 8 ? ExtNonneg::inf() : ExtNonneg(rng.rational(9, 4));
      if (b + cand == a) CHECK(cand <= d);
    }
  }
}

TEST_CASE("signed convention for the log calculus") {
  ExtSigned p = ExtSigned::plus_inf(), m = ExtSigned::minus_inf();
  CHECK(p + m == m);  // the agreed convention
  CHECK(m + p == m);
  CHECK(p + ExtSigned(Rat(3)) == p);
  CHECK(-p == m);
}

TEST_CASE("json scalar wire format") {
  CHECK(ext_from_json(json("inf")).is_inf());
  CHECK(ext_from_json(json{{"num", 3}, {"den", 4}}) == ExtNonneg(rat(3, 4)));
  CHECK(ext_from_json(json(7)) == ExtNonneg(7));
  ExtNonneg x{rat(22, 7)};
  CHECK(ext_from_json(ext_to_json(x)) == x);
  CHECK(ext_to_json(ExtNonneg::inf()) == json("inf"));
}
