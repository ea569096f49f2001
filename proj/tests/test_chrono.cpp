#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercone/chrono.hpp"

using namespace hypercone;

namespace {
ConeVec cv(std::initializer_list<long long> xs) {
  ConeVec v;
  for (long long x : xs) v.push_back(x < 0 ? ExtNonneg::inf() : ExtNonneg(Rat(x)));
  return v;
}
ChronInstance l1_instance(int n) { return {DiscreteCone::uniform(n), LpTag::of(Rat(1))}; }
}  // namespace

TEST_CASE("the relation through the lattice difference") {
  auto inst = l1_instance(2);
  CHECK(!chron_rel(inst, cv({2, 2}), cv({2, 2})));   // finite points never below themselves
  CHECK(chron_rel(inst, cv({0, 0}), cv({1, 0})));
  CHECK(chron_rel(inst, cv({-1, -1}), cv({-1, -1})));  // the all-inf point sees itself
  CHECK_THROWS_AS(chron_rel(inst, cv({2, 0}), cv({1, 0})), NotComparable);
}

TEST_CASE("positivity of the norm by tag") {
  ChronInstance neg{DiscreteCone::uniform(2), LpTag::of(Rat(-1))};
  CHECK(!norm_positive(neg, cv({1, 0})));  // a zero kills the negative-p norm
  CHECK(norm_positive(neg, cv({1, 1})));
  ChronInstance minf{DiscreteCone::uniform(2), LpTag::minus_inf()};
  CHECK(!norm_positive(minf, cv({5, 0})));
  CHECK(norm_positive(minf, cv({5, 1})));
}

TEST_CASE("chronological laws on samples") {
  auto rep = chron_laws(l1_instance(3), 500, 2027);
  INFO(rep.first_failure);
  CHECK(rep.failures == 0);
  ChronInstance half{DiscreteCone::uniform(3), LpTag::of(rat(1, 2))};
  auto rep2 = chron_laws(half, 300, 11);
  CHECK(rep2.failures == 0);
}

TEST_CASE("one shrink step produces a certified nested diamond") {
  auto inst = l1_instance(2);
  BasicOpenSpec spec;
  spec.lower = {cv({0, 0})};
  spec.upper = {cv({6, 6})};
  auto s = diamond_shrink(inst, spec);
  INFO(s.failure);
  CHECK(s.certified);
  CHECK(cv_eq(s.v_bar, cv({2, 2})));
  CHECK(cv_eq(s.w_bar, cv({4, 4})));
  // empty opens are rejected
  BasicOpenSpec empty;
  empty.lower = {cv({3, 3})};
  empty.upper = {cv({3, 3})};  // w = v: the midpoint cannot be strictly inside
  CHECK_THROWS_AS(diamond_shrink(inst, empty), EmptyOpen);
}

TEST_CASE("several generators shrink together") {
  auto inst = l1_instance(3);
  BasicOpenSpec spec;
  spec.lower = {cv({1, 0, 0}), cv({0, 1, 0})};
  spec.upper = {cv({5, 6, 7}), cv({6, 5, 7})};
  auto s = diamond_shrink(inst, spec);
  INFO(s.failure);
  CHECK(s.certified);
}

TEST_CASE("ten nested shrinks share their limit point") {
  auto inst = l1_instance(2);
  BasicOpenSpec spec;
  spec.lower = {cv({0, 1})};
  spec.upper = {cv({8, 9})};
  auto it = iterate_shrink(inst, spec, 10);
  CHECK(it.steps.size() == 10);
  for (const auto& s : it.steps) CHECK(s.certified);
  CHECK(it.point_in_all);
  CHECK(cv_eq(it.common_point, cv({4, 5})));
}

TEST_CASE("infinite coordinates ride along the shrink") {
  auto inst = l1_instance(2);
  BasicOpenSpec spec;
  spec.lower = {cv({1, -1})};
  spec.upper = {cv({7, -1})};
  auto it = iterate_shrink(inst, spec, 6);
  for (const auto& s : it.steps) CHECK(s.certified);
  CHECK(it.point_in_all);
  CHECK(it.common_point[1].is_inf());
}

TEST_CASE("singleton certificates in the half-exponent plane") {
  auto interior = chron_pathology_witness(rat(1, 2), ExtNonneg(1), ExtNonneg(1));
  CHECK(interior.point_inside);
  CHECK(interior.pins_point);
  // the corner: two upper walls suffice
  auto corner = chron_pathology_witness(rat(1, 2), ExtNonneg(Rat(0)), ExtNonneg(Rat(0)));
  CHECK(corner.point_inside);
  CHECK(corner.pins_point);
  // the diamond at an all-infinite point is the point itself
  ChronInstance inst{DiscreteCone::uniform(2), LpTag::of(rat(1, 2))};
  CHECK(chron_rel(inst, cv({-1, -1}), cv({-1, -1})));
}

TEST_CASE("the mixed boundary case reports its unpinned segment") {
  // one zero coordinate leaves a half-open segment inside every candidate
  // open set; the certificate must see a nearby probe slip through
  auto mixed = chron_pathology_witness(rat(1, 2), ExtNonneg(Rat(0)), ExtNonneg(1));
  CHECK(mixed.point_inside);
  CHECK(!mixed.pins_point);
}
