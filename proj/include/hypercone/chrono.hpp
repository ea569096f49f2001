#pragma once

#include <string>
#include <vector>

#include "hypercone/cone.hpp"
#include "hypercone/hypernorm.hpp"

namespace hypercone {

struct EmptyOpen : std::runtime_error {
  EmptyOpen() : std::runtime_error("the basic open set is empty") {}
};

// A discrete cone together with a norm tag: enough to decide the
// chronological relation v << w through the positivity of ||w - v||.
struct ChronInstance {
  DiscreteCone cone;
  LpTag norm = LpTag::of(Rat(1));
};

// Exact positivity of the norm: for p > 0 it means "nonzero", for p < 0
// "strictly positive everywhere", for -inf "min > 0".
bool norm_positive(const ChronInstance& inst, const ConeVec& z);

// v << w: v <= w and the lattice difference has positive norm. Throws
// NotComparable when v is not below w.
bool chron_rel(const ChronInstance& inst, const ConeVec& v, const ConeVec& w);

struct ChronLawReport {
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;
};
// push-up in both forms, lambda-scaling, and the eps-cancellation of <<.
ChronLawReport chron_laws(const ChronInstance& inst, long long cases, uint64_t seed);

// A basic chronological open U((v_i); (w_j)).
struct BasicOpenSpec {
  std::vector<ConeVec> lower;  // v_i
  std::vector<ConeVec> upper;  // w_j
};

struct DiamondShrink {
  ConeVec v_bar, w_bar;        // the nested diamond
  BasicOpenSpec shrunken;      // U~ with the shifted generators
  ConeVec midpoint;            // (v + w)/2, certified inside U~
  bool certified;              // all the inclusion certificates hold
  std::string failure;
};
DiamondShrink diamond_shrink(const ChronInstance& inst, const BasicOpenSpec& spec);

struct ShrinkIteration {
  std::vector<DiamondShrink> steps;
  ConeVec common_point;        // coordinatewise limit of the nested v-bars
  bool point_in_all;           // the limit sits in every nested diamond
};
ShrinkIteration iterate_shrink(const ChronInstance& inst, BasicOpenSpec spec, int iterations);

// The four chronological half-spaces that pin {(a,b)} in the plane instance
// with an L^p norm, 0 < p < 1.
struct SingletonCertificate {
  BasicOpenSpec spec;
  bool point_inside;
  bool pins_point;     // membership forces both coordinates
};
SingletonCertificate chron_pathology_witness(const Rat& p, const ExtNonneg& a, const ExtNonneg& b);

}  // namespace hypercone
