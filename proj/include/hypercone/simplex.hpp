#pragma once

#include <vector>

#include "hypercone/rational.hpp"

namespace hypercone {

// Small dense exact-rational LP: min c.x subject to row relations and x >= 0.
// Bland's rule keeps the pivoting finite; everything stays in Q.
struct LpProblem {
  std::vector<std::vector<Rat>> a;  // m x n
  std::vector<Rat> b;               // m
  std::vector<int> rel;             // per row: -1 "<=", 0 "==", +1 ">="
  std::vector<Rat> c;               // n
};

struct LpResult {
  enum Status { kOptimal, kInfeasible, kUnbounded } status = kInfeasible;
  Rat value;
  std::vector<Rat> x;
};

LpResult solve_lp(const LpProblem& p);

// Same optimum, with the lexicographically smallest optimal point (each
// coordinate minimized in turn with the earlier ones pinned). Deterministic,
// used where regression tests depend on the returned witness.
LpResult solve_lp_lex(const LpProblem& p);

}  // namespace hypercone
