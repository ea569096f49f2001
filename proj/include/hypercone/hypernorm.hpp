#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercone/cone.hpp"

namespace hypercone {

struct NotProbability : std::runtime_error {
  NotProbability() : std::runtime_error("0+/0- norms require probability weights") {}
};
struct BoundaryCase : std::runtime_error {
  explicit BoundaryCase(const std::string& what) : std::runtime_error(what) {}
};

// Tag of an L^p norm, p in [-inf, 1] with the split zero.
struct LpTag {
  enum Kind { kRational, kMinusInf, kZeroPlus, kZeroMinus } kind = kRational;
  Rat p;  // for kRational: nonzero, <= 1

  static LpTag of(const Rat& p) {
    if (p == 0 || p > 1) throw std::invalid_argument("p must be nonzero and <= 1");
    LpTag t;
    t.p = p;
    return t;
  }
  static LpTag minus_inf() { LpTag t; t.kind = kMinusInf; return t; }
  static LpTag zero_plus() { LpTag t; t.kind = kZeroPlus; return t; }
  static LpTag zero_minus() { LpTag t; t.kind = kZeroMinus; return t; }

  // conjugate exponent with 1/p + 1/q = 1; 1 <-> -inf, 0+ <-> 0-.
  LpTag conjugate() const {
    switch (kind) {
      case kMinusInf: return of(Rat(1));
      case kZeroPlus: return zero_minus();
      case kZeroMinus: return zero_plus();
      default:
        if (p == 1) return minus_inf();
        return of(p / (p - 1));
    }
  }
  std::string str() const;
};

// The signed log-integral pair behind the 0+/0- norms.
struct SignedIntegralResult {
  ExtSigned plus, minus;  // int_+ and int_- of log f
  bool both_diverge = false;
};
SignedIntegralResult log_integral(const DiscreteCone& cone, const ConeVec& f);

// Exact value when the arithmetic closes over Q (always for p in {1,-1,-inf},
// and for other tags when the powers and roots happen to be rational).
std::optional<ExtNonneg> lp_norm_exact(const DiscreteCone& cone, const ConeVec& f,
                                       const LpTag& tag);
double lp_norm(const DiscreteCone& cone, const ConeVec& f, const LpTag& tag);

ExtNonneg pairing_exact(const DiscreteCone& cone, const ConeVec& f, const ConeVec& g);
double pairing(const DiscreteCone& cone, const ConeVec& f, const ConeVec& g);

// The attaining dual vector g* with ||g*||_q = 1 and <f, g*> = ||f||_p, for
// strictly positive finite f; boundary inputs are rejected (inequality-only).
struct DualAttainResult {
  std::vector<double> g;
  double pairing = 0, gq_norm = 1, f_norm = 0;
  std::optional<ConeVec> g_exact;
  std::optional<ExtNonneg> pairing_exact;
};
DualAttainResult dual_attain(const DiscreteCone& cone, const ConeVec& f, const LpTag& tag);

// Grid infimum of <f, g> over ||g||_q >= 1 (g normalized onto the unit
// sphere); refining the grid can only lower it.
double dual_grid_inf(const DiscreteCone& cone, const ConeVec& f, const LpTag& q, int ticks);

struct AuditReport {
  long long cases = 0;
  long long failures = 0;
  double worst_violation = 0;  // most negative slack seen
  std::string first_failure;
};

// <f,g> >= ||f||_p ||g||_q on random pairs including 0 and inf coordinates.
AuditReport reverse_holder_audit(int n, const LpTag& p, long long cases, uint64_t seed,
                                 double rel_tol = 1e-9);

// ||f||_{0+-} = 1 / ||1/f||_{0-+} (exact under the conventions) and the
// product identity for bounded positive data.
struct L0Identities {
  bool reciprocal_exact = true;
  bool product_ok = true;
  double product_gap = 0;
};
L0Identities l0_identities(const DiscreteCone& cone, const ConeVec& f, const ConeVec& g);

ConeVec cv_reciprocal(const ConeVec& f);  // 1/0 = inf, 1/inf = 0

// Operator norm of L_f against the source norm ||.||_q: the closed form is
// the conjugate norm of f; the grid value audits it from above.
struct OperatorNormResult {
  double closed_form = 0;
  double grid_value = 0;
  std::optional<ExtNonneg> exact;
};
OperatorNormResult operator_norm(const DiscreteCone& cone, const DualVector& l, const LpTag& q,
                                 int ticks = 24);

struct BidualAudit {
  double hn = 0;        // ||f||_p
  double hn_bidual = 0; // nested dual value at the embedded f
  double gap = 0;
  bool equality_within = false;
};
BidualAudit bidual_audit(const DiscreteCone& cone, const ConeVec& f, const LpTag& p,
                         double rel_tol, int ticks = 24);

// The indicator chain on an N-point window: all earlier norms vanish for
// p < 0 while the supremum has norm one.
struct McpCounterexample {
  std::vector<ExtNonneg> chain_norms;
  ExtNonneg sup_norm;
};
McpCounterexample lp_mcp_counterexample(int n, const Rat& p);

}  // namespace hypercone
