#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypercone/rational.hpp"
#include "hypercone/rng.hpp"

namespace hypercone {

struct OutsideTriangle : std::runtime_error {
  OutsideTriangle() : std::runtime_error("point lies outside the triangle 0 <= x <= t") {}
};
struct NotCausal : std::runtime_error {
  NotCausal() : std::runtime_error("point lies outside the future cone") {}
};
struct NotMonotone : std::runtime_error {
  NotMonotone() : std::runtime_error("sequence is not causally monotone") {}
};
struct NotSummable : std::runtime_error {
  NotSummable() : std::runtime_error("increments are not summable") {}
};

// A norm on the triangle T = {0 <= x <= t}: an L^p tag (p in [1, inf]) or a
// custom evaluator. Custom evaluators must be 1-homogeneous; the x-decreasing
// flag records the declared monotonicity in x.
struct TriangleNorm {
  bool is_lp = true;
  double p = 2.0;  // infinity() allowed
  std::function<double(double, double)> custom;
  bool x_decreasing = true;
  static TriangleNorm lp(double p) {
    TriangleNorm n;
    n.p = p;
    return n;
  }
  static TriangleNorm tabulated(std::function<double(double, double)> f, bool x_dec) {
    TriangleNorm n;
    n.is_lp = false;
    n.custom = std::move(f);
    n.x_decreasing = x_dec;
    return n;
  }
};

double tri_norm(const TriangleNorm& n, double t, double x);

// Dual norm value at (s, y): inf of ts - xy over the unit level set. For
// L^p tags this is computed by one-parameter minimization with the escaping
// tail handled in closed form.
double tri_dual(const TriangleNorm& n, double s, double y, int ticks = 256);

struct BidualVerdict {
  double worst_gap = 0;      // max |bidual - norm| over the sampled points
  double worst_excess = 0;   // max (bidual - norm), for the violator reports
  bool fixed_point;          // within the tolerance handed in
};
BidualVerdict bidual_fixed_point(const TriangleNorm& n, double tol, int ticks = 128);

// ---------------------------------------------------------------------------
// rational causal geometry

using QVec = std::vector<Rat>;

enum class BanachTag { kL1, kL2, kLinf };

Rat norm_l1(const QVec& v);
Rat norm_linf(const QVec& v);
Rat norm2_sq(const QVec& v);  // squared euclidean norm, exact

struct CausalPoint {
  Rat t;
  QVec v;
};

// (t,x) <= (s,y) iff ||x - y||_2 <= s - t, decided exactly through squares.
bool causal_leq(const CausalPoint& a, const CausalPoint& b);

// hn(t, v) = |(t, ||v||)| for the chosen base norm; NotCausal off the cone.
double lorentzify_norm(const TriangleNorm& n, BanachTag tag, const CausalPoint& p);
bool in_future_cone(BanachTag tag, const CausalPoint& p);

// ---------------------------------------------------------------------------
// the directed-set classifier of the causal completion

struct RaySequence {
  enum Family { kConstant, kTimelike, kNull, kCauchyTail } family = kConstant;
  CausalPoint base;   // (t0, v0)
  QVec direction;     // u, rational with ||u||_2 = 1 for the ray families
  Rat speed;          // time advance per step
  // generated point: family-specific, see classify_directed
};

CausalPoint ray_at(const RaySequence& r, long long k);

struct ClassifyVerdict {
  enum Kind { kPoint, kTimeInfinity, kNullInfinity, kInconclusive } kind = kInconclusive;
  CausalPoint point;       // for kPoint
  Rat c;                   // for kNullInfinity: the limit of t - ||v||
  QVec w;                  // for kNullInfinity: the limit direction
  std::string note;
};

ClassifyVerdict classify_directed(const RaySequence& r, double tol = 1e-9, int steps = 8);

// The same family read from its k-th member on; verdicts must not change.
RaySequence ray_shift(const RaySequence& r, long long s);

// ---------------------------------------------------------------------------
// positive functionals on the future cone

struct PositiveFunctionalVerdict {
  bool positive;                  // st - <m, v> >= 0 on the cone
  bool dual_criterion;            // ||m||_* <= s in the matching dual norm
  std::optional<CausalPoint> witness;  // exact violation point when not positive
};
PositiveFunctionalVerdict positive_functional_audit(const Rat& s, const QVec& m, BanachTag tag);

// ---------------------------------------------------------------------------
// the two completeness correspondences

struct CompletenessPair {
  std::vector<CausalPoint> chain;  // (t_n, x_n) built from the increments
  CausalPoint sup;                 // (T, lim x)
  bool sup_is_least_upper_bound;   // exact on the sampled candidates
};
// Builds the causal chain of a sequence with geometrically summable
// increments toward `limit`, total time T = sum of distances.
CompletenessPair completeness_pair(const std::vector<QVec>& points, const QVec& limit,
                                   const Rat& total);

}  // namespace hypercone
