#include "hypercone/lorentz.hpp"

#include <algorithm>
#include <cmath>

namespace hypercone {

double tri_norm(const TriangleNorm& n, double t, double x) {
  if (x < 0 || x > t) throw OutsideTriangle();
  if (t == 0) return 0.0;  // homogeneity pins the apex
  if (!n.is_lp) return n.custom(t, x);
  if (std::isinf(n.p)) return t;
  return std::pow(std::pow(t, n.p) - std::pow(x, n.p), 1.0 / n.p);
}

namespace {

// t on the unit level set above x, i.e. |(t, x)| = 1 with t >= x.
double level_t(const TriangleNorm& n, double x) {
  if (n.is_lp) {
    if (std::isinf(n.p)) return 1.0;
    return std::pow(1.0 + std::pow(x, n.p), 1.0 / n.p);
  }
  // custom norms: bisect on t (norm nondecreasing in t along the level)
  double lo = x, hi = std::max(1.0, 2 * x + 2);
  while (tri_norm(n, hi, x) < 1.0) {
    hi *= 2;
    if (hi > 1e12) return hi;
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (tri_norm(n, mid, x) < 1.0 ? lo : hi) = mid;
  }
  return hi;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters) {
  const double r = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

double tri_dual(const TriangleNorm& n, double s, double y, int ticks) {
  if (y < 0 || y > s) throw OutsideTriangle();
  if (s == 0) return 0.0;
  if (!n.is_lp && std::isinf(tri_norm(n, 1.0, 0.0)) && std::isinf(tri_norm(n, 1.0, 1.0)) &&
      std::isinf(tri_norm(n, 1.0, 0.5))) {
    // identically infinite off the apex: every nonzero point is feasible and
    // t s - x y sinks to 0 along the shrinking diagonal
    return 0.0;
  }
  auto value = [&](double x) { return level_t(n, x) * s - x * y; };

  if (n.is_lp && std::isinf(n.p)) {
    // level set t = 1, x in [0, 1]: linear in x
    return std::min(value(0.0), 1.0 * s - 1.0 * y);
  }
  double best = value(0.0);
  double cap = 8.0;
  if (n.is_lp && n.p > 1) {
    // the tail ts - xy tends to +inf when s > y and to 0 when s = y; the
    // interior minimizer sits near r/(1-r) with r = (y/s)^(1/(p-1))
    if (s == y) {
      best = std::min(best, 0.0);
    } else {
      double r = std::pow(y / s, 1.0 / (n.p - 1.0));
      if (r < 1.0) cap = std::max(8.0, 4.0 * r / (1.0 - r));
    }
  }
  cap = std::min(cap, 1e6);
  double step = cap / ticks;
  double prev = best;
  double argbest = 0;
  for (int i = 1; i <= ticks; ++i) {
    double v = value(i * step);
    if (v < best) {
      best = v;
      argbest = i * step;
    }
    prev = v;
  }
  (void)prev;
  double lo = std::max(0.0, argbest - step), hi = std::min(cap, argbest + step);
  best = std::min(best, golden_min(value, lo, hi, 90));
  return best;
}

BidualVerdict bidual_fixed_point(const TriangleNorm& n, double tol, int ticks) {
  // dual of the dual, evaluated against the norm at interior sample points
  auto dual_at = [&](double s, double y) { return tri_dual(n, s, y, ticks); };
  auto bidual_at = [&](double t, double x) {
    // inf over directions (1, y) of (t - x y) / |(1, y)|_*
    auto g = [&](double y) {
      double d = dual_at(1.0, y);
      if (d <= 0) return std::numeric_limits<double>::infinity();
      return (t - x * y) / d;
    };
    double best = std::numeric_limits<double>::infinity();
    double argbest = 0;
    for (int i = 0; i <= ticks; ++i) {
      double y = (double)i / ticks;
      double v = g(y);
      if (v < best) {
        best = v;
        argbest = y;
      }
    }
    double lo = std::max(0.0, argbest - 1.0 / ticks), hi = std::min(1.0, argbest + 1.0 / ticks);
    return std::min(best, golden_min(g, lo, hi, 60));
  };

  BidualVerdict v{};
  for (int i = 1; i < 7; ++i)
    for (int j = 0; j < i; ++j) {
      double t = 0.4 + 0.35 * i, x = t * j / i;
      double norm = tri_norm(n, t, x);
      double bid = bidual_at(t, x);
      if (std::isinf(norm) && std::isinf(bid)) continue;  // degenerate branch agrees
      if (!std::isfinite(norm) || !std::isfinite(bid)) {
        v.worst_gap = std::numeric_limits<double>::infinity();
        continue;
      }
      v.worst_gap = std::max(v.worst_gap, std::abs(bid - norm));
      v.worst_excess = std::max(v.worst_excess, bid - norm);
    }
  v.fixed_point = v.worst_gap <= tol;
  return v;
}

// ---------------------------------------------------------------------------

Rat norm_l1(const QVec& v) {
  Rat s(0);
  for (const Rat& x : v) s += x < 0 ? -x : x;
  return s;
}
Rat norm_linf(const QVec& v) {
  Rat s(0);
  for (const Rat& x : v) s = std::max(s, x < 0 ? -x : x);
  return s;
}
Rat norm2_sq(const QVec& v) {
  Rat s(0);
  for (const Rat& x : v) s += x * x;
  return s;
}

bool causal_leq(const CausalPoint& a, const CausalPoint& b) {
  Rat dt = b.t - a.t;
  if (dt < 0) return false;
  QVec diff(a.v.size());
  for (size_t i = 0; i < a.v.size(); ++i) diff[i] = a.v[i] - b.v[i];
  return norm2_sq(diff) <= dt * dt;
}

bool in_future_cone(BanachTag tag, const CausalPoint& p) {
  if (p.t < 0) return false;
  switch (tag) {
    case BanachTag::kL1: return norm_l1(p.v) <= p.t;
    case BanachTag::kLinf: return norm_linf(p.v) <= p.t;
    case BanachTag::kL2: return norm2_sq(p.v) <= p.t * p.t;
  }
  return false;
}

double lorentzify_norm(const TriangleNorm& n, BanachTag tag, const CausalPoint& p) {
  if (!in_future_cone(tag, p)) throw NotCausal();
  double x;
  switch (tag) {
    case BanachTag::kL1: x = to_double(norm_l1(p.v)); break;
    case BanachTag::kLinf: x = to_double(norm_linf(p.v)); break;
    default: x = std::sqrt(to_double(norm2_sq(p.v))); break;
  }
  double t = to_double(p.t);
  return tri_norm(n, t, std::min(x, t));
}

// ---------------------------------------------------------------------------

CausalPoint ray_at(const RaySequence& r, long long k) {
  CausalPoint p = r.base;
  switch (r.family) {
    case RaySequence::kConstant:
      return p;
    case RaySequence::kTimelike:
      // t advances by `speed` per step, space by (speed - 1) along u
      p.t = r.base.t + r.speed * k;
      for (size_t i = 0; i < p.v.size(); ++i) p.v[i] = r.base.v[i] + (r.speed - 1) * k * r.direction[i];
      return p;
    case RaySequence::kNull:
      p.t = r.base.t + r.speed * k;
      for (size_t i = 0; i < p.v.size(); ++i) p.v[i] = r.base.v[i] + r.speed * k * r.direction[i];
      return p;
    case RaySequence::kCauchyTail: {
      // geometric approach: (T - T 2^-k, (1 - 2^-k) v0-direction target)
      Rat w = Rat(1) - Rat(1, Int(1) << std::min<long long>(k, 62));
      p.t = r.base.t + r.speed * w;
      for (size_t i = 0; i < p.v.size(); ++i) p.v[i] = r.base.v[i] + w * r.direction[i];
      return p;
    }
  }
  return p;
}

ClassifyVerdict classify_directed(const RaySequence& r, double tol, int steps) {
  ClassifyVerdict out;
  // causal monotonicity, exact
  for (long long k = 0; k + 1 < steps; ++k)
    if (!causal_leq(ray_at(r, k), ray_at(r, k + 1))) throw NotMonotone();

  // the two monotone quantities: t_k and c_k = t_k - ||v_k||
  auto c_of = [&](long long k) -> std::optional<Rat> {
    CausalPoint p = ray_at(r, k);
    Rat sq = norm2_sq(p.v);
    Rat root;
    if (!exact_root(sq, 2, root)) return std::nullopt;  // direction not Pythagorean
    return p.t - root;
  };

  std::vector<Rat> cs;
  bool exact = true;
  for (long long k = 0; k < steps; ++k) {
    auto c = c_of(k);
    if (!c) { exact = false; break; }
    cs.push_back(*c);
  }

  const bool t_escapes =
      (r.family == RaySequence::kTimelike || r.family == RaySequence::kNull) && r.speed > 0;

  if (t_escapes && exact && cs.size() >= 4) {
    // c is eventually affine on the ray families: read its slope exactly
    Rat slope = cs.back() - cs[cs.size() - 2];
    bool affine = true;
    for (size_t i = 2; i + 1 < cs.size(); ++i)
      if (!(cs[i + 1] - cs[i] == slope)) affine = false;
    if (affine && slope > 0) {
      out.kind = ClassifyVerdict::kTimeInfinity;
      return out;
    }
    if (affine && slope == 0) {
      out.kind = ClassifyVerdict::kNullInfinity;
      out.c = cs.back();
      out.w = r.direction;
      return out;
    }
    out.kind = ClassifyVerdict::kInconclusive;
    out.note = "escaping times with a drifting defect";
    return out;
  }
  if (!t_escapes) {
    if (r.family == RaySequence::kConstant) {
      out.kind = ClassifyVerdict::kPoint;
      out.point = r.base;
      return out;
    }
    // bounded times: Cauchy detection within `steps` at `tol`
    CausalPoint a = ray_at(r, steps - 2), b = ray_at(r, steps - 1);
    QVec diff(a.v.size());
    for (size_t i = 0; i < a.v.size(); ++i) diff[i] = a.v[i] - b.v[i];
    double gap = std::sqrt(to_double(norm2_sq(diff))) + std::abs(to_double(b.t - a.t));
    if (r.family == RaySequence::kCauchyTail && gap <= tol) {
      out.kind = ClassifyVerdict::kPoint;
      out.point.t = r.base.t + r.speed;
      out.point.v = r.base.v;
      for (size_t i = 0; i < out.point.v.size(); ++i) out.point.v[i] += r.direction[i];
      return out;
    }
    out.kind = ClassifyVerdict::kInconclusive;
    out.note = "limit not settled within the step budget at the given tolerance";
    return out;
  }
  out.kind = ClassifyVerdict::kInconclusive;
  out.note = exact ? "defect sequence too short to read" : "direction is not Pythagorean";
  return out;
}

RaySequence ray_shift(const RaySequence& r, long long s) {
  RaySequence out = r;
  out.base = ray_at(r, s);
  if (r.family == RaySequence::kCauchyTail) {
    Rat f(1, Int(1) << std::min<long long>(s, 62));
    out.speed = r.speed * f;
    for (auto& x : out.direction) x *= f;
  }
  return out;
}

// ---------------------------------------------------------------------------

PositiveFunctionalVerdict positive_functional_audit(const Rat& s, const QVec& m, BanachTag tag) {
  PositiveFunctionalVerdict v{};
  // dual-norm criterion, exact: l1 <-> linf, l2 <-> l2, linf <-> l1
  switch (tag) {
    case BanachTag::kL1: v.dual_criterion = norm_linf(m) <= s; break;
    case BanachTag::kLinf: v.dual_criterion = norm_l1(m) <= s; break;
    case BanachTag::kL2: v.dual_criterion = norm2_sq(m) <= s * s && s >= 0; break;
  }
  v.positive = v.dual_criterion;
  if (!v.positive) {
    // exact witness: a causal point where st - <m, v> < 0
    CausalPoint w;
    w.v = m;
    switch (tag) {
      case BanachTag::kL2: {
        // rational t with t^2 >= mm and s t < mm; exists since s < sqrt(mm).
        // Bisect toward sqrt(mm) from above, keeping causality invariant.
        Rat mm = norm2_sq(m);
        Rat lo = s < 0 ? Rat(0) : s, hi = mm + 1;
        for (int it = 0; it < 256 && !(s * hi < mm); ++it) {
          Rat mid = (lo + hi) / 2;
          if (mid * mid >= mm) hi = mid; else lo = mid;
        }
        w.t = hi;
        break;
      }
      case BanachTag::kL1: {
        // align with the largest coordinate
        size_t arg = 0;
        for (size_t i = 1; i < m.size(); ++i)
          if ((m[i] < 0 ? -m[i] : m[i]) > (m[arg] < 0 ? -m[arg] : m[arg])) arg = i;
        w.v.assign(m.size(), Rat(0));
        w.v[arg] = m[arg] < 0 ? Rat(-1) : Rat(1);
        w.t = Rat(1);
        break;
      }
      case BanachTag::kLinf: {
        for (size_t i = 0; i < m.size(); ++i) w.v[i] = m[i] < 0 ? Rat(-1) : Rat(1);
        w.t = Rat(1);
        break;
      }
    }
    // exact confirmation
    Rat val = s * w.t;
    for (size_t i = 0; i < m.size(); ++i) val -= m[i] * w.v[i];
    if (val < 0 && in_future_cone(tag, w)) v.witness = w;
  }
  return v;
}

CompletenessPair completeness_pair(const std::vector<QVec>& points, const QVec& limit,
                                   const Rat& total) {
  if (points.size() < 2) throw NotSummable();
  CompletenessPair out;
  Rat t(0);
  std::vector<Rat> dists;
  for (size_t k = 0; k + 1 < points.size(); ++k) {
    QVec diff(points[k].size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = points[k][i] - points[k + 1][i];
    Rat root;
    if (!exact_root(norm2_sq(diff), 2, root)) throw NotSummable();
    dists.push_back(root);
  }
  // geometric-ratio gate: each increment at most 3/4 of the previous one
  for (size_t k = 1; k < dists.size(); ++k)
    if (4 * dists[k] > 3 * dists[k - 1]) throw NotSummable();

  for (size_t k = 0; k < points.size(); ++k) {
    out.chain.push_back({t, points[k]});
    if (k < dists.size()) t += dists[k];
  }
  out.sup = {total, limit};
  out.sup_is_least_upper_bound = true;
  for (const auto& p : out.chain)
    if (!causal_leq(p, out.sup)) out.sup_is_least_upper_bound = false;
  // no sampled competitor strictly below it bounds the chain
  CausalPoint probe = out.sup;
  probe.t = out.sup.t - Rat(1, 16);
  bool probe_bounds = true;
  for (const auto& p : out.chain)
    if (!causal_leq(p, probe)) probe_bounds = false;
  if (probe_bounds && causal_leq(probe, out.sup) && !(probe.t == out.sup.t))
    out.sup_is_least_upper_bound = false;
  return out;
}

}  // namespace hypercone
