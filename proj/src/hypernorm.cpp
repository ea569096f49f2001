#include "hypercone/hypernorm.hpp"

#include <cmath>

namespace hypercone {

std::string LpTag::str() const {
  switch (kind) {
    case kMinusInf: return "-inf";
    case kZeroPlus: return "0+";
    case kZeroMinus: return "0-";
    default: return to_string(p);
  }
}

namespace {

bool is_probability(const DiscreteCone& cone) {
  Rat s(0);
  for (const Rat& m : cone.mu) s += m;
  return s == 1;
}

}  // namespace

SignedIntegralResult log_integral(const DiscreteCone& cone, const ConeVec& f) {
  if (!is_probability(cone)) throw NotProbability();
  SignedIntegralResult r;
  bool plus_div = false, minus_div = false;
  double finite_part = 0;
  for (int i = 0; i < cone.size(); ++i) {
    if (f[i].is_inf()) plus_div = true;
    else if (f[i].is_zero()) minus_div = true;
    else finite_part += to_double(cone.mu[i]) * std::log(f[i].to_double());
  }
  (void)finite_part;
  if (plus_div && minus_div) {
    r.plus = ExtSigned::plus_inf();
    r.minus = ExtSigned::minus_inf();
    r.both_diverge = true;
  } else if (plus_div) {
    r.plus = ExtSigned::plus_inf();
    r.minus = ExtSigned::plus_inf();
  } else if (minus_div) {
    r.plus = ExtSigned::minus_inf();
    r.minus = ExtSigned::minus_inf();
  } else {
    // finite on both sides; exactness is the caller's concern
    r.plus = ExtSigned(Rat(0));
    r.minus = ExtSigned(Rat(0));
  }
  return r;
}

std::optional<ExtNonneg> lp_norm_exact(const DiscreteCone& cone, const ConeVec& f,
                                       const LpTag& tag) {
  const int n = cone.size();
  switch (tag.kind) {
    case LpTag::kMinusInf: {
      ExtNonneg m = ExtNonneg::inf();
      for (int i = 0; i < n; ++i) m = ext_min(m, f[i]);
      return m;
    }
    case LpTag::kZeroPlus:
    case LpTag::kZeroMinus: {
      if (!is_probability(cone)) throw NotProbability();
      bool has_inf = false, has_zero = false;
      for (int i = 0; i < n; ++i) {
        has_inf = has_inf || f[i].is_inf();
        has_zero = has_zero || f[i].is_zero();
      }
      if (has_inf && has_zero)
        return tag.kind == LpTag::kZeroPlus ? ExtNonneg::inf() : ExtNonneg(Rat(0));
      if (has_inf) return ExtNonneg::inf();
      if (has_zero) return ExtNonneg(Rat(0));
      // geometric mean: (prod f_i^{a_i})^{1/D} with mu_i = a_i / D
      Int d(1);
      for (const Rat& m : cone.mu) d = boost::multiprecision::lcm(d, denominator(m));
      if (d > 64) return std::nullopt;
      Rat prod(1);
      for (int i = 0; i < n; ++i) {
        Int a = numerator(cone.mu[i]) * (d / denominator(cone.mu[i]));
        prod *= pow_int(f[i].value(), a.convert_to<long>());
      }
      Rat root;
      if (!exact_root(prod, d.convert_to<unsigned>(), root)) return std::nullopt;
      return ExtNonneg(root);
    }
    default: {
      const Rat& p = tag.p;
      ExtNonneg sum(Rat(0));
      for (int i = 0; i < n; ++i) {
        auto term = ext_pow_exact(f[i], p);
        if (!term) return std::nullopt;
        sum += scale(cone.mu[i], *term);
      }
      auto out = ext_pow_exact(sum, Rat(1) / p);
      if (!out) return std::nullopt;
      return *out;
    }
  }
}

double lp_norm(const DiscreteCone& cone, const ConeVec& f, const LpTag& tag) {
  const int n = cone.size();
  switch (tag.kind) {
    case LpTag::kMinusInf: {
      double m = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) m = std::min(m, f[i].to_double());
      return m;
    }
    case LpTag::kZeroPlus:
    case LpTag::kZeroMinus: {
      if (!is_probability(cone)) throw NotProbability();
      bool has_inf = false, has_zero = false;
      double log_acc = 0;
      for (int i = 0; i < n; ++i) {
        if (f[i].is_inf()) { has_inf = true; continue; }
        if (f[i].is_zero()) { has_zero = true; continue; }
        log_acc += to_double(cone.mu[i]) * std::log(f[i].to_double());
      }
      if (has_inf && has_zero)
        return tag.kind == LpTag::kZeroPlus ? std::numeric_limits<double>::infinity() : 0.0;
      if (has_inf) return std::numeric_limits<double>::infinity();
      if (has_zero) return 0.0;
      return std::exp(log_acc);
    }
    default: {
      const Rat& p = tag.p;
      double sum = 0;
      bool inf_sum = false;
      for (int i = 0; i < n; ++i) {
        double t = ext_pow_double(f[i], p);
        if (std::isinf(t)) inf_sum = true;
        else sum += to_double(cone.mu[i]) * t;
      }
      double pd = to_double(p);
      if (inf_sum) return pd > 0 ? std::numeric_limits<double>::infinity() : 0.0;
      if (sum == 0) return pd > 0 ? 0.0 : std::numeric_limits<double>::infinity();
      return std::pow(sum, 1.0 / pd);
    }
  }
}

ExtNonneg pairing_exact(const DiscreteCone& cone, const ConeVec& f, const ConeVec& g) {
  ExtNonneg acc(Rat(0));
  for (int i = 0; i < cone.size(); ++i) acc += scale(cone.mu[i], f[i] * g[i]);
  return acc;
}

double pairing(const DiscreteCone& cone, const ConeVec& f, const ConeVec& g) {
  return pairing_exact(cone, f, g).to_double();
}

DualAttainResult dual_attain(const DiscreteCone& cone, const ConeVec& f, const LpTag& tag) {
  const int n = cone.size();
  for (int i = 0; i < n; ++i)
    if (f[i].is_zero() || f[i].is_inf())
      throw BoundaryCase("attainment needs strictly positive finite data");
  DualAttainResult r;
  r.g.assign(n, 0.0);
  LpTag q = tag.conjugate();
  r.f_norm = lp_norm(cone, f, tag);

  if (tag.kind == LpTag::kZeroPlus || tag.kind == LpTag::kZeroMinus) {
    // g* = ||f||_0 / f
    for (int i = 0; i < n; ++i) r.g[i] = r.f_norm / f[i].to_double();
    auto exact_norm = lp_norm_exact(cone, f, tag);
    if (exact_norm && !exact_norm->is_inf() && !exact_norm->is_zero()) {
      ConeVec ge(n);
      for (int i = 0; i < n; ++i) ge[i] = ExtNonneg(exact_norm->value() / f[i].value());
      r.g_exact = ge;
      r.pairing_exact = pairing_exact(cone, f, ge);
    }
  } else if (tag.kind == LpTag::kMinusInf) {
    // mass on an argmin coordinate, normalized in L^1
    int arg = 0;
    for (int i = 1; i < n; ++i)
      if (f[i] < f[arg]) arg = i;
    ConeVec ge(n, ExtNonneg(Rat(0)));
    ge[arg] = ExtNonneg(Rat(1) / cone.mu[arg]);
    r.g_exact = ge;
    r.pairing_exact = pairing_exact(cone, f, ge);
    for (int i = 0; i < n; ++i) r.g[i] = ge[i].to_double();
  } else {
    const Rat& p = tag.p;
    // g* = f^{p-1} / ||f||_p^{p-1}
    double np = std::pow(r.f_norm, to_double(p) - 1.0);
    for (int i = 0; i < n; ++i)
      r.g[i] = std::pow(f[i].to_double(), to_double(p) - 1.0) / np;
    auto norm_exact = lp_norm_exact(cone, f, tag);
    if (norm_exact && !norm_exact->is_zero() && !norm_exact->is_inf()) {
      auto nf = ext_pow_exact(*norm_exact, p - 1);
      bool ok = nf.has_value();
      ConeVec ge(n);
      for (int i = 0; i < n && ok; ++i) {
        auto fp = ext_pow_exact(f[i], p - 1);
        if (!fp || nf->is_zero()) { ok = false; break; }
        ge[i] = ExtNonneg(fp->value() / nf->value());
      }
      if (ok) {
        r.g_exact = ge;
        r.pairing_exact = pairing_exact(cone, f, ge);
      }
    }
  }
  ConeVec gd(n);
  for (int i = 0; i < n; ++i) gd[i] = ExtNonneg(Rat((long long)std::llround(r.g[i] * (1 << 20)), 1 << 20));
  r.gq_norm = r.g_exact ? lp_norm(cone, *r.g_exact, q) : lp_norm(cone, gd, q);
  r.pairing = r.pairing_exact ? r.pairing_exact->to_double() : pairing(cone, f, gd);
  return r;
}

double dual_grid_inf(const DiscreteCone& cone, const ConeVec& f, const LpTag& q, int ticks) {
  const int n = cone.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(n, 0);
  for (;;) {
    ConeVec g(n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      g[i] = ExtNonneg(Rat(pick[i], ticks));
      nonzero = nonzero || pick[i] > 0;
    }
    if (nonzero) {
      double norm = lp_norm(cone, g, q);
      if (norm > 0 && std::isfinite(norm)) {
        double val = pairing(cone, f, g) / norm;  // scale g to unit q-norm
        best = std::min(best, val);
      }
    }
    int i = 0;
    while (i < n && ++pick[i] > ticks) pick[i++] = 0;
    if (i == n) break;
  }
  return best;
}

AuditReport reverse_holder_audit(int n, const LpTag& p, long long cases, uint64_t seed,
                                 double rel_tol) {
  AuditReport rep;
  Rng rng(seed);
  LpTag q = p.conjugate();
  DiscreteCone cone = DiscreteCone::uniform(n);
  for (long long t = 0; t < cases; ++t) {
    ++rep.cases;
    ConeVec f = random_cone_vec(rng, n, true), g = random_cone_vec(rng, n, true);
    if (p.kind == LpTag::kZeroPlus || p.kind == LpTag::kZeroMinus) {
      // probability weights enforced by construction (uniform)
    }
    double lhs = pairing(cone, f, g);
    double rhs = lp_norm(cone, f, p) * lp_norm(cone, g, q);
    if (std::isnan(rhs)) rhs = 0;  // 0 * inf: the inequality holds vacuously
    if (std::isinf(rhs)) {
      if (!std::isinf(lhs)) {
        ++rep.failures;
        if (rep.first_failure.empty())
          rep.first_failure = "f=" + cv_str(f) + " g=" + cv_str(g);
      }
      continue;
    }
    double slack = lhs - rhs;
    double scale = std::max(1.0, std::abs(rhs));
    if (slack / scale < -rel_tol) {
      ++rep.failures;
      rep.worst_violation = std::min(rep.worst_violation, slack / scale);
      if (rep.first_failure.empty()) rep.first_failure = "f=" + cv_str(f) + " g=" + cv_str(g);
    }
  }
  return rep;
}

ConeVec cv_reciprocal(const ConeVec& f) {
  ConeVec r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) r[i] = ExtNonneg::inf();
    else if (f[i].is_inf()) r[i] = ExtNonneg(Rat(0));
    else r[i] = ExtNonneg(Rat(1) / f[i].value());
  }
  return r;
}

L0Identities l0_identities(const DiscreteCone& cone, const ConeVec& f, const ConeVec& g) {
  L0Identities out;
  ConeVec rf = cv_reciprocal(f);
  auto lhs_p = lp_norm_exact(cone, f, LpTag::zero_plus());
  auto rhs_m = lp_norm_exact(cone, rf, LpTag::zero_minus());
  auto lhs_m = lp_norm_exact(cone, f, LpTag::zero_minus());
  auto rhs_p = lp_norm_exact(cone, rf, LpTag::zero_plus());
  auto recip = [](const ExtNonneg& x) {
    if (x.is_zero()) return ExtNonneg::inf();
    if (x.is_inf()) return ExtNonneg(Rat(0));
    return ExtNonneg(Rat(1) / x.value());
  };
  if (lhs_p && rhs_m && !(*lhs_p == recip(*rhs_m))) out.reciprocal_exact = false;
  if (lhs_m && rhs_p && !(*lhs_m == recip(*rhs_p))) out.reciprocal_exact = false;
  if (!lhs_p || !rhs_m || !lhs_m || !rhs_p) {
    // fall back to the double route when the roots escape Q
    double a = lp_norm(cone, f, LpTag::zero_plus());
    double b = lp_norm(cone, rf, LpTag::zero_minus());
    if (std::isfinite(a) && a > 0 && std::abs(a - 1.0 / b) > 1e-12 * std::max(1.0, a))
      out.reciprocal_exact = false;
  }

  bool bounded = true;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i].is_inf() || f[i].is_zero() || g[i].is_inf() || g[i].is_zero()) bounded = false;
  if (bounded) {
    ConeVec fg(f.size());
    for (size_t i = 0; i < f.size(); ++i) fg[i] = f[i] * g[i];
    double prod = lp_norm(cone, fg, LpTag::zero_plus());
    double split = lp_norm(cone, f, LpTag::zero_plus()) * lp_norm(cone, g, LpTag::zero_plus());
    out.product_gap = std::abs(prod - split) / std::max(1.0, std::abs(split));
    out.product_ok = out.product_gap <= 1e-12;
  }
  return out;
}

OperatorNormResult operator_norm(const DiscreteCone& cone, const DualVector& l, const LpTag& q,
                                 int ticks) {
  OperatorNormResult r;
  bool zero = true;
  for (const auto& x : l.f)
    if (!x.is_zero()) zero = false;
  if (zero) {
    r.closed_form = 0;
    r.grid_value = 0;
    r.exact = ExtNonneg(Rat(0));
    return r;
  }
  LpTag p = q.conjugate();
  r.closed_form = lp_norm(cone, l.f, p);
  r.exact = lp_norm_exact(cone, l.f, p);
  r.grid_value = dual_grid_inf(cone, l.f, q, ticks);
  return r;
}

BidualAudit bidual_audit(const DiscreteCone& cone, const ConeVec& f, const LpTag& p,
                         double rel_tol, int ticks) {
  BidualAudit a;
  a.hn = lp_norm(cone, f, p);
  // hn**(Psi f) = inf { L_g(f) : hn_*(L_g) >= 1 }, where hn_*(L_g) is the
  // conjugate norm of g: evaluate the closed-form candidate and sweep a grid.
  LpTag q = p.conjugate();
  double best = std::numeric_limits<double>::infinity();
  bool interior = true;
  for (const auto& x : f)
    if (x.is_zero() || x.is_inf()) interior = false;
  if (interior) {
    DualAttainResult att = dual_attain(cone, f, p);
    if (att.gq_norm > 0 && std::isfinite(att.gq_norm)) best = att.pairing / att.gq_norm;
  }
  best = std::min(best, dual_grid_inf(cone, f, q, ticks));
  a.hn_bidual = best;
  a.gap = std::abs(a.hn_bidual - a.hn) / std::max(1.0, std::abs(a.hn));
  a.equality_within = a.gap <= rel_tol;
  return a;
}

McpCounterexample lp_mcp_counterexample(int n, const Rat& p) {
  if (p > 0 && p != 1)
    throw std::invalid_argument("the indicator-chain computation is exact for p < 0 and p = 1");
  McpCounterexample out;
  DiscreteCone cone = DiscreteCone::uniform(n);
  for (int k = 1; k <= n; ++k) {
    ConeVec f(n, ExtNonneg(Rat(0)));
    for (int i = 0; i < k; ++i) f[i] = ExtNonneg(Rat(1));
    auto norm = lp_norm_exact(cone, f, LpTag::of(p));
    if (!norm) throw std::logic_error("indicator norms should close over Q here");
    out.chain_norms.push_back(*norm);
    if (k == n) out.sup_norm = out.chain_norms.back();
  }
  return out;
}

}  // namespace hypercone
