#include "hypercone/chrono.hpp"

namespace hypercone {

bool norm_positive(const ChronInstance& inst, const ConeVec& z) {
  switch (inst.norm.kind) {
    case LpTag::kMinusInf: {
      for (const auto& x : z)
        if (x.is_zero()) return false;
      return true;
    }
    case LpTag::kZeroPlus:
    case LpTag::kZeroMinus: {
      auto v = lp_norm_exact(inst.cone, z, inst.norm);
      if (v) return !v->is_zero();
      return lp_norm(inst.cone, z, inst.norm) > 0;
    }
    default:
      if (inst.norm.p > 0) {
        for (const auto& x : z)
          if (!x.is_zero()) return true;
        return false;
      }
      // p < 0: the norm vanishes as soon as a coordinate does
      for (const auto& x : z)
        if (x.is_zero()) return false;
      return true;
  }
}

bool chron_rel(const ChronInstance& inst, const ConeVec& v, const ConeVec& w) {
  if (!cv_leq(v, w)) throw NotComparable("chronology needs v <= w");
  return norm_positive(inst, cv_diff(w, v));
}

ChronLawReport chron_laws(const ChronInstance& inst, long long cases, uint64_t seed) {
  ChronLawReport rep;
  Rng rng(seed);
  const int n = inst.cone.size();
  for (long long t = 0; t < cases; ++t) {
    ++rep.cases;
    ConeVec v = random_cone_vec(rng, n), z = random_cone_vec(rng, n), a = random_cone_vec(rng, n);
    ConeVec w = cv_add(v, z);                       // v <= w
    ConeVec big = cv_add(w, random_cone_vec(rng, n));  // w <= big
    auto record = [&](bool ok, const char* tag) {
      if (!ok) {
        ++rep.failures;
        if (rep.first_failure.empty())
          rep.first_failure = std::string(tag) + " at v=" + cv_str(v) + " z=" + cv_str(z);
      }
    };

    // push-up in both arrangements
    if (chron_rel(inst, w, big)) record(chron_rel(inst, v, big), "pushup_left");
    if (chron_rel(inst, v, w)) record(chron_rel(inst, v, big), "pushup_right");
    // lambda-scaling preserves the relation
    if (chron_rel(inst, v, w)) {
      Rat l = rng.rational(5, 3) + Rat(1, 9);  // strictly positive
      record(chron_rel(inst, cv_scale(l, v), cv_scale(l, w)), "scaling");
    }
    // chronological cancellation: a+v << b+v forces a+eps v << b+eps v
    ConeVec b = cv_add(a, z);
    if (cv_leq(cv_add(a, v), cv_add(b, v)) && chron_rel(inst, cv_add(a, v), cv_add(b, v))) {
      ConeVec ae = cv_add(a, cv_eps(v)), be = cv_add(b, cv_eps(v));
      if (cv_leq(ae, be)) record(chron_rel(inst, ae, be), "cancellation");
    }
  }
  return rep;
}

namespace {

ConeVec sup_of(const std::vector<ConeVec>& xs, int n) {
  ConeVec s(n, ExtNonneg(Rat(0)));
  for (const auto& x : xs) s = cv_join(s, x);
  return s;
}
ConeVec inf_of(const std::vector<ConeVec>& xs, int n) {
  ConeVec s(n, ExtNonneg::inf());
  for (const auto& x : xs) s = cv_meet(s, x);
  return s;
}

}  // namespace

DiamondShrink diamond_shrink(const ChronInstance& inst, const BasicOpenSpec& spec) {
  const int n = inst.cone.size();
  DiamondShrink out;
  ConeVec v = sup_of(spec.lower, n);
  ConeVec w = spec.upper.empty() ? ConeVec(n, ExtNonneg::inf()) : inf_of(spec.upper, n);
  if (!cv_leq(v, w)) throw EmptyOpen();

  ConeVec mid = cv_add(cv_scale(Rat(1, 2), v), cv_scale(Rat(1, 2), w));
  for (const auto& vi : spec.lower)
    if (!cv_leq(vi, mid) || !chron_rel(inst, vi, mid)) throw EmptyOpen();
  for (const auto& wj : spec.upper)
    if (!cv_leq(mid, wj) || !chron_rel(inst, mid, wj)) throw EmptyOpen();

  ConeVec z = cv_diff(w, v);
  ConeVec third = cv_scale(Rat(1, 3), z);
  out.v_bar = cv_add(v, third);
  out.w_bar = cv_add(v, cv_scale(Rat(2, 3), z));
  for (const auto& vi : spec.lower) out.shrunken.lower.push_back(cv_add(vi, third));
  for (const auto& wj : spec.upper) out.shrunken.upper.push_back(cv_diff(wj, third));
  out.midpoint = mid;

  out.certified = true;
  auto fail = [&](const std::string& why) {
    out.certified = false;
    if (out.failure.empty()) out.failure = why;
  };
  // J(v_bar, w_bar) inside U: the generators reach strictly into the diamond
  for (const auto& vi : spec.lower)
    if (!chron_rel(inst, vi, out.v_bar)) fail("lower generator fails to reach v_bar");
  for (const auto& wj : spec.upper)
    if (!chron_rel(inst, out.w_bar, wj)) fail("w_bar fails to reach an upper generator");
  if (!cv_leq(out.v_bar, out.w_bar)) fail("shrunken diamond collapsed");
  // the midpoint lies in the shrunken open
  for (const auto& vi : out.shrunken.lower)
    if (!(cv_leq(vi, mid) && chron_rel(inst, vi, mid))) fail("midpoint below a shrunken lower");
  for (const auto& wj : out.shrunken.upper)
    if (!(cv_leq(mid, wj) && chron_rel(inst, mid, wj))) fail("midpoint above a shrunken upper");
  return out;
}

ShrinkIteration iterate_shrink(const ChronInstance& inst, BasicOpenSpec spec, int iterations) {
  ShrinkIteration out;
  const int n = inst.cone.size();
  ConeVec v0 = sup_of(spec.lower, n);
  ConeVec w0 = spec.upper.empty() ? ConeVec(n, ExtNonneg::inf()) : inf_of(spec.upper, n);
  ConeVec z0 = cv_diff(w0, v0);
  for (int k = 0; k < iterations; ++k) {
    DiamondShrink s = diamond_shrink(inst, spec);
    out.steps.push_back(s);
    spec = s.shrunken;
  }
  // limit of the v-bars: v0 + z0/2 coordinatewise (the geometric sum of the
  // one-third steps), infinite coordinates stay infinite
  out.common_point = cv_add(v0, cv_scale(Rat(1, 2), z0));
  out.point_in_all = true;
  for (const auto& s : out.steps)
    if (!(cv_leq(s.v_bar, out.common_point) && cv_leq(out.common_point, s.w_bar)))
      out.point_in_all = false;
  return out;
}

SingletonCertificate chron_pathology_witness(const Rat& p, const ExtNonneg& a, const ExtNonneg& b) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("the plane instance uses 0 < p < 1");
  ChronInstance inst{DiscreteCone::uniform(2), LpTag::of(p)};
  SingletonCertificate cert;
  auto pt = [&](const ExtNonneg& x, const ExtNonneg& y) { return ConeVec{x, y}; };
  ExtNonneg one(Rat(1));

  // upper walls through the point, lower walls where a coordinate allows
  cert.spec.upper.push_back(pt(a + one, b));
  cert.spec.upper.push_back(pt(a, b + one));
  if (!a.is_zero()) {
    ExtNonneg half_a = a.is_inf() ? ExtNonneg(Rat(1)) : ExtNonneg(a.value() / 2);
    cert.spec.lower.push_back(pt(half_a, b));
  }
  if (!b.is_zero()) {
    ExtNonneg half_b = b.is_inf() ? ExtNonneg(Rat(1)) : ExtNonneg(b.value() / 2);
    cert.spec.lower.push_back(pt(a, half_b));
  }

  auto inside = [&](const ConeVec& x) {
    for (const auto& vi : cert.spec.lower) {
      if (!cv_leq(vi, x)) return false;
      if (!chron_rel(inst, vi, x)) return false;
    }
    for (const auto& wj : cert.spec.upper) {
      if (!cv_leq(x, wj)) return false;
      if (!chron_rel(inst, x, wj)) return false;
    }
    return true;
  };

  ConeVec point = pt(a, b);
  cert.point_inside = inside(point);
  cert.pins_point = cert.point_inside;
  // probe a ring of nearby points, including the half-open segments that
  // betray an unpinned coordinate
  std::vector<ConeVec> probes;
  auto bump = [&](const ExtNonneg& x, const Rat& d) -> std::optional<ExtNonneg> {
    if (x.is_inf()) return std::nullopt;
    Rat moved = x.value() + d;
    if (moved < 0) return std::nullopt;
    return ExtNonneg(moved);
  };
  for (const Rat& d : {Rat(1, 16), Rat(-1, 16), Rat(1, 3), Rat(-1, 3)}) {
    if (auto x = bump(a, d)) probes.push_back(pt(*x, b));
    if (auto y = bump(b, d)) probes.push_back(pt(a, *y));
  }
  for (const auto& q : probes)
    if (!cv_eq(q, point) && inside(q)) cert.pins_point = false;
  return cert;
}

}  // namespace hypercone
