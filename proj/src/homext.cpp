#include "hypercone/homext.hpp"

#include <algorithm>

namespace hypercone {

ExtNonneg dual_eval(const DiscreteCone& cone, const DualVector& l, const ConeVec& v) {
  ExtNonneg acc(Rat(0));
  for (int i = 0; i < cone.size(); ++i) acc += scale(cone.mu[i], l.f[i] * v[i]);
  return acc;
}

RkResult rk_join_meet(const DiscreteCone& cone, const DualVector& f1, const DualVector& f2,
                      const ConeVec& v) {
  RkResult r;
  const int n = cone.size();
  r.join_v1.assign(n, ExtNonneg(Rat(0)));
  r.join_v2.assign(n, ExtNonneg(Rat(0)));
  r.meet_v1.assign(n, ExtNonneg(Rat(0)));
  r.meet_v2.assign(n, ExtNonneg(Rat(0)));
  ExtNonneg join(Rat(0)), meet(Rat(0));
  for (int i = 0; i < n; ++i) {
    ExtNonneg hi = ext_max(f1.f[i], f2.f[i]), lo = ext_min(f1.f[i], f2.f[i]);
    join += scale(cone.mu[i], hi * v[i]);
    meet += scale(cone.mu[i], lo * v[i]);
    if (f1.f[i] >= f2.f[i]) r.join_v1[i] = v[i]; else r.join_v2[i] = v[i];
    if (f1.f[i] <= f2.f[i]) r.meet_v1[i] = v[i]; else r.meet_v2[i] = v[i];
  }
  r.join_value = join;
  r.meet_value = meet;
  return r;
}

std::pair<ExtNonneg, ExtNonneg> rk_grid_oracle(const DiscreteCone& cone, const DualVector& f1,
                                               const DualVector& f2, const ConeVec& v,
                                               const Rat& step) {
  const int n = cone.size();
  std::vector<long long> ticks(n);
  for (int i = 0; i < n; ++i) {
    if (v[i].is_inf()) { ticks[i] = 1; continue; }  // split inf coordinates all-or-nothing
    ticks[i] = (long long)floor_rat(v[i].value() / step);
  }
  ExtNonneg best_join(Rat(0));
  ExtNonneg best_meet = ExtNonneg::inf();
  std::vector<long long> pick(n, 0);
  for (;;) {
    ConeVec v1(n), v2(n);
    for (int i = 0; i < n; ++i) {
      if (v[i].is_inf()) {
        v1[i] = pick[i] ? ExtNonneg::inf() : ExtNonneg(Rat(0));
        v2[i] = pick[i] ? ExtNonneg(Rat(0)) : ExtNonneg::inf();
      } else {
        Rat part = std::min(Rat(pick[i]) * step, v[i].value());
        v1[i] = ExtNonneg(part);
        v2[i] = ExtNonneg(v[i].value() - part);
      }
    }
    ExtNonneg val = dual_eval(cone, f1, v1) + dual_eval(cone, f2, v2);
    best_join = ext_max(best_join, val);
    best_meet = ext_min(best_meet, val);
    int i = 0;
    while (i < n && ++pick[i] > ticks[i]) pick[i++] = 0;
    if (i == n) break;
  }
  return {best_join, best_meet};
}

std::pair<ExtNonneg, ExtNonneg> rk_corner_oracle(const DiscreteCone& cone, const DualVector& f1,
                                                 const DualVector& f2, const ConeVec& v) {
  const int n = cone.size();
  ExtNonneg best_join(Rat(0));
  ExtNonneg best_meet = ExtNonneg::inf();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ConeVec v1(n, ExtNonneg(Rat(0))), v2(n, ExtNonneg(Rat(0)));
    for (int i = 0; i < n; ++i)
      (mask & (1u << i) ? v1 : v2)[i] = v[i];
    ExtNonneg val = dual_eval(cone, f1, v1) + dual_eval(cone, f2, v2);
    best_join = ext_max(best_join, val);
    best_meet = ext_min(best_meet, val);
  }
  return {best_join, best_meet};
}

// ---------------------------------------------------------------------------
// extension machinery

namespace {

// Rows of the ambient wedge order (identity for the orthant).
std::vector<std::vector<Rat>> order_rows(const ExtensionProblem& p) {
  if (!p.wedge_rows.empty()) return p.wedge_rows;
  std::vector<std::vector<Rat>> rows(p.dim, std::vector<Rat>(p.dim, Rat(0)));
  for (int i = 0; i < p.dim; ++i) rows[i][i] = Rat(1);
  return rows;
}

struct Columns {
  std::vector<int> t_gen, s_gen;  // usable generator columns (finite values)
  std::vector<int> d_idx, b_idx;  // bound columns on the orthant
};

Columns usable_columns(const ExtensionProblem& p) {
  Columns c;
  for (size_t k = 0; k < p.gens.size(); ++k) {
    if (!p.values[k].is_inf()) {
      c.t_gen.push_back((int)k);
      c.s_gen.push_back((int)k);
    }
    // generators with infinite value only produce infinite contributions on
    // either side of the difference; the infimum ignores them
  }
  if (p.psi_coeff)
    for (int i = 0; i < p.dim; ++i)
      if (!(*p.psi_coeff)[i].is_inf()) c.d_idx.push_back(i);
  if (p.phi_coeff)
    for (int i = 0; i < p.dim; ++i)
      if (!(*p.phi_coeff)[i].is_inf()) c.b_idx.push_back(i);
  return c;
}

LpProblem build_lp(const ExtensionProblem& p, const std::vector<Rat>& v, const Columns& c,
                   bool normalize) {
  const auto rows = order_rows(p);
  const int nt = (int)c.t_gen.size(), ns = (int)c.s_gen.size();
  const int nd = (int)c.d_idx.size(), nb = (int)c.b_idx.size();
  const int vars = nt + ns + nd + nb;
  LpProblem lp;
  lp.c.assign(vars, Rat(0));
  for (int j = 0; j < nt; ++j) lp.c[j] = p.values[c.t_gen[j]].value();
  for (int j = 0; j < ns; ++j) lp.c[nt + j] = -p.values[c.s_gen[j]].value();
  for (int j = 0; j < nd; ++j) lp.c[nt + ns + j] = (*p.psi_coeff)[c.d_idx[j]].value();
  for (int j = 0; j < nb; ++j) lp.c[nt + ns + nd + j] = -(*p.phi_coeff)[c.b_idx[j]].value();

  auto push_row = [&](const std::vector<Rat>& coef, const Rat& rhs, int rel) {
    lp.a.push_back(coef);
    lp.b.push_back(rhs);
    lp.rel.push_back(rel);
  };

  // order rows: row . (sum t g + d - sum s g - b - v) >= 0
  for (const auto& r : rows) {
    std::vector<Rat> coef(vars, Rat(0));
    for (int j = 0; j < nt; ++j)
      for (int i = 0; i < p.dim; ++i) coef[j] += r[i] * p.gens[c.t_gen[j]][i];
    for (int j = 0; j < ns; ++j)
      for (int i = 0; i < p.dim; ++i) coef[nt + j] -= r[i] * p.gens[c.s_gen[j]][i];
    for (int j = 0; j < nd; ++j) coef[nt + ns + j] = r[c.d_idx[j]];
    for (int j = 0; j < nb; ++j) coef[nt + ns + nd + j] = -r[c.b_idx[j]];
    Rat rhs(0);
    for (int i = 0; i < p.dim; ++i) rhs += r[i] * v[i];
    push_row(coef, rhs, 1);
  }
  if (normalize) {
    std::vector<Rat> coef(vars, Rat(1));
    push_row(coef, Rat(1), 0);
  }
  return lp;
}

}  // namespace

void check_consistency(const ExtensionProblem& p) {
  Columns c = usable_columns(p);
  Columns bare;
  bare.t_gen = c.t_gen;
  bare.s_gen = c.s_gen;
  // min M(t) - M(s) subject to sum t g = sum s g, normalized; a negative
  // optimum exhibits two writings of one element with different values
  LpProblem lp = build_lp(p, std::vector<Rat>(p.dim, Rat(0)), bare, true);
  for (auto& rel : lp.rel)
    if (rel == 1) rel = 0;  // equality of the combinations
  LpResult r = solve_lp(lp);
  if (r.status == LpResult::kOptimal && r.value < 0)
    throw HypothesisFailed("assigned values are inconsistent on overlapping combinations");
}

void check_hypothesis(const ExtensionProblem& p) {
  Columns c = usable_columns(p);
  LpProblem lp = build_lp(p, std::vector<Rat>(p.dim, Rat(0)), c, true);
  LpResult r = solve_lp(lp);
  if (r.status == LpResult::kOptimal && r.value < 0) {
    std::string what = "sandwich hypothesis fails: M(c)+psi(d) < M(a)+phi(b) with a+b <= c+d (";
    for (size_t j = 0; j < r.x.size(); ++j)
      if (r.x[j] != 0) what += std::to_string(j) + ":" + to_string(r.x[j]) + " ";
    throw HypothesisFailed(what + ")");
  }
  // also reject infinite-valued generators sitting below finite ones
  for (size_t k = 0; k < p.gens.size(); ++k) {
    if (!p.values[k].is_inf()) continue;
    ExtensionProblem probe = p;
    probe.gens.erase(probe.gens.begin() + k);
    probe.values.erase(probe.values.begin() + k);
    ExtNonneg dominated = extension_step(probe, p.gens[k]);
    if (!dominated.is_inf())
      throw HypothesisFailed("generator with infinite value dominated by finite combinations");
  }
}

ExtNonneg extension_step(const ExtensionProblem& p, const std::vector<Rat>& v) {
  Columns c = usable_columns(p);
  if (c.t_gen.size() + c.s_gen.size() + c.d_idx.size() + c.b_idx.size() > 32)
    throw std::invalid_argument("extension LP beyond the desk-scale cap");
  LpProblem lp = build_lp(p, v, c, false);
  LpResult r = solve_lp_lex(lp);
  if (r.status == LpResult::kInfeasible) return ExtNonneg::inf();  // empty constraint family
  if (r.status == LpResult::kUnbounded)
    throw HypothesisFailed("extension infimum unbounded below; hypothesis violated");
  if (r.value < 0) throw HypothesisFailed("negative extension value; hypothesis violated");
  return ExtNonneg(r.value);
}

ExtendAllResult extend_all(const DiscreteCone& cone, ExtensionProblem p,
                           const std::vector<int>& order, uint64_t grid_seed) {
  const int n = p.dim;
  check_consistency(p);
  check_hypothesis(p);
  const size_t original_gens = p.gens.size();
  std::vector<ExtNonneg> coord_value(n, ExtNonneg(Rat(0)));
  std::vector<bool> seen(n, false);
  ExtendAllResult out;
  for (int idx : order) {
    std::vector<Rat> e(n, Rat(0));
    e[idx] = Rat(1);
    ExtNonneg val = extension_step(p, e);
    out.raw_values.push_back(val);
    coord_value[idx] = val;
    seen[idx] = true;
    p.gens.push_back(e);
    p.values.push_back(val);
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = Rat(1);
      ExtNonneg val = extension_step(p, e);
      coord_value[i] = val;
      p.gens.push_back(e);
      p.values.push_back(val);
    }

  // land in the dual: the weighted projection keeps the coordinate data and
  // the induced functional has the Mcp by construction
  WeightedFunctionalSpec spec;
  spec.mu = cone.mu;
  spec.w.resize(n);
  spec.support.assign(n, true);
  for (int i = 0; i < n; ++i) {
    // f_i carries the weight back out: L(e_i) = f_i mu_i
    if (coord_value[i].is_inf())
      spec.w[i] = ExtNonneg::inf();
    else
      spec.w[i] = ExtNonneg(coord_value[i].value() / cone.mu[i]);
  }
  out.dual.f = pr_project_weighted(spec);

  // sample-grid audit of the sandwich and of the extension property
  Rng rng(grid_seed);
  for (int t = 0; t < 64; ++t) {
    std::vector<Rat> g(n);
    for (int i = 0; i < n; ++i) g[i] = rng.rational(6, 3);
    ConeVec gv(n);
    for (int i = 0; i < n; ++i) gv[i] = ExtNonneg(g[i]);
    ExtNonneg lv = dual_eval(cone, out.dual, gv);
    if (p.phi_coeff) {
      ExtNonneg phi(Rat(0));
      for (int i = 0; i < n; ++i) phi += (*p.phi_coeff)[i] * ExtNonneg(g[i]);
      if (!(phi <= lv)) out.bounds_hold = false;
    }
    if (p.psi_coeff) {
      ExtNonneg psi(Rat(0));
      for (int i = 0; i < n; ++i) psi += (*p.psi_coeff)[i] * ExtNonneg(g[i]);
      if (!(lv <= psi)) out.bounds_hold = false;
    }
  }
  for (size_t k = 0; k < original_gens; ++k) {
    // original generators: L agrees up to eps-absorption
    ConeVec gv(n);
    for (int i = 0; i < n; ++i) gv[i] = ExtNonneg(p.gens[k][i]);
    ExtNonneg lv = dual_eval(cone, out.dual, gv);
    if (lv == p.values[k]) continue;
    if (lv.is_inf() && !p.values[k].is_inf()) continue;  // absorbed an eps-term
    out.extends_up_to_eps = false;
  }
  check_consistency(p);  // the extended table must still define one linear map
  return out;
}

// ---------------------------------------------------------------------------
// Hahn-Banach

Rat eval_sublinear(const PolyhedralSublinear& p, const std::vector<Rat>& v) {
  Rat best;
  bool first = true;
  for (const auto& form : p.forms) {
    Rat s(0);
    for (size_t i = 0; i < v.size(); ++i) s += form[i] * v[i];
    if (first || s > best) { best = s; first = false; }
  }
  if (first) throw std::invalid_argument("sublinear function without forms");
  return best;
}

bool dominated_on_span(const PolyhedralSublinear& p, const std::vector<std::vector<Rat>>& basis,
                       const std::vector<Rat>& t_values) {
  // T <= max_j l_j on the span iff the restricted target is a convex
  // combination of the restricted forms
  const int k = (int)basis.size(), m = (int)p.forms.size();
  LpProblem lp;
  lp.c.assign(m, Rat(0));
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> row(m, Rat(0));
    for (int j = 0; j < m; ++j)
      for (size_t t = 0; t < basis[i].size(); ++t) row[j] += p.forms[j][t] * basis[i][t];
    lp.a.push_back(row);
    lp.b.push_back(t_values[i]);
    lp.rel.push_back(0);
  }
  lp.a.push_back(std::vector<Rat>(m, Rat(1)));
  lp.b.push_back(Rat(1));
  lp.rel.push_back(0);
  return solve_lp(lp).status == LpResult::kOptimal;
}

HahnBanachResult hahn_banach(const PolyhedralSublinear& p,
                             const std::vector<std::vector<Rat>>& subspace_basis,
                             const std::vector<Rat>& t_values,
                             const std::vector<int>& extension_order) {
  const int d = (int)p.forms[0].size();
  if (!dominated_on_span(p, subspace_basis, t_values))
    throw PreconditionFailed("T is not dominated by p on the subspace");

  // future cone of (t, v): rows t - l_j(v) >= 0
  ExtensionProblem ext;
  ext.dim = 1 + d;
  for (const auto& form : p.forms) {
    std::vector<Rat> row(1 + d, Rat(0));
    row[0] = Rat(1);
    for (int i = 0; i < d; ++i) row[1 + i] = -form[i];
    ext.wedge_rows.push_back(row);
  }
  auto lift = [&](const std::vector<Rat>& v) {
    std::vector<Rat> x(1 + d);
    x[0] = eval_sublinear(p, v);
    for (int i = 0; i < d; ++i) x[1 + i] = v[i];
    return x;
  };
  auto t_on = [&](const std::vector<Rat>& v, const std::vector<Rat>& coeffs) {
    Rat s(0);
    for (int i = 0; i < d; ++i) s += coeffs[i] * v[i];
    return s;
  };

  // the ray (1, 0) and the lifted +-subspace basis generate the initial piece
  {
    std::vector<Rat> one(1 + d, Rat(0));
    one[0] = Rat(1);
    ext.gens.push_back(one);
    ext.values.push_back(ExtNonneg(Rat(1)));
  }
  for (size_t i = 0; i < subspace_basis.size(); ++i) {
    std::vector<Rat> u = subspace_basis[i], nu;
    for (const Rat& x : u) nu.push_back(-x);
    ext.gens.push_back(lift(u));
    ext.values.push_back(ExtNonneg(eval_sublinear(p, u) - t_values[i]));
    ext.gens.push_back(lift(nu));
    ext.values.push_back(ExtNonneg(eval_sublinear(p, nu) + t_values[i]));
  }
  check_consistency(ext);
  check_hypothesis(ext);

  std::vector<int> order = extension_order;
  if (order.empty())
    for (int i = 0; i < d; ++i) order.push_back(i);

  HahnBanachResult out;
  out.t_hat.assign(d, Rat(0));
  std::vector<bool> value_known(d, false);
  for (int idx : order) {
    std::vector<Rat> e(d, Rat(0));
    e[idx] = Rat(1);
    std::vector<Rat> w = lift(e);
    ExtNonneg mv = extension_step(ext, w);
    if (mv.is_inf()) throw HypothesisFailed("future-cone extension became infinite");
    out.cone_values.push_back(mv);
    ext.gens.push_back(w);
    ext.values.push_back(mv);
    out.t_hat[idx] = w[0] - mv.value();  // T(v) = t - M(t, v)
    value_known[idx] = true;
  }

  // audits: extension of T on the subspace and domination by p
  for (size_t i = 0; i < subspace_basis.size(); ++i)
    if (t_on(subspace_basis[i], out.t_hat) != t_values[i]) out.extends = false;
  // exact domination: T_hat <= p everywhere iff T_hat is a convex combination
  // of the forms
  {
    std::vector<std::vector<Rat>> full_basis;
    for (int i = 0; i < d; ++i) {
      std::vector<Rat> e(d, Rat(0));
      e[i] = Rat(1);
      full_basis.push_back(e);
    }
    out.below_p = dominated_on_span(p, full_basis, out.t_hat);
  }
  // grid spot-check in exact arithmetic
  Rng rng(5);
  for (int t = 0; t < 128 && out.below_p; ++t) {
    std::vector<Rat> v(d);
    for (int i = 0; i < d; ++i)
      v[i] = Rat((long long)rng.below(13) - 6, 1 + (long long)rng.below(3));
    if (t_on(v, out.t_hat) > eval_sublinear(p, v)) out.below_p = false;
  }
  return out;
}

}  // namespace hypercone
