#include "hypercone/acceptance.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>

#include "hypercone/chrono.hpp"
#include "hypercone/completion_check.hpp"
#include "hypercone/homext.hpp"
#include "hypercone/hypernorm.hpp"
#include "hypercone/lorentz.hpp"
#include "hypercone/matrixdual.hpp"
#include "hypercone/mcp.hpp"
#include "hypercone/polygon.hpp"

namespace hypercone {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- criterion 1: closure iteration depths -------------------------------

void closure_depths(SuiteReport& rep) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  {
    SetSpec grid;
    grid.strata = {0};
    int steps = closure_suite(*doppiafreccia(), grid).bar_steps;
    if (steps != 2) { ok = false; detail = "grid depth " + std::to_string(steps); }
  }
  for (int d = 1; d <= 3; ++d) {
    SetSpec base;
    base.strata = {0};
    int steps = closure_suite(*alphafreccia(d), base).bar_steps;
    if (steps != d) { ok = false; detail += " tower(" + std::to_string(d) + ") depth " + std::to_string(steps); }
  }
  double el = seconds_since(t0);
  if (el >= 1.0) { ok = false; detail += " runtime " + std::to_string(el) + "s"; }
  rep.add("closure.iteration_depths", ok, detail, 4);
}

// --- criterion 2: completion recognition ----------------------------------

void completion_recognition(SuiteReport& rep) {
  const int budget = 64;
  bool ok = true;
  std::string detail;
  auto expect_pass = [&](const PosetPtr& x, const char* label) {
    auto cp = directed_completion_branch(x);
    auto r = check_completion_claim(claim_from_completion(x, cp), budget);
    if (!r.consistent) { ok = false; detail += std::string(label) + ": " + r.counterexample + "; "; }
  };
  expect_pass(finite_subsets(), "finite_subsets");
  expect_pass(seq_window_finite(), "sequences");
  expect_pass(minkowski_window(), "causal_plane");

  // negative fixtures must fail with a concrete counterexample
  {
    CompletionClaim claim;
    claim.source = omega_chain();
    claim.target = two_caps();
    claim.embed = [](const Code& c) { return c; };
    auto r = check_completion_claim(claim, budget);
    if (r.consistent || r.counterexample.empty()) { ok = false; detail += "two_caps accepted; "; }
  }
  {
    CompletionClaim claim;
    claim.source = two_chains();
    claim.target = top_glued_chains();
    claim.embed = [](const Code& c) { return c; };
    auto r = check_completion_claim(claim, budget);
    if (r.consistent || r.counterexample.empty()) { ok = false; detail += "top_glued accepted; "; }
  }
  rep.add("completion.recognition", ok, detail, 5);
}

// --- criterion 3: dm vs directed, exhaustive lattices ----------------------

void dm_vs_directed(SuiteReport& rep) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  {
    auto r = compare_completions_four_branches(24);
    if (!r.ts_identity || r.t_injective) { ok = false; detail += "four_branches; "; }
  }
  // every lattice on up to 6 points, enumerated through linear extensions
  long long lattices = 0;
  for (int n = 1; n <= 6 && ok; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) idx.push_back({i, j});
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i) r[i][i] = true;
      for (int k = 0; k < pairs; ++k)
        if (mask & (1u << k)) r[idx[k].first][idx[k].second] = true;
      bool trans = true;
      for (int a = 0; a < n && trans; ++a)
        for (int b = a + 1; b < n && trans; ++b)
          for (int c = b + 1; c < n && trans; ++c)
            if (r[a][b] && r[b][c] && !r[a][c]) trans = false;
      if (!trans) continue;
      std::vector<std::pair<int, int>> rel;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b && r[a][b]) rel.push_back({a, b});
      FinitePoset p(n, std::move(rel));
      if (!p.is_lattice()) continue;
      ++lattices;
      auto cmp = compare_completions(p);
      auto dm = dm_completion(p);
      if (!cmp.ts_identity || !cmp.t_injective || (int)dm.cuts.size() != n ||
          cmp.directed_size != n) {
        ok = false;
        detail += "lattice failure at n=" + std::to_string(n) + "; ";
        break;
      }
    }
  }
  double el = seconds_since(t0);
  if (el >= 10.0) { ok = false; detail += "runtime " + std::to_string(el) + "s"; }
  rep.add("completion.dm_vs_directed", ok, detail + std::to_string(lattices) + " lattices",
          lattices + 1);
}

// --- criterion 4: the two-dimensional catalog ------------------------------

void catalog_classifications(SuiteReport& rep) {
  bool ok = true;
  std::string detail;
  std::vector<ExtNonneg> params{ExtNonneg(Rat(0)), ExtNonneg(1), ExtNonneg(rat(3, 2)),
                                ExtNonneg::inf()};
  auto mcp_expected = [](char id, const ExtNonneg& l, const ExtNonneg& e) {
    if (id == 'a' || id == 'b') return true;
    bool zero = l.is_zero() && e.is_zero();
    return zero || (!l.is_zero() && !e.is_zero());
  };
  for (char id : {'a', 'b', 'c', 'd'})
    for (const auto& l : params)
      for (const auto& e : params) {
        auto q = catalog_cone_query(id, l, e);
        if (q.has_mcp != mcp_expected(id, l, e)) {
          ok = false;
          detail += std::string(1, id) + " misclassified; ";
        }
      }
  auto c = catalog_cone_query('c', ExtNonneg(Rat(0)), ExtNonneg(1));
  auto d = catalog_cone_query('d', ExtNonneg(Rat(0)), ExtNonneg(1));
  if (c.witness_label != "(n,0)" || d.witness_label != "(n,1-1/n)") {
    ok = false;
    detail += "witness chains missing; ";
  }
  // the witnesses genuinely break the chain audit
  for (char id : {'c', 'd'}) {
    auto q = catalog_cone_query(id, ExtNonneg(Rat(0)), ExtNonneg(1));
    ValueChain<CatalogElem> chain;
    chain.label = q.witness_label;
    chain.at = [id](long long k) {
      CatalogElem e;
      e.a = ExtNonneg(Rat(k + 1));
      e.b = id == 'c' ? ExtNonneg(Rat(0)) : ExtNonneg(rat(k, k + 1));
      return e;
    };
    CatalogElem top;
    top.is_top = true;
    chain.sup = top;
    chain.value_bound = q.witness_bound;
    auto leq = [](const CatalogElem& x, const CatalogElem& y) {
      if (y.is_top) return true;
      if (x.is_top) return false;
      return x.a <= y.a && x.b <= y.b;
    };
    auto eval = [](const CatalogElem& x) {
      if (x.is_top) return ExtNonneg::inf();
      return x.b;  // L_{0,1}
    };
    auto verdict = check_mcp<CatalogElem>(leq, {chain}, eval, 32);
    if (verdict.pass) { ok = false; detail += std::string(1, id) + " witness did not fail; "; }
  }
  if (!roman_sup_check().axiom_iv_fails) { ok = false; detail += "lexicographic witness; "; }
  if (catalog_cone_query('e', ExtNonneg(1), ExtNonneg(1)).is_cone_element_functional) {
    ok = false;
    detail += "half-plane positivity; ";
  }
  rep.add("cone.catalog_classification", ok, detail, 4 * 16 + 2);
}

// --- criterion 5: greatest monotone minorants ------------------------------

void pr_correctness(SuiteReport& rep, uint64_t seed, bool quick) {
  Rng rng(seed ^ 0x5151);
  const int cases = quick ? 200 : 1000;
  bool ok = true;
  std::string detail;
  auto posets = all_labeled_posets(4);
  std::vector<FinitePoset> lattices;
  for (const auto& p : posets)
    if (p.is_lattice()) lattices.push_back(p);
  lattices.push_back(FinitePoset::chain(5));
  // a handful of random 5-element sources
  std::vector<FinitePoset> sources = {FinitePoset::chain(5), FinitePoset::antichain(5)};
  for (int t = 0; t < 40; ++t) {
    std::vector<std::pair<int, int>> rel;
    Rng r2 = rng.fork(t);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (r2.coin()) rel.push_back({i, j});
    sources.push_back(FinitePoset(5, std::move(rel), true));
  }
  for (int t = 0; t < cases && ok; ++t) {
    const FinitePoset& src =
        (t % 3 == 0) ? sources[rng.below(sources.size())] : posets[rng.below(posets.size())];
    const FinitePoset& lat = lattices[rng.below(lattices.size())];
    std::vector<int> T(src.size()), S(src.size());
    for (int i = 0; i < src.size(); ++i) {
      T[i] = (int)rng.below(lat.size());
      auto m = lat.meet(T[i], (int)rng.below(lat.size()));
      S[i] = *m;  // S <= T pointwise
    }
    auto pr = pr_project_finite(src, lat, T);
    if (pr != pr_project_finite_oracle(src, lat, T)) { ok = false; detail = "oracle mismatch"; }
    if (pr_project_finite(src, lat, pr) != pr) { ok = false; detail = "not idempotent"; }
    auto ps = pr_project_finite(src, lat, S);
    for (int i = 0; i < src.size(); ++i)
      if (!lat.leq(ps[i], pr[i])) { ok = false; detail = "not monotone in the argument"; }
  }
  rep.add("mcp.projection_minorant", ok, detail, cases);
}

// --- criterion 6: lattice-law suite ----------------------------------------

void lattice_laws(SuiteReport& rep, uint64_t seed, bool quick) {
  auto r = lattice_law_suite(4, quick ? 2000 : 10000, seed ^ 0x11a);
  rep.add("cone.lattice_laws", r.failures == 0, r.first_failure, r.cases);
}

// --- criterion 7: riesz-kantorovich ----------------------------------------

void rk_against_oracles(SuiteReport& rep, uint64_t seed, bool quick) {
  Rng rng(seed ^ 0x44);
  DiscreteCone cone = DiscreteCone::ones(3);
  bool ok = true;
  std::string detail;
  const int cases = quick ? 40 : 120;
  for (int t = 0; t < cases && ok; ++t) {
    DualVector f1{random_cone_vec(rng, 3)}, f2{random_cone_vec(rng, 3)};
    ConeVec v = random_cone_vec(rng, 3, false);
    auto rk = rk_join_meet(cone, f1, f2, v);
    auto corner = rk_corner_oracle(cone, f1, f2, v);
    if (!(corner.first == rk.join_value) || !(corner.second == rk.meet_value)) {
      ok = false;
      detail = "corner oracle disagrees";
    }
    auto grid8 = rk_grid_oracle(cone, f1, f2, v, rat(1, 8));
    auto grid4 = rk_grid_oracle(cone, f1, f2, v, rat(1, 4));
    if (!(grid8.first <= rk.join_value) || !(rk.meet_value <= grid8.second)) {
      ok = false;
      detail = "closed form does not dominate the grid";
    }
    if (!(grid4.first <= grid8.first) || !(grid8.second <= grid4.second)) {
      ok = false;
      detail = "refinement moved the wrong way";
    }
  }
  rep.add("homext.riesz_kantorovich", ok, detail, cases);
}

// --- criterion 8: extension and hahn-banach fixtures ------------------------

void extension_fixtures(SuiteReport& rep) {
  bool ok = true;
  std::string detail;
  auto qv = [](std::initializer_list<long long> xs) {
    std::vector<Rat> v;
    for (long long x : xs) v.push_back(Rat(x));
    return v;
  };
  struct Fixture {
    PolyhedralSublinear p;
    std::vector<std::vector<Rat>> basis;
    std::vector<Rat> values;
  };
  std::vector<Fixture> feasible;
  // 1: the plane with the l1 ball
  feasible.push_back({{{qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})}},
                      {qv({1, 0})},
                      {Rat(1)}});
  // 2: linear p pins everything
  feasible.push_back({{{qv({2, 3})}}, {qv({1, 0})}, {Rat(2)}});
  // 3: d = 3 box norm
  feasible.push_back({{{qv({1, 1, 1}), qv({1, -1, 1}), qv({-1, 1, -1}), qv({-1, -1, -1}),
                        qv({1, 1, -1}), qv({-1, 1, 1})}},
                      {qv({1, 1, 1})},
                      {Rat(1)}});
  // 4: two-dimensional subspace in d = 3
  feasible.push_back({{{qv({2, 0, 0}), qv({0, 2, 0}), qv({0, 0, 2}), qv({-2, -2, -2})}},
                      {qv({1, 0, 0}), qv({0, 1, 0})},
                      {Rat(1), Rat(1)}});
  // 5: zero functional under an asymmetric gauge
  feasible.push_back({{{qv({3, 1}), qv({-1, 2}), qv({0, -1})}}, {qv({1, 1})}, {Rat(0)}});
  int idx = 0;
  for (const auto& fx : feasible) {
    ++idx;
    try {
      auto r = hahn_banach(fx.p, fx.basis, fx.values);
      if (!r.extends || !r.below_p) {
        ok = false;
        detail += "fixture " + std::to_string(idx) + " audit failed; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail += "fixture " + std::to_string(idx) + " threw: " + e.what() + "; ";
    }
  }
  // three infeasible instances are rejected by the hypothesis checks
  int rejected = 0;
  try {
    hahn_banach(feasible[0].p, {qv({1, 0})}, {Rat(2)});
  } catch (const PreconditionFailed&) { ++rejected; }
  try {
    hahn_banach(feasible[0].p, {qv({1, 0}), qv({0, 1})}, {Rat(1), rat(3, 2)});
  } catch (const PreconditionFailed&) { ++rejected; }
  try {
    ExtensionProblem bad;
    bad.dim = 2;
    bad.gens = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    bad.values = {ExtNonneg(2), ExtNonneg(1)};
    check_consistency(bad);
    check_hypothesis(bad);
  } catch (const HypothesisFailed&) { ++rejected; }
  if (rejected != 3) { ok = false; detail += "rejections " + std::to_string(rejected) + "/3; "; }
  rep.add("homext.extension_fixtures", ok, detail, 8);
}

// --- criterion 9: reverse holder and duality --------------------------------

void holder_duality(SuiteReport& rep, uint64_t seed, bool quick) {
  bool ok = true;
  std::string detail;
  const long long per_tag = quick ? 400 : 1500;
  std::vector<LpTag> tags{LpTag::of(Rat(-2)), LpTag::of(Rat(-1)), LpTag::of(rat(-1, 2)),
                          LpTag::of(rat(1, 2)), LpTag::of(Rat(1)), LpTag::zero_plus(),
                          LpTag::zero_minus()};
  long long total = 0;
  for (size_t i = 0; i < tags.size(); ++i) {
    auto r = reverse_holder_audit(3, tags[i], per_tag, seed + i, 1e-9);
    total += r.cases;
    if (r.failures) {
      ok = false;
      detail += "holder fails at tag " + tags[i].str() + ": " + r.first_failure + "; ";
    }
  }
  // attainment gap on strictly positive data
  Rng rng(seed ^ 0x99);
  DiscreteCone cone = DiscreteCone::uniform(3);
  for (int t = 0; t < (quick ? 20 : 200); ++t) {
    ConeVec f(3);
    for (int i = 0; i < 3; ++i) f[i] = ExtNonneg(rng.rational(8, 4) + Rat(1, 2));
    for (const auto& tag : {LpTag::of(Rat(-1)), LpTag::of(rat(1, 2)), LpTag::zero_plus()}) {
      auto att = dual_attain(cone, f, tag);
      double fn = lp_norm(cone, f, tag);
      if (std::abs(att.pairing / std::max(att.gq_norm, 1e-300) - fn) >
          1e-9 * std::max(1.0, fn)) {
        ok = false;
        detail += "attainment gap at " + tag.str() + "; ";
      }
    }
  }
  // the reciprocal identity, exact
  for (int t = 0; t < 200; ++t) {
    ConeVec f = random_cone_vec(rng, 3);
    auto ids = l0_identities(cone, f, random_cone_vec(rng, 3, false));
    if (!ids.reciprocal_exact) { ok = false; detail += "reciprocal identity; "; }
  }
  auto ce = lp_mcp_counterexample(4, Rat(-1));
  bool chain_ok = ce.sup_norm == ExtNonneg(1);
  for (size_t k = 0; k + 1 < ce.chain_norms.size(); ++k)
    chain_ok = chain_ok && ce.chain_norms[k].is_zero();
  if (!chain_ok) { ok = false; detail += "indicator chain norms; "; }
  rep.add("hypernorm.holder_duality", ok, detail, total);
}

// --- criterion 10: matrix duality -------------------------------------------

void matrix_duality(SuiteReport& rep, uint64_t seed, bool quick) {
  bool ok = true;
  std::string detail;
  const int per_p = quick ? 200 : 2500;
  std::vector<double> ps{-2.0, -1.0, -0.5, 0.5};
  std::mutex mu;
  for (double p : ps) {
    double q = p / (p - 1);
    std::atomic<bool> fail{false};
    parallel_for(per_p, [&](long long t) {
      Rng rng(seed + (uint64_t)(p * 1000) + 7777 * (uint64_t)t);
      int d = 2 + (int)rng.below(5);  // dimensions 2..6
      SymMatrix a = random_pd(rng, d, 0.3, 2.5), b = random_pd(rng, d, 0.3, 2.5);
      double lhs = trace_product(a, b) / d;
      double rhs = matrix_p_norm(a, p) * matrix_p_norm(b, q);
      if (lhs < rhs - 1e-8 * std::max(1.0, rhs)) fail = true;
      auto att = matrix_dual_attain(a, p);
      if (att.gap > 1e-8) fail = true;
    });
    if (fail) {
      ok = false;
      std::lock_guard<std::mutex> lk(mu);
      detail += "trace inequality or attainment at p=" + std::to_string(p) + "; ";
    }
  }
  // young equality gate and the determinant norm
  Rng rng(seed ^ 0xabc);
  for (int t = 0; t < (quick ? 10 : 60); ++t) {
    SymMatrix a = random_pd(rng, 4, 0.4, 2.0);
    // B = A^{p/q} with p = -1, q = 1/2: exponent p/q = -2
    auto y = young_audit(a, matrix_power(a, -2.0), -1.0);
    if (!y.holds || !y.equality) { ok = false; detail += "young equality gate; "; }
    auto strict = young_audit(a, random_pd(rng, 4, 0.4, 2.0), -1.0);
    if (!strict.holds) { ok = false; detail += "young inequality; "; }
    // det^(1/d) against an independent elimination determinant
    double det = 1;
    {
      SymMatrix lu = a;
      int d = lu.dim();
      for (int col = 0; col < d; ++col) {
        int piv = col;
        for (int r2 = col + 1; r2 < d; ++r2)
          if (std::abs(lu(r2, col)) > std::abs(lu(piv, col))) piv = r2;
        if (piv != col) {
          for (int c2 = 0; c2 < d; ++c2) std::swap(lu(piv, c2), lu(col, c2));
          det = -det;
        }
        det *= lu(col, col);
        for (int r2 = col + 1; r2 < d; ++r2) {
          double f = lu(r2, col) / lu(col, col);
          for (int c2 = col; c2 < d; ++c2) lu(r2, c2) -= f * lu(col, c2);
        }
      }
    }
    if (std::abs(matrix_p_norm(a, 0.0) - std::pow(det, 0.25)) > 1e-10) {
      ok = false;
      detail += "determinant norm; ";
    }
  }
  rep.add("matrix.trace_duality", ok, detail, (long long)per_p * 4);
}

// --- criterion 11: lorentz duality -------------------------------------------

void lorentz_duality(SuiteReport& rep, uint64_t seed, bool quick) {
  bool ok = true;
  std::string detail;
  double inf = std::numeric_limits<double>::infinity();
  auto conj = [&](double p) {
    if (p == 1.0) return inf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1);
  };
  int points = 0;
  for (double p : {1.0, 1.5, 2.0, 3.0, inf}) {
    double q = conj(p);
    double worst = 0;
    for (int i = 1; i <= 20 && points < 500; ++i)
      for (int j = 1; j < i; ++j) {
        double s = 0.3 + 0.2 * i, y = s * j / i;  // interior: 0 < y < s
        ++points;
        double dual = tri_dual(TriangleNorm::lp(p), s, y, quick ? 128 : 512);
        double expect = tri_norm(TriangleNorm::lp(q), s, y);
        worst = std::max(worst, std::abs(dual - expect));
      }
    if (worst > 1e-6) {
      ok = false;
      detail += "dual mismatch " + std::to_string(worst) + " at p=" + std::to_string(p) + "; ";
    }
  }
  auto bid = bidual_fixed_point(TriangleNorm::lp(2.0), 2e-6, quick ? 128 : 384);
  if (!bid.fixed_point) {
    ok = false;
    detail += "bidual gap " + std::to_string(bid.worst_gap) + "; ";
  }
  Rng rng(seed ^ 0x60);
  for (int t = 0; t < 1000; ++t) {
    Rat s = rng.rational(8, 3);
    QVec m{rng.rational(6, 3) - Rat(1), rng.rational(6, 3) - Rat(1)};
    for (auto tag : {BanachTag::kL1, BanachTag::kL2, BanachTag::kLinf}) {
      auto v = positive_functional_audit(s, m, tag);
      if (v.positive != v.dual_criterion || (!v.positive && !v.witness)) {
        ok = false;
        detail += "functional audit; ";
      }
    }
  }
  rep.add("lorentz.duality", ok, detail, points + 3000);
}

// --- criterion 12: the classifier --------------------------------------------

void minkowski_classifier(SuiteReport& rep) {
  bool ok = true;
  std::string detail;
  QVec u{rat(3, 5), rat(4, 5)};
  RaySequence constant{RaySequence::kConstant, {Rat(2), {Rat(1), Rat(0)}}, u, Rat(0)};
  RaySequence null_ray{RaySequence::kNull, {Rat(0), {-u[0], -u[1]}}, u, Rat(1)};
  RaySequence timelike{RaySequence::kTimelike, {Rat(0), {Rat(0), Rat(0)}}, u, Rat(2)};
  for (long long shift : {0LL, 1LL, 4LL}) {
    auto vc = classify_directed(ray_shift(constant, shift));
    auto vn = classify_directed(ray_shift(null_ray, shift));
    auto vt = classify_directed(ray_shift(timelike, shift));
    if (vc.kind != ClassifyVerdict::kPoint) { ok = false; detail += "constant; "; }
    if (vn.kind != ClassifyVerdict::kNullInfinity || !(vn.c == Rat(1)) || !(vn.w == u)) {
      ok = false;
      detail += "null ray; ";
    }
    if (vt.kind != ClassifyVerdict::kTimeInfinity) { ok = false; detail += "timelike; "; }
  }
  rep.add("lorentz.classifier", ok, detail, 9);
}

// --- criterion 13: baire shrink ----------------------------------------------

void baire_shrink(SuiteReport& rep, uint64_t seed) {
  bool ok = true;
  std::string detail;
  Rng rng(seed ^ 0x13);
  ChronInstance inst{DiscreteCone::uniform(3), LpTag::of(Rat(1))};
  for (int t = 0; t < 5 && ok; ++t) {
    BasicOpenSpec spec;
    ConeVec base = random_cone_vec(rng, 3, false);
    spec.lower = {base, cv_meet(base, random_cone_vec(rng, 3, false))};
    ConeVec bump = random_cone_vec(rng, 3, false);
    ConeVec top = cv_add(cv_add(base, bump), ConeVec(3, ExtNonneg(1)));
    spec.upper = {top, cv_add(top, random_cone_vec(rng, 3, false))};
    auto it = iterate_shrink(inst, spec, 10);
    for (const auto& s : it.steps)
      if (!s.certified) { ok = false; detail = s.failure; }
    if (!it.point_in_all) { ok = false; detail += " common point escaped"; }
  }
  auto cert = chron_pathology_witness(rat(1, 2), ExtNonneg(1), ExtNonneg(1));
  if (!cert.point_inside || !cert.pins_point) { ok = false; detail += " singleton certificate"; }
  rep.add("chrono.baire_shrink", ok, detail, 5 * 10 + 1);
}

// --- criterion 14: brunn-minkowski -------------------------------------------

void brunn_minkowski(SuiteReport& rep, uint64_t seed) {
  bool ok = true;
  std::string detail;
  Rng rng(seed ^ 0x14);
  for (int t = 0; t < 200; ++t) {
    ConvexPolygon a = random_convex_polygon(rng), b = random_convex_polygon(rng);
    auto v = bm_audit(a, b);
    if (!v.holds) { ok = false; detail = "inequality failed"; }
  }
  ConvexPolygon sq = ConvexPolygon::hull_of(
      {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  auto hom = bm_audit(sq, sq.scaled(rat(5, 2)));
  if (!hom.equality) { ok = false; detail += " homothets not tight"; }
  auto w = distributivity_failure_witness(seed);
  if (w.doubled_size != 2 || w.sum_size != 3 || !w.convex_case_ok) {
    ok = false;
    detail += " distributivity witness";
  }
  rep.add("geometry.brunn_minkowski", ok, detail, 202);
}

// --- criterion 15: the two-sided obstruction ----------------------------------

void two_sided_obstruction(SuiteReport& rep) {
  auto demo = filtered_inf_demo(4);
  bool ok = demo.t_of_inf == ExtNonneg(Rat(0)) && demo.inf_of_t.is_inf() && demo.chain_filtered;
  rep.add("mcp.two_sided_obstruction", ok,
          ok ? "(0, inf) as required" : "unexpected pair", 1);
}

}  // namespace

SuiteReport run_acceptance_suite(uint64_t seed, bool quick) {
  SuiteReport rep;
  rep.seed = seed;
  closure_depths(rep);
  completion_recognition(rep);
  dm_vs_directed(rep);
  catalog_classifications(rep);
  pr_correctness(rep, seed, quick);
  lattice_laws(rep, seed, quick);
  rk_against_oracles(rep, seed, quick);
  extension_fixtures(rep);
  holder_duality(rep, seed, quick);
  matrix_duality(rep, seed, quick);
  lorentz_duality(rep, seed, quick);
  minkowski_classifier(rep);
  baire_shrink(rep, seed);
  brunn_minkowski(rep, seed);
  two_sided_obstruction(rep);
  return rep;
}

}  // namespace hypercone
