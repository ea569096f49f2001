#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercone/homext.hpp"

using namespace hypercone;

namespace {
ConeVec cv(std::initializer_list<long long> xs) {
  ConeVec v;
  for (long long x : xs) v.push_back(x < 0 ? ExtNonneg::inf() : ExtNonneg(Rat(x)));
  return v;
}
std::vector<Rat> qv(std::initializer_list<long long> xs) {
  std::vector<Rat> v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}
}  // namespace

TEST_CASE("exact simplex on a textbook instance") {
  // min -x - y st x + 2y <= 4, 3x + y <= 6: optimum at (8/5, 6/5)
  LpProblem lp;
  lp.a = {{Rat(1), Rat(2)}, {Rat(3), Rat(1)}};
  lp.b = {Rat(4), Rat(6)};
  lp.rel = {-1, -1};
  lp.c = {Rat(-1), Rat(-1)};
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpResult::kOptimal);
  CHECK(r.value == rat(-14, 5));
  CHECK(r.x[0] == rat(8, 5));
  CHECK(r.x[1] == rat(6, 5));
}

TEST_CASE("simplex detects infeasibility and unboundedness") {
  LpProblem inf;
  inf.a = {{Rat(1)}, {Rat(1)}};
  inf.b = {Rat(1), Rat(3)};
  inf.rel = {-1, 1};  // x <= 1 and x >= 3
  inf.c = {Rat(0)};
  CHECK(solve_lp(inf).status == LpResult::kInfeasible);

  LpProblem unb;
  unb.a = {{Rat(1), Rat(-1)}};
  unb.b = {Rat(0)};
  unb.rel = {1};
  unb.c = {Rat(-1), Rat(0)};
  CHECK(solve_lp(unb).status == LpResult::kUnbounded);
}

TEST_CASE("lexicographic refinement is deterministic") {
  // two optimal vertices; the refinement must pick the lexicographically least
  LpProblem lp;
  lp.a = {{Rat(1), Rat(1)}};
  lp.b = {Rat(1)};
  lp.rel = {0};
  lp.c = {Rat(0), Rat(0)};  // everything feasible is optimal
  auto r = solve_lp_lex(lp);
  REQUIRE(r.status == LpResult::kOptimal);
  CHECK(r.x[0] == Rat(0));
  CHECK(r.x[1] == Rat(1));
}

TEST_CASE("riesz-kantorovich closed forms against both oracles") {
  DiscreteCone cone = DiscreteCone::ones(2);
  DualVector f1{{ExtNonneg(1), ExtNonneg(3)}}, f2{{ExtNonneg(2), ExtNonneg(1)}};
  ConeVec v = cv({1, 1});
  auto rk = rk_join_meet(cone, f1, f2, v);
  CHECK(rk.join_value == ExtNonneg(5));
  CHECK(rk.meet_value == ExtNonneg(2));
  // the returned decompositions attain the values
  CHECK(dual_eval(cone, f1, rk.join_v1) + dual_eval(cone, f2, rk.join_v2) == rk.join_value);
  CHECK(dual_eval(cone, f1, rk.meet_v1) + dual_eval(cone, f2, rk.meet_v2) == rk.meet_value);
  // corner oracle is exact, grid oracle is dominated
  auto corner = rk_corner_oracle(cone, f1, f2, v);
  CHECK(corner.first == rk.join_value);
  CHECK(corner.second == rk.meet_value);
  auto grid = rk_grid_oracle(cone, f1, f2, v, rat(1, 8));
  CHECK(grid.first <= rk.join_value);
  CHECK(rk.meet_value <= grid.second);
  // equal functionals collapse both to the same value
  auto same = rk_join_meet(cone, f1, f1, v);
  CHECK(same.join_value == same.meet_value);
  // v = 0
  auto zero = rk_join_meet(cone, f1, f2, cv({0, 0}));
  CHECK(zero.join_value == ExtNonneg(Rat(0)));
  CHECK(zero.meet_value == ExtNonneg(Rat(0)));
}

TEST_CASE("rk oracles on random data with refinement monotonicity") {
  Rng rng(17);
  DiscreteCone cone = DiscreteCone::ones(3);
  for (int t = 0; t < 40; ++t) {
    DualVector f1{random_cone_vec(rng, 3)}, f2{random_cone_vec(rng, 3)};
    ConeVec v = random_cone_vec(rng, 3, false);
    auto rk = rk_join_meet(cone, f1, f2, v);
    auto corner = rk_corner_oracle(cone, f1, f2, v);
    CHECK(corner.first == rk.join_value);
    CHECK(corner.second == rk.meet_value);
    auto coarse = rk_grid_oracle(cone, f1, f2, v, rat(1, 2));
    auto fine = rk_grid_oracle(cone, f1, f2, v, rat(1, 4));
    CHECK(coarse.first <= fine.first);    // joins grow under refinement
    CHECK(fine.second <= coarse.second);  // meets shrink
    CHECK(fine.first <= rk.join_value);
    CHECK(rk.meet_value <= fine.second);
  }
}

TEST_CASE("three orders coincide through the coordinatewise difference") {
  Rng rng(23);
  DiscreteCone cone = DiscreteCone::ones(3);
  for (int t = 0; t < 100; ++t) {
    DualVector l1{random_cone_vec(rng, 3)};
    DualVector l2{l1};
    for (int i = 0; i < 3; ++i) l2.f[i] += random_cone_vec(rng, 3)[i];
    // pointwise l1 <= l2 by construction; exhibit M with l1 + M = l2
    DualVector m{ConeVec(3)};
    for (int i = 0; i < 3; ++i) m.f[i] = ext_diff(l2.f[i], l1.f[i]);
    for (int i = 0; i < 3; ++i) CHECK(l1.f[i] + m.f[i] == l2.f[i]);
  }
}

TEST_CASE("extension on the diagonal subwedge") {
  // W' = span+{(1,1)}, M(1,1) = 2, trivial bounds: M(1,0) = 2
  ExtensionProblem p;
  p.dim = 2;
  p.gens = {qv({1, 1})};
  p.values = {ExtNonneg(2)};
  check_consistency(p);
  check_hypothesis(p);
  CHECK(extension_step(p, qv({1, 0})) == ExtNonneg(2));
  // a vector already inside the subwedge keeps its value
  CHECK(extension_step(p, qv({2, 2})) == ExtNonneg(4));
}

TEST_CASE("empty constraint family yields the infinite value") {
  ExtensionProblem p;
  p.dim = 2;
  p.gens = {qv({1, 0})};
  p.values = {ExtNonneg(1)};
  // nothing in cone{(1,0)} dominates (0,1)
  CHECK(extension_step(p, qv({0, 1})).is_inf());
}

TEST_CASE("hypothesis violations are rejected") {
  // g1 = (1,1) with value 2 sits below g2 = (2,2) with value 1
  ExtensionProblem p;
  p.dim = 2;
  p.gens = {qv({1, 1}), qv({2, 2})};
  p.values = {ExtNonneg(2), ExtNonneg(1)};
  CHECK_THROWS_AS(check_consistency(p), HypothesisFailed);
}

TEST_CASE("extend_all lands in the dual with the bounds held") {
  DiscreteCone cone = DiscreteCone::ones(2);
  ExtensionProblem p;
  p.dim = 2;
  p.gens = {qv({1, 1})};
  p.values = {ExtNonneg(2)};
  auto r1 = extend_all(cone, p, {0, 1});
  auto r2 = extend_all(cone, p, {1, 0});
  CHECK(r1.bounds_hold);
  CHECK(r2.bounds_hold);
  CHECK(r1.extends_up_to_eps);
  // both orders give sandwiched extensions; they need not agree
  ConeVec diag = cv({1, 1});
  CHECK(dual_eval(cone, r1.dual, diag) == ExtNonneg(2));
  CHECK(dual_eval(cone, r2.dual, diag) == ExtNonneg(2));
}

TEST_CASE("sandwich with equal bounds pins the extension") {
  DiscreteCone cone = DiscreteCone::ones(2);
  ExtensionProblem p;
  p.dim = 2;
  p.gens = {qv({1, 1})};
  p.values = {ExtNonneg(3)};
  std::vector<ExtNonneg> bound{ExtNonneg(1), ExtNonneg(2)};
  p.phi_coeff = bound;
  p.psi_coeff = bound;
  auto r = extend_all(cone, p, {0, 1});
  CHECK(r.bounds_hold);
  CHECK(r.dual.f[0] == ExtNonneg(1));
  CHECK(r.dual.f[1] == ExtNonneg(2));
}

TEST_CASE("dominated_on_span is exact") {
  PolyhedralSublinear p;
  p.forms = {qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})};  // |x| + |y|
  CHECK(dominated_on_span(p, {qv({1, 0})}, {Rat(1)}));
  CHECK(!dominated_on_span(p, {qv({1, 0})}, {Rat(2)}));
}

TEST_CASE("hahn-banach recovery on the plane") {
  PolyhedralSublinear p;
  p.forms = {qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})};
  auto r = hahn_banach(p, {qv({1, 0})}, {Rat(1)});
  CHECK(r.extends);
  CHECK(r.below_p);
  CHECK(r.t_hat[0] == Rat(1));
  CHECK(r.t_hat[1] <= Rat(1));
  CHECK(r.t_hat[1] >= Rat(-1));
  // rejected when T exceeds p on the subspace
  CHECK_THROWS_AS(hahn_banach(p, {qv({1, 0})}, {Rat(2)}), PreconditionFailed);
}

TEST_CASE("zero functional stays zero and linear p pins the extension") {
  PolyhedralSublinear p;
  p.forms = {qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})};
  auto zero = hahn_banach(p, {qv({0, 1})}, {Rat(0)});
  CHECK(zero.extends);
  CHECK(zero.below_p);

  PolyhedralSublinear lin;
  lin.forms = {qv({2, 3})};  // p itself linear: the extension is forced
  auto r = hahn_banach(lin, {qv({1, 0})}, {Rat(2)});
  CHECK(r.extends);
  CHECK(r.below_p);
  CHECK(r.t_hat[0] == Rat(2));
  CHECK(r.t_hat[1] == Rat(3));
}

TEST_CASE("order dependence produces two admissible extensions") {
  PolyhedralSublinear p;
  p.forms = {qv({1, 2}), qv({1, -2}), qv({-1, 2}), qv({-1, -2})};
  auto a = hahn_banach(p, {qv({1, 1})}, {Rat(1)}, {0, 1});
  auto b = hahn_banach(p, {qv({1, 1})}, {Rat(1)}, {1, 0});
  CHECK(a.extends);
  CHECK(b.extends);
  CHECK(a.below_p);
  CHECK(b.below_p);
}

TEST_CASE("a full generating set is returned unchanged") {
  DiscreteCone cone = DiscreteCone::ones(2);
  ExtensionProblem p;
  p.dim = 2;
  p.gens = {qv({1, 0}), qv({0, 1})};
  p.values = {ExtNonneg(3), ExtNonneg(5)};
  auto r = extend_all(cone, p, {0, 1});
  CHECK(r.dual.f[0] == ExtNonneg(3));
  CHECK(r.dual.f[1] == ExtNonneg(5));
  CHECK(r.extends_up_to_eps);
}

TEST_CASE("the extended functional passes the chain audit") {
  DiscreteCone cone = DiscreteCone::ones(2);
  ExtensionProblem p;
  p.dim = 2;
  p.gens = {qv({1, 1})};
  p.values = {ExtNonneg(2)};
  auto r = extend_all(cone, p, {0, 1});
  std::vector<ValueChain<ConeVec>> chains;
  for (int i = 0; i < 2; ++i) {
    ValueChain<ConeVec> ramp;
    ramp.label = "ramp" + std::to_string(i);
    ramp.at = [i](long long k) {
      ConeVec v(2, ExtNonneg(Rat(0)));
      v[i] = ExtNonneg(Rat(k));
      return v;
    };
    ramp.sup = ConeVec(2, ExtNonneg(Rat(0)));
    ramp.sup[i] = ExtNonneg::inf();
    chains.push_back(ramp);
  }
  auto T = [&](const ConeVec& v) { return dual_eval(cone, r.dual, v); };
  auto verdict = check_mcp<ConeVec>(cv_leq, chains, T, 32);
  INFO(verdict.witness);
  CHECK(verdict.pass);
}

namespace {

// gaussian elimination over Q: solve a square system, empty on singular
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> m,
                                             std::vector<Rat> rhs) {
  const int n = (int)m.size();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

TEST_CASE("simplex against brute-force vertex enumeration") {
  // bounded random LPs: the optimum is attained at a basic feasible point,
  // enumerated here as every intersection of n active constraints
  Rng rng(909);
  int solved = 0;
  for (int t = 0; t < 120; ++t) {
    const int n = 2 + (int)rng.below(2);  // 2..3 variables
    const int m = 2 + (int)rng.below(3);  // 2..4 inequality rows
    LpProblem lp;
    lp.c.resize(n);
    for (auto& c : lp.c) c = Rat((long long)rng.below(9)) - 4;
    for (int r = 0; r < m; ++r) {
      std::vector<Rat> row(n);
      for (auto& a : row) a = Rat((long long)rng.below(7)) - 3;
      lp.a.push_back(row);
      lp.b.push_back(Rat((long long)rng.below(8)));
      lp.rel.push_back(-1);
    }
    // box rows keep everything bounded
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> row(n, Rat(0));
      row[i] = Rat(1);
      lp.a.push_back(row);
      lp.b.push_back(Rat(5));
      lp.rel.push_back(-1);
    }
    auto res = solve_lp(lp);
    REQUIRE(res.status != LpResult::kUnbounded);

    // enumerate candidate vertices: choose n tight rows among all constraints
    // (inequalities plus the nonnegativity walls)
    std::vector<std::vector<Rat>> rows = lp.a;
    std::vector<Rat> rhs = lp.b;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> wall(n, Rat(0));
      wall[i] = Rat(1);
      rows.push_back(wall);
      rhs.push_back(Rat(0));
    }
    std::optional<Rat> best;
    const int total = (int)rows.size();
    std::vector<int> pick(n);
    std::function<void(int, int)> choose = [&](int from, int k) {
      if (k == n) {
        std::vector<std::vector<Rat>> sys;
        std::vector<Rat> sys_rhs;
        for (int i = 0; i < n; ++i) {
          sys.push_back(rows[pick[i]]);
          sys_rhs.push_back(rhs[pick[i]]);
        }
        auto x = solve_square(sys, sys_rhs);
        if (!x) return;
        for (const Rat& xi : *x)
          if (xi < 0) return;
        for (int r = 0; r < (int)lp.a.size(); ++r) {
          Rat lhs(0);
          for (int i = 0; i < n; ++i) lhs += lp.a[r][i] * (*x)[i];
          if (lhs > lp.b[r]) return;
        }
        Rat val(0);
        for (int i = 0; i < n; ++i) val += lp.c[i] * (*x)[i];
        if (!best || val < *best) best = val;
        return;
      }
      for (int i = from; i < total; ++i) {
        pick[k] = i;
        choose(i + 1, k + 1);
      }
    };
    choose(0, 0);
    if (res.status == LpResult::kOptimal) {
      REQUIRE(best.has_value());
      CHECK(res.value == *best);
      ++solved;
    } else {
      CHECK(!best.has_value());
    }
  }
  CHECK(solved > 60);  // the instances are mostly feasible
}

TEST_CASE("extension values against enumeration over scaled generators") {
  // brute force the defining infimum on a rational grid: a and c range over
  // scaled sums of the generators, the constraint is a + v <= c
  auto enumerate = [](const ExtensionProblem& p, const std::vector<Rat>& v,
                      long long ticks) -> std::optional<Rat> {
    const int m = (int)p.gens.size(), n = p.dim;
    std::optional<Rat> best;
    std::vector<long long> s(m, 0), t(m, 0);
    auto value_of = [&]() {
      Rat val(0);
      for (int k = 0; k < m; ++k)
        val += (Rat(t[k]) - Rat(s[k])) / 4 * p.values[k].value();
      return val;
    };
    auto feasible = [&]() {
      for (int i = 0; i < n; ++i) {
        Rat lhs = v[i];
        for (int k = 0; k < m; ++k) lhs += (Rat(s[k]) - Rat(t[k])) / 4 * p.gens[k][i];
        if (lhs > 0) return false;
      }
      return true;
    };
    std::function<void(int)> rec = [&](int k) {
      if (k == m) {
        if (feasible()) {
          Rat val = value_of();
          if (!best || val < *best) best = val;
        }
        return;
      }
      for (s[k] = 0; s[k] <= ticks; ++s[k])
        for (t[k] = 0; t[k] <= ticks; ++t[k]) rec(k + 1);
    };
    rec(0);
    return best;
  };

  {
    ExtensionProblem p;
    p.dim = 2;
    p.gens = {qv({1, 1})};
    p.values = {ExtNonneg(2)};
    auto lp = extension_step(p, qv({1, 0}));
    auto grid = enumerate(p, qv({1, 0}), 12);
    REQUIRE(grid);
    CHECK(lp == ExtNonneg(*grid));  // the quarter grid holds the optimum here
  }
  {
    ExtensionProblem p;
    p.dim = 2;
    p.gens = {qv({2, 1}), qv({1, 3})};
    p.values = {ExtNonneg(1), ExtNonneg(2)};
    auto lp = extension_step(p, qv({1, 1}));
    auto grid = enumerate(p, qv({1, 1}), 12);
    REQUIRE(grid);
    REQUIRE(!lp.is_inf());
    CHECK(lp.value() <= *grid);  // the grid can only overshoot the infimum
    CHECK(*grid - lp.value() <= Rat(1, 2));
  }
  {
    // the infimum over an empty family is infinite on the grid too
    ExtensionProblem p;
    p.dim = 2;
    p.gens = {qv({1, 0})};
    p.values = {ExtNonneg(1)};
    CHECK(extension_step(p, qv({0, 1})).is_inf());
    CHECK(!enumerate(p, qv({0, 1}), 8).has_value());
  }
}
