#include "hypercone/simplex.hpp"

#include <stdexcept>

namespace hypercone {
namespace {

// Tableau with explicit basis, minimizing. Columns: structural + slack +
// artificial. Entering variable: lowest-index negative reduced cost;
// leaving: lowest-index among the minimal ratios (Bland).
class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), t_(rows + 1, std::vector<Rat>(cols + 1, Rat(0))), basis_(rows, -1) {}

  Rat& at(int r, int c) { return t_[r][c]; }
  Rat& rhs(int r) { return t_[r][n_]; }
  Rat& cost(int c) { return t_[m_][c]; }
  Rat& objective() { return t_[m_][n_]; }
  int& basis(int r) { return basis_[r]; }

  void price_out(int r, int col) {
    // make the basis column canonical in the cost row
    if (t_[m_][col] == 0) return;
    Rat f = t_[m_][col];
    for (int c = 0; c <= n_; ++c) t_[m_][c] -= f * t_[r][c];
  }

  void pivot(int pr, int pc) {
    Rat piv = t_[pr][pc];
    for (int c = 0; c <= n_; ++c) t_[pr][c] /= piv;
    for (int r = 0; r <= m_; ++r) {
      if (r == pr || t_[r][pc] == 0) continue;
      Rat f = t_[r][pc];
      for (int c = 0; c <= n_; ++c) t_[r][c] -= f * t_[pr][c];
    }
    basis_[pr] = pc;
  }

  // returns false when unbounded
  bool run(int usable_cols) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < usable_cols; ++c)
        if (t_[m_][c] < 0) { enter = c; break; }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int r = 0; r < m_; ++r) {
        if (t_[r][enter] <= 0) continue;
        Rat ratio = t_[r][n_] / t_[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  int rows() const { return m_; }
  int cols() const { return n_; }

 private:
  int m_, n_;
  std::vector<std::vector<Rat>> t_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const LpProblem& p) {
  const int m = (int)p.a.size();
  const int n = m ? (int)p.a[0].size() : (int)p.c.size();

  // normalize rows to b >= 0
  std::vector<std::vector<Rat>> a = p.a;
  std::vector<Rat> b = p.b;
  std::vector<int> rel = p.rel;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
      rel[i] = -rel[i];
    }

  int slacks = 0;
  for (int i = 0; i < m; ++i)
    if (rel[i] != 0) ++slacks;
  const int cols = n + slacks + m;  // structural, slack, artificial
  Tableau t(m, cols);

  int sc = n;
  std::vector<int> art(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t.at(i, j) = a[i][j];
    t.rhs(i) = b[i];
    if (rel[i] == -1) {
      t.at(i, sc) = Rat(1);
      t.basis(i) = sc;
      ++sc;
    } else if (rel[i] == 1) {
      t.at(i, sc) = Rat(-1);
      ++sc;
    }
    if (t.basis(i) < 0) {
      int ac = n + slacks + i;
      t.at(i, ac) = Rat(1);
      t.basis(i) = ac;
      art[i] = ac;
    }
  }

  LpResult res;

  // phase 1: minimize the artificials
  bool any_art = false;
  for (int i = 0; i < m; ++i)
    if (art[i] >= 0) {
      any_art = true;
      t.cost(art[i]) = Rat(1);
    }
  if (any_art) {
    for (int i = 0; i < m; ++i)
      if (art[i] >= 0) t.price_out(i, art[i]);
    if (!t.run(cols)) throw std::logic_error("phase-1 objective unbounded");
    if (t.objective() != 0) {
      res.status = LpResult::kInfeasible;
      return res;
    }
    // drive leftover artificials out of the basis
    for (int r = 0; r < m; ++r) {
      if (t.basis(r) < n + slacks) continue;
      int pc = -1;
      for (int c = 0; c < n + slacks; ++c)
        if (t.at(r, c) != 0) { pc = c; break; }
      if (pc >= 0) t.pivot(r, pc);
      // a fully zero row is redundant; its artificial stays at level zero
    }
    // reset the cost row for phase 2
    for (int c = 0; c <= cols; ++c) t.cost(c) = Rat(0);
  }

  for (int j = 0; j < n; ++j) t.cost(j) = p.c[j];
  t.objective() = Rat(0);
  for (int r = 0; r < m; ++r)
    if (t.basis(r) < n + slacks) t.price_out(r, t.basis(r));

  if (!t.run(n + slacks)) {
    res.status = LpResult::kUnbounded;
    return res;
  }

  res.status = LpResult::kOptimal;
  res.x.assign(n, Rat(0));
  for (int r = 0; r < m; ++r)
    if (t.basis(r) < n) res.x[t.basis(r)] = t.rhs(r);
  res.value = Rat(0);
  for (int j = 0; j < n; ++j) res.value += p.c[j] * res.x[j];
  return res;
}

LpResult solve_lp_lex(const LpProblem& p) {
  LpResult base = solve_lp(p);
  if (base.status != LpResult::kOptimal) return base;
  const int n = (int)base.x.size();
  LpProblem q = p;
  // pin the optimal value, then minimize coordinates left to right
  q.a.push_back(p.c);
  q.b.push_back(base.value);
  q.rel.push_back(0);
  for (int j = 0; j < n; ++j) {
    LpProblem step = q;
    step.c.assign(n, Rat(0));
    step.c[j] = Rat(1);
    LpResult r = solve_lp(step);
    if (r.status != LpResult::kOptimal) return base;  // keep the plain optimum
    std::vector<Rat> pin(n, Rat(0));
    pin[j] = Rat(1);
    q.a.push_back(pin);
    q.b.push_back(r.value);
    q.rel.push_back(0);
    base.x = r.x;
  }
  return base;
}

}  // namespace hypercone
