#include "hypercone/poset_catalog.hpp"

#include <algorithm>
#include <cassert>

namespace hypercone {
namespace {

// ---------------------------------------------------------------------------
// omega chain: codes (0,n); completed variant adds the cap (1,0).

class OmegaChain : public SymbolicPoset {
 public:
  explicit OmegaChain(bool with_cap) : with_cap_(with_cap) {
    Stratum chain{"chain", false, {}, [](long long k) { return Code{0, k}; }, 64};
    strata_.push_back(chain);
    if (with_cap_) {
      strata_.push_back(Stratum{"cap", true, {Code{1, 0}}, nullptr, 0});
      edges_.push_back(LimitEdge{{0}, 1});
    }
  }
  std::string name() const override { return with_cap_ ? "omega_chain_completed" : "omega_chain"; }
  bool leq(const Code& a, const Code& b) const override {
    if (b[0] == 1) return true;
    if (a[0] == 1) return false;
    return a[1] <= b[1];
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    ChainDecl c;
    c.label = "ascent";
    c.at = [](long long k) { return Code{0, k}; };
    if (with_cap_) {
      c.sup_kind = ChainDecl::kSupIn;
      c.sup = Code{1, 0};
    } else {
      c.sup_kind = ChainDecl::kSupAbsent;
    }
    return {c};
  }
  bool dominates_stratum(const Code& c, int s) const override {
    return s == 0 ? c[0] == 1 : leq(Code{1, 0}, c);
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};  // stabilized
    if (!with_cap_) return {SupAnswer::kNone, {}};              // strictly growing, no top
    return {SupAnswer::kIs, Code{1, 0}};
  }

 private:
  bool with_cap_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// finite chain 0 < 1 < ... < k-1 as a symbolic instance.

class FiniteChainSym : public SymbolicPoset {
 public:
  explicit FiniteChainSym(int k) : k_(k) {
    Stratum s{"chain", true, {}, nullptr, 0};
    for (int i = 0; i < k; ++i) s.all.push_back(Code{0, i});
    strata_.push_back(s);
  }
  std::string name() const override { return "finite_chain_" + std::to_string(k_); }
  bool leq(const Code& a, const Code& b) const override { return a[1] <= b[1]; }
  const std::vector<Stratum>& strata() const override { return strata_; }
  std::vector<ChainDecl> chains(int) const override { return {}; }
  bool dominates_stratum(const Code& c, int) const override { return c[1] == k_ - 1; }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    return {SupAnswer::kIs, at(budget)};
  }

 private:
  int k_;
  std::vector<Stratum> strata_;
};

// ---------------------------------------------------------------------------
// notip: an omega chain (0,n), an antichain (1,n) with chain elements m <= a_n
// iff m <= n, and a cap (2,0) above everything. The antichain has no tip but
// its lower directed-sup closure reaches the cap.

class NoTip : public SymbolicPoset {
 public:
  NoTip() {
    strata_ = {
        Stratum{"chain", false, {}, [](long long k) { return Code{0, k}; }, 48},
        Stratum{"antichain", false, {}, [](long long k) { return Code{1, k}; }, 48},
        Stratum{"cap", true, {Code{2, 0}}, nullptr, 0},
    };
    edges_ = {LimitEdge{{0}, 2}};
  }
  std::string name() const override { return "notip"; }
  bool leq(const Code& a, const Code& b) const override {
    if (b[0] == 2) return true;
    if (a[0] == 2) return false;
    if (a[0] == 0 && b[0] == 0) return a[1] <= b[1];
    if (a[0] == 0 && b[0] == 1) return a[1] <= b[1];
    if (a[0] == 1 && b[0] == 1) return a[1] == b[1];
    return false;  // antichain never below the chain
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    ChainDecl c{"ascent", [](long long k) { return Code{0, k}; }, ChainDecl::kSupIn, Code{2, 0}};
    return {c};
  }
  bool dominates_stratum(const Code& c, int s) const override {
    if (c[0] == 2) return true;
    (void)s;
    return false;  // no other element dominates an infinite stratum
  }
  std::vector<int> down_of_stratum(int s) const override {
    if (s == 1) return {0, 1};
    if (s == 2) return {0, 1, 2};
    return {0};
  }

 private:
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// doppiafreccia: grid (0,n,m) of columns, spine (1,n) of column limits, top
// (2,0). Column n rises to spine point n; the spine rises to the top, so the
// grid needs two sup-adding steps to close.

class Doppiafreccia : public SymbolicPoset {
 public:
  Doppiafreccia() {
    strata_ = {
        Stratum{"grid", false, {}, [](long long k) { return Code{0, k % 8, k / 8}; }, 64},
        Stratum{"spine", false, {}, [](long long k) { return Code{1, k}; }, 48},
        Stratum{"top", true, {Code{2, 0}}, nullptr, 0},
    };
    edges_ = {LimitEdge{{0}, 1}, LimitEdge{{1}, 2}};
  }
  std::string name() const override { return "doppiafreccia"; }
  bool leq(const Code& a, const Code& b) const override {
    if (b[0] == 2) return true;
    if (a[0] == 2) return false;
    if (a[0] == 0 && b[0] == 0) return a[1] == b[1] && a[2] <= b[2];
    if (a[0] == 0 && b[0] == 1) return a[1] <= b[1];
    if (a[0] == 1 && b[0] == 1) return a[1] <= b[1];
    return false;
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int budget) const override {
    std::vector<ChainDecl> out;
    for (long long n = 0; n < std::min(budget, 4); ++n)
      out.push_back(ChainDecl{"column" + std::to_string(n),
                              [n](long long k) { return Code{0, n, k}; },
                              ChainDecl::kSupIn,
                              Code{1, n}});
    out.push_back(ChainDecl{"spine", [](long long k) { return Code{1, k}; }, ChainDecl::kSupIn,
                            Code{2, 0}});
    return out;
  }
  bool dominates_stratum(const Code& c, int) const override { return c[0] == 2; }
  std::vector<int> down_of_stratum(int s) const override {
    if (s == 0) return {0};
    if (s == 1) return {0, 1};
    return {0, 1, 2};
  }

 private:
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// alphafreccia(d): the depth-d tower. Codes (level, i_1..i_{d-level}); level d
// is the global top. Within level j < d only the last index moves, and such a
// chain rises to the level-(j+1) point with the same prefix.

class Alphafreccia : public SymbolicPoset {
 public:
  explicit Alphafreccia(int d) : d_(d) {
    for (int j = 0; j <= d; ++j) {
      if (j == d) {
        strata_.push_back(Stratum{"top", true, {Code{(long long)d}}, nullptr, 0});
      } else {
        int idx = d - j;
        strata_.push_back(Stratum{"level" + std::to_string(j), false, {},
                                  [j, idx](long long k) {
                                    Code c{(long long)j};
                                    for (int t = 0; t < idx; ++t) {
                                      c.push_back(k % 4);
                                      k /= 4;
                                    }
                                    return c;
                                  },
                                  64});
      }
      if (j > 0) edges_.push_back(LimitEdge{{j - 1}, j});
    }
  }
  std::string name() const override { return "alphafreccia_" + std::to_string(d_); }

  bool leq(const Code& a, const Code& b) const override { return leq_rec(a, 1, b, 1, d_); }

  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    std::vector<ChainDecl> out;
    // one representative chain per level, prefix all zeros
    for (int j = 0; j < d_; ++j) {
      int idx = d_ - j;
      Code sup{(long long)(j + 1)};
      for (int t = 0; t < idx - 1; ++t) sup.push_back(0);
      out.push_back(ChainDecl{"level" + std::to_string(j) + "_ray",
                              [j, idx](long long k) {
                                Code c{(long long)j};
                                for (int t = 0; t < idx - 1; ++t) c.push_back(0);
                                c.push_back(k);
                                return c;
                              },
                              ChainDecl::kSupIn, sup});
    }
    return out;
  }
  bool dominates_stratum(const Code& c, int) const override {
    return c[0] == d_;  // only the global top dominates a whole level
  }
  std::vector<int> down_of_stratum(int s) const override {
    std::vector<int> out;
    for (int j = 0; j <= s; ++j) out.push_back(j);
    return out;
  }

 private:
  // a <= b in the nested-tower order; pa/pb point at the first unread index.
  // An element with no unread indices is the top of the current tower; with
  // one unread index nb it is (nb, inner top), below which sits everything
  // with first index <= nb.
  bool leq_rec(const Code& a, size_t pa, const Code& b, size_t pb, int) const {
    size_t ra = a.size() - pa, rb = b.size() - pb;
    if (rb == 0) return true;
    if (ra == 0) return false;
    long long na = a[pa], nb = b[pb];
    if (rb == 1) return na <= nb;
    if (na != nb) return false;
    return leq_rec(a, pa + 1, b, pb + 1, 0);
  }

  int d_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// example6: codes (0,n,m,l) with l >= 0, caps (1,n,m) standing for l = inf.
// Rules: same (n,m) chains in l; (n,m,l) <= cap(n',m') iff n=n', m<=m' or
// n<n', m<=m' and l<=m'. Completed variant adds s_n = (2,n) and s_inf = (3,0).

class Example6 : public SymbolicPoset {
 public:
  explicit Example6(bool completed) : completed_(completed) {
    strata_ = {
        Stratum{"interior", false, {},
                [](long long k) { return Code{0, k % 4, (k / 4) % 4, k / 16}; }, 64},
        Stratum{"caps", false, {}, [](long long k) { return Code{1, k % 6, k / 6}; }, 36},
    };
    edges_ = {LimitEdge{{0}, 1}};
    if (completed) {
      strata_.push_back(Stratum{"limits", false, {}, [](long long k) { return Code{2, k}; }, 6});
      strata_.push_back(Stratum{"joint", true, {Code{3, 0}}, nullptr, 0});
      edges_.push_back(LimitEdge{{1}, 2});
      edges_.push_back(LimitEdge{{2}, 3});
    }
  }
  std::string name() const override { return completed_ ? "example6_completed" : "example6"; }

  bool leq(const Code& a, const Code& b) const override {
    if (completed_) {
      if (b[0] == 3) return true;
      if (a[0] == 3) return false;
      if (b[0] == 2) return a[0] == 2 ? a[1] <= b[1] : a[1] <= b[1];  // column index bound
      if (a[0] == 2) return false;
    }
    bool bcap = b[0] == 1;
    long long bn = b[1], bm = b[2];
    if (a[0] == 1) {
      // caps compare only inside a column, by the m index
      return bcap && a[1] == bn && a[2] <= bm;
    }
    long long n = a[1], m = a[2], l = a[3];
    if (!bcap) return n == bn && m == bm && l <= b[3];
    if (n == bn) return m <= bm;
    return n < bn && m <= bm && l <= bm;
  }

  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int budget) const override {
    std::vector<ChainDecl> out;
    for (long long n = 0; n < std::min(budget, 18); ++n) {
      for (long long m = 0; m < 2; ++m)
        out.push_back(ChainDecl{"l_chain_" + std::to_string(n) + "_" + std::to_string(m),
                                [n, m](long long k) { return Code{0, n, m, k}; },
                                ChainDecl::kSupIn, Code{1, n, m}});
      ChainDecl caps{"cap_chain_" + std::to_string(n),
                     [n](long long k) { return Code{1, n, k}; },
                     completed_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent, Code{2, n}};
      out.push_back(caps);
    }
    if (completed_)
      out.push_back(ChainDecl{"limit_chain", [](long long k) { return Code{2, k}; },
                              ChainDecl::kSupIn, Code{3, 0}});
    return out;
  }
  bool dominates_stratum(const Code& c, int s) const override {
    if (completed_ && c[0] == 3) return true;
    (void)s;
    return false;
  }
  std::vector<int> down_of_stratum(int s) const override {
    switch (s) {
      case 0: return {0};
      case 1: return {0, 1};
      case 2: return {0, 1, 2};
      default: {
        std::vector<int> all;
        for (int i = 0; i < (int)strata_.size(); ++i) all.push_back(i);
        return all;
      }
    }
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    Code a = at(1);
    if (chain_shape(at, budget, 0, 1, 2, 3))
      return {SupAnswer::kIs, Code{1, a[1], a[2]}};  // caps exist in X
    if (chain_shape(at, budget, 1, 1, -1, 2)) {
      if (!completed_) return {SupAnswer::kNone, {}};
      return {SupAnswer::kIs, Code{2, a[1]}};
    }
    if (completed_ && chain_shape(at, budget, 2, -1, -1, 1)) return {SupAnswer::kIs, Code{3, 0}};
    return {};
  }

  bool hat_contains_chain(const Code& a, const std::function<Code(long long)>& b,
                          int budget) const override {
    // the closure of a column's cap chain collects every element with a
    // smaller or equal column index, one sup-adding step included
    if (chain_shape(b, budget, 1, 1, -1, 2) && (a[0] == 0 || a[0] == 1))
      return a[1] <= b(1)[1];
    return SymbolicPoset::hat_contains_chain(a, b, budget);
  }

 private:
  // a chain with the given tag, fixed indices, and one strictly growing slot
  static bool chain_shape(const std::function<Code(long long)>& at, int budget, int tag,
                          int fixed_a, int fixed_b, int growing) {
    for (int k = 1; k + 1 <= std::min(budget, 6); ++k) {
      Code x = at(k), y = at(k + 1);
      if (x[0] != tag || y[0] != tag) return false;
      if (fixed_a >= 0 && x[fixed_a] != y[fixed_a]) return false;
      if (fixed_b >= 0 && x[fixed_b] != y[fixed_b]) return false;
      if (!(x[growing] < y[growing])) return false;
    }
    return true;
  }

  bool completed_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// two_caps: the chain (0,n) with two incomparable upper elements. The chain
// has upper bounds but no supremum, which is exactly what the negative
// completion-claim fixture needs.

class TwoCaps : public SymbolicPoset {
 public:
  TwoCaps() {
    strata_ = {
        Stratum{"chain", false, {}, [](long long k) { return Code{0, k}; }, 48},
        Stratum{"caps", true, {Code{1, 0}, Code{1, 1}}, nullptr, 0},
    };
  }
  std::string name() const override { return "two_caps"; }
  bool leq(const Code& a, const Code& b) const override {
    if (a[0] == 0 && b[0] == 0) return a[1] <= b[1];
    if (a[0] == 0 && b[0] == 1) return true;
    if (a[0] == 1 && b[0] == 1) return a[1] == b[1];
    return false;
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  std::vector<ChainDecl> chains(int) const override {
    return {ChainDecl{"ascent", [](long long k) { return Code{0, k}; }, ChainDecl::kSupNone, {}}};
  }
  bool dominates_stratum(const Code& c, int s) const override {
    if (s == 0) return c[0] == 1;
    return false;
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    // cofinal in the chain: both caps are minimal upper bounds, no least one
    return {SupAnswer::kNone, {}};
  }

 private:
  std::vector<Stratum> strata_;
};

// ---------------------------------------------------------------------------
// glued_chains: bottom (0,0), left chain (1,n), right chain (2,n), top (3,0).

class GluedChains : public SymbolicPoset {
 public:
  GluedChains() {
    strata_ = {
        Stratum{"bottom", true, {Code{0, 0}}, nullptr, 0},
        Stratum{"left", false, {}, [](long long k) { return Code{1, k}; }, 48},
        Stratum{"right", false, {}, [](long long k) { return Code{2, k}; }, 48},
        Stratum{"top", true, {Code{3, 0}}, nullptr, 0},
    };
    edges_ = {LimitEdge{{1}, 3}, LimitEdge{{2}, 3}};
  }
  std::string name() const override { return "glued_chains"; }
  bool leq(const Code& a, const Code& b) const override {
    if (a[0] == 0 || b[0] == 3) return true;
    if (b[0] == 0 || a[0] == 3) return a == b;
    return a[0] == b[0] && a[1] <= b[1];
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    return {
        ChainDecl{"left", [](long long k) { return Code{1, k}; }, ChainDecl::kSupIn, Code{3, 0}},
        ChainDecl{"right", [](long long k) { return Code{2, k}; }, ChainDecl::kSupIn, Code{3, 0}},
    };
  }
  bool dominates_stratum(const Code& c, int) const override { return c[0] == 3; }
  std::vector<int> down_of_stratum(int s) const override {
    if (s == 0) return {0};
    if (s == 3) return {0, 1, 2, 3};
    return {0, s};
  }
  std::optional<Code> meet_of(const Code& a, const Code& b) const override {
    if (leq(a, b)) return a;
    if (leq(b, a)) return b;
    return Code{0, 0};  // distinct sides meet at the bottom
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    return {SupAnswer::kIs, Code{3, 0}};
  }

 private:
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// four_branches: branches 1..4, codes (0,i,n). Cross moves are strictly
// increasing in position and allowed only into branch 4 or out of branch 1,
// so there is no minimum, no maximum, and binary joins exist. Completed
// variant adds w_i = (1,i) (and an optional bottom (2,0)): below w_i lie
// exactly the branches {1,i} (all four for w_4).

class FourBranches : public SymbolicPoset {
 public:
  FourBranches(bool completed, bool bottom) : completed_(completed), bottom_(bottom) {
    for (long long i = 1; i <= 4; ++i)
      strata_.push_back(Stratum{"branch" + std::to_string(i), false, {},
                                [i](long long k) { return Code{0, i, k}; }, 32});
    if (completed_) {
      for (long long i = 1; i <= 4; ++i) {
        strata_.push_back(Stratum{"w" + std::to_string(i), true, {Code{1, i}}, nullptr, 0});
        edges_.push_back(LimitEdge{{(int)i - 1}, (int)(3 + i)});
      }
      if (bottom_) strata_.push_back(Stratum{"bot", true, {Code{2, 0}}, nullptr, 0});
    }
  }
  std::string name() const override {
    return completed_ ? "four_branches_completed" : "four_branches";
  }

  static bool base_leq(long long i, long long n, long long j, long long m) {
    if (i == j) return n <= m;
    return n < m && (j == 4 || i == 1);
  }
  static bool branch_below_w(long long b, long long i) {
    return i == 4 || b == i || b == 1;
  }

  bool leq(const Code& a, const Code& b) const override {
    if (completed_) {
      if (a[0] == 2) return true;
      if (b[0] == 2) return a[0] == 2;
      if (b[0] == 1) {
        if (a[0] == 1) return branches_below(a[1], b[1]);
        return branch_below_w(a[1], b[1]);
      }
      if (a[0] == 1) return false;
    }
    return base_leq(a[1], a[2], b[1], b[2]);
  }

  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    std::vector<ChainDecl> out;
    for (long long i = 1; i <= 4; ++i) {
      ChainDecl c{"branch" + std::to_string(i),
                  [i](long long k) { return Code{0, i, k}; },
                  completed_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent,
                  Code{1, i}};
      out.push_back(c);
    }
    return out;
  }
  bool dominates_stratum(const Code& c, int s) const override {
    if (completed_ && bottom_ && s == (int)strata_.size() - 1) return true;  // everything >= bot
    if (!completed_ || c[0] != 1) return false;
    if (s < 4) return branch_below_w(s + 1, c[1]);
    if (s < 8) return branches_below(s - 3, c[1]);
    return false;
  }
  std::vector<int> down_of_stratum(int s) const override {
    std::vector<int> out;
    if (s < 4) {
      long long i = s + 1;
      out.push_back(s);
      if (i != 1) out.push_back(0);
      if (i == 4) out = {0, 1, 2, 3};
    } else if (s < 8) {
      long long i = s - 3;
      for (long long b = 1; b <= 4; ++b)
        if (branch_below_w(b, i)) out.push_back((int)b - 1);
      for (long long j = 1; j <= 4; ++j)
        if (branches_below(j, i)) out.push_back(3 + (int)j);
    } else {
      out.push_back(s);
    }
    if (completed_ && bottom_) out.push_back((int)strata_.size() - 1);
    return out;
  }
  // Is the set of branches below w_i contained in the set below w_j?
  static bool branches_below(long long i, long long j) {
    if (j == 4) return true;
    if (i == j || i == 1) return true;
    return false;
  }
  // Exact: no element of the poset dominates a whole branch.
  static bool branch_has_upper_bound_in_base() { return false; }

  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    // cofinal inside one branch: the added point of that branch, or nothing
    long long branch = at(1)[0] == 0 ? at(1)[1] : -1;
    for (int k = 1; k <= std::min(budget, 6); ++k) {
      Code x = at(k);
      if (x[0] != 0 || x[1] != branch) return {};
      if (!(at(k + 1)[2] > x[2])) return {};
    }
    if (branch < 1) return {};
    if (!completed_) return {SupAnswer::kNone, {}};
    return {SupAnswer::kIs, Code{1, branch}};
  }

 private:
  bool completed_, bottom_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// finite subsets of N and the window of finite-plus-tail subsets.
// Codes: (0, a_1..a_k) sorted finite set; (1, t, a_1..a_k) = {a_i} u [t, inf)
// with a_i < t.

bool subset_member(const Code& c, long long x) {
  if (c[0] == 0) {
    for (size_t i = 1; i < c.size(); ++i)
      if (c[i] == x) return true;
    return false;
  }
  if (x >= c[1]) return true;
  for (size_t i = 2; i < c.size(); ++i)
    if (c[i] == x) return true;
  return false;
}

bool subset_leq(const Code& a, const Code& b) {
  if (a[0] == 0) {
    for (size_t i = 1; i < a.size(); ++i)
      if (!subset_member(b, a[i])) return false;
    return true;
  }
  if (b[0] == 0) return false;  // infinite never inside finite
  if (a[1] < b[1]) {
    for (long long x = a[1]; x < b[1]; ++x)
      if (!subset_member(b, x)) return false;
  }
  for (size_t i = 2; i < a.size(); ++i)
    if (!subset_member(b, a[i])) return false;
  return true;
}

Code finite_subset_of_mask(long long mask) {
  Code c{0};
  for (long long bit = 0; mask; ++bit, mask >>= 1)
    if (mask & 1) c.push_back(bit);
  return c;
}

class FiniteSubsets : public SymbolicPoset {
 public:
  explicit FiniteSubsets(bool window) : window_(window) {
    strata_.push_back(Stratum{"finite", false, {},
                              [](long long k) { return finite_subset_of_mask(k); }, 64});
    if (window_) {
      strata_.push_back(Stratum{"tails", false, {},
                                [](long long k) {
                                  Code c{1, k % 6};
                                  // a few representatives with holes below the tail
                                  if (k % 2 == 1 && c[1] >= 2) c.push_back(0);
                                  return c;
                                },
                                12});
      edges_.push_back(LimitEdge{{0}, 1});  // prefix chains fill the tail sets
    }
  }
  std::string name() const override { return window_ ? "subset_window" : "finite_subsets"; }
  bool leq(const Code& a, const Code& b) const override { return subset_leq(a, b); }
  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    std::vector<ChainDecl> out;
    auto kind = window_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent;
    for (long long t = 0; t < 6; ++t) {
      ChainDecl ch{"prefixes_from_" + std::to_string(t),
                   [t](long long k) {
                     Code c{0};
                     for (long long x = t; x <= t + k; ++x) c.push_back(x);
                     return c;
                   },
                   kind, Code{1, t}};
      out.push_back(ch);
      if (t >= 2) {
        Code sup{1, t, 0};
        ChainDecl holed{"prefixes_from_" + std::to_string(t) + "_with_0",
                        [t](long long k) {
                          Code c{0, 0};
                          for (long long x = t; x <= t + k; ++x) c.push_back(x);
                          return c;
                        },
                        kind, sup};
        out.push_back(holed);
      }
    }
    return out;
  }
  bool dominates_stratum(const Code& c, int s) const override {
    bool is_full_tail = window_ && c[0] == 1 && c[1] == 0 && c.size() == 2;  // [0,inf)
    (void)s;
    return is_full_tail;
  }
  std::vector<int> down_of_stratum(int s) const override {
    return s == 0 ? std::vector<int>{0} : std::vector<int>{0, 1};
  }
  std::optional<Code> meet_of(const Code& a, const Code& b) const override {
    // intersection, exact on these code forms
    if (a[0] == 0 || b[0] == 0) {
      const Code& fin = a[0] == 0 ? a : b;
      const Code& oth = a[0] == 0 ? b : a;
      Code c{0};
      for (size_t i = 1; i < fin.size(); ++i)
        if (subset_member(oth, fin[i])) c.push_back(fin[i]);
      return c;
    }
    Code c{1, std::max(a[1], b[1])};
    for (long long x = 0; x < c[1]; ++x)
      if (subset_member(a, x) && subset_member(b, x)) c.push_back(x);
    // normalize: entries below the tail, sorted
    std::sort(c.begin() + 2, c.end());
    return c;
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    if (!window_) return {SupAnswer::kNone, {}};
    // prefix-style growth: each step extends the set by its next integer, so
    // the union is a fixed finite part plus a tail
    long long run_start = -1;
    Code base{0};
    for (int k = 2; k + 1 <= std::min(budget, 8); ++k) {
      Code x = at(k), y = at(k + 1);
      if (x[0] != 0 || y[0] != 0 || y.size() != x.size() + 1) return {};
      long long mx = *std::max_element(x.begin() + 1, x.end());
      if (std::find(y.begin() + 1, y.end(), mx + 1) == y.end()) return {};
      for (size_t i = 1; i < x.size(); ++i)
        if (std::find(y.begin() + 1, y.end(), x[i]) == y.end()) return {};
    }
    // the run is the maximal contiguous top segment of a late element
    Code probe = at(std::min(budget, 8));
    std::vector<long long> elems(probe.begin() + 1, probe.end());
    std::sort(elems.begin(), elems.end());
    run_start = elems.back();
    for (size_t i = elems.size(); i-- > 1;) {
      if (elems[i - 1] + 1 != elems[i]) break;
      run_start = elems[i - 1];
    }
    Code sup{1, run_start};
    for (long long e : elems)
      if (e < run_start) sup.push_back(e);
    return {SupAnswer::kIs, sup};
  }

 private:
  bool window_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// sequence windows: finitely supported sequences with values in N (source)
// and sequences with a constant tail and values in N u {inf} (target).
// Codes: (0, k, i_1, v_1, ..., i_k, v_k) finite support, v >= 1;
//        (1, tail, k, i_1, v_1, ...) tail in {0..} or -1 for inf, overriding
//        entries listed explicitly (v = -1 for inf).

long long seq_value(const Code& c, long long idx) {
  size_t base = c[0] == 0 ? 2 : 3;
  long long k = c[0] == 0 ? c[1] : c[2];
  for (long long e = 0; e < k; ++e)
    if (c[base + 2 * e] == idx) return c[base + 2 * e + 1];
  return c[0] == 0 ? 0 : c[1];
}

bool seq_value_leq(long long a, long long b) {
  if (b == -1) return true;
  if (a == -1) return false;
  return a <= b;
}

class SeqWindow : public SymbolicPoset {
 public:
  explicit SeqWindow(bool full) : full_(full) {
    if (!full_) {
      strata_.push_back(Stratum{"finsupp", false, {},
                                [](long long k) {
                                  Code c{0, 2, 0, k % 4, 1, (k / 4) % 4};
                                  return c;
                                },
                                32});
    } else {
      strata_.push_back(Stratum{"finsupp", false, {},
                                [](long long k) {
                                  Code c{1, 0, 2, 0, k % 4, 1, (k / 4) % 4};
                                  return c;
                                },
                                32});
      strata_.push_back(Stratum{"extended", false, {},
                                [](long long k) {
                                  switch (k % 4) {
                                    case 0: return Code{1, 1, 0};        // all-ones
                                    case 1: return Code{1, 2, 0};        // all-twos
                                    case 2: return Code{1, 0, 1, 0, -1}; // one infinite spot
                                    default: return Code{1, -1, 0};      // everything infinite
                                  }
                                },
                                8});
      edges_.push_back(LimitEdge{{0}, 1});
    }
  }
  std::string name() const override { return full_ ? "seq_window_full" : "seq_window_finite"; }
  bool leq(const Code& a, const Code& b) const override {
    long long hi = 8;  // indices beyond every explicit entry are tail-valued
    for (size_t i = (a[0] == 0 ? 2 : 3); i + 1 < a.size(); i += 2) hi = std::max(hi, a[i] + 1);
    for (size_t i = (b[0] == 0 ? 2 : 3); i + 1 < b.size(); i += 2) hi = std::max(hi, b[i] + 1);
    for (long long idx = 0; idx < hi; ++idx)
      if (!seq_value_leq(seq_value(a, idx), seq_value(b, idx))) return false;
    long long ta = a[0] == 0 ? 0 : a[1], tb = b[0] == 0 ? 0 : b[1];
    return seq_value_leq(ta, tb);
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    std::vector<ChainDecl> out;
    long long tag = full_ ? 1 : 0;
    // ramp at index 0: k * e_0
    ChainDecl ramp{"ramp0",
                   [tag](long long k) {
                     return tag == 0 ? Code{0, 1, 0, k} : Code{1, 0, 1, 0, k};
                   },
                   full_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent, Code{1, 0, 1, 0, -1}};
    out.push_back(ramp);
    // spreading support: constant value c on {0..k}
    for (long long cval : {1, 2}) {
      ChainDecl spread{"spread_" + std::to_string(cval),
                       [tag, cval](long long k) {
                         Code c{tag};
                         if (tag == 1) c.push_back(0);
                         c.push_back(k + 1);
                         for (long long i = 0; i <= k; ++i) {
                           c.push_back(i);
                           c.push_back(cval);
                         }
                         return c;
                       },
                       full_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent, Code{1, cval, 0}};
      out.push_back(spread);
    }
    // the diagonal: value k on {0..k}, rising to the all-infinite sequence
    ChainDecl diag{"diagonal",
                   [tag](long long k) {
                     Code c{tag};
                     if (tag == 1) c.push_back(0);
                     c.push_back(k + 1);
                     for (long long i = 0; i <= k; ++i) {
                       c.push_back(i);
                       c.push_back(k);
                     }
                     return c;
                   },
                   full_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent, Code{1, -1, 0}};
    out.push_back(diag);
    return out;
  }
  bool dominates_stratum(const Code& c, int) const override {
    if (!full_ || c[0] != 1) return false;
    if (c[1] != -1) return false;
    for (size_t i = 3; i + 1 < c.size(); i += 2)
      if (c[i + 1] != -1) return false;
    return true;  // the all-inf sequence
  }
  std::vector<int> down_of_stratum(int s) const override {
    return s == 0 ? std::vector<int>{0} : std::vector<int>{0, 1};
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    Code prev = at(budget - 1);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    if (!full_) return {SupAnswer::kNone, {}};

    auto max_idx = [](const Code& c) {
      long long m = -1;
      for (size_t i = (c[0] == 0 ? 2 : 3); i + 1 < c.size(); i += 2) m = std::max(m, c[i]);
      return m;
    };
    // stabilized limits on a small early window (indices far behind budget)
    const long long window = 10;
    std::vector<long long> limit(window);
    for (long long i = 0; i < window; ++i) {
      long long a = seq_value(prev, i), b = seq_value(last, i);
      if (a == b) limit[i] = a;
      else limit[i] = -1;  // integer values still moving: escape to inf
    }
    long long tail;
    bool all_escaped = true;
    for (long long i = 0; i < window; ++i)
      if (limit[i] != -1) all_escaped = false;
    if (all_escaped) {
      tail = -1;
    } else if (max_idx(last) == max_idx(prev) + 1 && max_idx(prev) > window) {
      // advancing support front: the value just behind the front is the tail
      tail = seq_value(last, max_idx(prev));
      if (seq_value(prev, max_idx(at(budget - 2))) != tail) return {};
    } else {
      tail = limit[window - 1];
    }
    Code sup{1, tail, 0};
    long long entries = 0;
    for (long long i = 0; i < window; ++i)
      if (limit[i] != tail) {
        sup.push_back(i);
        sup.push_back(limit[i]);
        ++entries;
      }
    sup[2] = entries;
    for (int k = 0; k <= std::min(budget, 12); ++k)
      if (!leq(at(k), sup)) return {};
    return {SupAnswer::kIs, sup};
  }

 private:
  bool full_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// disjoint bundles of chains: the attachment-free fragment of the branch
// wire format. Codes (0, branch, pos) with caps (1, branch).

class DisjointChains : public SymbolicPoset {
 public:
  DisjointChains(std::vector<long long> lengths, bool completed)
      : lengths_(std::move(lengths)), completed_(completed) {
    for (size_t b = 0; b < lengths_.size(); ++b) {
      long long len = lengths_[b];
      if (len < 0) {
        strata_.push_back(Stratum{"chain" + std::to_string(b), false, {},
                                  [b](long long k) { return Code{0, (long long)b, k}; }, 24});
      } else {
        Stratum s{"chain" + std::to_string(b), true, {}, nullptr, 0};
        for (long long i = 0; i < len; ++i) s.all.push_back(Code{0, (long long)b, i});
        strata_.push_back(s);
      }
    }
    if (completed_)
      for (size_t b = 0; b < lengths_.size(); ++b)
        if (lengths_[b] < 0) {
          strata_.push_back(Stratum{"cap" + std::to_string(b), true,
                                    {Code{1, (long long)b}}, nullptr, 0});
          edges_.push_back(LimitEdge{{(int)b}, (int)strata_.size() - 1});
        }
  }
  std::string name() const override {
    return completed_ ? "chain_bundle_completed" : "chain_bundle";
  }
  bool leq(const Code& a, const Code& b) const override {
    if (a[0] == 1) return b[0] == 1 && a[1] == b[1];
    if (b[0] == 1) return a[1] == b[1];
    return a[1] == b[1] && a[2] <= b[2];
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    std::vector<ChainDecl> out;
    for (size_t b = 0; b < lengths_.size(); ++b) {
      if (lengths_[b] >= 0) continue;  // finite chains top out inside
      ChainDecl c;
      c.label = "ascent" + std::to_string(b);
      c.at = [b](long long k) { return Code{0, (long long)b, k}; };
      c.sup_kind = completed_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent;
      c.sup = Code{1, (long long)b};
      out.push_back(c);
    }
    return out;
  }
  bool dominates_stratum(const Code& c, int s) const override {
    const Stratum& st = strata_[s];
    if (st.finite && st.all.size() == 1 && st.all[0] == c) return true;
    if (st.finite && !st.all.empty() && st.all[0][0] == 0) {
      const Code& top = st.all.back();
      return leq(top, c);
    }
    // infinite chains are dominated only by their own cap
    if (!st.finite) return completed_ && c[0] == 1 && strata_[s].name == "chain" + std::to_string(c[1]);
    return false;
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    if (last[0] != 0) return {};
    if (!completed_) return {SupAnswer::kNone, {}};
    return {SupAnswer::kIs, Code{1, last[1]}};
  }
  const std::vector<long long>& lengths() const { return lengths_; }

 private:
  std::vector<long long> lengths_;
  bool completed_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// finite poset adapter

class FiniteSym : public SymbolicPoset {
 public:
  explicit FiniteSym(FinitePoset p) : p_(std::move(p)) {
    Stratum s{"all", true, {}, nullptr, 0};
    for (int i = 0; i < p_.size(); ++i) s.all.push_back(Code{(long long)i});
    strata_.push_back(s);
  }
  std::string name() const override { return "finite_poset"; }
  bool leq(const Code& a, const Code& b) const override { return p_.leq((int)a[0], (int)b[0]); }
  const std::vector<Stratum>& strata() const override { return strata_; }
  std::vector<ChainDecl> chains(int) const override { return {}; }
  bool dominates_stratum(const Code& c, int) const override {
    for (int i = 0; i < p_.size(); ++i)
      if (!p_.leq(i, (int)c[0])) return false;
    return true;
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    return {SupAnswer::kIs, at(budget)};
  }

 private:
  FinitePoset p_;
  std::vector<Stratum> strata_;
};

// ---------------------------------------------------------------------------
// products

class ProductPoset : public SymbolicPoset {
 public:
  ProductPoset(PosetPtr a, PosetPtr b) : a_(std::move(a)), b_(std::move(b)) {
    for (size_t i = 0; i < a_->strata().size(); ++i)
      for (size_t j = 0; j < b_->strata().size(); ++j) {
        const Stratum &sa = a_->strata()[i], &sb = b_->strata()[j];
        Stratum s;
        s.name = sa.name + "*" + sb.name;
        s.finite = sa.finite && sb.finite;
        if (s.finite) {
          for (const Code& ca : sa.all)
            for (const Code& cb : sb.all) s.all.push_back(pack(ca, cb));
        } else {
          auto pick = [](const Stratum& st, long long k) {
            return st.finite ? st.all[(size_t)(k % st.all.size())] : st.sample(k);
          };
          s.sample = [&sa, &sb, pick, this](long long k) {
            return pack(pick(sa, k % 6), pick(sb, k / 6));
          };
          s.sample_count = 36;
        }
        strata_.push_back(std::move(s));
      }
  }
  std::string name() const override { return a_->name() + "_x_" + b_->name(); }
  static Code pack(const Code& ca, const Code& cb) {
    Code c{(long long)ca.size()};
    c.insert(c.end(), ca.begin(), ca.end());
    c.insert(c.end(), cb.begin(), cb.end());
    return c;
  }
  static std::pair<Code, Code> unpack(const Code& c) {
    size_t la = (size_t)c[0];
    return {Code(c.begin() + 1, c.begin() + 1 + la), Code(c.begin() + 1 + la, c.end())};
  }
  bool leq(const Code& x, const Code& y) const override {
    auto [xa, xb] = unpack(x);
    auto [ya, yb] = unpack(y);
    return a_->leq(xa, ya) && b_->leq(xb, yb);
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  std::vector<ChainDecl> chains(int budget) const override {
    // diagonals of factor chains, plus factor chains pinned against sampled
    // constants on the other side; sups componentwise
    std::vector<ChainDecl> out;
    auto ca = a_->chains(budget), cb = b_->chains(budget);
    auto combine = [](const ChainDecl& f, const ChainDecl& g) {
      ChainDecl d;
      d.label = f.label + "*" + g.label;
      auto fat = f.at, gat = g.at;
      d.at = [fat, gat](long long k) { return pack(fat(k), gat(k)); };
      if (f.sup_kind == ChainDecl::kSupIn && g.sup_kind == ChainDecl::kSupIn) {
        d.sup_kind = ChainDecl::kSupIn;
        d.sup = pack(f.sup, g.sup);
      } else if (f.sup_kind == ChainDecl::kSupUnknown || g.sup_kind == ChainDecl::kSupUnknown) {
        d.sup_kind = ChainDecl::kSupUnknown;
      } else if (f.sup_kind == ChainDecl::kSupNone || g.sup_kind == ChainDecl::kSupNone) {
        d.sup_kind = ChainDecl::kSupNone;
      } else {
        d.sup_kind = ChainDecl::kSupAbsent;
      }
      return d;
    };
    auto constant = [](const Code& c) {
      ChainDecl d;
      d.label = "const" + code_str(c);
      d.at = [c](long long) { return c; };
      d.sup_kind = ChainDecl::kSupIn;
      d.sup = c;
      return d;
    };
    for (const auto& f : ca)
      for (const auto& g : cb) out.push_back(combine(f, g));
    for (const auto& f : ca)
      for (const Code& c : b_->sample_elements(std::min(budget, 6)))
        out.push_back(combine(f, constant(c)));
    for (const auto& g : cb)
      for (const Code& c : a_->sample_elements(std::min(budget, 6)))
        out.push_back(combine(constant(c), g));
    return out;
  }
  bool dominates_stratum(const Code& c, int s) const override {
    auto [ca, cb] = unpack(c);
    int nb = (int)b_->strata().size();
    return a_->dominates_stratum(ca, s / nb) && b_->dominates_stratum(cb, s % nb);
  }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    auto fa = [&at](long long k) { return unpack(at(k)).first; };
    auto fb = [&at](long long k) { return unpack(at(k)).second; };
    SupAnswer sa = a_->sup_of_chain(fa, budget), sb = b_->sup_of_chain(fb, budget);
    if (sa.kind == SupAnswer::kIs && sb.kind == SupAnswer::kIs)
      return {SupAnswer::kIs, pack(sa.sup, sb.sup)};
    if (sa.kind == SupAnswer::kNone || sb.kind == SupAnswer::kNone) return {SupAnswer::kNone, {}};
    return {};
  }
  PosetPtr left() const { return a_; }
  PosetPtr right() const { return b_; }

 private:
  PosetPtr a_, b_;
  std::vector<Stratum> strata_;
};

}  // namespace

PosetPtr omega_chain() { return std::make_shared<OmegaChain>(false); }
PosetPtr omega_chain_completed() { return std::make_shared<OmegaChain>(true); }
PosetPtr finite_chain_sym(int k) { return std::make_shared<FiniteChainSym>(k); }
PosetPtr notip_poset() { return std::make_shared<NoTip>(); }
PosetPtr doppiafreccia() { return std::make_shared<Doppiafreccia>(); }
PosetPtr alphafreccia(int depth) {
  if (depth < 1 || depth > 3) throw UnsupportedPresentation("alphafreccia depth must be 1..3");
  return std::make_shared<Alphafreccia>(depth);
}
PosetPtr example6_poset() { return std::make_shared<Example6>(false); }
PosetPtr example6_completed() { return std::make_shared<Example6>(true); }
PosetPtr two_caps() { return std::make_shared<TwoCaps>(); }
PosetPtr glued_chains() { return std::make_shared<GluedChains>(); }
PosetPtr four_branches() { return std::make_shared<FourBranches>(false, false); }
PosetPtr four_branches_completed(bool enhanced_bottom) {
  return std::make_shared<FourBranches>(true, enhanced_bottom);
}
PosetPtr finite_subsets() { return std::make_shared<FiniteSubsets>(false); }
PosetPtr subset_window() { return std::make_shared<FiniteSubsets>(true); }
PosetPtr seq_window_finite() { return std::make_shared<SeqWindow>(false); }
PosetPtr seq_window_full() { return std::make_shared<SeqWindow>(true); }
PosetPtr chain_bundle(const std::vector<long long>& lengths) {
  return std::make_shared<DisjointChains>(lengths, false);
}
PosetPtr wrap_finite(const FinitePoset& p) { return std::make_shared<FiniteSym>(p); }
PosetPtr product_poset(PosetPtr a, PosetPtr b) {
  return std::make_shared<ProductPoset>(std::move(a), std::move(b));
}

CompletionPair directed_completion_branch(const PosetPtr& p, bool enhanced_bottom) {
  const std::string n = p->name();
  auto ident = [](const Code& c) { return c; };
  // Reject presentations whose chain table leaves a sup undecided.
  for (const auto& c : p->chains(8))
    if (c.sup_kind == ChainDecl::kSupUnknown)
      throw UnsupportedPresentation("chain '" + c.label + "' has undecided sup status");

  if (n == "omega_chain") return {omega_chain_completed(), ident};
  if (n == "example6") return {example6_completed(), ident};
  if (n == "four_branches") return {four_branches_completed(enhanced_bottom), ident};
  if (n == "minkowski_window") return {minkowski_completed(), ident};
  if (auto bundle = std::dynamic_pointer_cast<const DisjointChains>(p))
    return {std::make_shared<DisjointChains>(bundle->lengths(), true), ident};
  if (n == "finite_subsets") return {subset_window(), ident};
  if (n == "seq_window_finite")
    return {seq_window_full(), [](const Code& c) {
              Code out{1, 0};
              out.insert(out.end(), c.begin() + 1, c.end());
              return out;
            }};
  if (auto prod = std::dynamic_pointer_cast<const ProductPoset>(p)) {
    auto ca = directed_completion_branch(prod->left(), enhanced_bottom);
    auto cb = directed_completion_branch(prod->right(), enhanced_bottom);
    auto ea = ca.embed, eb = cb.embed;
    return {product_poset(ca.bar, cb.bar), [ea, eb](const Code& c) {
              auto [x, y] = ProductPoset::unpack(c);
              return ProductPoset::pack(ea(x), eb(y));
            }};
  }
  // Instances whose declared chains all have sups are already complete.
  bool incomplete = false;
  for (const auto& c : p->chains(8))
    if (c.sup_kind != ChainDecl::kSupIn) incomplete = true;
  if (!incomplete) return {p, ident};
  throw UnsupportedPresentation("no completion rule for presentation '" + n + "'");
}

}  // namespace hypercone
