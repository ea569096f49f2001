#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercone {

// Subsets of a finite poset, kept as plain bit vectors (n stays small here).
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n) : bits_(n, false) {}
  static Subset of(int n, std::initializer_list<int> elems) {
    Subset s(n);
    for (int e : elems) s.add(e);
    return s;
  }

  int size() const { return static_cast<int>(bits_.size()); }
  bool contains(int i) const { return bits_[i]; }
  void add(int i) { bits_[i] = true; }
  void remove(int i) { bits_[i] = false; }
  bool empty() const { return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }
  int count() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (bits_[i]) out.push_back(i);
    return out;
  }

  friend bool operator==(const Subset& a, const Subset& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const Subset& a, const Subset& b) { return a.bits_ < b.bits_; }

  Subset operator&(const Subset& o) const {
    Subset r(size());
    for (int i = 0; i < size(); ++i) r.bits_[i] = bits_[i] && o.bits_[i];
    return r;
  }
  Subset operator|(const Subset& o) const {
    Subset r(size());
    for (int i = 0; i < size(); ++i) r.bits_[i] = bits_[i] || o.bits_[i];
    return r;
  }
  bool subset_of(const Subset& o) const {
    for (int i = 0; i < size(); ++i)
      if (bits_[i] && !o.bits_[i]) return false;
    return true;
  }

 private:
  std::vector<bool> bits_;
};

// Explicit finite partial order. The relation is validated on construction.
class FinitePoset {
 public:
  FinitePoset(int n, std::vector<std::pair<int, int>> pairs, bool take_transitive_closure = false)
      : n_(n), leq_(static_cast<size_t>(n) * n, false) {
    for (int i = 0; i < n; ++i) set(i, i);
    for (auto& [a, b] : pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n) throw std::out_of_range("relation index");
      set(a, b);
    }
    if (take_transitive_closure) {
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          if (leq(i, k))
            for (int j = 0; j < n; ++j)
              if (leq(k, j)) set(i, j);
    }
    validate();
  }

  static FinitePoset chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
    return FinitePoset(n, std::move(pairs), true);
  }
  static FinitePoset antichain(int n) { return FinitePoset(n, {}); }

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b]; }

  Subset down(const Subset& a) const {
    Subset r(n_);
    for (int x = 0; x < n_; ++x)
      for (int y : a.elements())
        if (leq(x, y)) { r.add(x); break; }
    return r;
  }
  Subset up(const Subset& a) const {
    Subset r(n_);
    for (int x = 0; x < n_; ++x)
      for (int y : a.elements())
        if (leq(y, x)) { r.add(x); break; }
    return r;
  }
  Subset down(int x) const { return down(Subset::of(n_, {x})); }
  Subset up(int x) const { return up(Subset::of(n_, {x})); }

  // Upper / lower bound sets of A (the DM operators u and l).
  Subset ub(const Subset& a) const {
    Subset r(n_);
    for (int x = 0; x < n_; ++x) {
      bool all = true;
      for (int y : a.elements())
        if (!leq(y, x)) { all = false; break; }
      if (all) r.add(x);
    }
    return r;
  }
  Subset lb(const Subset& a) const {
    Subset r(n_);
    for (int x = 0; x < n_; ++x) {
      bool all = true;
      for (int y : a.elements())
        if (!leq(x, y)) { all = false; break; }
      if (all) r.add(x);
    }
    return r;
  }

  std::optional<int> maximum(const Subset& a) const {
    for (int m : a.elements()) {
      bool top = true;
      for (int x : a.elements())
        if (!leq(x, m)) { top = false; break; }
      if (top) return m;
    }
    return std::nullopt;
  }
  std::optional<int> minimum(const Subset& a) const {
    for (int m : a.elements()) {
      bool bot = true;
      for (int x : a.elements())
        if (!leq(m, x)) { bot = false; break; }
      if (bot) return m;
    }
    return std::nullopt;
  }
  std::optional<int> minimum() const {
    Subset all(n_);
    for (int i = 0; i < n_; ++i) all.add(i);
    return minimum(all);
  }
  std::optional<int> maximum() const {
    Subset all(n_);
    for (int i = 0; i < n_; ++i) all.add(i);
    return maximum(all);
  }

  std::optional<int> supremum(const Subset& a) const {
    return minimum(a.empty() ? everything() : ub(a));
  }
  std::optional<int> infimum(const Subset& a) const {
    return maximum(a.empty() ? everything() : lb(a));
  }
  std::optional<int> join(int a, int b) const { return supremum(Subset::of(n_, {a, b})); }
  std::optional<int> meet(int a, int b) const { return infimum(Subset::of(n_, {a, b})); }

  bool has_binary_joins() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (!join(a, b)) return false;
    return true;
  }
  bool has_binary_meets() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (!meet(a, b)) return false;
    return true;
  }
  bool is_lattice() const { return has_binary_joins() && has_binary_meets(); }

  // Nonempty plus every pair has an upper bound inside the set; on finite sets
  // this matches the finite-subset definition by induction.
  bool is_directed(const Subset& a) const {
    if (a.empty()) return false;
    auto elems = a.elements();
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = i; j < elems.size(); ++j) {
        bool ok = false;
        for (int z : elems)
          if (leq(elems[i], z) && leq(elems[j], z)) { ok = true; break; }
        if (!ok) return false;
      }
    return true;
  }

  Subset everything() const {
    Subset s(n_);
    for (int i = 0; i < n_; ++i) s.add(i);
    return s;
  }

 private:
  void set(int a, int b) { leq_[a * n_ + b] = true; }

  void validate() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (a != b && leq(a, b) && leq(b, a))
          throw std::invalid_argument("relation is not antisymmetric");
        for (int c = 0; c < n_; ++c)
          if (leq(a, b) && leq(b, c) && !leq(a, c))
            throw std::invalid_argument("relation is not transitive");
      }
  }

  int n_;
  std::vector<bool> leq_;
};

struct ClosureResult {
  Subset up_closure;   // fixpoint of the sup-adding step
  Subset bar;          // directed-sup closure
  Subset hat;          // lower directed-sup closure
  int bar_steps = 0;   // steps of the sup-adding iteration until fixpoint
  int hat_steps = 0;
};

// On a finite poset every directed subset contains its maximum, so the
// closure operators are trivial: bar A = A and hat A = down A, in zero and
// at most one step. The nontrivial closure dynamics live in the symbolic
// (countable) poset class.
inline ClosureResult closure_suite(const FinitePoset& p, const Subset& a) {
  ClosureResult r;
  r.up_closure = a;
  r.bar = a;
  r.hat = a.empty() ? a : p.down(a);
  r.bar_steps = 0;
  r.hat_steps = (r.hat == a) ? 0 : 1;
  return r;
}

// tip A = max(bar A) when it exists.
inline std::optional<int> tip(const FinitePoset& p, const Subset& a) {
  if (a.empty()) return std::nullopt;
  return p.maximum(closure_suite(p, a).bar);
}

struct DmCompletion {
  std::vector<Subset> cuts;        // each cut stored as its lower half A = A^{ul}
  std::vector<int> embed;          // element -> index of its principal cut
  FinitePoset lattice() const {
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < cuts.size(); ++i)
      for (size_t j = 0; j < cuts.size(); ++j)
        if (i != j && cuts[i].subset_of(cuts[j])) pairs.push_back({(int)i, (int)j});
    return FinitePoset(static_cast<int>(cuts.size()), std::move(pairs));
  }
  int index_of(const Subset& cut) const {
    for (size_t i = 0; i < cuts.size(); ++i)
      if (cuts[i] == cut) return static_cast<int>(i);
    return -1;
  }
};

inline Subset dm_close(const FinitePoset& p, const Subset& a) { return p.lb(p.ub(a)); }

// All cuts A = A^{ul}. Cuts are exactly the intersections of principal
// down-sets together with the whole set, so we close under pairwise
// intersection instead of scanning the power set.
inline DmCompletion dm_completion(const FinitePoset& p) {
  DmCompletion out;
  std::vector<Subset> cuts;
  auto push = [&](const Subset& s) {
    if (std::find(cuts.begin(), cuts.end(), s) == cuts.end()) cuts.push_back(s);
  };
  push(dm_close(p, Subset(p.size())));  // least cut: lb(X) (empty iff no minimum)
  push(p.everything());
  for (int x = 0; x < p.size(); ++x) push(p.down(x));
  for (size_t i = 0; i < cuts.size(); ++i)
    for (size_t j = 0; j < i; ++j) push(cuts[i] & cuts[j]);
  std::sort(cuts.begin(), cuts.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  out.cuts = cuts;
  out.embed.resize(p.size());
  for (int x = 0; x < p.size(); ++x) out.embed[x] = out.index_of(p.down(x));
  return out;
}

// Join and meet of cuts, by the closure formulas.
inline Subset dm_join(const FinitePoset& p, const Subset& a, const Subset& b) {
  return dm_close(p, a | b);
}
inline Subset dm_meet(const FinitePoset&, const Subset& a, const Subset& b) { return a & b; }

}  // namespace hypercone
