#include "hypercone/mcp.hpp"

#include <algorithm>
#include <array>

namespace hypercone {

std::vector<int> pr_project_finite(const FinitePoset& src, const FinitePoset& lat,
                                   const std::vector<int>& T) {
  std::vector<int> out(src.size());
  for (int x = 0; x < src.size(); ++x) {
    Subset vals(lat.size());
    for (int y = 0; y < src.size(); ++y)
      if (src.leq(x, y)) vals.add(T[y]);
    auto m = lat.infimum(vals);
    if (!m) throw std::invalid_argument("target is not a complete lattice");
    out[x] = *m;
  }
  return out;
}

namespace {
bool is_monotone(const FinitePoset& src, const FinitePoset& lat, const std::vector<int>& f) {
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (src.leq(a, b) && !lat.leq(f[a], f[b])) return false;
  return true;
}
}  // namespace

std::vector<int> pr_project_finite_oracle(const FinitePoset& src, const FinitePoset& lat,
                                          const std::vector<int>& T) {
  const int n = src.size();
  std::vector<int> best(n);
  {
    auto bot = lat.minimum();
    if (!bot) throw std::invalid_argument("target lattice has no bottom");
    std::fill(best.begin(), best.end(), *bot);
  }
  // depth-first enumeration of all monotone maps f with f <= T pointwise
  std::vector<int> f(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int x = 0; x < n; ++x) {
        auto j = lat.join(best[x], f[x]);
        best[x] = *j;
      }
      return;
    }
    for (int v = 0; v < lat.size(); ++v) {
      if (!lat.leq(v, T[i])) continue;
      f[i] = v;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p) {
        if (src.leq(p, i) && !lat.leq(f[p], v)) ok = false;
        if (src.leq(i, p) && !lat.leq(v, f[p])) ok = false;
      }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return best;
}

std::vector<int> defprt_step(const FinitePoset& src, const FinitePoset& lat,
                             const std::vector<int>& T) {
  const int n = src.size();
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) {
    Subset sup_vals(lat.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Subset a(n);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) a.add(i);
      if (!src.is_directed(a)) continue;
      auto s = src.supremum(a);
      if (!s || *s != x) continue;
      Subset img(lat.size());
      for (int i : a.elements()) img.add(T[i]);
      auto si = lat.supremum(img);
      if (si) sup_vals.add(*si);
    }
    auto m = lat.infimum(sup_vals);
    if (!m) throw std::invalid_argument("target is not a complete lattice");
    out[x] = *m;
  }
  return out;
}

std::vector<FinitePoset> all_labeled_posets(int n) {
  std::vector<FinitePoset> out;
  const int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> idx;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) idx.push_back({a, b});
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (int k = 0; k < pairs; ++k)
      if (mask & (1u << k)) r[idx[k].first][idx[k].second] = true;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && r[a][b] && r[b][a]) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (r[a][b] && r[b][c] && !r[a][c]) ok = false;
      }
    if (!ok) continue;
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && r[a][b]) rel.push_back({a, b});
    out.push_back(FinitePoset(n, std::move(rel)));
  }
  return out;
}

namespace {

// Literal evaluations of the five characterizations on finite posets.
bool char_a(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f) {
  const int n = p.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Subset d(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) d.add(i);
    if (!p.is_directed(d)) continue;
    auto s = p.supremum(d);
    if (!s) continue;
    Subset img(q.size());
    for (int i : d.elements()) img.add(f[i]);
    auto si = q.supremum(img);
    if (!si || *si != f[*s]) return false;
  }
  return true;
}

bool char_b(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f) {
  if (!is_monotone(p, q, f)) return false;
  const int n = p.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Subset a(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) a.add(i);
    Subset hat = closure_suite(p, a).hat;
    for (int u = 0; u < q.size(); ++u) {
      bool bound_a = true, bound_hat = true;
      for (int i : a.elements())
        if (!q.leq(f[i], u)) bound_a = false;
      for (int i : hat.elements())
        if (!q.leq(f[i], u)) bound_hat = false;
      if (bound_a && !bound_hat) return false;
    }
  }
  return true;
}

bool char_c(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f) {
  if (!is_monotone(p, q, f)) return false;
  const int n = p.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Subset a(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) a.add(i);
    Subset bar = closure_suite(p, a).bar;
    Subset img(q.size()), img_bar_target(q.size());
    for (int i : a.elements()) img.add(f[i]);
    Subset target_bar = closure_suite(q, img).bar;
    for (int i : bar.elements())
      if (!target_bar.contains(f[i])) return false;
    (void)img_bar_target;
  }
  return true;
}

bool char_d(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f) {
  const int n = p.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Subset a(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) a.add(i);
    Subset hat = closure_suite(p, a).hat;
    Subset img(q.size());
    for (int i : a.elements()) img.add(f[i]);
    Subset target_hat = closure_suite(q, img).hat;
    for (int i : hat.elements())
      if (!target_hat.contains(f[i])) return false;
  }
  return true;
}

bool char_e(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f) {
  const int n = p.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Subset a(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) a.add(i);
    auto t = tip(p, a);
    if (!t) continue;
    Subset img(q.size());
    for (int i : a.elements()) img.add(f[i]);
    auto ti = tip(q, img);
    if (!ti || *ti != f[*t]) return false;
  }
  return true;
}

}  // namespace

EquivalenceAudit equivalences_audit(int max_n) {
  if (max_n > 5) throw std::invalid_argument("equivalences_audit caps at n = 5");
  EquivalenceAudit audit;
  for (int n = 1; n <= max_n; ++n) {
    auto posets = all_labeled_posets(n);
    audit.posets += (int)posets.size();
    for (const auto& p : posets)
      for (const auto& q : posets) {
        std::vector<int> f(n, 0);
        // iterate all |q|^{|p|} maps
        for (;;) {
          ++audit.maps_checked;
          bool a = char_a(p, q, f), b = char_b(p, q, f), c = char_c(p, q, f),
               d = char_d(p, q, f), e = char_e(p, q, f);
          bool mono = is_monotone(p, q, f);
          if (a != b || b != c || c != d || d != e) {
            audit.all_agree = false;
            audit.witness = "characterizations diverge on a map between " +
                            std::to_string(n) + "-element posets";
            return audit;
          }
          if (a != mono) {
            audit.reduce_to_monotone = false;
            audit.witness = "finite-poset reduction to monotonicity fails";
            return audit;
          }
          int i = 0;
          while (i < n && ++f[i] == q.size()) f[i++] = 0;
          if (i == n) break;
        }
      }
  }
  return audit;
}

std::array<bool, 5> mcp_characterizations(const FinitePoset& p, const FinitePoset& q,
                                          const std::vector<int>& f) {
  return {char_a(p, q, f), char_b(p, q, f), char_c(p, q, f), char_d(p, q, f), char_e(p, q, f)};
}

ExtNonneg weighted_eval(const WeightedFunctionalSpec& spec, const std::vector<ExtNonneg>& g) {
  ExtNonneg acc(Rat(0));
  for (size_t i = 0; i < spec.mu.size(); ++i) {
    if (!spec.support[i]) {
      if (!g[i].is_zero()) return ExtNonneg::inf();
      continue;
    }
    acc += scale(spec.mu[i], spec.w[i] * g[i]);
  }
  return acc;
}

std::vector<ExtNonneg> pr_project_weighted(const WeightedFunctionalSpec& spec) {
  std::vector<ExtNonneg> f(spec.mu.size());
  for (size_t i = 0; i < spec.mu.size(); ++i)
    f[i] = spec.support[i] ? spec.w[i] : ExtNonneg::inf();
  return f;
}

FilteredInfDemo filtered_inf_demo(int n) {
  // The family lives on sequences over the whole of N, represented as a
  // finite prefix plus a constant tail; a finite window would hand the
  // filtered family a minimum and dissolve the obstruction.
  struct Seq {
    std::vector<ExtNonneg> prefix;
    ExtNonneg tail;
  };
  auto a_i = [&](int zeros) {
    Seq s;
    s.prefix.assign(zeros, ExtNonneg(Rat(0)));
    s.tail = ExtNonneg::inf();
    return s;
  };
  auto value_at = [](const Seq& s, size_t k) {
    return k < s.prefix.size() ? s.prefix[k] : s.tail;
  };
  auto sum = [](const Seq& s) {
    ExtNonneg acc(Rat(0));
    for (const auto& x : s.prefix) acc += x;
    if (!s.tail.is_zero()) return ExtNonneg::inf();  // infinitely many positive entries
    return acc;
  };

  FilteredInfDemo demo;
  demo.chain_filtered = true;
  size_t window = (size_t)n + 2;
  for (int i = 0; i + 1 <= n; ++i)
    for (size_t k = 0; k < window; ++k)
      if (!(value_at(a_i(i + 1), k) <= value_at(a_i(i), k))) demo.chain_filtered = false;

  // Pointwise infimum over all i: every coordinate is eventually zeroed.
  Seq inf_seq{{}, ExtNonneg(Rat(0))};
  for (int i = 0; i <= n; ++i)
    for (size_t k = 0; k < window; ++k)
      if (!(value_at(inf_seq, k) <= value_at(a_i(i), k)))
        demo.chain_filtered = false;  // would contradict the lower-bound claim

  demo.t_of_inf = sum(inf_seq);
  ExtNonneg inf_val = ExtNonneg::inf();
  for (int i = 1; i <= n; ++i) inf_val = ext_min(inf_val, sum(a_i(i)));
  demo.inf_of_t = inf_val;
  return demo;
}

}  // namespace hypercone
