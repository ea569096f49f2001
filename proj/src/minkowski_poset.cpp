#include "hypercone/lorentz.hpp"
#include "hypercone/poset_catalog.hpp"

namespace hypercone {
namespace {

// ---------------------------------------------------------------------------
// two disjoint chains, and two chains glued at a single top: the negative
// claim fixture where an element of one side slips below the shared top.

class TwoChains : public SymbolicPoset {
 public:
  explicit TwoChains(bool glued_top) : glued_(glued_top) {
    strata_ = {
        Stratum{"left", false, {}, [](long long k) { return Code{1, k}; }, 32},
        Stratum{"right", false, {}, [](long long k) { return Code{2, k}; }, 32},
    };
    if (glued_) {
      strata_.push_back(Stratum{"top", true, {Code{3, 0}}, nullptr, 0});
      edges_ = {LimitEdge{{0}, 2}, LimitEdge{{1}, 2}};
    }
  }
  std::string name() const override { return glued_ ? "top_glued_chains" : "two_chains"; }
  bool leq(const Code& a, const Code& b) const override {
    if (glued_ && b[0] == 3) return true;
    if (glued_ && a[0] == 3) return false;
    return a[0] == b[0] && a[1] <= b[1];
  }
  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }
  std::vector<ChainDecl> chains(int) const override {
    std::vector<ChainDecl> out;
    for (long long side : {1, 2}) {
      ChainDecl c;
      c.label = side == 1 ? "left" : "right";
      c.at = [side](long long k) { return Code{side, k}; };
      c.sup_kind = glued_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent;
      c.sup = Code{3, 0};
      out.push_back(c);
    }
    return out;
  }
  bool dominates_stratum(const Code& c, int) const override { return glued_ && c[0] == 3; }
  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    if (glued_) return {SupAnswer::kIs, Code{3, 0}};
    return {SupAnswer::kNone, {}};
  }

 private:
  bool glued_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

// ---------------------------------------------------------------------------
// the rational causal plane and its completion by null-infinity rays plus
// one future point. Codes pack rationals as (num, den) pairs:
//   (0, tn,td, xn,xd, yn,yd)   a point (t, (x,y))
//   (1, cn,cd, un,ud, vn,vd)   null infinity at defect c, direction (u,v)
//   (2)                        future time infinity

Code pack_point(const CausalPoint& p) {
  return Code{0,
              numerator(p.t).convert_to<long long>(), denominator(p.t).convert_to<long long>(),
              numerator(p.v[0]).convert_to<long long>(), denominator(p.v[0]).convert_to<long long>(),
              numerator(p.v[1]).convert_to<long long>(), denominator(p.v[1]).convert_to<long long>()};
}
CausalPoint unpack_point(const Code& c) {
  return {Rat(Int(c[1]), Int(c[2])), {Rat(Int(c[3]), Int(c[4])), Rat(Int(c[5]), Int(c[6]))}};
}

const QVec kDirA{Rat(3, 5), Rat(4, 5)};
const QVec kDirB{Rat(1), Rat(0)};

class MinkowskiPoset : public SymbolicPoset {
 public:
  explicit MinkowskiPoset(bool completed) : completed_(completed) {
    strata_.push_back(Stratum{"events", false, {},
                              [](long long k) {
                                CausalPoint p{Rat((k % 5) - 1), {Rat(k % 3), Rat((k / 3) % 3 - 1)}};
                                return pack_point(p);
                              },
                              40});
    if (completed_) {
      strata_.push_back(Stratum{"null_infinity", false, {},
                                [](long long k) {
                                  const QVec& u = (k % 2) ? kDirA : kDirB;
                                  Rat c = Rat(k / 2) - 1;
                                  return Code{1,
                                              numerator(c).convert_to<long long>(),
                                              denominator(c).convert_to<long long>(),
                                              numerator(u[0]).convert_to<long long>(),
                                              denominator(u[0]).convert_to<long long>(),
                                              numerator(u[1]).convert_to<long long>(),
                                              denominator(u[1]).convert_to<long long>()};
                                },
                                12});
      strata_.push_back(Stratum{"time_infinity", true, {Code{2}}, nullptr, 0});
      edges_ = {LimitEdge{{0}, 1}, LimitEdge{{0}, 2}, LimitEdge{{1}, 2}};
    }
  }
  std::string name() const override { return completed_ ? "minkowski_completed" : "minkowski_window"; }

  bool leq(const Code& a, const Code& b) const override {
    if (completed_ && b[0] == 2) return true;
    if (completed_ && a[0] == 2) return false;
    if (a[0] == 0 && b[0] == 0) return causal_leq(unpack_point(a), unpack_point(b));
    if (completed_ && a[0] == 0 && b[0] == 1) {
      // (t, v) below the ray at defect c, direction w: <v, w> >= t - c
      CausalPoint p = unpack_point(a);
      Rat c = Rat(Int(b[1]), Int(b[2]));
      Rat w0 = Rat(Int(b[3]), Int(b[4]));
      Rat w1 = Rat(Int(b[5]), Int(b[6]));
      return p.v[0] * w0 + p.v[1] * w1 >= p.t - c;
    }
    if (completed_ && a[0] == 1 && b[0] == 1) {
      bool same_dir = a[3] == b[3] && a[4] == b[4] && a[5] == b[5] && a[6] == b[6];
      return same_dir && Rat(Int(a[1]), Int(a[2])) <= Rat(Int(b[1]), Int(b[2]));
    }
    return false;
  }

  const std::vector<Stratum>& strata() const override { return strata_; }
  const std::vector<LimitEdge>& limit_edges() const override { return edges_; }

  std::vector<ChainDecl> chains(int) const override {
    std::vector<ChainDecl> out;
    for (long long c = -1; c <= 4; ++c)
      for (int which = 0; which < 2; ++which) {
        const QVec& u = which ? kDirA : kDirB;
        ChainDecl null_ray;
        null_ray.label = "null_ray_c" + std::to_string(c) + (which ? "_aslope" : "_axis");
        null_ray.at = [u, c](long long k) {
          CausalPoint p{Rat(c + k), {Rat(k) * u[0], Rat(k) * u[1]}};
          return pack_point(p);
        };
        null_ray.sup_kind = completed_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent;
        null_ray.sup = Code{1, c, 1,
                            numerator(u[0]).convert_to<long long>(), denominator(u[0]).convert_to<long long>(),
                            numerator(u[1]).convert_to<long long>(), denominator(u[1]).convert_to<long long>()};
        out.push_back(null_ray);
      }
    ChainDecl timelike;
    timelike.label = "timelike_ray";
    timelike.at = [](long long k) {
      CausalPoint p{Rat(2 * k), {Rat(k) * kDirA[0], Rat(k) * kDirA[1]}};
      return pack_point(p);
    };
    timelike.sup_kind = completed_ ? ChainDecl::kSupIn : ChainDecl::kSupAbsent;
    timelike.sup = Code{2};
    out.push_back(timelike);
    return out;
  }

  // Affine ray data (time step, space step) when the chain is one.
  struct RayData {
    bool affine = false;
    bool escaping = false;   // dt > 0
    bool null_slope = false; // ||dv|| = dt exactly
    Rat c;                   // defect of a null ray
    QVec u;                  // unit direction of a null ray
  };
  RayData read_ray(const std::function<Code(long long)>& at, int budget) const {
    RayData r;
    if (at(0)[0] != 0) return r;
    CausalPoint p0 = unpack_point(at(1)), p1 = unpack_point(at(2));
    Rat dt = p1.t - p0.t;
    QVec dv{p1.v[0] - p0.v[0], p1.v[1] - p0.v[1]};
    for (int k = 3; k <= std::min(budget, 8); ++k) {
      CausalPoint q = unpack_point(at(k)), prev = unpack_point(at(k - 1));
      if (!(q.t - prev.t == dt) || !(q.v[0] - prev.v[0] == dv[0]) ||
          !(q.v[1] - prev.v[1] == dv[1]))
        return r;
    }
    r.affine = true;
    r.escaping = dt > 0;
    if (!r.escaping) return r;
    Rat len_sq = norm2_sq(dv), len;
    if (!exact_root(len_sq, 2, len)) return r;
    if (len == dt) {
      QVec u{dv[0] / len, dv[1] / len};
      Rat align = p0.v[0] * u[0] + p0.v[1] * u[1];
      if (align * align == norm2_sq(p0.v) && align >= 0) {
        r.null_slope = true;
        r.u = u;
        r.c = p0.t - align;
      }
    }
    return r;
  }

  bool hat_contains_chain(const Code& a, const std::function<Code(long long)>& b,
                          int budget) const override {
    // exact closure membership for the affine rays; the down-set fallback
    // covers everything else
    if (a[0] == 0) {
      RayData r = read_ray(b, budget);
      if (r.affine && r.escaping && r.null_slope) {
        CausalPoint p = unpack_point(a);
        return p.v[0] * r.u[0] + p.v[1] * r.u[1] >= p.t - r.c;
      }
      if (r.affine && r.escaping && !r.null_slope) {
        Rat len_sq, len;
        CausalPoint p0 = unpack_point(b(1)), p1 = unpack_point(b(2));
        QVec dv{p1.v[0] - p0.v[0], p1.v[1] - p0.v[1]};
        len_sq = norm2_sq(dv);
        if (exact_root(len_sq, 2, len) && len < p1.t - p0.t) return true;  // timelike: hat is all
      }
    }
    return SymbolicPoset::hat_contains_chain(a, b, budget);
  }

  bool dominates_stratum(const Code& c, int) const override { return completed_ && c[0] == 2; }
  std::vector<int> down_of_stratum(int s) const override {
    if (s == 0) return {0};
    if (s == 1) return {0, 1};
    return {0, 1, 2};
  }

  SupAnswer sup_of_chain(const std::function<Code(long long)>& at, int budget) const override {
    Code last = at(budget);
    if (at(budget / 2) == last) return {SupAnswer::kIs, last};
    if (last[0] != 0) return {};
    RayData r = read_ray(at, budget);
    if (!r.affine || !r.escaping) return {};
    if (!completed_) return {SupAnswer::kNone, {}};  // escaping rays top out only after completion
    if (r.null_slope) {
      return {SupAnswer::kIs,
              Code{1, numerator(r.c).convert_to<long long>(), denominator(r.c).convert_to<long long>(),
                   numerator(r.u[0]).convert_to<long long>(), denominator(r.u[0]).convert_to<long long>(),
                   numerator(r.u[1]).convert_to<long long>(), denominator(r.u[1]).convert_to<long long>()}};
    }
    CausalPoint p0 = unpack_point(at(1)), p1 = unpack_point(at(2));
    QVec dv{p1.v[0] - p0.v[0], p1.v[1] - p0.v[1]};
    Rat len;
    if (exact_root(norm2_sq(dv), 2, len) && len < p1.t - p0.t)
      return {SupAnswer::kIs, Code{2}};  // timelike ray
    return {};
  }

 private:
  bool completed_;
  std::vector<Stratum> strata_;
  std::vector<LimitEdge> edges_;
};

}  // namespace

PosetPtr two_chains() { return std::make_shared<TwoChains>(false); }
PosetPtr top_glued_chains() { return std::make_shared<TwoChains>(true); }
PosetPtr minkowski_window() { return std::make_shared<MinkowskiPoset>(false); }
PosetPtr minkowski_completed() { return std::make_shared<MinkowskiPoset>(true); }

}  // namespace hypercone
