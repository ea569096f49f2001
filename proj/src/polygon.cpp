#include "hypercone/polygon.hpp"

#include <algorithm>

namespace hypercone {

ConvexPolygon ConvexPolygon::hull_of(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  ConvexPolygon out;
  if (pts.size() <= 2) {
    out.v_ = pts;
    return out;
  }
  std::vector<QPoint> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {            // lower hull
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper hull
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  out.v_ = h;
  if (out.v_.size() == 2 && out.v_[0] == out.v_[1]) out.v_.pop_back();
  return out;
}

Rat ConvexPolygon::area2() const {
  if (degenerate()) return Rat(0);
  Rat s(0);
  for (size_t i = 0; i < v_.size(); ++i) {
    const QPoint& p = v_[i];
    const QPoint& q = v_[(i + 1) % v_.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;  // positive for CCW order
}

ConvexPolygon ConvexPolygon::scaled(const Rat& l) const {
  std::vector<QPoint> pts;
  for (const QPoint& p : v_) pts.push_back({l * p.x, l * p.y});
  return hull_of(std::move(pts));
}

namespace {

// rotate so the bottom-most (then leftmost) vertex comes first
std::vector<QPoint> rotated_to_bottom(const std::vector<QPoint>& v) {
  size_t best = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
  std::vector<QPoint> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(v[(best + i) % v.size()]);
  return out;
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.degenerate() || b.degenerate()) {
    std::vector<QPoint> pts;
    for (const QPoint& p : a.vertices())
      for (const QPoint& q : b.vertices()) pts.push_back(p + q);
    return ConvexPolygon::hull_of(std::move(pts));
  }
  std::vector<QPoint> p = rotated_to_bottom(a.vertices());
  std::vector<QPoint> q = rotated_to_bottom(b.vertices());
  const size_t n = p.size(), m = q.size();
  p.push_back(p[0]);
  p.push_back(p[1]);
  q.push_back(q[0]);
  q.push_back(q[1]);
  std::vector<QPoint> out;
  size_t i = 0, j = 0;
  while (i < n || j < m) {
    out.push_back(p[i] + q[j]);
    QPoint ea{p[i + 1].x - p[i].x, p[i + 1].y - p[i].y};
    QPoint eb{q[j + 1].x - q[j].x, q[j + 1].y - q[j].y};
    Rat cr = ea.x * eb.y - ea.y * eb.x;
    if (j >= m || (i < n && cr > 0)) ++i;
    else if (i >= n || cr < 0) ++j;
    else { ++i; ++j; }  // parallel edges fuse
  }
  return ConvexPolygon::hull_of(std::move(out));
}

BmVerdict bm_audit(const ConvexPolygon& a, const ConvexPolygon& b) {
  BmVerdict v{};
  v.sum_area2 = minkowski_sum(a, b).area2();
  v.a_area2 = a.area2();
  v.b_area2 = b.area2();
  // sqrt(S) >= sqrt(A) + sqrt(B), squared twice with the sign guard
  Rat excess = v.sum_area2 - v.a_area2 - v.b_area2;
  v.holds = excess >= 0 && excess * excess >= 4 * v.a_area2 * v.b_area2;
  v.equality = excess >= 0 && excess * excess == 4 * v.a_area2 * v.b_area2;
  return v;
}

DistributivityWitness distributivity_failure_witness(uint64_t seed, int convex_cases) {
  DistributivityWitness w{};
  // the finite point set A = {0, e1}, handled as an explicit set
  std::vector<QPoint> a{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
  std::vector<QPoint> doubled, summed;
  for (const QPoint& p : a) doubled.push_back({2 * p.x, 2 * p.y});
  for (const QPoint& p : a)
    for (const QPoint& q : a) summed.push_back(p + q);
  std::sort(doubled.begin(), doubled.end());
  doubled.erase(std::unique(doubled.begin(), doubled.end()), doubled.end());
  std::sort(summed.begin(), summed.end());
  summed.erase(std::unique(summed.begin(), summed.end()), summed.end());
  w.doubled_size = (int)doubled.size();
  w.sum_size = (int)summed.size();

  w.convex_case_ok = true;
  Rng rng(seed);
  for (int t = 0; t < convex_cases; ++t) {
    ConvexPolygon p = random_convex_polygon(rng);
    Rat l = rng.rational(4, 3) + Rat(1, 5), e = rng.rational(4, 3) + Rat(1, 5);
    ConvexPolygon lhs = p.scaled(l + e);
    ConvexPolygon rhs = minkowski_sum(p.scaled(l), p.scaled(e));
    if (!(lhs == rhs)) w.convex_case_ok = false;
  }
  // singletons scale trivially
  ConvexPolygon point = ConvexPolygon::hull_of({{Rat(3), Rat(4)}});
  if (!(point.scaled(Rat(2)) == minkowski_sum(point, point))) w.convex_case_ok = false;
  return w;
}

ConvexPolygon random_convex_polygon(Rng& rng, int max_coord, int points) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<QPoint> pts;
    for (int i = 0; i < points; ++i)
      pts.push_back({Rat((long long)rng.below(2 * max_coord + 1) - max_coord),
                     Rat((long long)rng.below(2 * max_coord + 1) - max_coord)});
    ConvexPolygon p = ConvexPolygon::hull_of(std::move(pts));
    if (!p.degenerate()) return p;
  }
  return ConvexPolygon::hull_of({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

}  // namespace hypercone
