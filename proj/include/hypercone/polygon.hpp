#pragma once

#include <vector>

#include "hypercone/rational.hpp"
#include "hypercone/rng.hpp"

namespace hypercone {

struct QPoint {
  Rat x, y;
  friend bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const QPoint& a, const QPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend QPoint operator+(const QPoint& a, const QPoint& b) { return {a.x + b.x, a.y + b.y}; }
};

inline Rat cross(const QPoint& o, const QPoint& a, const QPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Convex polygon with exact rational vertices in strictly convex CCW order;
// points and segments are carried as degenerate instances.
class ConvexPolygon {
 public:
  static ConvexPolygon hull_of(std::vector<QPoint> pts);
  const std::vector<QPoint>& vertices() const { return v_; }
  int size() const { return (int)v_.size(); }
  bool degenerate() const { return v_.size() < 3; }
  Rat area2() const;  // twice the area, exact (shoelace)
  ConvexPolygon scaled(const Rat& l) const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) { return a.v_ == b.v_; }

 private:
  std::vector<QPoint> v_;
};

// Exact Minkowski sum; edge-merge by polar angle on nondegenerate inputs,
// hull of pairwise sums otherwise.
ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);

struct BmVerdict {
  Rat sum_area2, a_area2, b_area2;
  bool holds;     // sqrt-free Brunn-Minkowski inequality, exact
  bool equality;  // the homothety case
};
BmVerdict bm_audit(const ConvexPolygon& a, const ConvexPolygon& b);

// The finite point set {0, e1}: doubling it as a set misses the midpoint
// that the sum of two copies produces.
struct DistributivityWitness {
  int doubled_size;    // |2A|
  int sum_size;        // |A + A|
  bool convex_case_ok; // equality holds on sampled convex polygons
};
DistributivityWitness distributivity_failure_witness(uint64_t seed = 3, int convex_cases = 16);

ConvexPolygon random_convex_polygon(Rng& rng, int max_coord = 12, int points = 10);

}  // namespace hypercone
