#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypercone {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(Int(num), Int(den));
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Floor of num/den for arbitrary-precision integers (rounds toward -inf).
inline Int floor_div(const Int& num, const Int& den) {
  Int q = num / den, r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

// q^e for integer e (e < 0 requires q != 0).
inline Rat pow_int(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  if (q == 0 && e < 0) throw std::domain_error("0 to a negative power");
  Rat base = e > 0 ? q : Rat(1) / q;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// Exact k-th root when it exists (k >= 1, q >= 0).
inline bool exact_root(const Rat& q, unsigned k, Rat& out) {
  if (q < 0) return false;
  if (k == 1) { out = q; return true; }
  auto iroot = [&](const Int& n, Int& r) {
    if (n == 0) { r = 0; return true; }
    // Newton bracket on integers.
    Int lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, k) < n) hi <<= 1;
    while (lo < hi) {
      Int mid = (lo + hi) / 2;
      if (boost::multiprecision::pow(mid, k) < n) lo = mid + 1; else hi = mid;
    }
    r = lo;
    return boost::multiprecision::pow(r, k) == n;
  };
  Int rn, rd;
  if (!iroot(numerator(q), rn) || !iroot(denominator(q), rd)) return false;
  out = Rat(rn, rd);
  return true;
}

}  // namespace hypercone
