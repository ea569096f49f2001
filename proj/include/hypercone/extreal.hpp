#pragma once

#include <cmath>
#include <compare>
#include <optional>
#include <stdexcept>

#include "hypercone/rational.hpp"

namespace hypercone {

struct PowerZeroExponent : std::domain_error {
  PowerZeroExponent() : std::domain_error("power with exponent 0 is not defined here") {}
};
struct NotComparable : std::domain_error {
  explicit NotComparable(const char* what) : std::domain_error(what) {}
};

// Exact value in [0,+inf]: a nonnegative rational or the absorbing top element.
// Conventions: +inf absorbs addition, 0 * x = 0 for every x (including x = +inf),
// lambda * +inf = +inf for lambda > 0.
class ExtNonneg {
 public:
  ExtNonneg() : finite_(true), v_(0) {}
  ExtNonneg(const Rat& v) : finite_(true), v_(v) {
    if (v < 0) throw std::invalid_argument("ExtNonneg from negative rational");
  }
  ExtNonneg(long long v) : ExtNonneg(Rat(v)) {}
  static ExtNonneg inf() { ExtNonneg x; x.finite_ = false; return x; }

  bool is_inf() const { return !finite_; }
  bool is_zero() const { return finite_ && v_ == 0; }
  const Rat& value() const {
    if (!finite_) throw std::domain_error("value() on +inf");
    return v_;
  }

  friend bool operator==(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtNonneg& a, const ExtNonneg& b) { return !(a == b); }
  friend bool operator<=(const ExtNonneg& a, const ExtNonneg& b) {
    if (b.is_inf()) return true;
    if (a.is_inf()) return false;
    return a.v_ <= b.v_;
  }
  friend bool operator<(const ExtNonneg& a, const ExtNonneg& b) { return a <= b && a != b; }
  friend bool operator>=(const ExtNonneg& a, const ExtNonneg& b) { return b <= a; }
  friend bool operator>(const ExtNonneg& a, const ExtNonneg& b) { return b < a; }

  friend ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return ExtNonneg(a.v_ + b.v_);
  }
  friend ExtNonneg operator*(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.is_zero() || b.is_zero()) return ExtNonneg(Rat(0));
    if (a.is_inf() || b.is_inf()) return inf();
    return ExtNonneg(a.v_ * b.v_);
  }
  ExtNonneg& operator+=(const ExtNonneg& o) { return *this = *this + o; }

  friend ExtNonneg scale(const Rat& lambda, const ExtNonneg& x) {
    if (lambda < 0) throw std::invalid_argument("negative scalar on ExtNonneg");
    if (lambda == 0) return ExtNonneg(Rat(0));
    if (x.is_inf()) return inf();
    return ExtNonneg(lambda * x.value());
  }

  double to_double() const {
    return finite_ ? hypercone::to_double(v_) : std::numeric_limits<double>::infinity();
  }

 private:
  bool finite_;
  Rat v_;
};

inline ExtNonneg ext_min(const ExtNonneg& a, const ExtNonneg& b) { return a <= b ? a : b; }
inline ExtNonneg ext_max(const ExtNonneg& a, const ExtNonneg& b) { return a <= b ? b : a; }

// Lattice difference a (-) b: the greatest z with b + z = a. Requires b <= a;
// equal to a - b for finite a and to +inf whenever a = +inf.
inline ExtNonneg ext_diff(const ExtNonneg& a, const ExtNonneg& b) {
  if (!(b <= a)) throw NotComparable("difference requires b <= a");
  if (a.is_inf()) return ExtNonneg::inf();
  return ExtNonneg(a.value() - b.value());
}

// Part at infinity: eps(x) = inf over lambda > 0 of lambda * x.
inline ExtNonneg ext_eps(const ExtNonneg& x) {
  return x.is_inf() ? ExtNonneg::inf() : ExtNonneg(Rat(0));
}

// x^p with the fixed conventions: 0^p = 0 for p > 0 and +inf for p < 0;
// inf^p = inf for p > 0 and 0 for p < 0. Exact only when the result is rational.
inline std::optional<ExtNonneg> ext_pow_exact(const ExtNonneg& x, const Rat& p) {
  if (p == 0) throw PowerZeroExponent();
  if (x.is_zero()) return p > 0 ? ExtNonneg(Rat(0)) : ExtNonneg::inf();
  if (x.is_inf()) return p > 0 ? ExtNonneg::inf() : ExtNonneg(Rat(0));
  Int pn = numerator(p), pd = denominator(p);
  if (pn < -(1 << 30) || pn > (1 << 30) || pd > (1 << 30)) return std::nullopt;
  Rat base = pow_int(x.value(), pn.convert_to<long>());
  if (pd == 1) return ExtNonneg(base);
  Rat root;
  if (exact_root(base, pd.convert_to<unsigned>(), root)) return ExtNonneg(root);
  return std::nullopt;
}

inline double ext_pow_double(const ExtNonneg& x, const Rat& p) {
  if (p == 0) throw PowerZeroExponent();
  if (x.is_zero()) return p > 0 ? 0.0 : std::numeric_limits<double>::infinity();
  if (x.is_inf())
    return p > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  return std::pow(x.to_double(), to_double(p));
}

// Signed extended value, internal to the log-integral calculus of the 0+/0-
// norms. Its addition uses the convention (+inf) + (-inf) = -inf, exactly as in
// the computation it was introduced for; it is not a general-purpose type.
class ExtSigned {
 public:
  enum Kind { kFinite, kPlusInf, kMinusInf };
  ExtSigned() : kind_(kFinite), v_(0) {}
  ExtSigned(const Rat& v) : kind_(kFinite), v_(v) {}
  static ExtSigned plus_inf() { ExtSigned x; x.kind_ = kPlusInf; return x; }
  static ExtSigned minus_inf() { ExtSigned x; x.kind_ = kMinusInf; return x; }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == kFinite; }
  const Rat& value() const {
    if (kind_ != kFinite) throw std::domain_error("value() on infinite ExtSigned");
    return v_;
  }

  friend bool operator==(const ExtSigned& a, const ExtSigned& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != kFinite || a.v_ == b.v_;
  }

  friend ExtSigned operator+(const ExtSigned& a, const ExtSigned& b) {
    if (a.kind_ == kMinusInf || b.kind_ == kMinusInf) return minus_inf();
    if (a.kind_ == kPlusInf || b.kind_ == kPlusInf) return plus_inf();
    return ExtSigned(a.v_ + b.v_);
  }
  friend ExtSigned operator-(const ExtSigned& a) {
    switch (a.kind_) {
      case kPlusInf: return minus_inf();
      case kMinusInf: return plus_inf();
      default: return ExtSigned(-a.v_);
    }
  }

 private:
  Kind kind_;
  Rat v_;
};

}  // namespace hypercone
