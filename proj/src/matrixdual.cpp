#include "hypercone/matrixdual.hpp"

#include <algorithm>
#include <cmath>

namespace hypercone {

EigenSym eigen_sym(const SymMatrix& input) {
  for (int i = 0; i < input.dim(); ++i)
    for (int j = 0; j < input.dim(); ++j)
      if (!std::isfinite(input(i, j))) throw NotSymmetric();
  if (!input.symmetric(1e-12 * std::max(1.0, input.frobenius()))) throw NotSymmetric();
  const int d = input.dim();
  SymMatrix a = input;
  // symmetrize exactly so rotations preserve symmetry bit for bit
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j) {
      double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = a(j, i) = v;
    }
  std::vector<std::vector<double>> q(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) q[i][i] = 1.0;

  const double target = 1e-13 * std::max(1e-300, input.frobenius());
  EigenSym out;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) off += 2 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= target) break;
    ++out.sweeps;
    for (int p = 0; p < d; ++p)
      for (int qi = p + 1; qi < d; ++qi) {
        double apq = a(p, qi);
        if (apq == 0) continue;
        double theta = (a(qi, qi) - a(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < d; ++k) {
          double akp = a(k, p), akq = a(k, qi);
          a(k, p) = c * akp - s * akq;
          a(k, qi) = s * akp + c * akq;
        }
        for (int k = 0; k < d; ++k) {
          double apk = a(p, k), aqk = a(qi, k);
          a(p, k) = c * apk - s * aqk;
          a(qi, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < d; ++k) {
          double qkp = q[k][p], qkq = q[k][qi];
          q[k][p] = c * qkp - s * qkq;
          q[k][qi] = s * qkp + c * qkq;
        }
      }
  }
  std::vector<int> order(d);
  for (int i = 0; i < d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  out.values.resize(d);
  out.frame.assign(d, std::vector<double>(d));
  for (int k = 0; k < d; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (int r = 0; r < d; ++r) out.frame[k][r] = q[r][order[k]];
  }
  return out;
}

namespace {

SymMatrix from_spectrum(const EigenSym& e, const std::vector<double>& vals) {
  const int d = (int)e.values.size();
  SymMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = 0;
      for (int k = 0; k < d; ++k) s += vals[k] * e.frame[k][i] * e.frame[k][j];
      m(i, j) = s;
    }
  return m;
}

std::vector<double> psd_spectrum(const SymMatrix& a) {
  EigenSym e = eigen_sym(a);
  for (double v : e.values)
    if (v < -1e-10 * std::max(1.0, a.frobenius())) throw NotPSD();
  return e.values;
}

}  // namespace

double matrix_p_norm(const SymMatrix& a, double p) {
  std::vector<double> lam = psd_spectrum(a);
  const int d = (int)lam.size();
  for (double& v : lam) v = std::max(v, 0.0);
  if (std::isinf(p) && p < 0) return lam.front();
  if (p == 0) {
    double logs = 0;
    for (double v : lam) {
      if (v == 0) return 0.0;
      logs += std::log(v) / d;
    }
    return std::exp(logs);  // det(A)^(1/d)
  }
  double sum = 0;
  bool inf_term = false;
  for (double v : lam) {
    if (v == 0 && p < 0) { inf_term = true; continue; }
    sum += std::pow(v, p) / d;
  }
  if (inf_term) return 0.0;  // convention value on singular input, p < 0
  return std::pow(sum, 1.0 / p);
}

SymMatrix matrix_power(const SymMatrix& a, double p) {
  EigenSym e = eigen_sym(a);
  std::vector<double> vals = e.values;
  for (double& v : vals) {
    if (v <= 0) throw NotPD();
    v = std::pow(v, p);
  }
  return from_spectrum(e, vals);
}

double trace_product(const SymMatrix& a, const SymMatrix& b) {
  const int d = a.dim();
  double s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += a(i, j) * b(j, i);
  return s;
}

YoungAudit young_audit(const SymMatrix& a, const SymMatrix& b, double p, double tol) {
  for (double v : eigen_sym(a).values)
    if (v <= 0) throw NotPD();
  for (double v : eigen_sym(b).values)
    if (v <= 0) throw NotPD();
  const double q = p / (p - 1);
  YoungAudit y;
  y.lhs = trace_product(a, b);
  y.rhs = matrix_power(a, p).trace() / p + matrix_power(b, q).trace() / q;
  y.holds = y.lhs >= y.rhs - tol * std::max(1.0, std::abs(y.rhs));
  SymMatrix ap = matrix_power(a, p), bq = matrix_power(b, q);
  double diff = 0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) diff += (ap(i, j) - bq(i, j)) * (ap(i, j) - bq(i, j));
  y.equality = std::sqrt(diff) <= tol;
  return y;
}

MatrixDualAttain matrix_dual_attain(const SymMatrix& a, double p) {
  const double q = p / (p - 1);
  MatrixDualAttain r{SymMatrix(a.dim())};
  r.a_norm = matrix_p_norm(a, p);
  SymMatrix b = matrix_power(a, p / q);
  double bn = matrix_p_norm(b, q);
  EigenSym e = eigen_sym(b);
  std::vector<double> vals = e.values;
  for (double& v : vals) v /= bn;
  r.b_star = from_spectrum(e, vals);
  r.pairing = trace_product(a, r.b_star) / a.dim();
  r.gap = std::abs(r.pairing - r.a_norm) / std::max(1.0, std::abs(r.a_norm));
  return r;
}

SymMatrix random_pd(Rng& rng, int d, double lo, double hi) {
  std::vector<double> vals(d);
  for (double& v : vals) v = lo + (hi - lo) * rng.real01();
  SymMatrix m = SymMatrix::diagonal(vals);
  return random_orthogonal_conjugate(rng, m);
}

SymMatrix random_orthogonal_conjugate(Rng& rng, const SymMatrix& a) {
  const int d = a.dim();
  // random rotations composed over coordinate pairs
  SymMatrix m = a;
  for (int rep = 0; rep < 2 * d; ++rep) {
    int i = (int)rng.below(d), j = (int)rng.below(d);
    if (i == j) continue;
    double ang = 6.283185307179586 * rng.real01();
    double c = std::cos(ang), s = std::sin(ang);
    for (int k = 0; k < d; ++k) {
      double mki = m(k, i), mkj = m(k, j);
      m(k, i) = c * mki - s * mkj;
      m(k, j) = s * mki + c * mkj;
    }
    for (int k = 0; k < d; ++k) {
      double mik = m(i, k), mjk = m(j, k);
      m(i, k) = c * mik - s * mjk;
      m(j, k) = s * mik + c * mjk;
    }
  }
  // clean tiny asymmetry introduced by roundoff
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j) {
      double v = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = m(j, i) = v;
    }
  return m;
}

}  // namespace hypercone
