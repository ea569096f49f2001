#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercone/rational.hpp"
#include "hypercone/rng.hpp"

namespace hypercone {

struct NotSymmetric : std::runtime_error {
  NotSymmetric() : std::runtime_error("matrix is not symmetric") {}
};
struct NotPSD : std::runtime_error {
  NotPSD() : std::runtime_error("matrix is not positive semidefinite") {}
};
struct NotPD : std::runtime_error {
  NotPD() : std::runtime_error("matrix is not positive definite") {}
};

// Dense real symmetric matrix, d <= 8.
class SymMatrix {
 public:
  explicit SymMatrix(int d) : d_(d), a_(d * d, 0.0) {}
  static SymMatrix identity(int d) {
    SymMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }
  static SymMatrix diagonal(const std::vector<double>& v) {
    SymMatrix m((int)v.size());
    for (size_t i = 0; i < v.size(); ++i) m((int)i, (int)i) = v[i];
    return m;
  }

  int dim() const { return d_; }
  double& operator()(int i, int j) { return a_[i * d_ + j]; }
  double operator()(int i, int j) const { return a_[i * d_ + j]; }

  bool symmetric(double tol = 0.0) const {
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < i; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
  }
  double frobenius() const {
    double s = 0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
  }
  double trace() const {
    double s = 0;
    for (int i = 0; i < d_; ++i) s += (*this)(i, i);
    return s;
  }

  friend SymMatrix operator+(const SymMatrix& x, const SymMatrix& y) {
    SymMatrix r(x.d_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }

 private:
  int d_;
  std::vector<double> a_;
};

struct EigenSym {
  std::vector<double> values;          // ascending
  std::vector<std::vector<double>> frame;  // frame[k] = unit eigenvector of values[k]
  int sweeps = 0;
};

// Cyclic Jacobi rotations with a deterministic sweep order; off-diagonal
// residual driven below 1e-13 * ||A||_F.
EigenSym eigen_sym(const SymMatrix& a);

// Spectral p-norm under the uniform weight 1/d; det^(1/d) at p = 0 and the
// least eigenvalue at p = -inf. Inputs must be PSD; p <= 0 on a singular
// matrix takes the convention value 0.
double matrix_p_norm(const SymMatrix& a, double p);

// Spectral power A^p of a positive definite matrix.
SymMatrix matrix_power(const SymMatrix& a, double p);

// Tr(AB), and the trace Young inequality data for a conjugate pair.
double trace_product(const SymMatrix& a, const SymMatrix& b);

struct YoungAudit {
  double lhs = 0, rhs = 0;
  bool holds = false;
  bool equality = false;  // iff A^p = B^q within the Frobenius gate
};
YoungAudit young_audit(const SymMatrix& a, const SymMatrix& b, double p, double tol = 1e-8);

struct MatrixDualAttain {
  SymMatrix b_star;
  double pairing = 0;   // (1/d) Tr(A B*)
  double a_norm = 0;    // ||A||_p
  double gap = 0;
};
MatrixDualAttain matrix_dual_attain(const SymMatrix& a, double p);

// Random positive definite matrix with spectrum in [lo, hi].
SymMatrix random_pd(Rng& rng, int d, double lo = 0.2, double hi = 4.0);
SymMatrix random_orthogonal_conjugate(Rng& rng, const SymMatrix& a);

}  // namespace hypercone
