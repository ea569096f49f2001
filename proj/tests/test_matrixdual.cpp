#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercone/matrixdual.hpp"

using namespace hypercone;

TEST_CASE("jacobi eigen on fixed spectra") {
  auto e1 = eigen_sym(SymMatrix::identity(3));
  for (double v : e1.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));

  auto e2 = eigen_sym(SymMatrix::diagonal({1, 4}));
  CHECK(e2.values[0] == doctest::Approx(1.0));
  CHECK(e2.values[1] == doctest::Approx(4.0));
}

TEST_CASE("reconstruction from a planted spectrum") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + (int)rng.below(5);
    SymMatrix a = random_pd(rng, d, 0.5, 3.0);
    auto e = eigen_sym(a);
    // frame orthonormality
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double dot = 0;
        for (int k = 0; k < d; ++k) dot += e.frame[i][k] * e.frame[j][k];
        CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
      }
    // reconstruction error
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double s = 0;
        for (int k = 0; k < d; ++k) s += e.values[k] * e.frame[k][i] * e.frame[k][j];
        CHECK(std::abs(s - a(i, j)) < 1e-10);
      }
  }
}

TEST_CASE("asymmetric input is rejected") {
  SymMatrix bad(2);
  bad(0, 1) = 1.0;
  bad(1, 0) = 2.0;
  CHECK_THROWS_AS(eigen_sym(bad), NotSymmetric);
}

TEST_CASE("spectral p-norms on the documented matrices") {
  for (double p : {1.0, 0.5, -0.5, -1.0, -2.0})
    CHECK(matrix_p_norm(SymMatrix::identity(4), p) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(matrix_p_norm(SymMatrix::identity(4), 0.0) == doctest::Approx(1.0));
  SymMatrix d14 = SymMatrix::diagonal({1, 4});
  CHECK(matrix_p_norm(d14, 0.0) == doctest::Approx(2.0).epsilon(1e-10));  // det^(1/2)
  CHECK(matrix_p_norm(d14, -1.0) == doctest::Approx(8.0 / 5).epsilon(1e-12));
  CHECK(matrix_p_norm(d14, -std::numeric_limits<double>::infinity()) == doctest::Approx(1.0));
  CHECK_THROWS_AS(matrix_p_norm(SymMatrix::diagonal({-1, 2}), 1.0), NotPSD);
}

TEST_CASE("unitary invariance of the spectral norms") {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    SymMatrix a = random_pd(rng, 4, 0.3, 2.5);
    SymMatrix b = random_orthogonal_conjugate(rng, a);
    for (double p : {0.5, -0.5, -1.0, -2.0})
      CHECK(std::abs(matrix_p_norm(a, p) - matrix_p_norm(b, p)) < 1e-10);
  }
}

TEST_CASE("trace young inequality with the equality gate") {
  Rng rng(31);
  double p = -1.0, q = p / (p - 1);
  for (int t = 0; t < 50; ++t) {
    SymMatrix a = random_pd(rng, 3, 0.4, 2.0);
    SymMatrix b = random_pd(rng, 3, 0.4, 2.0);
    auto y = young_audit(a, b, p);
    CHECK(y.holds);
    // generic pairs are strict
    SymMatrix ap = matrix_power(a, p), bq = matrix_power(b, q);
    double diff = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) diff += (ap(i, j) - bq(i, j)) * (ap(i, j) - bq(i, j));
    if (std::sqrt(diff) > 1e-6) CHECK(!y.equality);
  }
  // B = A^{p/q} forces equality
  SymMatrix a = random_pd(rng, 3, 0.5, 2.0);
  auto y = young_audit(a, matrix_power(a, p / q), p);
  CHECK(y.holds);
  CHECK(y.equality);
  // A = B = I: both sides are d
  auto yi = young_audit(SymMatrix::identity(3), SymMatrix::identity(3), p);
  CHECK(yi.lhs == doctest::Approx(3.0));
  CHECK(yi.rhs == doctest::Approx(3.0));
  CHECK(yi.equality);
}

TEST_CASE("duality attainment") {
  auto r = matrix_dual_attain(SymMatrix::identity(3), -1.0);
  CHECK(r.pairing == doctest::Approx(1.0).epsilon(1e-10));
  auto d = matrix_dual_attain(SymMatrix::diagonal({1, 4}), -1.0);
  CHECK(d.pairing == doctest::Approx(8.0 / 5).epsilon(1e-8));
  CHECK(d.gap < 1e-8);
  // random feasible B never beats the attained pairing
  Rng rng(41);
  SymMatrix a = random_pd(rng, 3, 0.4, 2.5);
  double p = -1.0, q = p / (p - 1);
  auto att = matrix_dual_attain(a, p);
  for (int t = 0; t < 500; ++t) {
    SymMatrix b = random_pd(rng, 3, 0.2, 3.0);
    double bn = matrix_p_norm(b, q);
    if (bn <= 0) continue;
    double val = trace_product(a, b) / (3 * bn);
    CHECK(val >= att.pairing - 1e-8);
  }
}

TEST_CASE("trace duality inequality on random pairs") {
  Rng rng(51);
  for (double p : {-2.0, -1.0, -0.5, 0.5}) {
    double q = p / (p - 1);
    for (int t = 0; t < 100; ++t) {
      SymMatrix a = random_pd(rng, 4, 0.3, 2.0), b = random_pd(rng, 4, 0.3, 2.0);
      double lhs = trace_product(a, b) / 4;
      double rhs = matrix_p_norm(a, p) * matrix_p_norm(b, q);
      CHECK(lhs >= rhs - 1e-8 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("reverse triangle inequality for the spectral norms") {
  Rng rng(61);
  for (double p : {-2.0, -1.0, -0.5, 0.5}) {
    for (int t = 0; t < 100; ++t) {
      SymMatrix a = random_pd(rng, 3, 0.3, 2.0), b = random_pd(rng, 3, 0.3, 2.0);
      double lhs = matrix_p_norm(a + b, p);
      double rhs = matrix_p_norm(a, p) + matrix_p_norm(b, p);
      CHECK(lhs >= rhs - 1e-8 * std::max(1.0, rhs));
    }
  }
}
