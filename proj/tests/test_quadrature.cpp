#include <doctest.h>

#include <cmath>
#include <numbers>

#include "meixner_qm/bases.hpp"
#include "meixner_qm/checks.hpp"
#include "meixner_qm/errors.hpp"
#include "meixner_qm/quadrature.hpp"

using namespace meixner_qm;
using std::numbers::pi;

TEST_CASE("Gauss-Legendre integrates monomials to its degree") {
  const QuadratureRule r = gauss_legendre(10);
  CHECK(r.kind == RuleKind::Legendre);
  CHECK(r.exactness_degree() == 19);
  for (double w : r.weights) CHECK(w > 0.0);
  for (int d = 0; d <= 19; ++d) {
    const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
    CHECK(std::abs(r.integrate([d](double y) { return std::pow(y, d); }) - exact) < 1e-12);
  }
  const QuadratureRule s = gauss_legendre(8, 0.0, 2.0);
  CHECK(std::abs(s.integrate([](double x) { return x * x * x; }) - 4.0) < 1e-12);
}

TEST_CASE("Gauss-Hermite moments") {
  const QuadratureRule r = gauss_hermite(12);
  for (int d = 0; d <= 23; d += 2) {
    // integral y^d e^{-y^2} = Gamma((d+1)/2)
    CHECK(std::abs(r.integrate([d](double y) { return std::pow(y, d); }) - std::tgamma((d + 1) / 2.0)) <
          1e-12 * std::max(1.0, std::tgamma((d + 1) / 2.0)));
  }
  CHECK(std::abs(r.integrate([](double y) { return y * y * y; })) < 1e-12);
}

TEST_CASE("Gauss-Laguerre moments") {
  for (double alpha : {0.0, 2.0, 4.5}) {
    const QuadratureRule r = gauss_laguerre(10, alpha);
    for (int d = 0; d <= 19; ++d) {
      const double exact = std::tgamma(d + alpha + 1.0);
      CHECK(std::abs(r.integrate([d](double y) { return std::pow(y, d); }) - exact) <= 1e-12 * exact);
    }
  }
  CHECK_THROWS_AS(gauss_laguerre(5, -1.0), DomainError);
}

TEST_CASE("Gauss-Jacobi moments") {
  for (double a : {-0.4, 0.13, 1.7}) {
    const QuadratureRule r = gauss_jacobi(9, a, a);
    const double mu0 = std::pow(2.0, 2 * a + 1) * std::tgamma(a + 1) * std::tgamma(a + 1) / std::tgamma(2 * a + 2);
    CHECK(std::abs(r.integrate([](double) { return 1.0; }) - mu0) < 1e-12 * mu0);
    // second moment of the symmetric weight: mu0 / (2a + 3)
    CHECK(std::abs(r.integrate([](double y) { return y * y; }) - mu0 / (2 * a + 3)) < 1e-12 * mu0);
  }
  const QuadratureRule r = gauss_jacobi(6, 1.0, 0.0);
  // integral (1-y) y^2 over [-1,1] = 2/3
  CHECK(std::abs(r.integrate([](double y) { return y * y; }) - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("matrix elements") {
  for (const auto& f : {sine_box(1.0), gegenbauer_box(1.0, 5.0), hermite_line(1.0), laguerre_radial(1.0, 1)}) {
    for (int n = 0; n <= 12; n += 4) {
      for (int m = 0; m <= 12; m += 3) {
        CHECK(std::abs(matrix_element(f, [](double) { return 1.0; }, n, m) - (n == m)) < 1e-10);
      }
    }
  }
  const BasisFamily h = hermite_line(1.0);
  CHECK(matrix_element(h, [](double x) { return x * x; }, 0, 0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(matrix_element(h, [](double x) { return x * x; }, 2, 0) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-13));

  const BasisFamily s = sine_box(1.0);
  auto c2 = [](double x) { return std::cos(2 * pi * x); };
  CHECK(std::abs(matrix_element(s, c2, 0, 2) - 0.5) < 1e-12);
  CHECK(std::abs(matrix_element(s, c2, 0, 0) + 0.5) < 1e-12);
  CHECK(std::abs(matrix_element(s, c2, 0, 1)) < 1e-12);
}

TEST_CASE("kinetic oracle, sine box") {
  for (double a : {1.0, 2.5}) {
    const BasisFamily s = sine_box(a);
    for (int n = 0; n <= 10; ++n) {
      for (int m = 0; m <= 10; ++m) {
        const double expect = n == m ? 0.5 * std::pow((n + 1) * pi / a, 2) : 0.0;
        CHECK(std::abs(kinetic_element_oracle(s, n, m) - expect) < 1e-10 * std::max(1.0, expect));
      }
    }
  }
}

TEST_CASE("kinetic oracle, radial family") {
  CHECK(std::abs(kinetic_element_oracle(laguerre_radial(1.0, 1), 0, 0) - 1.0 / 8.0) < 1e-8);
  for (int ell : {0, 1, 2}) {
    for (double lambda : {1.0, 0.6}) {
      const BasisFamily f = laguerre_radial(lambda, ell);
      const Eigen::MatrixXd T = kinetic_matrix(f, 9);
      for (int n = 0; n <= 8; ++n) {
        for (int m = 0; m <= 8; ++m) CHECK(std::abs(kinetic_element_oracle(f, n, m) - T(m, n)) < 1e-8);
      }
    }
  }
}

TEST_CASE("kinetic oracle, Hermite ladder algebra") {
  const BasisFamily h = hermite_line(1.0);
  CHECK(std::abs(kinetic_element_oracle(h, 2, 0) + 0.5 * std::sqrt(2.0) / 2.0) < 1e-10);
  CHECK(std::abs(kinetic_element_oracle(h, 0, 0) - 0.25) < 1e-10);
  for (int n = 0; n <= 10; ++n) {
    for (int m = 0; m <= 10; ++m) {
      // full T = (lambda^2/2)[(2n+1) delta - <m|y^2|n>]
      double y2 = 0.0;
      if (n == m) y2 = (2 * n + 1) / 2.0;
      if (m == n + 2) y2 = 0.5 * std::sqrt((n + 1.0) * (n + 2.0));
      if (n == m + 2) y2 = 0.5 * std::sqrt((m + 1.0) * (m + 2.0));
      const double expect = 0.5 * ((n == m ? 2 * n + 1.0 : 0.0) - y2);
      CHECK(std::abs(kinetic_element_oracle(h, n, m) - expect) < 1e-10);
    }
  }
  for (double V0 : {1.0, 2.7}) CHECK(check_kinetic_matrix(hermite_line(V0), 10).passed);
}

TEST_CASE("kinetic oracle, Gegenbauer splitting") {
  for (double V0 : {5.0, 0.0, 12.0}) {
    const CheckResult r = check_kinetic_matrix(gegenbauer_box(1.0, V0), 8);
    CHECK_MESSAGE(r.passed, "V0 = " << V0 << " measured " << r.measured);
  }
  CHECK_THROWS_AS(kinetic_element_oracle(gegenbauer_box(1.0, -pi * pi / 8), 0, 0), OracleError);
}

TEST_CASE("state overlap") {
  const BasisFamily f = hermite_line(1.0);
  const std::vector<double> a{0.6, 0.8, 0.0};
  const std::vector<double> b{0.8, -0.6};
  CHECK(std::abs(state_overlap(f, a, a) - 1.0) < 1e-12);
  CHECK(std::abs(state_overlap(f, a, b)) < 1e-12);
}
