#include <doctest.h>

#include <cmath>
#include <numbers>

#include "meixner_qm/bases.hpp"
#include "meixner_qm/errors.hpp"

using namespace meixner_qm;
using std::numbers::pi;

namespace {

const BasisFamily kFamilies[] = {sine_box(1.0), gegenbauer_box(1.0, 5.0), hermite_line(1.0),
                                 laguerre_radial(1.0, 1)};

}  // namespace

TEST_CASE("constructors validate") {
  CHECK_THROWS_AS(sine_box(0.0), ConstraintError);
  CHECK_THROWS_AS(sine_box(-2.0), ConstraintError);
  CHECK_THROWS_AS(hermite_line(0.0), ConstraintError);
  CHECK_THROWS_AS(hermite_line(-1.0), ConstraintError);
  CHECK_THROWS_AS(laguerre_radial(1.0, -1), ConstraintError);
  CHECK_THROWS_AS(laguerre_radial(0.0, 1), ConstraintError);
  CHECK_THROWS_AS(gegenbauer_box(1.0, -pi * pi / 8.0 - 1e-6), ConstraintError);

  const auto g = std::get<GegenbauerBox>(gegenbauer_box(1.0, 5.0));
  CHECK(std::abs(0.5 * pi * pi * g.nu * (g.nu - 1.0) - 5.0) < 1e-12);
  CHECK(std::get<HermiteLine>(hermite_line(4.0)).lambda == 2.0);
  CHECK(std::get<LaguerreRadial>(laguerre_radial(1.0, 3)).nu == 8.0);
  CHECK(family_name(kFamilies[3]) == "laguerre_radial");
}

TEST_CASE("nu_from_V0") {
  CHECK(nu_from_V0(1.0, 0.0) == doctest::Approx(1.0));
  CHECK(nu_from_V0(1.0, 5.0) == doctest::Approx(0.5 * (1.0 + std::sqrt(1.0 + 40.0 / (pi * pi)))));
  CHECK(nu_from_V0(1.0, -pi * pi / 8.0) == doctest::Approx(0.5));
  CHECK(nu_from_V0(2.0, -pi * pi / 32.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(nu_from_V0(1.0, -2.0), ConstraintError);
  for (double V0 : {-0.5, 0.3, 5.0, 80.0}) {
    const double nu = nu_from_V0(1.5, V0);
    CHECK(nu > -0.5);
    CHECK(std::abs(0.5 * (pi / 1.5) * (pi / 1.5) * nu * (nu - 1.0) - V0) < 1e-12 * std::max(1.0, V0));
  }
}

TEST_CASE("domains") {
  const Domain s = domain(kFamilies[0]);
  CHECK(s.lo == 0.0);
  CHECK(s.hi == 1.0);
  CHECK(s.measure_factor == doctest::Approx(pi));
  CHECK(s.contains(0.0));
  CHECK_FALSE(s.interior(0.0));
  const Domain g = domain(kFamilies[1]);
  CHECK(g.lo == -0.5);
  CHECK(g.hi == 0.5);
  const Domain h = domain(kFamilies[2]);
  CHECK(std::isinf(h.lo));
  CHECK(h.measure_factor == 1.0);
  const Domain r = domain(laguerre_radial(2.0, 0));
  CHECK(r.lo == 0.0);
  CHECK(r.measure_factor == 2.0);
}

TEST_CASE("basis values") {
  CHECK(basis_eval(kFamilies[0], 0, 0.5) == doctest::Approx(std::sqrt(2.0 / pi)).epsilon(1e-15));
  CHECK(basis_eval(kFamilies[0], 3, 0.0) == 0.0);
  CHECK(basis_eval(kFamilies[0], 3, 1.0) == 0.0);
  CHECK_THROWS_AS(basis_eval(kFamilies[0], 0, 1.5), DomainError);
  CHECK_THROWS_AS(basis_eval(kFamilies[0], -1, 0.5), DomainError);

  const auto& g = std::get<GegenbauerBox>(kFamilies[1]);
  const double A0 = std::exp(log_normalization(kFamilies[1], 0));
  for (double x : {-0.4, -0.1, 0.0, 0.27}) {
    CHECK(basis_eval(kFamilies[1], 0, x) ==
          doctest::Approx(A0 * std::pow(std::cos(pi * x), g.nu)).epsilon(1e-13));
  }
  CHECK(basis_eval(kFamilies[1], 2, 0.5) == 0.0);

  // Hermite functions: h_0 = pi^{-1/4} e^{-x^2/2}, h_1 = sqrt(2) x h_0
  const double h0 = std::pow(pi, -0.25) * std::exp(-0.5 * 0.49);
  CHECK(basis_eval(kFamilies[2], 0, 0.7) == doctest::Approx(h0).epsilon(1e-14));
  CHECK(basis_eval(kFamilies[2], 1, 0.7) == doctest::Approx(std::sqrt(2.0) * 0.7 * h0).epsilon(1e-14));

  // Laguerre vanishes like r^{l+1}
  const double r1 = basis_eval(kFamilies[3], 0, 1e-3);
  const double r2 = basis_eval(kFamilies[3], 0, 2e-3);
  CHECK(r2 / r1 == doctest::Approx(4.0).epsilon(1e-2));
  CHECK(basis_eval(kFamilies[3], 4, 0.0) == 0.0);

  for (const auto& f : kFamilies) {
    const double x = std::holds_alternative<LaguerreRadial>(f) ? 2.3 : 0.31;
    const std::vector<double> all = basis_values(f, 15, x);
    for (int n = 0; n < 15; ++n) {
      CHECK(all[static_cast<std::size_t>(n)] == doctest::Approx(basis_eval(f, n, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("high-order basis values stay finite") {
  for (const auto& f : kFamilies) {
    const double x = std::holds_alternative<LaguerreRadial>(f) ? 150.0
                     : std::holds_alternative<HermiteLine>(f)  ? 18.0
                                                               : 0.45;
    for (double v : basis_values(f, 201, x)) CHECK(std::isfinite(v));
  }
}

TEST_CASE("orthonormality by adaptive quadrature") {
  for (const auto& f : kFamilies) {
    CHECK(std::abs(orthonormality_check(f, 0, 0) - 1.0) < 1e-10);
    CHECK(std::abs(orthonormality_check(f, 0, 1)) < 1e-10);
    for (int n = 0; n <= 12; n += 3) {
      for (int m = 0; m <= 12; m += 4) {
        CHECK(std::abs(orthonormality_check(f, n, m) - (n == m ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }
  for (int ell : {0, 2}) CHECK(std::abs(orthonormality_check(laguerre_radial(1.7, ell), 5, 5) - 1.0) < 1e-10);
}

TEST_CASE("kinetic matrices") {
  CHECK_THROWS_AS(kinetic_matrix(kFamilies[0], 1), SizeError);
  const Eigen::MatrixXd Ts = kinetic_matrix(kFamilies[0], 5);
  CHECK(Ts(0, 0) == doctest::Approx(pi * pi / 2));
  CHECK(Ts(0, 1) == 0.0);

  const auto& g = std::get<GegenbauerBox>(kFamilies[1]);
  const Eigen::MatrixXd Tg = kinetic_matrix(kFamilies[1], 4);
  CHECK(Tg(3, 3) == doctest::Approx(0.5 * pi * pi * (3 + g.nu) * (3 + g.nu)));
  CHECK(Tg(1, 2) == 0.0);

  const Eigen::MatrixXd Th = kinetic_matrix(kFamilies[2], 6);
  for (int n = 0; n < 6; ++n) CHECK(Th(n, n) == doctest::Approx((2 * n + 1) / 2.0));

  const Eigen::MatrixXd Tl = kinetic_matrix(kFamilies[3], 10);
  CHECK(Tl(0, 0) == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
  CHECK(Tl(1, 0) == doctest::Approx(1.0 / (4.0 * std::sqrt(5.0))).epsilon(1e-15));
  CHECK((Tl - Tl.transpose()).cwiseAbs().maxCoeff() == 0.0);
  // lambda^2 scaling
  const Eigen::MatrixXd Tl2 = kinetic_matrix(laguerre_radial(2.0, 1), 10);
  CHECK((Tl2 - 4.0 * Tl).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("fixed potential parts") {
  CHECK(fixed_potential_part(kFamilies[0], 0.3) == 0.0);
  CHECK(fixed_potential_part(kFamilies[1], 0.0) == doctest::Approx(5.0));
  CHECK(fixed_potential_part(kFamilies[2], 2.0) == doctest::Approx(2.0));
  CHECK(fixed_potential_part(hermite_line(2.0), 1.5) == doctest::Approx(0.5 * (2.0 * 1.5) * (2.0 * 1.5)));
  CHECK(fixed_potential_part(kFamilies[3], 2.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(fixed_potential_part(kFamilies[1], 0.5), SingularityError);
  CHECK_THROWS_AS(fixed_potential_part(kFamilies[3], 0.0), SingularityError);
  CHECK(fixed_potential_part(laguerre_radial(1.0, 0), 0.0) == 0.0);
  CHECK_THROWS_AS(fixed_potential_part(kFamilies[0], -0.1), DomainError);
}

TEST_CASE("natural energy scales") {
  CHECK(natural_energy_scale(kFamilies[0]).value() == doctest::Approx(pi * pi));
  CHECK(natural_energy_scale(gegenbauer_box(2.0, 1.0)).value() == doctest::Approx(pi * pi / 4));
  CHECK(natural_energy_scale(hermite_line(3.0)).value() == doctest::Approx(3.0));
  CHECK(natural_energy_scale(laguerre_radial(0.5, 2)).value() == doctest::Approx(0.25));
}
