#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "meixner_qm/errors.hpp"
#include "meixner_qm/meixner.hpp"

using namespace meixner_qm;

namespace {

const MeixnerParams kFig1(1.2, 0.7);
const MeixnerParams kFig2(2.5, 1.0);
const MeixnerParams kFig3(1.5, 0.5);
const MeixnerParams kFig4(0.7, 0.5);
const MeixnerParams kAll[] = {kFig1, kFig2, kFig3, kFig4};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("params reject nonpositive mu and theta") {
  CHECK_THROWS_AS(MeixnerParams(0.0, 1.0), ConstraintError);
  CHECK_THROWS_AS(MeixnerParams(1.0, -1.0), ConstraintError);
  CHECK_THROWS_AS(MeixnerParams(-0.5, 0.3), ConstraintError);
  CHECK_THROWS_AS(MeixnerParams(1.0, NAN), ConstraintError);
  CHECK_NOTHROW(MeixnerParams(1e-3, 1e-3));
}

TEST_CASE("log_pochhammer") {
  CHECK(log_pochhammer(2.4, 0) == 0.0);
  CHECK(log_pochhammer(1.0, 5) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(log_pochhammer(2.4, 3) == doctest::Approx(std::log(2.4 * 3.4 * 4.4)).epsilon(1e-14));
  CHECK_THROWS_AS(log_pochhammer(0.0, 2), DomainError);
  CHECK_THROWS_AS(log_pochhammer(-1.0, 2), DomainError);
  CHECK_THROWS_AS(log_pochhammer(1.0, -1), DomainError);

  // direct product for a range of arguments
  for (double a : {0.3, 1.7, 5.25}) {
    double prod = 1.0;
    for (int n = 0; n < 15; ++n) {
      CHECK(std::exp(log_pochhammer(a, n)) == doctest::Approx(prod).epsilon(1e-12));
      prod *= a + n;
    }
  }
}

TEST_CASE("meixner closed-form special values") {
  for (const auto& p : kAll) {
    for (int k : {0, 3, 17, 120}) CHECK(meixner(0, k, p).value == 1.0);
    for (int n : {1, 2, 9, 40}) {
      const double expect = std::exp(0.5 * (log_pochhammer(2 * p.mu(), n) - std::lgamma(n + 1.0)) -
                                     n * p.theta());
      CHECK(rel(meixner(n, 0, p).value, expect) < 1e-13);
    }
  }
  // two-term 2F1: 1 + (-1)(-1) z / (2 mu) with z = 1 - e^{2 theta}
  const double expect = std::sqrt(2.4) * std::exp(-0.7) * (1.0 + (1.0 - std::exp(1.4)) / 2.4);
  const EvalReport r = meixner(1, 1, kFig1);
  CHECK(rel(r.value, expect) < 1e-14);
  CHECK(r.method == EvalMethod::HypergeometricSum);
  CHECK(std::isfinite(r.est_error));
  CHECK(r.est_error < kMeixnerAccuracyLimit);
}

TEST_CASE("meixner index range") {
  CHECK_THROWS_AS(meixner(-1, 0, kFig1), DomainError);
  CHECK_THROWS_AS(meixner(0, 201, kFig1), DomainError);
  CHECK_THROWS_AS(meixner_by_recursion(201, 0, kFig1), DomainError);
  const EvalReport far = meixner(200, 200, kFig2);
  CHECK(std::isfinite(far.value));
  CHECK(far.est_error < kMeixnerAccuracyLimit);
}

TEST_CASE("meixner symmetric in n and k after weighting") {
  // sqrt(rho(k)) M_n(k) / sqrt(rho(n)) = M_k(n): the unitary matrix is symmetric
  for (const auto& p : kAll) {
    for (int n = 0; n < 30; n += 3) {
      for (int k = 0; k < 30; k += 4) {
        const double u_nk = std::sqrt(weight(k, p)) * meixner(n, k, p).value;
        const double u_kn = std::sqrt(weight(n, p)) * meixner(k, n, p).value;
        CHECK(std::abs(u_nk - u_kn) < 1e-14);
      }
    }
  }
}

TEST_CASE("recursion in n") {
  CHECK(meixner_by_recursion(0, 4, kFig1) == std::vector<double>{1.0});
  const auto k0 = meixner_by_recursion(2, 0, kFig3);
  for (int n = 0; n <= 2; ++n) CHECK(rel(k0[static_cast<std::size_t>(n)], meixner(n, 0, kFig3).value) < 1e-14);
  const auto seq = meixner_by_recursion(30, 5, kFig1);
  REQUIRE(seq.size() == 31);
  for (int n = 0; n <= 30; ++n) {
    const double ref = meixner(n, 5, kFig1).value;
    CHECK(std::abs(seq[static_cast<std::size_t>(n)] - ref) <= 1e-10 * std::abs(ref));
  }
}

TEST_CASE("weight") {
  const double w0 = std::pow(2.0 * std::sinh(0.7), 2.4) * std::exp(-2.4 * 0.7);
  CHECK(rel(weight(0, kFig1), w0) < 1e-14);
  for (const auto& p : kAll) {
    double sum = 0.0;
    for (int k = 0; k < 400; ++k) {
      const double w = weight(k, p);
      CHECK(w > 0.0);
      sum += w;
      if (w < 1e-18 && k > 10) break;
    }
    CHECK(std::abs(sum - 1.0) < 1e-13);
    CHECK(std::abs(std::exp(log_weight(7, p)) - weight(7, p)) < 1e-15);
  }
  // no overflow far out in k
  CHECK(weight(200, kFig4) > 0.0);
  CHECK(std::isfinite(log_weight(200, kFig2)));
}

TEST_CASE("weight_cutoff bounds the tail") {
  for (const auto& p : kAll) {
    const int K = weight_cutoff(p, 1e-14);
    double tail = 0.0;
    for (int k = K + 1; k < K + 500; ++k) tail += weight(k, p);
    CHECK(tail < 1e-14);
    double below = 0.0;
    for (int k = K; k < K + 500; ++k) below += weight(k, p);
    CHECK(below > 0.0);
  }
}

TEST_CASE("recursion coefficients") {
  const RecursionCoeffs rc = recursion_coeffs(10, kFig1);
  REQUIRE(rc.a.size() == 11);
  REQUIRE(rc.b.size() == 11);
  CHECK(rel(rc.a[0], 1.2 * std::cosh(0.7)) < 1e-15);
  CHECK(rel(rc.b[0], -0.5 * std::sqrt(2.4)) < 1e-15);
  for (int n = 0; n <= 10; ++n) {
    const auto i = static_cast<std::size_t>(n);
    CHECK(rc.b[i] < 0.0);
    CHECK(rel(rc.b[i] * rc.b[i], 0.25 * (n + 1) * (n + 2.4)) < 1e-14);
    if (n > 0) CHECK(rc.a[i] > rc.a[i - 1]);
  }
}

TEST_CASE("z_of_k") {
  CHECK(rel(z_of_k(0, kFig1), 1.2 * std::sinh(0.7)) < 1e-15);
  CHECK(z_of_k(0, MeixnerParams(1e-300, 0.5)) < 1e-299);
  for (int k = 0; k < 20; ++k) {
    CHECK(std::abs(z_of_k(k + 1, kFig2) - z_of_k(k, kFig2) - std::sinh(1.0)) < 1e-13);
  }
}

TEST_CASE("three-term recursion residual") {
  for (const auto& p : kAll) {
    const RecursionCoeffs rc = recursion_coeffs(31, p);
    for (int k = 0; k <= 30; ++k) {
      const double z = z_of_k(k, p);
      for (int n = 0; n <= 30; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const double mn = meixner(n, k, p).value;
        const double lower = n > 0 ? rc.b[i - 1] * meixner(n - 1, k, p).value : 0.0;
        const double r = z * mn - rc.a[i] * mn - lower - rc.b[i] * meixner(n + 1, k, p).value;
        CHECK(std::abs(r) <= 1e-10 * std::max(1.0, std::abs(z * mn)));
      }
    }
  }
}

TEST_CASE("dual orthonormality at N = 60") {
  for (const auto& p : kAll) {
    for (int k = 0; k <= 3; ++k) {
      for (int kk = 0; kk <= k; ++kk) {
        double s = 0.0;
        for (int n = 0; n <= 60; ++n) s += meixner(n, k, p).value * meixner(n, kk, p).value;
        s *= std::sqrt(weight(k, p) * weight(kk, p));
        CHECK(std::abs(s - (k == kk ? 1.0 : 0.0)) < 1e-4);
      }
    }
  }
}

TEST_CASE("accuracy guard") {
  EvalReport bad{1.0, EvalMethod::HypergeometricSum, 1e-3};
  CHECK_THROWS_AS(enforce_accuracy(bad, PrecisionGuard::Strict), AccuracyError);
  CHECK(enforce_accuracy(bad, PrecisionGuard::Warn) == 1.0);
  EvalReport good{2.0, EvalMethod::RecursionInN, 1e-15};
  CHECK(enforce_accuracy(good, PrecisionGuard::Strict) == 2.0);
  CHECK(to_string(EvalMethod::RecursionInN) == "recursion-in-n");
  CHECK(to_string(EvalMethod::HypergeometricSum) == "hypergeometric-sum");
}

TEST_CASE("precision guard from environment") {
  ::unsetenv("MEIXNER_QM_PRECISION_GUARD");
  CHECK(precision_guard_from_env() == PrecisionGuard::Strict);
  ::setenv("MEIXNER_QM_PRECISION_GUARD", "warn", 1);
  CHECK(precision_guard_from_env() == PrecisionGuard::Warn);
  ::setenv("MEIXNER_QM_PRECISION_GUARD", "strict", 1);
  CHECK(precision_guard_from_env() == PrecisionGuard::Strict);
  ::setenv("MEIXNER_QM_PRECISION_GUARD", "sloppy", 1);
  CHECK_THROWS_AS(precision_guard_from_env(), DomainError);
  ::unsetenv("MEIXNER_QM_PRECISION_GUARD");
}
