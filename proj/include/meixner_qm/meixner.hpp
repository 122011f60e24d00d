#pragma once

// Orthonormal Meixner polynomials M_n(k; mu, theta), their discrete weight
// rho(k) and the coefficients of the symmetric three-term recursion
//
//   z_k M_n = a_n M_n + b_{n-1} M_{n-1} + b_n M_{n+1},
//   z_k = (k + mu) sinh(theta),
//   a_n = (n + mu) cosh(theta),
//   b_n = -1/2 sqrt((n + 1)(n + 2 mu)).
//
// The terminating 2F1 in the closed form alternates in sign and cancels
// heavily for large n and k; both evaluation routes therefore run in
// extended precision internally and round once to double on exit.

#include <string_view>
#include <vector>

namespace meixner_qm {

// Largest polynomial degree n and lattice point k accepted by the evaluators.
inline constexpr int kMaxMeixnerIndex = 200;

// Relative error above which a Meixner value is considered unreliable.
inline constexpr double kMeixnerAccuracyLimit = 1e-8;

class MeixnerParams {
 public:
  // Throws ConstraintError unless mu > 0 and theta > 0 (both finite).
  MeixnerParams(double mu, double theta);

  double mu() const noexcept { return mu_; }
  double theta() const noexcept { return theta_; }

 private:
  double mu_;
  double theta_;
};

enum class EvalMethod { HypergeometricSum, RecursionInN };

std::string_view to_string(EvalMethod m) noexcept;

struct EvalReport {
  double value = 0.0;
  EvalMethod method = EvalMethod::HypergeometricSum;
  // Estimated relative error of `value`; always finite.
  double est_error = 0.0;
};

struct RecursionCoeffs {
  std::vector<double> a;  // diagonal, index n = 0..n_max
  std::vector<double> b;  // off-diagonal, index n = 0..n_max
};

// What to do when a value exceeds kMeixnerAccuracyLimit.
enum class PrecisionGuard { Strict, Warn };

// Reads MEIXNER_QM_PRECISION_GUARD ("strict" or "warn"); unset means strict.
// Throws DomainError on any other value.
PrecisionGuard precision_guard_from_env();

// Throws AccuracyError (Strict) or prints a warning to stderr (Warn) when
// report.est_error exceeds kMeixnerAccuracyLimit.  Returns report.value.
double enforce_accuracy(const EvalReport& report, PrecisionGuard guard);

// ln (a)_n via a log-gamma difference.  Throws DomainError for a <= 0 or n < 0.
double log_pochhammer(double a, int n);

// Closed form: sqrt((2mu)_n / n!) e^{-n theta} 2F1(-n, -k; 2mu | 1 - e^{2 theta}).
EvalReport meixner(int n, int k, const MeixnerParams& p);

// (M_0(k), ..., M_{n_max}(k)) by upward recursion in n seeded with M_0 = 1
// and the closed-form M_1.  Throws AccuracyError when the recursion would
// need more working precision than is available.
std::vector<double> meixner_by_recursion(int n_max, int k, const MeixnerParams& p);

// rho(k) = (2 sinh theta)^{2mu} ((2mu)_k / k!) e^{-2(k + mu) theta}.
double weight(int k, const MeixnerParams& p);
double log_weight(int k, const MeixnerParams& p);

// Smallest K with sum_{k > K} rho(k) < tail_tol (rigorous geometric bound).
int weight_cutoff(const MeixnerParams& p, double tail_tol);

RecursionCoeffs recursion_coeffs(int n_max, const MeixnerParams& p);

double z_of_k(int k, const MeixnerParams& p);

}  // namespace meixner_qm
