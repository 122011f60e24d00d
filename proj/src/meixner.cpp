#include "meixner_qm/meixner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "meixner_qm/errors.hpp"

namespace meixner_qm {

namespace {

namespace bmp = boost::multiprecision;

// Working precisions, in decimal digits.  The cheapest one that meets the
// cancellation estimate is used.
using Wide50 = bmp::number<bmp::cpp_bin_float<50>, bmp::et_off>;
using Wide150 = bmp::number<bmp::cpp_bin_float<150>, bmp::et_off>;
using Wide500 = bmp::number<bmp::cpp_bin_float<500>, bmp::et_off>;

constexpr double kDoubleEps = std::numeric_limits<double>::epsilon();

void check_index(int v, const char* what) {
  if (v < 0 || v > kMaxMeixnerIndex) {
    throw DomainError(std::string(what) + " = " + std::to_string(v) +
                      " outside supported range [0, " +
                      std::to_string(kMaxMeixnerIndex) + "]");
  }
}

struct WideResult {
  double value;
  double rel_error;  // relative error of the extended-precision result
};

// Neumaier-compensated running sum.
template <class Real>
struct CompensatedSum {
  Real sum = 0;
  Real carry = 0;
  void add(const Real& x) {
    const Real t = sum + x;
    if (bmp::abs(sum) >= bmp::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  Real value() const { return sum + carry; }
};

template <class Real>
Real meixner_prefactor(int n, const Real& two_mu, const Real& theta) {
  Real ratio = 1;
  for (int i = 0; i < n; ++i) ratio *= (two_mu + i) / Real(i + 1);
  return bmp::sqrt(ratio) * bmp::exp(-Real(n) * theta);
}

// Terms of 2F1(-n, -k; 2mu | z) are generated by their exact ratio; positive
// and negative terms go to separate accumulators so that the cancellation
// ratio sum|t| / |sum t| is known exactly.
template <class Real>
WideResult hypergeometric_meixner(int n, int k, double mu, double theta) {
  const Real two_mu = Real(2) * Real(mu);
  const Real th(theta);
  const Real z = Real(1) - bmp::exp(Real(2) * th);
  const int jmax = std::min(n, k);

  CompensatedSum<Real> positive;
  CompensatedSum<Real> negative;
  Real term = 1;
  positive.add(term);
  for (int j = 1; j <= jmax; ++j) {
    term *= Real(j - 1 - n) * Real(j - 1 - k) / ((two_mu + (j - 1)) * Real(j)) * z;
    if (term >= 0) {
      positive.add(term);
    } else {
      negative.add(term);
    }
  }
  const Real total = positive.value() + negative.value();
  const Real magnitude = positive.value() - negative.value();
  const Real eps = std::numeric_limits<Real>::epsilon();

  // Floor the denominator so the estimate stays finite on exact zeros.
  const Real floor = eps * magnitude;
  const Real denom = bmp::abs(total) > floor ? Real(bmp::abs(total)) : floor;
  const Real rel = eps * Real(jmax + 1) * magnitude / denom + eps * Real(2 * n + 8);

  const Real value = meixner_prefactor(n, two_mu, th) * total;
  return {static_cast<double>(value), static_cast<double>(rel)};
}

template <class Real>
std::vector<double> recursion_meixner(int n_max, int k, double mu, double theta) {
  const Real two_mu = Real(2) * Real(mu);
  const Real th(theta);
  const Real ch = bmp::cosh(th);
  const Real zk = (Real(k) + Real(mu)) * bmp::sinh(th);

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  Real prev = 1;
  out.push_back(1.0);
  if (n_max == 0) return out;

  // Closed form of M_1: sqrt(2mu) e^{-theta} (1 + k (1 - e^{2 theta}) / (2mu)).
  Real cur = bmp::sqrt(two_mu) * bmp::exp(-th) *
             (Real(1) + Real(k) * (Real(1) - bmp::exp(Real(2) * th)) / two_mu);
  out.push_back(static_cast<double>(cur));

  Real b_prev = -bmp::sqrt(two_mu) / 2;  // b_0
  for (int n = 1; n < n_max; ++n) {
    const Real a_n = (Real(n) + Real(mu)) * ch;
    const Real b_n = -bmp::sqrt(Real(n + 1) * (Real(n) + two_mu)) / 2;
    const Real next = ((zk - a_n) * cur - b_prev * prev) / b_n;
    prev = cur;
    cur = next;
    b_prev = b_n;
    out.push_back(static_cast<double>(cur));
  }
  return out;
}

}  // namespace

MeixnerParams::MeixnerParams(double mu, double theta) : mu_(mu), theta_(theta) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw ConstraintError("Meixner parameter mu must be positive and finite, got " +
                          std::to_string(mu));
  }
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw ConstraintError("Meixner parameter theta must be positive and finite, got " +
                          std::to_string(theta));
  }
}

std::string_view to_string(EvalMethod m) noexcept {
  switch (m) {
    case EvalMethod::HypergeometricSum:
      return "hypergeometric-sum";
    case EvalMethod::RecursionInN:
      return "recursion-in-n";
  }
  return "unknown";
}

PrecisionGuard precision_guard_from_env() {
  const char* raw = std::getenv("MEIXNER_QM_PRECISION_GUARD");
  if (raw == nullptr || *raw == '\0') return PrecisionGuard::Strict;
  const std::string v(raw);
  if (v == "strict") return PrecisionGuard::Strict;
  if (v == "warn") return PrecisionGuard::Warn;
  throw DomainError("MEIXNER_QM_PRECISION_GUARD must be 'strict' or 'warn', got '" + v + "'");
}

double enforce_accuracy(const EvalReport& report, PrecisionGuard guard) {
  if (report.est_error > kMeixnerAccuracyLimit) {
    const std::string msg = "Meixner value " + std::to_string(report.value) +
                            " has estimated relative error " +
                            std::to_string(report.est_error);
    if (guard == PrecisionGuard::Strict) throw AccuracyError(msg);
    std::cerr << "warning: " << msg << '\n';
  }
  return report.value;
}

double log_pochhammer(double a, int n) {
  if (!(a > 0.0)) {
    throw DomainError("log_pochhammer requires a > 0, got " + std::to_string(a));
  }
  if (n < 0) throw DomainError("log_pochhammer requires n >= 0");
  if (n == 0) return 0.0;
  return std::lgamma(a + n) - std::lgamma(a);
}

EvalReport meixner(int n, int k, const MeixnerParams& p) {
  check_index(n, "n");
  check_index(k, "k");

  // Escalate precision until the cancellation estimate is negligible
  // against double rounding.
  constexpr double kWideTarget = 1e-20;
  WideResult r = hypergeometric_meixner<Wide50>(n, k, p.mu(), p.theta());
  if (r.rel_error > kWideTarget) {
    r = hypergeometric_meixner<Wide150>(n, k, p.mu(), p.theta());
  }
  if (r.rel_error > kWideTarget) {
    r = hypergeometric_meixner<Wide500>(n, k, p.mu(), p.theta());
  }
  return {r.value, EvalMethod::HypergeometricSum, r.rel_error + kDoubleEps};
}

std::vector<double> meixner_by_recursion(int n_max, int k, const MeixnerParams& p) {
  check_index(n_max, "n_max");
  check_index(k, "k");

  // The minimal solution decays like e^{-n theta} while the dominant one
  // grows like e^{n theta}; relative accuracy is lost at ~2 theta n / ln 10
  // digits over n_max steps.
  const double digits_needed = 2.0 * p.theta() * n_max / std::log(10.0) + 25.0;
  if (digits_needed <= 45.0) return recursion_meixner<Wide50>(n_max, k, p.mu(), p.theta());
  if (digits_needed <= 145.0) return recursion_meixner<Wide150>(n_max, k, p.mu(), p.theta());
  if (digits_needed <= 495.0) return recursion_meixner<Wide500>(n_max, k, p.mu(), p.theta());
  throw AccuracyError("upward Meixner recursion to n = " + std::to_string(n_max) +
                      " at theta = " + std::to_string(p.theta()) +
                      " needs more than 500 working digits");
}

double log_weight(int k, const MeixnerParams& p) {
  if (k < 0) throw DomainError("weight requires k >= 0");
  const double two_mu = 2.0 * p.mu();
  return two_mu * std::log(2.0 * std::sinh(p.theta())) + log_pochhammer(two_mu, k) -
         std::lgamma(k + 1.0) - 2.0 * (k + p.mu()) * p.theta();
}

double weight(int k, const MeixnerParams& p) { return std::exp(log_weight(k, p)); }

int weight_cutoff(const MeixnerParams& p, double tail_tol) {
  if (!(tail_tol > 0.0)) throw DomainError("weight_cutoff requires a positive tolerance");
  const double two_mu = 2.0 * p.mu();
  const double decay = std::exp(-2.0 * p.theta());
  constexpr int kMaxCutoff = 10'000'000;
  for (int K = 0; K < kMaxCutoff; ++K) {
    const int next = K + 1;
    // rho(k+1)/rho(k) = (2mu + k)/(k + 1) e^{-2 theta}: decreasing in k for
    // 2mu >= 1, increasing towards e^{-2 theta} otherwise.
    const double ratio = two_mu >= 1.0 ? (two_mu + next) / (next + 1.0) * decay : decay;
    if (ratio >= 1.0) continue;
    const double tail = std::exp(log_weight(next, p)) / (1.0 - ratio);
    if (tail < tail_tol) return K;
  }
  throw DomainError("weight_cutoff: tail does not fall below tolerance");
}

RecursionCoeffs recursion_coeffs(int n_max, const MeixnerParams& p) {
  if (n_max < 0) throw DomainError("recursion_coeffs requires n_max >= 0");
  RecursionCoeffs rc;
  rc.a.reserve(static_cast<std::size_t>(n_max) + 1);
  rc.b.reserve(static_cast<std::size_t>(n_max) + 1);
  const double ch = std::cosh(p.theta());
  for (int n = 0; n <= n_max; ++n) {
    rc.a.push_back((n + p.mu()) * ch);
    rc.b.push_back(-0.5 * std::sqrt((n + 1.0) * (n + 2.0 * p.mu())));
  }
  return rc;
}

double z_of_k(int k, const MeixnerParams& p) {
  if (k < 0) throw DomainError("z_of_k requires k >= 0");
  return (k + p.mu()) * std::sinh(p.theta());
}

}  // namespace meixner_qm
