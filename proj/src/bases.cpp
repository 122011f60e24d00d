#include "meixner_qm/bases.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "meixner_qm/errors.hpp"
#include "meixner_qm/meixner.hpp"

namespace meixner_qm {

namespace {

using std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Raw polynomial values carried as mantissa * e^{log_scale} so that fast
// growing families (H_n at large |y|) never overflow mid-recurrence.
struct Scaled {
  double mantissa;
  double log_scale;

  double value(double extra_log) const {
    if (mantissa == 0.0) return 0.0;
    return mantissa * std::exp(log_scale + extra_log);
  }
};

// P_{n+1} = next(n, P_n, P_{n-1}).
template <class Next>
std::vector<Scaled> scaled_recurrence(int N, double p0, double p1, Next next) {
  constexpr double kRescale = 1e200;
  const double log_rescale = std::log(kRescale);
  std::vector<Scaled> out;
  out.reserve(static_cast<std::size_t>(N));
  double prev = p0;
  double cur = p1;
  double log_scale = 0.0;
  if (N > 0) out.push_back({p0, 0.0});
  if (N > 1) out.push_back({p1, 0.0});
  for (int n = 1; n + 1 < N; ++n) {
    double nxt = next(n, cur, prev);
    prev = cur;
    cur = nxt;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += log_rescale;
    }
    out.push_back({cur, log_scale});
  }
  return out;
}

// C_n^nu normalized to 1 at y = 1: (n + 2nu) C_{n+1} = 2(n + nu) y C_n - n C_{n-1}.
std::vector<Scaled> gegenbauer_raw(int N, double nu, double y) {
  return scaled_recurrence(N, 1.0, y, [nu, y](int n, double c, double cm1) {
    return (2.0 * (n + nu) * y * c - n * cm1) / (n + 2.0 * nu);
  });
}

// Physicists' Hermite: H_{n+1} = 2y H_n - 2n H_{n-1}.
std::vector<Scaled> hermite_raw(int N, double y) {
  return scaled_recurrence(N, 1.0, 2.0 * y, [y](int n, double h, double hm1) {
    return 2.0 * y * h - 2.0 * n * hm1;
  });
}

// (n + 1) L_{n+1} = (2n + nu + 1 - y) L_n - (n + nu) L_{n-1}.
std::vector<Scaled> laguerre_raw(int N, double nu, double y) {
  return scaled_recurrence(N, 1.0, 1.0 + nu - y, [nu, y](int n, double l, double lm1) {
    return ((2.0 * n + nu + 1.0 - y) * l - (n + nu) * lm1) / (n + 1.0);
  });
}

void check_count(int N) {
  if (N < 0) throw DomainError("basis index count must be nonnegative");
}

void check_in_domain(const BasisFamily& f, double x) {
  const Domain d = domain(f);
  if (!std::isfinite(x) || !d.contains(x)) {
    throw DomainError("coordinate " + std::to_string(x) + " outside the " +
                      std::string(family_name(f)) + " domain");
  }
}

}  // namespace

BasisFamily sine_box(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ConstraintError("SineBox requires a > 0");
  return SineBox{a};
}

BasisFamily gegenbauer_box(double a, double V0) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ConstraintError("GegenbauerBox requires a > 0");
  return GegenbauerBox{a, V0, nu_from_V0(a, V0)};
}

BasisFamily hermite_line(double V0) {
  if (!(V0 > 0.0) || !std::isfinite(V0)) throw ConstraintError("HermiteLine requires V0 > 0");
  return HermiteLine{V0, std::sqrt(V0)};
}

BasisFamily laguerre_radial(double lambda, int ell) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConstraintError("LaguerreRadial requires lambda > 0");
  }
  if (ell < 0) throw ConstraintError("LaguerreRadial requires ell >= 0");
  return LaguerreRadial{lambda, ell, 2.0 * (ell + 1)};
}

double nu_from_V0(double a, double V0) {
  if (!(a > 0.0)) throw ConstraintError("nu_from_V0 requires a > 0");
  const double disc = 1.0 + 8.0 * V0 * a * a / (pi * pi);
  if (!(disc >= 0.0) || !std::isfinite(disc)) {
    throw ConstraintError("V0 = " + std::to_string(V0) +
                          " is below the Gegenbauer bound -(pi/a)^2/8");
  }
  return 0.5 * (1.0 + std::sqrt(disc));
}

std::string_view family_name(const BasisFamily& f) noexcept {
  return std::visit(Overloaded{
                        [](const SineBox&) { return std::string_view("sine_box"); },
                        [](const GegenbauerBox&) { return std::string_view("gegenbauer_box"); },
                        [](const HermiteLine&) { return std::string_view("hermite_line"); },
                        [](const LaguerreRadial&) { return std::string_view("laguerre_radial"); },
                    },
                    f);
}

bool Domain::contains(double x) const noexcept { return x >= lo && x <= hi; }
bool Domain::interior(double x) const noexcept { return x > lo && x < hi; }

Domain domain(const BasisFamily& f) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(Overloaded{
                        [](const SineBox& b) { return Domain{0.0, b.a, pi / b.a}; },
                        [](const GegenbauerBox& b) {
                          return Domain{-0.5 * b.a, 0.5 * b.a, pi / b.a};
                        },
                        [](const HermiteLine& b) { return Domain{-inf, inf, b.lambda}; },
                        [](const LaguerreRadial& b) { return Domain{0.0, inf, b.lambda}; },
                    },
                    f);
}

double natural_variable(const BasisFamily& f, double x) {
  return std::visit(Overloaded{
                        [x](const SineBox& b) { return x / b.a; },
                        [x](const GegenbauerBox& b) { return boost::math::sin_pi(x / b.a); },
                        [x](const HermiteLine& b) { return b.lambda * x; },
                        [x](const LaguerreRadial& b) { return b.lambda * x; },
                    },
                    f);
}

EnergyScale natural_energy_scale(const BasisFamily& f) {
  return std::visit(Overloaded{
                        [](const SineBox& b) { return EnergyScale(pi * pi / (b.a * b.a)); },
                        [](const GegenbauerBox& b) { return EnergyScale(pi * pi / (b.a * b.a)); },
                        [](const HermiteLine& b) { return EnergyScale(b.V0); },
                        [](const LaguerreRadial& b) { return EnergyScale(b.lambda * b.lambda); },
                    },
                    f);
}

double log_normalization(const BasisFamily& f, int n) {
  if (n < 0) throw DomainError("basis index must be nonnegative");
  return std::visit(
      Overloaded{
          [](const SineBox&) { return 0.5 * std::log(2.0 / pi); },
          [n](const GegenbauerBox& b) {
            const double nu = b.nu;
            return 0.5 * (std::log(2.0) + std::log(n + nu) + std::lgamma(n + 2.0 * nu) -
                          std::lgamma(n + 1.0)) -
                   nu * std::log(2.0) - std::lgamma(nu + 0.5);
          },
          [n](const HermiteLine&) {
            return -0.5 * (0.5 * std::log(pi) + n * std::log(2.0) + std::lgamma(n + 1.0));
          },
          [n](const LaguerreRadial& b) {
            return 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + b.nu + 1.0));
          },
      },
      f);
}

std::vector<double> basis_values(const BasisFamily& f, int N, double x) {
  check_count(N);
  check_in_domain(f, x);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N));

  if (const auto* box = std::get_if<SineBox>(&f)) {
    const double amp = std::sqrt(2.0 / pi);
    for (int n = 0; n < N; ++n) out.push_back(amp * boost::math::sin_pi((n + 1) * x / box->a));
    return out;
  }

  std::vector<Scaled> raw;
  double log_envelope = 0.0;
  std::visit(Overloaded{
                 [](const SineBox&) {},
                 [&](const GegenbauerBox& b) {
                   const double y = boost::math::sin_pi(x / b.a);
                   const double c = boost::math::cos_pi(x / b.a);
                   raw = gegenbauer_raw(N, b.nu, y);
                   log_envelope = c > 0.0 ? b.nu * std::log(c)
                                          : -std::numeric_limits<double>::infinity();
                 },
                 [&](const HermiteLine& b) {
                   const double y = b.lambda * x;
                   raw = hermite_raw(N, y);
                   log_envelope = -0.5 * y * y;
                 },
                 [&](const LaguerreRadial& b) {
                   const double y = b.lambda * x;
                   raw = laguerre_raw(N, b.nu, y);
                   log_envelope = y > 0.0 ? 0.5 * b.nu * std::log(y) - 0.5 * y
                                          : -std::numeric_limits<double>::infinity();
                 },
             },
             f);
  for (int n = 0; n < N; ++n) {
    out.push_back(raw[static_cast<std::size_t>(n)].value(log_normalization(f, n) + log_envelope));
  }
  return out;
}

double basis_eval(const BasisFamily& f, int n, double x) {
  if (n < 0) throw DomainError("basis index must be nonnegative");
  return basis_values(f, n + 1, x).back();
}

std::vector<double> basis_polynomials(const BasisFamily& f, int N, double y) {
  check_count(N);
  std::vector<Scaled> raw = std::visit(
      Overloaded{
          [](const SineBox&) -> std::vector<Scaled> {
            throw DomainError("the sine box basis has no polynomial part");
          },
          [&](const GegenbauerBox& b) { return gegenbauer_raw(N, b.nu, y); },
          [&](const HermiteLine&) { return hermite_raw(N, y); },
          [&](const LaguerreRadial& b) { return laguerre_raw(N, b.nu, y); },
      },
      f);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    out.push_back(raw[static_cast<std::size_t>(n)].value(log_normalization(f, n)));
  }
  return out;
}

Eigen::MatrixXd kinetic_matrix(const BasisFamily& f, int N) {
  if (N < 2) throw SizeError("kinetic_matrix requires N >= 2, got " + std::to_string(N));
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(N, N);
  std::visit(Overloaded{
                 [&](const SineBox& b) {
                   for (int n = 0; n < N; ++n) {
                     const double kn = (n + 1) * pi / b.a;
                     T(n, n) = 0.5 * kn * kn;
                   }
                 },
                 [&](const GegenbauerBox& b) {
                   const double scale = 0.5 * pi * pi / (b.a * b.a);
                   for (int n = 0; n < N; ++n) T(n, n) = scale * (n + b.nu) * (n + b.nu);
                 },
                 [&](const HermiteLine& b) {
                   const double l2 = b.lambda * b.lambda;
                   for (int n = 0; n < N; ++n) T(n, n) = 0.5 * l2 * (2.0 * n + 1.0);
                 },
                 [&](const LaguerreRadial& b) {
                   const double quarter = 0.25 * b.lambda * b.lambda;
                   const int shift = 2 * b.ell + 2;
                   const double denom = 2.0 * b.ell + 3.0;
                   for (int n = 0; n < N; ++n) {
                     T(n, n) = quarter * (0.5 + 2.0 * n / denom);
                     for (int m = n + 1; m < N; ++m) {
                       // sqrt((n+1)_{2l+2} / (m+1)_{2l+2}) (1 + 2n/(2l+3)), m > n
                       const double ratio = std::exp(
                           0.5 * (log_pochhammer(n + 1.0, shift) - log_pochhammer(m + 1.0, shift)));
                       T(m, n) = quarter * ratio * (1.0 + 2.0 * n / denom);
                       T(n, m) = T(m, n);
                     }
                   }
                 },
             },
             f);
  return T;
}

double fixed_potential_part(const BasisFamily& f, double x) {
  check_in_domain(f, x);
  return std::visit(Overloaded{
                        [](const SineBox&) { return 0.0; },
                        [x](const GegenbauerBox& b) {
                          const double c = boost::math::cos_pi(x / b.a);
                          if (c == 0.0) {
                            throw SingularityError("V0/cos^2(pi x/a) diverges at the box wall");
                          }
                          return b.V0 / (c * c);
                        },
                        [x](const HermiteLine& b) {
                          const double y = b.lambda * x;
                          return 0.5 * b.V0 * y * y;
                        },
                        [x](const LaguerreRadial& b) {
                          if (b.ell == 0) return 0.0;
                          if (x == 0.0) {
                            throw SingularityError("orbital term l(l+1)/2r^2 diverges at r = 0");
                          }
                          return 0.5 * b.ell * (b.ell + 1.0) / (x * x);
                        },
                    },
                    f);
}

double orthonormality_check(const BasisFamily& f, int n, int m) {
  if (n < 0 || m < 0) throw DomainError("basis index must be nonnegative");
  const Domain d = domain(f);
  const int top = std::max(n, m) + 1;
  auto integrand = [&](double x) {
    const std::vector<double> v = basis_values(f, top, x);
    return v[static_cast<std::size_t>(n)] * v[static_cast<std::size_t>(m)] * d.measure_factor;
  };
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  if (std::holds_alternative<HermiteLine>(f)) {
    // Split at the origin so each half-line transform sees a one-sided tail.
    return gauss_kronrod<double, 61>::integrate(integrand, d.lo, 0.0, 20, 1e-13, &err) +
           gauss_kronrod<double, 61>::integrate(integrand, 0.0, d.hi, 20, 1e-13, &err);
  }
  if (const auto* lag = std::get_if<LaguerreRadial>(&f)) {
    // phi_n phi_m ~ y^{nu+n+m} e^{-y}: nothing left past this point.
    const double y_end = 4.0 * top + 2.0 * lag->nu + 80.0;
    return gauss_kronrod<double, 61>::integrate(integrand, 0.0, y_end / lag->lambda, 20, 1e-13,
                                                &err);
  }
  if (std::holds_alternative<GegenbauerBox>(f)) {
    // cos^{2 nu} at the walls is not smooth for non-integer nu.
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(integrand, d.lo, d.hi, 1e-13);
  }
  return gauss_kronrod<double, 61>::integrate(integrand, d.lo, d.hi, 20, 1e-13, &err);
}

}  // namespace meixner_qm
