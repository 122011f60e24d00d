#include "meixner_qm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "meixner_qm/errors.hpp"

namespace meixner_qm {

namespace {

using std::numbers::pi;

// Jacobi matrix of a weight: diagonal a_j and off-diagonal b_{j+1}, plus the
// total mass mu0 of the weight.
struct JacobiMatrix {
  std::vector<double> a;  // size n
  std::vector<double> b;  // size n - 1
  double mu0 = 1.0;
};

struct OrthoEval {
  double q_n;       // q_n(x), scaled
  double dq_n;      // q_n'(x), same scale
  double sum_sq;    // sum_{j<n} q_j(x)^2, scaled by scale^2
  double log_scale; // q values carry a common factor e^{-log_scale}
};

// Orthonormal polynomials of the normalized weight by
// b_{j+1} q_{j+1} = (x - a_j) q_j - b_j q_{j-1}, q_0 = 1.
OrthoEval ortho_eval(const JacobiMatrix& J, double x, double b_last) {
  const int n = static_cast<int>(J.a.size());
  constexpr double kBig = 1e100;
  double q_prev = 0.0;
  double q = 1.0;
  double dq_prev = 0.0;
  double dq = 0.0;
  double sum = 0.0;
  double log_scale = 0.0;
  for (int j = 0; j < n; ++j) {
    sum += q * q;
    const double b_j = j > 0 ? J.b[static_cast<std::size_t>(j - 1)] : 0.0;
    const double b_next = j + 1 < n ? J.b[static_cast<std::size_t>(j)] : b_last;
    const double a_j = J.a[static_cast<std::size_t>(j)];
    const double q_next = ((x - a_j) * q - b_j * q_prev) / b_next;
    const double dq_next = (q + (x - a_j) * dq - b_j * dq_prev) / b_next;
    q_prev = q;
    q = q_next;
    dq_prev = dq;
    dq = dq_next;
    if (std::abs(q) > kBig || std::abs(dq) > kBig) {
      q /= kBig;
      q_prev /= kBig;
      dq /= kBig;
      dq_prev /= kBig;
      sum /= kBig * kBig;
      log_scale += std::log(kBig);
    }
  }
  return {q, dq, sum, log_scale};
}

// Golub-Welsch nodes, polished by Newton on q_n, with Christoffel weights
// mu0 / sum_j q_j(x)^2.  Eigenvector-based weights lose all relative accuracy
// in the far tails of Hermite/Laguerre rules; the Christoffel form does not.
QuadratureRule golub_welsch(const JacobiMatrix& J, double b_last, RuleKind kind) {
  const int n = static_cast<int>(J.a.size());
  if (n < 1) throw SizeError("quadrature rule needs at least one node");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = J.a[static_cast<std::size_t>(i)];
  for (int i = 0; i + 1 < n; ++i) sub(i) = J.b[static_cast<std::size_t>(i)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  QuadratureRule rule;
  rule.kind = kind;
  rule.nodes.reserve(static_cast<std::size_t>(n));
  rule.weights.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const OrthoEval e = ortho_eval(J, x, b_last);
      if (e.dq_n == 0.0) break;
      const double step = e.q_n / e.dq_n;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    const OrthoEval e = ortho_eval(J, x, b_last);
    rule.nodes.push_back(x);
    rule.weights.push_back(J.mu0 / e.sum_sq * std::exp(-2.0 * e.log_scale));
  }
  return rule;
}

void check_nodes(int n) {
  if (n < 1) throw SizeError("quadrature rule needs at least one node");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

int resolve_nodes(const BasisFamily& f, int nodes) {
  if (nodes > 0) return nodes;
  if (std::holds_alternative<SineBox>(f) || std::holds_alternative<GegenbauerBox>(f)) {
    return kDefaultLegendreNodes;
  }
  if (std::holds_alternative<HermiteLine>(f)) return kDefaultHermiteNodes;
  return kDefaultLaguerreNodes;
}

// Rule in the family's natural variable whose weight is exactly the
// polynomial weight of the basis (not used for the sine box).
QuadratureRule natural_rule(const BasisFamily& f, int nodes) {
  return std::visit(
      Overloaded{
          [nodes](const SineBox& b) { return gauss_legendre(nodes, 0.0, b.a); },
          [nodes](const GegenbauerBox& b) {
            return gauss_jacobi(nodes, b.nu - 0.5, b.nu - 0.5);
          },
          [nodes](const HermiteLine&) { return gauss_hermite(nodes); },
          [nodes](const LaguerreRadial& b) { return gauss_laguerre(nodes, b.nu); },
      },
      f);
}

double coordinate_of(const BasisFamily& f, double y) {
  return std::visit(Overloaded{
                        [y](const SineBox&) { return y; },
                        [y](const GegenbauerBox& b) { return b.a / pi * std::asin(y); },
                        [y](const HermiteLine& b) { return y / b.lambda; },
                        [y](const LaguerreRadial& b) { return y / b.lambda; },
                    },
                    f);
}

}  // namespace

double QuadratureRule::integrate(const std::function<double(double)>& g) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * g(nodes[i]);
  return acc;
}

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  check_nodes(n);
  if (!(lo < hi)) throw DomainError("gauss_legendre requires lo < hi");
  JacobiMatrix J;
  J.a.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 1; j < n; ++j) J.b.push_back(j / std::sqrt(4.0 * j * j - 1.0));
  J.mu0 = 2.0;
  QuadratureRule rule = golub_welsch(J, n / std::sqrt(4.0 * n * n - 1.0), RuleKind::Legendre);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule gauss_hermite(int n) {
  check_nodes(n);
  JacobiMatrix J;
  J.a.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 1; j < n; ++j) J.b.push_back(std::sqrt(0.5 * j));
  J.mu0 = std::sqrt(pi);
  return golub_welsch(J, std::sqrt(0.5 * n), RuleKind::Hermite);
}

QuadratureRule gauss_laguerre(int n, double alpha) {
  check_nodes(n);
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre requires alpha > -1");
  JacobiMatrix J;
  for (int j = 0; j < n; ++j) J.a.push_back(2.0 * j + alpha + 1.0);
  for (int j = 1; j < n; ++j) J.b.push_back(std::sqrt(j * (j + alpha)));
  J.mu0 = std::tgamma(alpha + 1.0);
  return golub_welsch(J, std::sqrt(n * (n + alpha)), RuleKind::Laguerre);
}

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  check_nodes(n);
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("gauss_jacobi requires alpha, beta > -1");
  }
  const double ab = alpha + beta;
  auto diag = [&](int j) {
    if (j == 0) return (beta - alpha) / (ab + 2.0);
    const double s = 2.0 * j + ab;
    return (beta * beta - alpha * alpha) / (s * (s + 2.0));
  };
  auto off = [&](int j) {  // b_j, j >= 1
    const double s = 2.0 * j + ab;
    if (j == 1) {
      return std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
    }
    return std::sqrt(4.0 * j * (j + alpha) * (j + beta) * (j + ab) /
                     (s * s * (s + 1.0) * (s - 1.0)));
  };
  JacobiMatrix J;
  for (int j = 0; j < n; ++j) J.a.push_back(diag(j));
  for (int j = 1; j < n; ++j) J.b.push_back(off(j));
  J.mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                   std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  return golub_welsch(J, off(n), RuleKind::Jacobi);
}

double matrix_element(const BasisFamily& f, const std::function<double(double)>& g, int n,
                      int m, int nodes) {
  if (n < 0 || m < 0) throw DomainError("basis index must be nonnegative");
  const QuadratureRule rule = natural_rule(f, resolve_nodes(f, nodes));
  const int top = std::max(n, m) + 1;
  const auto ni = static_cast<std::size_t>(n);
  const auto mi = static_cast<std::size_t>(m);

  double acc = 0.0;
  if (std::holds_alternative<SineBox>(f)) {
    const double measure = domain(f).measure_factor;
    for (int i = 0; i < rule.size(); ++i) {
      const double x = rule.nodes[static_cast<std::size_t>(i)];
      const std::vector<double> v = basis_values(f, top, x);
      const double gx = g(x);
      if (!std::isfinite(gx)) throw OracleError("matrix_element: integrand not finite");
      acc += rule.weights[static_cast<std::size_t>(i)] * v[ni] * v[mi] * gx * measure;
    }
    return acc;
  }
  for (int i = 0; i < rule.size(); ++i) {
    const double y = rule.nodes[static_cast<std::size_t>(i)];
    const std::vector<double> p = basis_polynomials(f, top, y);
    const double gx = g(coordinate_of(f, y));
    if (!std::isfinite(gx)) throw OracleError("matrix_element: integrand not finite");
    acc += rule.weights[static_cast<std::size_t>(i)] * p[ni] * p[mi] * gx;
  }
  return acc;
}

double kinetic_element_oracle(const BasisFamily& f, int n, int m) {
  if (n < 0 || m < 0) throw DomainError("basis index must be nonnegative");
  const int top = std::max(n, m) + 1;
  const auto ni = static_cast<std::size_t>(n);
  const auto mi = static_cast<std::size_t>(m);

  return std::visit(
      Overloaded{
          // T phi_n = 1/2 ((n+1) pi / a)^2 phi_n
          [&](const SineBox& b) {
            const double kn = (n + 1) * pi / b.a;
            const int nodes = std::max(kDefaultLegendreNodes, 4 * top + 20);
            return matrix_element(
                f, [kn](double) { return 0.5 * kn * kn; }, n, m, nodes);
          },
          // T phi_n = -(pi^2/2a^2) A_n (1-y^2)^{nu/2} [nu(nu-1)/(1-y^2) - (n+nu)^2] C_n
          [&](const GegenbauerBox& b) {
            const double scale = 0.5 * pi * pi / (b.a * b.a);
            const int nodes = kDefaultLegendreNodes;
            const QuadratureRule base = gauss_jacobi(nodes, b.nu - 0.5, b.nu - 0.5);
            double diag_part = 0.0;
            for (int i = 0; i < base.size(); ++i) {
              const std::vector<double> p =
                  basis_polynomials(f, top, base.nodes[static_cast<std::size_t>(i)]);
              diag_part += base.weights[static_cast<std::size_t>(i)] * p[ni] * p[mi];
            }
            double result = scale * (n + b.nu) * (n + b.nu) * diag_part;
            const double coupling = b.nu * (b.nu - 1.0);
            if (coupling != 0.0) {
              if (!(b.nu > 0.5)) {
                throw OracleError("<m|1/(1-y^2)|n> diverges for nu <= 1/2");
              }
              const QuadratureRule singular = gauss_jacobi(nodes, b.nu - 1.5, b.nu - 1.5);
              double inv_part = 0.0;
              for (int i = 0; i < singular.size(); ++i) {
                const std::vector<double> p =
                    basis_polynomials(f, top, singular.nodes[static_cast<std::size_t>(i)]);
                inv_part += singular.weights[static_cast<std::size_t>(i)] * p[ni] * p[mi];
              }
              result -= scale * coupling * inv_part;
            }
            return result;
          },
          // T phi_n = -(lambda^2/2) A_n e^{-y^2/2} [y^2 - (2n+1)] H_n
          [&](const HermiteLine& b) {
            const QuadratureRule rule = gauss_hermite(kDefaultHermiteNodes);
            double acc = 0.0;
            for (int i = 0; i < rule.size(); ++i) {
              const double y = rule.nodes[static_cast<std::size_t>(i)];
              const std::vector<double> p = basis_polynomials(f, top, y);
              acc += rule.weights[static_cast<std::size_t>(i)] * p[mi] *
                     (y * y - (2.0 * n + 1.0)) * p[ni];
            }
            return -0.5 * b.lambda * b.lambda * acc;
          },
          // -(2/lambda^2) T phi_n = A_n y^{l+1} e^{-y/2} { [-n/y^2 - (n+l+1)/y + 1/4] L_n
          //                                               + (n+2l+2)/y^2 L_{n-1} }
          // Against phi_m the weight becomes y^{2l} e^{-y} after clearing 1/y^2.
          [&](const LaguerreRadial& b) {
            const QuadratureRule rule = gauss_laguerre(kDefaultLaguerreNodes, 2.0 * b.ell);
            const double l = b.ell;
            const double lower_ratio =
                n > 0 ? std::exp(log_normalization(f, n) - log_normalization(f, n - 1)) : 0.0;
            double acc = 0.0;
            for (int i = 0; i < rule.size(); ++i) {
              const double y = rule.nodes[static_cast<std::size_t>(i)];
              const std::vector<double> p = basis_polynomials(f, top, y);
              const double lower = n > 0 ? lower_ratio * p[ni - 1] : 0.0;  // A_n L_{n-1}
              const double action = (-n - (n + l + 1.0) * y + 0.25 * y * y) * p[ni] +
                                    (n + 2.0 * l + 2.0) * lower;
              acc += rule.weights[static_cast<std::size_t>(i)] * p[mi] * action;
            }
            return -0.5 * b.lambda * b.lambda * acc;
          },
      },
      f);
}

double state_overlap(const BasisFamily& f, std::span<const double> coeffs1,
                     std::span<const double> coeffs2) {
  const int N = static_cast<int>(std::max(coeffs1.size(), coeffs2.size()));
  if (N == 0) return 0.0;
  const bool sine = std::holds_alternative<SineBox>(f);
  const int nodes = sine ? kDefaultLegendreNodes + 4 * N : std::max(resolve_nodes(f, 0), N + 10);
  const QuadratureRule rule = natural_rule(f, nodes);
  const double measure = sine ? domain(f).measure_factor : 1.0;

  auto combine = [](std::span<const double> c, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * v[j];
    return s;
  };
  double acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[static_cast<std::size_t>(i)];
    const std::vector<double> v = sine ? basis_values(f, N, t) : basis_polynomials(f, N, t);
    acc += rule.weights[static_cast<std::size_t>(i)] * combine(coeffs1, v) * combine(coeffs2, v) *
           measure;
  }
  return acc;
}

}  // namespace meixner_qm
