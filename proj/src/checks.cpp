#include "meixner_qm/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "meixner_qm/errors.hpp"
#include "meixner_qm/quadrature.hpp"
#include "meixner_qm/states.hpp"

namespace meixner_qm {

namespace {

CheckResult make(std::string name, double measured, double threshold, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured;
  r.threshold = threshold;
  r.passed = std::isfinite(measured) && measured <= threshold;
  r.detail = std::move(detail);
  return r;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::vector<double> closed_form_column(int n_max, int k, const MeixnerParams& p) {
  std::vector<double> m(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) m[static_cast<std::size_t>(n)] = meixner(n, k, p).value;
  return m;
}

PotentialMatrix potential_at(const BasisFamily& f, const MeixnerParams& p, const EnergyScale& s,
                             int N) {
  return potential_matrix(hamiltonian_matrix(N, p, s), kinetic_matrix(f, N), f,
                          natural_potential_kind(f));
}

}  // namespace

CheckResult check_weight_normalization(const MeixnerParams& p) {
  const int K = weight_cutoff(p, 1e-14);
  double sum = 0.0;
  double comp = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double y = weight(k, p) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return make("weight_normalization", std::abs(sum - 1.0), 1e-12,
              "k-sum to " + std::to_string(K));
}

CheckResult check_meixner_orthonormality(const MeixnerParams& p, int n_max) {
  const auto dim = static_cast<std::size_t>(n_max + 1);
  std::vector<double> gram(dim * dim, 0.0);
  const int k_floor = weight_cutoff(p, 1e-14);
  int k = 0;
  for (; k <= kMaxMeixnerIndex; ++k) {
    const double rho = weight(k, p);
    const std::vector<double> m = closed_form_column(n_max, k, p);
    double peak = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      peak = std::max(peak, rho * m[i] * m[i]);
      for (std::size_t j = 0; j <= i; ++j) gram[i * dim + j] += rho * m[i] * m[j];
    }
    if (k >= k_floor && peak < 1e-17) break;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      worst = std::max(worst, std::abs(gram[i * dim + j] - (i == j ? 1.0 : 0.0)));
    }
  }
  return make("meixner_orthonormality", worst, 1e-8,
              "n,m <= " + std::to_string(n_max) + ", k-sum to " + std::to_string(std::min(k, kMaxMeixnerIndex)));
}

CheckResult check_recursion_residual(const MeixnerParams& p, int n_max, int k_max) {
  const RecursionCoeffs rc = recursion_coeffs(n_max + 1, p);
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    const std::vector<double> m = closed_form_column(n_max + 1, k, p);
    const double z = z_of_k(k, p);
    for (int n = 0; n <= n_max; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const double lower = n > 0 ? rc.b[i - 1] * m[i - 1] : 0.0;
      const double r = z * m[i] - rc.a[i] * m[i] - lower - rc.b[i] * m[i + 1];
      worst = std::max(worst, std::abs(r) / std::max(1.0, std::abs(z * m[i])));
    }
  }
  return make("recursion_residual", worst, 1e-10,
              "n <= " + std::to_string(n_max) + ", k <= " + std::to_string(k_max));
}

CheckResult check_cross_method(const MeixnerParams& p, int nk_max) {
  double worst = 0.0;
  for (int k = 0; k <= nk_max; ++k) {
    const std::vector<double> rec = meixner_by_recursion(nk_max, k, p);
    for (int n = 0; n <= nk_max; ++n) {
      const double ref = meixner(n, k, p).value;
      const double diff = std::abs(rec[static_cast<std::size_t>(n)] - ref);
      worst = std::max(worst, ref == 0.0 ? diff : diff / std::abs(ref));
    }
  }
  return make("cross_method", worst, 1e-10, "n, k <= " + std::to_string(nk_max));
}

CheckResult check_eigencheck(const MeixnerParams& p, const EnergyScale& s,
                             std::span<const int> levels, int N) {
  double worst = 0.0;
  for (int k : levels) worst = std::max(worst, eigencheck(N, p, s, k).residual);
  return make("eigencheck", worst, 1e-6, "N = " + std::to_string(N));
}

CheckResult check_eigencheck_monotone(const MeixnerParams& p, const EnergyScale& s,
                                      std::span<const int> levels, int N) {
  double worst_ratio = 0.0;
  std::string detail;
  for (int k : levels) {
    const double r1 = eigencheck(N, p, s, k).residual;
    const double r2 = eigencheck(2 * N, p, s, k).residual;
    const double r4 = eigencheck(4 * N, p, s, k).residual;
    auto ratio = [](double lo_n, double hi_n) {
      if (hi_n == 0.0) return 0.0;
      return lo_n == 0.0 ? INFINITY : hi_n / lo_n;
    };
    worst_ratio = std::max({worst_ratio, ratio(r1, r2), ratio(r2, r4)});
    detail += "k=" + std::to_string(k) + ": " + sci(r1) + " " + sci(r2) + " " + sci(r4) + "; ";
  }
  return make("eigencheck_monotone", worst_ratio, 1.1, detail);
}

CheckResult check_spectrum_linearity(const MeixnerParams& p, const EnergyScale& s, int k_max) {
  const double step = s.value() * std::sinh(p.theta());
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    const double expect = step * (k + p.mu());
    const double e = energy(k, p, s);
    worst = std::max(worst, std::abs(e - expect) / std::abs(expect));
    if (k > 0) {
      const double gap = e - energy(k - 1, p, s);
      worst = std::max(worst, std::abs(gap - step) / std::abs(e));
    }
  }
  return make("spectrum_linearity", worst, 1e-14, "k <= " + std::to_string(k_max));
}

CheckResult check_basis_orthonormality(const BasisFamily& f, int n_max) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      worst = std::max(worst, std::abs(orthonormality_check(f, n, m) - (n == m ? 1.0 : 0.0)));
    }
  }
  return make("basis_orthonormality", worst, 1e-8, "n,m <= " + std::to_string(n_max));
}

Eigen::MatrixXd fixed_part_matrix(const BasisFamily& f, int N) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  if (const auto* g = std::get_if<GegenbauerBox>(&f)) {
    if (g->nu <= 0.5) throw OracleError("V0/cos^2 matrix needs nu > 1/2");
    const QuadratureRule rule = gauss_jacobi(64 + N, g->nu - 1.5, g->nu - 1.5);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const std::vector<double> pn = basis_polynomials(f, N, rule.nodes[j]);
      for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
          M(a, b) += rule.weights[j] * pn[static_cast<std::size_t>(a)] * pn[static_cast<std::size_t>(b)];
        }
      }
    }
    M *= g->V0;
  } else if (const auto* h = std::get_if<HermiteLine>(&f)) {
    const double lam = h->lambda;
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b <= a; ++b) {
        const double y2 = matrix_element(f, [lam](double x) { return lam * lam * x * x; }, a, b);
        M(a, b) = M(b, a) = 0.5 * h->V0 * y2;
      }
    }
  }
  return M;
}

CheckResult check_kinetic_matrix(const BasisFamily& f, int n_max) {
  const int N = n_max + 1;
  const Eigen::MatrixXd analytic = kinetic_matrix(f, std::max(N, 2));
  const Eigen::MatrixXd extra = fixed_part_matrix(f, N);
  double worst = 0.0;
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) {
      const double oracle = kinetic_element_oracle(f, n, m) + extra(m, n);
      worst = std::max(worst, std::abs(oracle - analytic(m, n)));
    }
  }
  const bool tight = std::holds_alternative<SineBox>(f) || std::holds_alternative<HermiteLine>(f);
  return make("kinetic_vs_oracle", worst, tight ? 1e-10 : 1e-8,
              std::string(family_name(f)) + ", n,m <= " + std::to_string(n_max));
}

CheckResult check_reconstruction_convergence(const BasisFamily& f, const MeixnerParams& p,
                                             const EnergyScale& s, int N1, int N2,
                                             std::span<const double> grid, ColumnSelect column) {
  const SampledFunction v1 = reconstruct_potential(potential_at(f, p, s, N1), grid, column);
  const SampledFunction v2 = reconstruct_potential(potential_at(f, p, s, N2), grid, column);
  double worst = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!v1.valid[i] || !v2.valid[i]) continue;
    worst = std::max(worst, std::abs(v1.vals[i] - v2.vals[i]));
    ++used;
  }
  if (used == 0) worst = INFINITY;
  return make("reconstruction_convergence", worst, 1e-3,
              "N " + std::to_string(N1) + " -> " + std::to_string(N2) + ", " +
                  std::to_string(used) + " valid points");
}

CheckResult check_node_theorem(const BasisFamily& f, const MeixnerParams& p, const EnergyScale& s,
                               std::span<const int> levels, int N, std::span<const double> grid,
                               PrecisionGuard guard) {
  int mismatches = 0;
  std::string detail = "N = " + std::to_string(N) + ", nodes:";
  for (int k : levels) {
    const int nodes = node_count(eval_state(build_state(k, p, s, f, N, guard), grid));
    detail += " k" + std::to_string(k) + "=" + std::to_string(nodes);
    if (nodes != k) ++mismatches;
  }
  return make("node_theorem", mismatches, 0.0, detail);
}

CheckResult check_state_orthonormality(const BasisFamily& f, const MeixnerParams& p,
                                       const EnergyScale& s, std::span<const int> levels, int N,
                                       PrecisionGuard guard) {
  std::vector<BoundState> states;
  for (int k : levels) states.push_back(build_state(k, p, s, f, N, guard));
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      // the sign flips are a common factor of the coefficients
      const double ov = states[i].sign * states[j].sign *
                        state_overlap(f, states[i].coeffs, states[j].coeffs);
      const double target = states[i].k == states[j].k ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(ov - target));
    }
  }
  return make("state_orthonormality", worst, 1e-3, "N = " + std::to_string(N));
}

CheckResult check_series_stability(const BasisFamily& f, const MeixnerParams& p,
                                   const EnergyScale& s, std::span<const int> levels, int N1,
                                   int N2, std::span<const double> grid, PrecisionGuard guard) {
  double worst = 0.0;
  std::string detail = "N " + std::to_string(N1) + " -> " + std::to_string(N2) + ":";
  for (int k : levels) {
    const SampledFunction a = eval_state(build_state(k, p, s, f, N1, guard), grid);
    const SampledFunction b = eval_state(build_state(k, p, s, f, N2, guard), grid);
    double d = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) d = std::max(d, std::abs(a.vals[i] - b.vals[i]));
    detail += " k" + std::to_string(k) + "=" + sci(d);
    worst = std::max(worst, d);
  }
  return make("series_stability", worst, 1e-3, detail);
}

SampledFunction physical_potential(const BasisFamily& f, const MeixnerParams& p,
                                   const EnergyScale& s, int N, std::span<const double> grid,
                                   ColumnSelect column) {
  const SampledFunction v = reconstruct_potential(potential_at(f, p, s, N), grid, column);
  if (std::holds_alternative<LaguerreRadial>(f)) return v;
  return with_fixed_part(v, f);
}

CheckResult check_schrodinger_residual(const BasisFamily& f, const MeixnerParams& p,
                                       const EnergyScale& s, std::span<const int> levels, int N,
                                       std::span<const double> grid, ColumnSelect column,
                                       double threshold, PrecisionGuard guard) {
  const SampledFunction v = physical_potential(f, p, s, N, grid, column);
  double worst = 0.0;
  std::string detail = "N = " + std::to_string(N) + ":";
  for (int k : levels) {
    const double r = schrodinger_residual(build_state(k, p, s, f, N, guard), v, f);
    detail += " k" + std::to_string(k) + "=" + sci(r);
    worst = std::max(worst, r);
  }
  return make("schrodinger_residual", worst, threshold, detail);
}

}  // namespace meixner_qm
