#pragma once

// Individual invariant checks.  `verify` strings these together for a
// scenario; each one is also usable on its own.

#include <span>
#include <string>
#include <vector>

#include "meixner_qm/bases.hpp"
#include "meixner_qm/hamiltonian.hpp"
#include "meixner_qm/meixner.hpp"
#include "meixner_qm/reconstruct.hpp"

namespace meixner_qm {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  bool gating = true;  // informational checks never fail the run
  std::string detail;
};

// |sum_k rho(k) - 1| with the sum cut where the tail drops below 1e-14.
CheckResult check_weight_normalization(const MeixnerParams& p);

// max_{n,m <= n_max} |sum_k rho M_n M_m - delta_nm|.  The k-sum runs until
// rho(k) max_n M_n(k)^2 is negligible (at most k = 200).
CheckResult check_meixner_orthonormality(const MeixnerParams& p, int n_max = 25);

// max |z M_n - a_n M_n - b_{n-1} M_{n-1} - b_n M_{n+1}| / max(1, |z M_n|).
CheckResult check_recursion_residual(const MeixnerParams& p, int n_max = 30, int k_max = 30);

// Relative disagreement of the closed form and upward recursion in n.
CheckResult check_cross_method(const MeixnerParams& p, int nk_max = 60);

// Truncated eigenvector residual at N for every level.
CheckResult check_eigencheck(const MeixnerParams& p, const EnergyScale& s,
                             std::span<const int> levels, int N = 60);

// Residual at N, 2N, 4N: each doubling may grow it by at most 10%.
CheckResult check_eigencheck_monotone(const MeixnerParams& p, const EnergyScale& s,
                                      std::span<const int> levels, int N = 30);

// E_k against c sinh(theta) (k + mu), and constant spacing.
CheckResult check_spectrum_linearity(const MeixnerParams& p, const EnergyScale& s, int k_max);

// max_{n,m <= n_max} |<phi_n|phi_m> - delta_nm| by adaptive quadrature.
CheckResult check_basis_orthonormality(const BasisFamily& f, int n_max = 12);

// Analytic kinetic matrix against the quadrature oracle.  For the Gegenbauer
// and Hermite families the analytic potential term is added back to the
// oracle before comparing with the diagonal Ttilde.
CheckResult check_kinetic_matrix(const BasisFamily& f, int n_max = 8);

// The potential term removed from the Gegenbauer and Hermite kinetic
// operators, as a matrix in the basis: V0 <m|1/(1-y^2)|n> and
// (V0/2) <m|y^2|n>.  Zero for the other families.
Eigen::MatrixXd fixed_part_matrix(const BasisFamily& f, int N);

// sup-norm change of the reconstructed potential between N1 and N2 terms.
CheckResult check_reconstruction_convergence(const BasisFamily& f, const MeixnerParams& p,
                                             const EnergyScale& s, int N1, int N2,
                                             std::span<const double> grid, ColumnSelect column);

CheckResult check_node_theorem(const BasisFamily& f, const MeixnerParams& p, const EnergyScale& s,
                               std::span<const int> levels, int N, std::span<const double> grid,
                               PrecisionGuard guard = PrecisionGuard::Strict);

CheckResult check_state_orthonormality(const BasisFamily& f, const MeixnerParams& p,
                                       const EnergyScale& s, std::span<const int> levels, int N,
                                       PrecisionGuard guard = PrecisionGuard::Strict);

// sup-norm change of psi_k on the grid between N1 and N2 terms.
CheckResult check_series_stability(const BasisFamily& f, const MeixnerParams& p,
                                   const EnergyScale& s, std::span<const int> levels, int N1,
                                   int N2, std::span<const double> grid,
                                   PrecisionGuard guard = PrecisionGuard::Strict);

// Physical potential on the grid from an N-term reconstruction: the analytic
// term is added back for the Gegenbauer and Hermite families, and the orbital
// term stays out for the radial family.
SampledFunction physical_potential(const BasisFamily& f, const MeixnerParams& p,
                                   const EnergyScale& s, int N, std::span<const double> grid,
                                   ColumnSelect column);

// Worst Schroedinger residual over the levels, with psi_k and V built from N terms.
CheckResult check_schrodinger_residual(const BasisFamily& f, const MeixnerParams& p,
                                       const EnergyScale& s, std::span<const int> levels, int N,
                                       std::span<const double> grid, ColumnSelect column,
                                       double threshold,
                                       PrecisionGuard guard = PrecisionGuard::Strict);

}  // namespace meixner_qm
