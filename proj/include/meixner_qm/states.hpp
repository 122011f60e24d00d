#pragma once

// Bound states psi_k(x) = sqrt(rho(k)) sum_{n<N} M_n(k) phi_n(x) and the
// checks run on them.

#include <span>
#include <vector>

#include "meixner_qm/bases.hpp"
#include "meixner_qm/hamiltonian.hpp"
#include "meixner_qm/meixner.hpp"
#include "meixner_qm/reconstruct.hpp"

namespace meixner_qm {

inline constexpr int kMaxStateLevel = 10;

struct BoundState {
  int k = 0;
  double energy = 0.0;
  std::vector<double> coeffs;  // sqrt(rho(k)) M_n(k), n < N
  BasisFamily basis;
  // Global sign applied on evaluation: the first lobe seen from the left
  // edge of the domain is positive.
  double sign = 1.0;

  int terms() const noexcept { return static_cast<int>(coeffs.size()); }
};

// Throws DomainError for k outside [0, 10] or N outside [1, 201], and
// AccuracyError (strict guard) if any M_n(k) fails its accuracy estimate.
BoundState build_state(int k, const MeixnerParams& p, const EnergyScale& s, const BasisFamily& f,
                       int N, PrecisionGuard guard = PrecisionGuard::Strict);

// psi_k on xs (all points must lie in the basis domain).
SampledFunction eval_state(const BoundState& st, std::span<const double> xs);

// Strict sign changes across valid points, ignoring |v| < 1e-9 max|v|.
// Needs at least 400 valid points; throws DomainError on an all-zero input.
int node_count(const SampledFunction& sf);

// Relative L2 norm of -psi''/2 + (V + orbital) psi - E psi over the interior
// of a uniform grid, by 3-point central differences, normalized by |E| ||psi||.
// `potential` is the physical V (fixed part included, orbital term excluded).
double schrodinger_residual(const BoundState& st, const SampledFunction& potential,
                            const BasisFamily& f);

}  // namespace meixner_qm
