#pragma once

// Gaussian quadrature rules and brute-force matrix-element oracles.  These
// are deliberately independent of the closed-form matrices in bases.hpp and
// are used by the test suite and by `verify` to check them.

#include <functional>
#include <span>
#include <vector>

#include "meixner_qm/bases.hpp"

namespace meixner_qm {

enum class RuleKind { Legendre, Hermite, Laguerre, Jacobi };

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // all positive
  RuleKind kind = RuleKind::Legendre;

  int size() const noexcept { return static_cast<int>(nodes.size()); }
  // An n-point Gaussian rule integrates polynomials of degree <= 2n - 1 exactly
  // against its weight.
  int exactness_degree() const noexcept { return 2 * size() - 1; }

  double integrate(const std::function<double(double)>& g) const;
};

inline constexpr int kDefaultLegendreNodes = 64;
inline constexpr int kDefaultHermiteNodes = 80;
inline constexpr int kDefaultLaguerreNodes = 80;

// All rules are built by Golub-Welsch from the Jacobi matrix of the weight.
QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);  // weight 1
QuadratureRule gauss_hermite(int n);                    // weight e^{-y^2}
QuadratureRule gauss_laguerre(int n, double alpha);     // weight y^alpha e^{-y}
QuadratureRule gauss_jacobi(int n, double alpha, double beta);  // (1-y)^alpha (1+y)^beta

// <phi_m | g | phi_n> with g a function of the physical coordinate, by the
// family's Gaussian rule.  nodes <= 0 selects the default node count.
double matrix_element(const BasisFamily& f, const std::function<double(double)>& g, int n,
                      int m, int nodes = 0);

// <phi_m | T | phi_n> with T's action on phi_n taken from its closed form in
// each family's natural variable.  Returns the FULL kinetic operator for
// every family (including the 1/(1 - y^2) and y^2 pieces that the split
// families fold into the potential, and the orbital term for the radial one).
double kinetic_element_oracle(const BasisFamily& f, int n, int m);

// Integral of psi_1 psi_2 with the family's measure, where
// psi_i = sum_n coeffs_i[n] phi_n.  Node count grows with the expansion length.
double state_overlap(const BasisFamily& f, std::span<const double> coeffs1,
                     std::span<const double> coeffs2);

}  // namespace meixner_qm
