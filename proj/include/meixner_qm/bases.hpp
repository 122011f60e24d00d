#pragma once

// Four orthonormal configuration-space bases and their kinetic-energy
// matrices:
//
//   SineBox         phi_n(x) = sqrt(2/pi) sin((n+1) pi x / a),        0 <= x <= a
//   GegenbauerBox   phi_n(x) = A_n (1 - y^2)^{nu/2} C_n^nu(y),         y = sin(pi x / a)
//   HermiteLine     phi_n(x) = A_n e^{-y^2/2} H_n(y),                   y = lambda x
//   LaguerreRadial  phi_n(r) = A_n y^{nu/2} e^{-y/2} L_n^nu(y),         y = lambda r
//
// C_n^nu is normalized to C_n^nu(1) = 1, i.e. 2F1(-n, n + 2nu; nu + 1/2 | (1 - y)/2).
// Each family is orthonormal under its own constant measure factor
// ((pi/a) dx, (pi/a) dx, lambda dx, lambda dr).

#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "meixner_qm/hamiltonian.hpp"

namespace meixner_qm {

struct SineBox {
  double a;  // box length
};

// V(x) = V0 / cos^2(pi x / a) + Vtilde(x); nu solves 1/2 (pi/a)^2 nu (nu - 1) = V0.
struct GegenbauerBox {
  double a;
  double V0;
  double nu;
};

// V(x) = 1/2 V0 (lambda x)^2 + Vtilde(x) with lambda^2 = V0.
struct HermiteLine {
  double V0;
  double lambda;
};

// nu = 2 (ell + 1).
struct LaguerreRadial {
  double lambda;
  int ell;
  double nu;
};

using BasisFamily = std::variant<SineBox, GegenbauerBox, HermiteLine, LaguerreRadial>;

// Validating constructors; throw ConstraintError on bad parameters.
BasisFamily sine_box(double a);
BasisFamily gegenbauer_box(double a, double V0);
BasisFamily hermite_line(double V0);
BasisFamily laguerre_radial(double lambda, int ell);

std::string_view family_name(const BasisFamily& f) noexcept;

struct Domain {
  double lo;              // may be -inf
  double hi;              // may be +inf
  double measure_factor;  // constant density of the integration measure

  bool contains(double x) const noexcept;
  bool interior(double x) const noexcept;
};

Domain domain(const BasisFamily& f);

// Natural polynomial variable y(x) of the family (x/a for the sine box).
double natural_variable(const BasisFamily& f, double x);

// The energy parameter c each family uses: (pi/a)^2, (pi/a)^2, V0, lambda^2.
EnergyScale natural_energy_scale(const BasisFamily& f);

// ln A_n of the family's normalization constant.
double log_normalization(const BasisFamily& f, int n);

// phi_n(x).  Throws DomainError for x outside the domain or n < 0.
double basis_eval(const BasisFamily& f, int n, double x);

// (phi_0(x), ..., phi_{N-1}(x)) from a single recurrence sweep.
std::vector<double> basis_values(const BasisFamily& f, int N, double x);

// Orthonormal polynomial parts A_n P_n(y), n < N, with respect to the
// family's weight in the natural variable.  Not defined for SineBox.
std::vector<double> basis_polynomials(const BasisFamily& f, int N, double y);

// SineBox and LaguerreRadial: the full kinetic matrix.  GegenbauerBox and
// HermiteLine: the diagonal part Ttilde left after moving the analytic
// potential term into the kinetic operator.  Throws SizeError for N < 2.
Eigen::MatrixXd kinetic_matrix(const BasisFamily& f, int N);

// Analytic potential term removed before reconstruction (zero for the sine
// box, the orbital term l(l+1)/2r^2 for the radial family).
double fixed_potential_part(const BasisFamily& f, double x);

// Larger root of 1/2 (pi/a)^2 nu (nu - 1) = V0.
double nu_from_V0(double a, double V0);

// Integral of phi_n phi_m over the domain with the family's measure, by
// adaptive quadrature on basis_eval.  For tests and `verify`.
double orthonormality_check(const BasisFamily& f, int n, int m);

}  // namespace meixner_qm
