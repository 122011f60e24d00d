#pragma once

// Symmetric tridiagonal Jacobi matrix Sigma built from the Meixner recursion
// coefficients, and the Hamiltonian H = c Sigma with closed-form spectrum
// E_k = c sinh(theta) (k + mu).  H is never diagonalized numerically.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "meixner_qm/meixner.hpp"

namespace meixner_qm {

enum class MatrixUnits { DimensionlessZ, Energy };

struct SymTridiagonal {
  std::vector<double> diag;  // length N
  std::vector<double> off;   // length N - 1; off[n] couples rows n and n + 1
  MatrixUnits units = MatrixUnits::DimensionlessZ;

  int size() const noexcept { return static_cast<int>(diag.size()); }
  double operator()(int row, int col) const;
  Eigen::MatrixXd dense() const;
  std::vector<double> apply(std::span<const double> v) const;
};

class EnergyScale {
 public:
  // Throws ConstraintError for c == 0 or non-finite c.
  explicit EnergyScale(double c);
  double value() const noexcept { return c_; }

 private:
  double c_;
};

// diag[n] = (n + mu) cosh(theta), off[n] = -1/2 sqrt((n + 1)(n + 2 mu)).
// Throws SizeError for N < 2.
SymTridiagonal sigma_matrix(int N, const MeixnerParams& p);

// Entrywise c * sigma_matrix(N, p), tagged with energy units.
SymTridiagonal hamiltonian_matrix(int N, const MeixnerParams& p, const EnergyScale& s);

double energy(int k, const MeixnerParams& p, const EnergyScale& s);

struct EigencheckReport {
  double residual = 0.0;  // max_m |(Hv)_m - E v_m| / (|E| max_n |v_n|), m < rows
  int rows_checked = 0;
  double energy = 0.0;
};

// Residual of H v = E v restricted to the first `rows` components.  Throws
// DomainError for an all-zero v and SizeError for mismatched lengths.
EigencheckReport eigen_residual(const SymTridiagonal& H, std::span<const double> v,
                                double E, int rows);

// Builds v_n = M_n(k), n < N, and checks it against E_k over the first N/2
// rows; the truncated tail is excluded.  Requires k <= N/4.
EigencheckReport eigencheck(int N, const MeixnerParams& p, const EnergyScale& s, int k);

}  // namespace meixner_qm
