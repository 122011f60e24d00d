#pragma once

// Potential function from one column of its matrix representation:
//
//   V(x) ~ sum_{m<N} phi_m(x) V_{m,n} / phi_n(x)
//
// The bases are orthonormal, hence self-conjugate, so the same functions
// appear in numerator and denominator.

#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "meixner_qm/bases.hpp"
#include "meixner_qm/hamiltonian.hpp"

namespace meixner_qm {

enum class PotentialKind {
  FullV,           // V = H - T with the complete kinetic matrix
  ResidualVtilde,  // Vtilde = H - Ttilde; the fixed analytic part is added back later
};

// FullV for SineBox and LaguerreRadial, ResidualVtilde for the split families.
PotentialKind natural_potential_kind(const BasisFamily& f) noexcept;

struct PotentialMatrix {
  Eigen::MatrixXd entries;
  BasisFamily basis;
  PotentialKind kind = PotentialKind::FullV;

  int size() const noexcept { return static_cast<int>(entries.rows()); }
};

// entries = H - T.  Throws SizeError on dimension mismatch and DomainError
// if the result is not symmetric to 1e-10.
PotentialMatrix potential_matrix(const SymTridiagonal& H, const Eigen::MatrixXd& T,
                                 const BasisFamily& basis, PotentialKind kind);

// H from the family's natural energy scale, T = kinetic_matrix(f, N).
PotentialMatrix potential_matrix_for(const BasisFamily& f, const MeixnerParams& p, int N);

struct SampledFunction {
  std::vector<double> xs;
  std::vector<double> vals;  // NaN where !valid
  std::vector<bool> valid;
  std::map<std::string, std::string> meta;

  std::size_t size() const noexcept { return xs.size(); }
  std::size_t flagged() const noexcept;
};

// Checks xs strictly increasing and equal array lengths; throws SizeError.
void validate(const SampledFunction& sf);

class ColumnSelect {
 public:
  static ColumnSelect automatic() noexcept { return ColumnSelect(true, 0); }
  static ColumnSelect fixed(int index);

  bool is_auto() const noexcept { return auto_; }
  int index() const noexcept { return index_; }
  std::string to_string() const;

 private:
  ColumnSelect(bool a, int i) : auto_(a), index_(i) {}
  bool auto_;
  int index_;
};

// Points whose denominator |phi_n(x)| falls below this are flagged invalid.
inline constexpr double kDenominatorFloor = 1e-8;

// Highest column the automatic choice considers.
inline constexpr int kAutoColumnMax = 4;

// With ColumnSelect::automatic() the column is chosen per point as the
// n in {0, ..., min(4, N-1)} maximizing |phi_n(x)|.  Grid points must lie
// strictly inside the basis domain.
SampledFunction reconstruct_potential(const PotentialMatrix& V, std::span<const double> grid,
                                      ColumnSelect column = ColumnSelect::automatic());

// Adds fixed_potential_part: V0/cos^2 or 1/2 V0 (lambda x)^2 for the split
// families, and the orbital term for the radial family (giving V_eff).
SampledFunction with_fixed_part(const SampledFunction& sf, const BasisFamily& f);

std::vector<double> uniform_grid(double lo, double hi, int points);

// Interior grid: 5% margins on the boxes, |lambda x| <= 6 on the line, and
// r in [0.05/lambda, r_max] with phi_0(r_max) = 1e-8 on the half-line.
std::vector<double> default_grid(const BasisFamily& f, int points);

}  // namespace meixner_qm
