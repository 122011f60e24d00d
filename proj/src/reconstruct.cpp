#include "meixner_qm/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meixner_qm/errors.hpp"

namespace meixner_qm {

PotentialKind natural_potential_kind(const BasisFamily& f) noexcept {
  if (std::holds_alternative<GegenbauerBox>(f) || std::holds_alternative<HermiteLine>(f)) {
    return PotentialKind::ResidualVtilde;
  }
  return PotentialKind::FullV;
}

PotentialMatrix potential_matrix(const SymTridiagonal& H, const Eigen::MatrixXd& T,
                                 const BasisFamily& basis, PotentialKind kind) {
  const int N = H.size();
  if (T.rows() != N || T.cols() != N) {
    throw SizeError("potential_matrix: H is " + std::to_string(N) + "x" + std::to_string(N) +
                    " but T is " + std::to_string(T.rows()) + "x" + std::to_string(T.cols()));
  }
  PotentialMatrix V{H.dense() - T, basis, kind};
  const double asym = (V.entries - V.entries.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) throw DomainError("potential matrix is not symmetric");
  return V;
}

PotentialMatrix potential_matrix_for(const BasisFamily& f, const MeixnerParams& p, int N) {
  return potential_matrix(hamiltonian_matrix(N, p, natural_energy_scale(f)), kinetic_matrix(f, N),
                          f, natural_potential_kind(f));
}

std::size_t SampledFunction::flagged() const noexcept {
  return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), false));
}

void validate(const SampledFunction& sf) {
  if (sf.vals.size() != sf.xs.size() || sf.valid.size() != sf.xs.size()) {
    throw SizeError("SampledFunction arrays differ in length");
  }
  for (std::size_t i = 1; i < sf.xs.size(); ++i) {
    if (!(sf.xs[i] > sf.xs[i - 1])) throw SizeError("SampledFunction xs not strictly increasing");
  }
}

ColumnSelect ColumnSelect::fixed(int index) {
  if (index < 0) throw DomainError("column index must be nonnegative");
  return ColumnSelect(false, index);
}

std::string ColumnSelect::to_string() const {
  return auto_ ? std::string("auto") : std::to_string(index_);
}

SampledFunction reconstruct_potential(const PotentialMatrix& V, std::span<const double> grid,
                                      ColumnSelect column) {
  const int N = V.size();
  if (N < 1) throw SizeError("reconstruct_potential: empty potential matrix");
  if (!column.is_auto() && column.index() >= N) {
    throw DomainError("column " + std::to_string(column.index()) + " outside a " +
                      std::to_string(N) + "x" + std::to_string(N) + " matrix");
  }
  const Domain d = domain(V.basis);
  const int auto_top = std::min(kAutoColumnMax, N - 1);

  SampledFunction out;
  out.xs.assign(grid.begin(), grid.end());
  out.vals.reserve(grid.size());
  out.valid.reserve(grid.size());
  for (double x : grid) {
    if (!std::isfinite(x) || !d.interior(x)) {
      throw DomainError("reconstruction grid point " + std::to_string(x) +
                        " is not interior to the basis domain");
    }
    const std::vector<double> phi = basis_values(V.basis, N, x);
    int col = column.index();
    if (column.is_auto()) {
      col = 0;
      for (int n = 1; n <= auto_top; ++n) {
        if (std::abs(phi[static_cast<std::size_t>(n)]) > std::abs(phi[static_cast<std::size_t>(col)])) {
          col = n;
        }
      }
    }
    const double denom = phi[static_cast<std::size_t>(col)];
    if (std::abs(denom) < kDenominatorFloor) {
      out.vals.push_back(std::numeric_limits<double>::quiet_NaN());
      out.valid.push_back(false);
      continue;
    }
    double acc = 0.0;
    for (int m = 0; m < N; ++m) acc += phi[static_cast<std::size_t>(m)] * V.entries(m, col);
    out.vals.push_back(acc / denom);
    out.valid.push_back(true);
  }
  validate(out);
  out.meta["basis"] = std::string(family_name(V.basis));
  out.meta["column"] = column.to_string();
  out.meta["N"] = std::to_string(N);
  out.meta["kind"] = V.kind == PotentialKind::FullV ? "full-V" : "residual-Vtilde";
  return out;
}

SampledFunction with_fixed_part(const SampledFunction& sf, const BasisFamily& f) {
  SampledFunction out = sf;
  for (std::size_t i = 0; i < out.xs.size(); ++i) {
    if (out.valid[i]) out.vals[i] += fixed_potential_part(f, out.xs[i]);
  }
  out.meta["fixed_part_added"] = "true";
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2) throw SizeError("uniform_grid needs at least two points");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("uniform_grid requires finite lo < hi");
  }
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = lo + h * i;
  xs.back() = hi;
  return xs;
}

std::vector<double> default_grid(const BasisFamily& f, int points) {
  if (const auto* b = std::get_if<SineBox>(&f)) return uniform_grid(0.05 * b->a, 0.95 * b->a, points);
  if (const auto* b = std::get_if<GegenbauerBox>(&f)) {
    return uniform_grid(-0.45 * b->a, 0.45 * b->a, points);
  }
  if (const auto* b = std::get_if<HermiteLine>(&f)) {
    return uniform_grid(-6.0 / b->lambda, 6.0 / b->lambda, points);
  }
  const auto& lag = std::get<LaguerreRadial>(f);
  // phi_0 = A_0 y^{l+1} e^{-y/2} decreases past its peak at y = 2(l+1).
  double lo_y = 2.0 * (lag.ell + 1);
  double hi_y = lo_y;
  while (basis_eval(f, 0, hi_y / lag.lambda) > kDenominatorFloor) hi_y *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo_y + hi_y);
    (basis_eval(f, 0, mid / lag.lambda) > kDenominatorFloor ? lo_y : hi_y) = mid;
  }
  return uniform_grid(0.05 / lag.lambda, lo_y / lag.lambda, points);
}

}  // namespace meixner_qm
