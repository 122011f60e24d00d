#include "meixner_qm/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meixner_qm/errors.hpp"

namespace meixner_qm {

double SymTridiagonal::operator()(int row, int col) const {
  if (row < 0 || col < 0 || row >= size() || col >= size()) {
    throw DomainError("SymTridiagonal index out of range");
  }
  if (row == col) return diag[static_cast<std::size_t>(row)];
  if (std::abs(row - col) == 1) return off[static_cast<std::size_t>(std::min(row, col))];
  return 0.0;
}

Eigen::MatrixXd SymTridiagonal::dense() const {
  const int n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  for (int i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = off[static_cast<std::size_t>(i)];
    m(i + 1, i) = off[static_cast<std::size_t>(i)];
  }
  return m;
}

std::vector<double> SymTridiagonal::apply(std::span<const double> v) const {
  const std::size_t n = diag.size();
  if (v.size() != n) throw SizeError("SymTridiagonal::apply: vector length mismatch");
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * v[i];
    if (i > 0) acc += off[i - 1] * v[i - 1];
    if (i + 1 < n) acc += off[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

EnergyScale::EnergyScale(double c) : c_(c) {
  if (c == 0.0 || !std::isfinite(c)) {
    throw ConstraintError("energy scale c must be nonzero and finite");
  }
}

SymTridiagonal sigma_matrix(int N, const MeixnerParams& p) {
  if (N < 2) throw SizeError("sigma_matrix requires N >= 2, got " + std::to_string(N));
  const RecursionCoeffs rc = recursion_coeffs(N - 1, p);
  SymTridiagonal s;
  s.diag = rc.a;
  s.off.assign(rc.b.begin(), rc.b.end() - 1);
  s.units = MatrixUnits::DimensionlessZ;
  return s;
}

SymTridiagonal hamiltonian_matrix(int N, const MeixnerParams& p, const EnergyScale& s) {
  SymTridiagonal h = sigma_matrix(N, p);
  const double c = s.value();
  for (double& d : h.diag) d *= c;
  for (double& o : h.off) o *= c;
  h.units = MatrixUnits::Energy;
  return h;
}

double energy(int k, const MeixnerParams& p, const EnergyScale& s) {
  return s.value() * z_of_k(k, p);
}

EigencheckReport eigen_residual(const SymTridiagonal& H, std::span<const double> v,
                                double E, int rows) {
  if (static_cast<int>(v.size()) != H.size()) {
    throw SizeError("eigen_residual: vector length does not match matrix");
  }
  if (rows < 1 || rows > H.size()) throw SizeError("eigen_residual: invalid row count");
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  if (vmax == 0.0) throw DomainError("eigen_residual: zero vector is not an eigenvector");
  if (E == 0.0) throw DomainError("eigen_residual: energy must be nonzero");

  const std::vector<double> hv = H.apply(v);
  double worst = 0.0;
  for (int m = 0; m < rows; ++m) {
    const auto i = static_cast<std::size_t>(m);
    worst = std::max(worst, std::abs(hv[i] - E * v[i]));
  }
  return {worst / (std::abs(E) * vmax), rows, E};
}

EigencheckReport eigencheck(int N, const MeixnerParams& p, const EnergyScale& s, int k) {
  if (N < 2) throw SizeError("eigencheck requires N >= 2");
  if (k < 0 || 4 * k > N) {
    throw DomainError("eigencheck requires 0 <= k <= N/4 (k = " + std::to_string(k) +
                      ", N = " + std::to_string(N) + ")");
  }
  const SymTridiagonal H = hamiltonian_matrix(N, p, s);
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) v.push_back(meixner(n, k, p).value);
  return eigen_residual(H, v, energy(k, p, s), N / 2);
}

}  // namespace meixner_qm
