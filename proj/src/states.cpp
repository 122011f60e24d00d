#include "meixner_qm/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meixner_qm/errors.hpp"

namespace meixner_qm {

namespace {

constexpr int kMinNodeGrid = 400;

// Range scanned to fix the global sign; wide enough to contain the first
// lobe of every low-lying state.
std::vector<double> sign_reference_grid(const BasisFamily& f) {
  const Domain d = domain(f);
  constexpr int kPoints = 801;
  if (std::holds_alternative<HermiteLine>(f)) {
    const double L = 12.0 / std::get<HermiteLine>(f).lambda;
    return uniform_grid(-L, L, kPoints);
  }
  if (std::holds_alternative<LaguerreRadial>(f)) {
    return uniform_grid(0.0, 80.0 / std::get<LaguerreRadial>(f).lambda, kPoints);
  }
  return uniform_grid(d.lo, d.hi, kPoints);
}

double raw_value(const BoundState& st, double x) {
  const std::vector<double> phi = basis_values(st.basis, st.terms(), x);
  double acc = 0.0;
  for (std::size_t n = 0; n < phi.size(); ++n) acc += st.coeffs[n] * phi[n];
  return acc;
}

double orbital_term(const BasisFamily& f, double r) {
  if (const auto* lag = std::get_if<LaguerreRadial>(&f)) {
    return 0.5 * lag->ell * (lag->ell + 1.0) / (r * r);
  }
  return 0.0;
}

}  // namespace

BoundState build_state(int k, const MeixnerParams& p, const EnergyScale& s, const BasisFamily& f,
                       int N, PrecisionGuard guard) {
  if (k < 0 || k > kMaxStateLevel) {
    throw DomainError("state level k = " + std::to_string(k) + " outside [0, 10]");
  }
  if (N < 1 || N > kMaxMeixnerIndex + 1) {
    throw DomainError("expansion length N = " + std::to_string(N) + " outside [1, 201]");
  }
  BoundState st;
  st.k = k;
  st.energy = energy(k, p, s);
  st.basis = f;
  const double amp = std::sqrt(weight(k, p));
  st.coeffs.reserve(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) st.coeffs.push_back(amp * enforce_accuracy(meixner(n, k, p), guard));

  std::vector<double> probe;
  double vmax = 0.0;
  for (double x : sign_reference_grid(f)) {
    probe.push_back(raw_value(st, x));
    vmax = std::max(vmax, std::abs(probe.back()));
  }
  for (double v : probe) {
    if (std::abs(v) > 1e-3 * vmax) {
      st.sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  return st;
}

SampledFunction eval_state(const BoundState& st, std::span<const double> xs) {
  SampledFunction out;
  out.xs.assign(xs.begin(), xs.end());
  out.vals.reserve(xs.size());
  for (double x : xs) out.vals.push_back(st.sign * raw_value(st, x));
  out.valid.assign(xs.size(), true);
  validate(out);
  out.meta["basis"] = std::string(family_name(st.basis));
  out.meta["k"] = std::to_string(st.k);
  out.meta["N"] = std::to_string(st.terms());
  return out;
}

int node_count(const SampledFunction& sf) {
  validate(sf);
  double vmax = 0.0;
  std::size_t valid_points = 0;
  for (std::size_t i = 0; i < sf.size(); ++i) {
    if (!sf.valid[i]) continue;
    ++valid_points;
    vmax = std::max(vmax, std::abs(sf.vals[i]));
  }
  if (valid_points < static_cast<std::size_t>(kMinNodeGrid)) {
    throw SizeError("node_count needs at least 400 valid grid points");
  }
  if (vmax == 0.0) throw DomainError("node count of an identically zero function is undefined");

  const double floor = 1e-9 * vmax;
  int nodes = 0;
  int last_sign = 0;
  for (std::size_t i = 0; i < sf.size(); ++i) {
    if (!sf.valid[i] || std::abs(sf.vals[i]) < floor) continue;
    const int sgn = sf.vals[i] > 0.0 ? 1 : -1;
    if (last_sign != 0 && sgn != last_sign) ++nodes;
    last_sign = sgn;
  }
  return nodes;
}

double schrodinger_residual(const BoundState& st, const SampledFunction& potential,
                            const BasisFamily& f) {
  validate(potential);
  const std::size_t n = potential.size();
  if (n < 3) throw SizeError("schrodinger_residual needs at least three grid points");
  const double h = (potential.xs.back() - potential.xs.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(potential.xs[i] - potential.xs[i - 1] - h) > 1e-9 * std::abs(h)) {
      throw SizeError("schrodinger_residual requires a uniform grid");
    }
  }
  const SampledFunction psi = eval_state(st, potential.xs);

  double res2 = 0.0;
  double norm2 = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!potential.valid[i]) continue;
    const double x = potential.xs[i];
    const double second = (psi.vals[i + 1] - 2.0 * psi.vals[i] + psi.vals[i - 1]) / (h * h);
    const double r = -0.5 * second + (potential.vals[i] + orbital_term(f, x)) * psi.vals[i] -
                     st.energy * psi.vals[i];
    res2 += r * r;
    norm2 += psi.vals[i] * psi.vals[i];
  }
  if (norm2 == 0.0) throw DomainError("schrodinger_residual: state vanishes on the grid");
  return std::sqrt(res2) / (std::abs(st.energy) * std::sqrt(norm2));
}

}  // namespace meixner_qm
