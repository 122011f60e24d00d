#include <algorithm>

#include <json.hpp>

#include "meixner_qm/scenario.hpp"

namespace meixner_qm {

bool VerifyReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed || !c.gating; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["passed"] = all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"gating", c.gating},
                           {"measured", c.measured},
                           {"threshold", c.threshold},
                           {"detail", c.detail}});
  }
  return j.dump(2) + "\n";
}

VerifyReport verify(const Scenario& sc, const VerifyOptions& opts) {
  validate(sc);
  const MeixnerParams p = sc.params();
  const EnergyScale s = sc.energy_scale();
  const BasisFamily& f = sc.basis;
  const int Ns = opts.state_terms > 0 ? opts.state_terms : std::max(sc.terms, 30);
  const std::vector<double> grid = sc.grid.points_vector();
  const int top = *std::max_element(sc.levels.begin(), sc.levels.end());

  VerifyReport rep;
  rep.scenario = sc.name;
  auto& out = rep.checks;
  out.push_back(check_weight_normalization(p));
  out.push_back(check_meixner_orthonormality(p));
  out.push_back(check_recursion_residual(p));
  out.push_back(check_cross_method(p));
  out.push_back(check_eigencheck(p, s, sc.levels, std::max(60, 4 * top)));
  out.push_back(check_eigencheck_monotone(p, s, sc.levels, std::max(30, 4 * top)));
  out.push_back(check_spectrum_linearity(p, s, std::max(top, 10)));
  out.push_back(check_basis_orthonormality(f));
  out.push_back(check_kinetic_matrix(f));
  out.push_back(check_reconstruction_convergence(f, p, s, sc.terms, sc.terms + 10, grid, sc.column));
  out.push_back(check_node_theorem(f, p, s, sc.levels, Ns + 10, grid, opts.guard));
  out.push_back(check_state_orthonormality(f, p, s, sc.levels, Ns + 10, opts.guard));
  out.push_back(check_series_stability(f, p, s, sc.levels, Ns, Ns + 10, grid, opts.guard));

  std::vector<int> low;
  for (int k : sc.levels) {
    if (k <= 1) low.push_back(k);
  }
  if (!low.empty()) {
    CheckResult r = check_schrodinger_residual(f, p, s, low, sc.terms, grid, sc.column, 5e-2, opts.guard);
    r.gating = false;
    out.push_back(r);
  }
  return rep;
}

}  // namespace meixner_qm
