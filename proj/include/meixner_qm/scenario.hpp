#pragma once

// Scenario description, presets for the four reference systems, the
// key = value scenario file format, and the pipelines behind the CLI.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "meixner_qm/bases.hpp"
#include "meixner_qm/checks.hpp"
#include "meixner_qm/meixner.hpp"
#include "meixner_qm/reconstruct.hpp"

namespace meixner_qm {

// Malformed scenario text or inconsistent scenario fields.
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CRule { PiOverASquared, V0, LambdaSquared, Explicit };

std::string_view to_string(CRule r) noexcept;
CRule parse_c_rule(std::string_view text);

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int points = 1000;

  std::vector<double> points_vector() const { return uniform_grid(lo, hi, points); }
};

// "lo:hi:n"
GridSpec parse_grid(std::string_view text);
std::vector<int> parse_levels(std::string_view text);
ColumnSelect parse_column(std::string_view text);

struct Scenario {
  std::string name;
  BasisFamily basis = SineBox{1.0};
  double mu = 1.0;
  double theta = 1.0;
  CRule c_rule = CRule::PiOverASquared;
  double c_explicit = 0.0;  // used only with CRule::Explicit
  int terms = 20;
  GridSpec grid;
  std::vector<int> levels{0, 1, 2, 3};
  ColumnSelect column = ColumnSelect::automatic();

  MeixnerParams params() const { return MeixnerParams(mu, theta); }
  EnergyScale energy_scale() const;
};

// Throws ScenarioError / ConstraintError / DomainError on invalid content.
void validate(const Scenario& sc);

std::vector<std::string> preset_names();
// fig1..fig4; throws ScenarioError for unknown names.
Scenario preset(std::string_view name);
Scenario parse_scenario(std::string_view text);
// A preset name or a path to a scenario file.
Scenario load_scenario(const std::string& preset_or_path);

struct OutputSelection {
  bool spectrum = true;
  bool potential = true;
  bool states = true;
};

struct RunResult {
  std::vector<std::filesystem::path> files;  // CSV files followed by the manifest
  std::string manifest;                      // JSON text written to the manifest file
};

// Line style assigned to the i-th requested level in the states file.
std::string_view level_style(std::size_t index) noexcept;

// Writes <name>_spectrum.csv, <name>_potential.csv, <name>_states.csv (as
// selected) and <name>_manifest.json into out_dir.
RunResult run_scenario(const Scenario& sc, const OutputSelection& outputs,
                       const std::filesystem::path& out_dir,
                       PrecisionGuard guard = PrecisionGuard::Strict);

struct VerifyReport {
  std::string scenario;
  std::vector<CheckResult> checks;

  bool all_passed() const noexcept;
  std::string to_json() const;
};

struct VerifyOptions {
  // Expansion length for the state and reconstruction checks; <= 0 means
  // max(scenario terms, 30).  Stability is measured against this + 10.
  int state_terms = 0;
  PrecisionGuard guard = PrecisionGuard::Strict;
};

VerifyReport verify(const Scenario& sc, const VerifyOptions& opts = {});

}  // namespace meixner_qm
