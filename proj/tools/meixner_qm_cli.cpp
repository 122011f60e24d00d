// meixner_qm_cli: emit spectrum, potential and wavefunction data for a
// scenario, or run the verification suite on it.
//
// Exit codes: 0 ok, 2 invalid input, 3 accuracy or verification failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "meixner_qm/errors.hpp"
#include "meixner_qm/scenario.hpp"

namespace mq = meixner_qm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitAccuracy = 3;

struct Overrides {
  std::string scenario;
  std::string out = ".";
  std::optional<int> terms;
  std::string grid;
  std::string column;
  std::string levels;
};

void add_common(CLI::App* cmd, Overrides& o, const char* what) {
  cmd->add_option("scenario", o.scenario, what)->required();
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--terms", o.terms, "expansion length N");
  cmd->add_option("--grid", o.grid, "sampling grid lo:hi:n");
  cmd->add_option("--column", o.column, "reconstruction column: index or auto");
  cmd->add_option("--levels", o.levels, "comma-separated level list, e.g. 0,1,2,3");
}

mq::Scenario resolve(const Overrides& o) {
  mq::Scenario sc = mq::load_scenario(o.scenario);
  if (o.terms) sc.terms = *o.terms;
  if (!o.grid.empty()) sc.grid = mq::parse_grid(o.grid);
  if (!o.column.empty()) sc.column = mq::parse_column(o.column);
  if (!o.levels.empty()) sc.levels = mq::parse_levels(o.levels);
  mq::validate(sc);
  return sc;
}

int emit(const Overrides& o, const mq::OutputSelection& sel, mq::PrecisionGuard guard) {
  const mq::Scenario sc = resolve(o);
  const mq::RunResult res = mq::run_scenario(sc, sel, o.out, guard);
  for (const auto& f : res.files) std::cout << f.string() << "\n";
  return kExitOk;
}

int run_verify(const Overrides& o, mq::PrecisionGuard guard) {
  const mq::Scenario sc = resolve(o);
  mq::VerifyOptions opts;
  opts.guard = guard;
  if (o.terms) opts.state_terms = *o.terms;
  const mq::VerifyReport rep = mq::verify(sc, opts);
  const std::string json = rep.to_json();
  std::cout << json;
  if (o.out != ".") {
    std::filesystem::create_directories(o.out);
    const auto path = std::filesystem::path(o.out) / (sc.name + "_verify.json");
    if (std::FILE* fp = std::fopen(path.string().c_str(), "wb")) {
      std::fwrite(json.data(), 1, json.size(), fp);
      std::fclose(fp);
    }
  }
  for (const auto& c : rep.checks) {
    std::cerr << (c.passed ? "PASS " : (c.gating ? "FAIL " : "INFO ")) << c.name
              << "  measured=" << c.measured << "  threshold=" << c.threshold << "\n";
  }
  return rep.all_passed() ? kExitOk : kExitAccuracy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meixner-polynomial quantum mechanics: spectra, potentials, bound states"};
  app.require_subcommand(1);

  Overrides o;
  auto* spectrum = app.add_subcommand("spectrum", "write <name>_spectrum.csv");
  auto* potential = app.add_subcommand("potential", "write <name>_potential.csv");
  auto* states = app.add_subcommand("states", "write <name>_states.csv");
  auto* verify = app.add_subcommand("verify", "run the invariant checks and print a JSON report");
  auto* run = app.add_subcommand("run", "write all three data files and the manifest");
  for (auto* cmd : {spectrum, potential, states, verify, run}) {
    add_common(cmd, o, "preset name (fig1..fig4) or scenario file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const mq::PrecisionGuard guard = mq::precision_guard_from_env();
    if (*spectrum) return emit(o, {true, false, false}, guard);
    if (*potential) return emit(o, {false, true, false}, guard);
    if (*states) return emit(o, {false, false, true}, guard);
    if (*run) return emit(o, {true, true, true}, guard);
    return run_verify(o, guard);
  } catch (const mq::AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
