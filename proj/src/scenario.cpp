#include "meixner_qm/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "meixner_qm/errors.hpp"
#include "meixner_qm/hamiltonian.hpp"
#include "meixner_qm/states.hpp"

namespace meixner_qm {

namespace {

using std::numbers::pi;
using Json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ScenarioError("cannot parse " + std::string(what) + " from '" + t + "'");
  }
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  try {
    std::size_t used = 0;
    const int v = std::stoi(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ScenarioError("cannot parse integer " + std::string(what) + " from '" + t + "'");
  }
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Shortest text that still round-trips is not needed here; 17 significant
// digits keep files byte-stable and lossless.
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CRule natural_c_rule(const BasisFamily& f) {
  if (std::holds_alternative<HermiteLine>(f)) return CRule::V0;
  if (std::holds_alternative<LaguerreRadial>(f)) return CRule::LambdaSquared;
  return CRule::PiOverASquared;
}

int natural_terms(const BasisFamily& f) {
  if (std::holds_alternative<HermiteLine>(f)) return 30;
  if (std::holds_alternative<LaguerreRadial>(f)) return 40;
  return 20;
}

Json basis_json(const BasisFamily& f) {
  Json j;
  j["family"] = std::string(family_name(f));
  std::visit(
      [&j](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SineBox>) {
          j["a"] = b.a;
        } else if constexpr (std::is_same_v<T, GegenbauerBox>) {
          j["a"] = b.a;
          j["V0"] = b.V0;
          j["nu"] = b.nu;
        } else if constexpr (std::is_same_v<T, HermiteLine>) {
          j["V0"] = b.V0;
          j["lambda"] = b.lambda;
        } else {
          j["lambda"] = b.lambda;
          j["ell"] = b.ell;
          j["nu"] = b.nu;
        }
      },
      f);
  return j;
}

Json grid_json(const GridSpec& g) { return Json{{"lo", g.lo}, {"hi", g.hi}, {"points", g.points}}; }

Json parameters_json(const Scenario& sc) {
  Json j;
  j["basis"] = basis_json(sc.basis);
  j["mu"] = sc.mu;
  j["theta"] = sc.theta;
  j["c_rule"] = std::string(to_string(sc.c_rule));
  j["c"] = sc.energy_scale().value();
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string_view to_string(CRule r) noexcept {
  switch (r) {
    case CRule::PiOverASquared:
      return "pi-over-a-squared";
    case CRule::V0:
      return "V0";
    case CRule::LambdaSquared:
      return "lambda-squared";
    case CRule::Explicit:
      return "explicit";
  }
  return "unknown";
}

CRule parse_c_rule(std::string_view text) {
  const std::string t = trim(text);
  if (t == "pi-over-a-squared") return CRule::PiOverASquared;
  if (t == "V0") return CRule::V0;
  if (t == "lambda-squared") return CRule::LambdaSquared;
  if (t == "explicit") return CRule::Explicit;
  throw ScenarioError("unknown c_rule '" + t + "'");
}

GridSpec parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ScenarioError("grid must be lo:hi:n, got '" + trim(text) + "'");
  GridSpec g{parse_double(parts[0], "grid lo"), parse_double(parts[1], "grid hi"),
             parse_int(parts[2], "grid points")};
  if (!(g.lo < g.hi)) throw ScenarioError("grid requires lo < hi");
  if (g.points < 2) throw ScenarioError("grid needs at least 2 points");
  return g;
}

std::vector<int> parse_levels(std::string_view text) {
  std::vector<int> levels;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) continue;
    levels.push_back(parse_int(part, "level"));
  }
  if (levels.empty()) throw ScenarioError("levels list is empty");
  return levels;
}

ColumnSelect parse_column(std::string_view text) {
  const std::string t = trim(text);
  if (t == "auto") return ColumnSelect::automatic();
  const int idx = parse_int(t, "column");
  if (idx < 0) throw ScenarioError("column must be 'auto' or a nonnegative index");
  return ColumnSelect::fixed(idx);
}

EnergyScale Scenario::energy_scale() const {
  switch (c_rule) {
    case CRule::PiOverASquared: {
      const double a = std::holds_alternative<SineBox>(basis) ? std::get<SineBox>(basis).a
                                                              : std::get<GegenbauerBox>(basis).a;
      return EnergyScale(pi * pi / (a * a));
    }
    case CRule::V0:
      return EnergyScale(std::get<HermiteLine>(basis).V0);
    case CRule::LambdaSquared: {
      const double l = std::holds_alternative<HermiteLine>(basis)
                           ? std::get<HermiteLine>(basis).lambda
                           : std::get<LaguerreRadial>(basis).lambda;
      return EnergyScale(l * l);
    }
    case CRule::Explicit:
      return EnergyScale(c_explicit);
  }
  throw ScenarioError("invalid c_rule");
}

void validate(const Scenario& sc) {
  if (sc.name.empty()) throw ScenarioError("scenario name is empty");
  for (char ch : sc.name) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-')) {
      throw ScenarioError("scenario name may only contain letters, digits, '_' and '-'");
    }
  }
  (void)sc.params();  // throws ConstraintError for mu <= 0 or theta <= 0
  const bool box = std::holds_alternative<SineBox>(sc.basis) ||
                   std::holds_alternative<GegenbauerBox>(sc.basis);
  switch (sc.c_rule) {
    case CRule::PiOverASquared:
      if (!box) throw ScenarioError("c_rule pi-over-a-squared needs a box basis");
      break;
    case CRule::V0:
      if (!std::holds_alternative<HermiteLine>(sc.basis)) {
        throw ScenarioError("c_rule V0 needs the hermite_line basis");
      }
      break;
    case CRule::LambdaSquared:
      if (box) throw ScenarioError("c_rule lambda-squared needs hermite_line or laguerre_radial");
      break;
    case CRule::Explicit:
      break;
  }
  (void)sc.energy_scale();
  if (sc.terms < 2 || sc.terms + 10 > kMaxMeixnerIndex + 1) {
    throw ScenarioError("terms must lie in [2, " + std::to_string(kMaxMeixnerIndex - 9) + "]");
  }
  if (sc.levels.empty()) throw ScenarioError("no levels requested");
  for (int k : sc.levels) {
    if (k < 0 || k > kMaxStateLevel) throw ScenarioError("levels must lie in [0, 10]");
  }
  if (!(sc.grid.lo < sc.grid.hi) || sc.grid.points < 2) throw ScenarioError("invalid grid");
  const Domain d = domain(sc.basis);
  if (!d.interior(sc.grid.lo) || !d.interior(sc.grid.hi)) {
    throw ScenarioError("grid must lie strictly inside the " +
                        std::string(family_name(sc.basis)) + " domain");
  }
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4"}; }

Scenario preset(std::string_view name) {
  Scenario sc;
  sc.name = std::string(name);
  if (name == "fig1") {
    sc.basis = sine_box(1.0);
    sc.mu = 1.2;
    sc.theta = 0.7;
    sc.c_rule = CRule::PiOverASquared;
    sc.terms = 20;
    sc.grid = {0.05, 0.95, 1000};
  } else if (name == "fig2") {
    sc.basis = gegenbauer_box(1.0, 5.0);
    sc.mu = 2.5;
    sc.theta = 1.0;
    sc.c_rule = CRule::PiOverASquared;
    sc.terms = 20;
    sc.grid = {-0.45, 0.45, 1000};
  } else if (name == "fig3") {
    sc.basis = hermite_line(1.0);
    sc.mu = 1.5;
    sc.theta = 0.5;
    sc.c_rule = CRule::V0;
    sc.terms = 30;
    sc.grid = {-4.0, 8.0, 1000};
  } else if (name == "fig4") {
    sc.basis = laguerre_radial(1.0, 1);
    sc.mu = 0.7;
    sc.theta = 0.5;
    sc.c_rule = CRule::LambdaSquared;
    sc.terms = 40;
    sc.grid = {0.05, 20.0, 1000};
  } else {
    throw ScenarioError("unknown preset '" + std::string(name) + "'");
  }
  return sc;
}

Scenario parse_scenario(std::string_view text) {
  std::map<std::string, std::string> top;
  std::map<std::string, std::map<std::string, std::string>> sections;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ScenarioError("line " + std::to_string(lineno) + ": bad section");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (sections.count(section)) {
        throw ScenarioError("duplicate section [" + section + "]");
      }
      sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ScenarioError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    auto& target = section.empty() ? top : sections[section];
    if (!target.emplace(key, value).second) {
      throw ScenarioError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }

  if (sections.size() != 1) {
    throw ScenarioError("scenario needs exactly one basis section, found " +
                        std::to_string(sections.size()));
  }
  const auto& [family, kv] = *sections.begin();
  auto need = [&kv, &family](const char* key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ScenarioError("[" + family + "] is missing '" + key + "'");
    return it->second;
  };
  auto allow_only = [](const std::map<std::string, std::string>& m,
                       std::initializer_list<std::string_view> keys, const std::string& where) {
    for (const auto& [k, v] : m) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        throw ScenarioError("unknown key '" + k + "' in " + where);
      }
    }
  };

  Scenario sc;
  if (family == "sine_box") {
    allow_only(kv, {"a"}, "[sine_box]");
    sc.basis = sine_box(parse_double(need("a"), "a"));
  } else if (family == "gegenbauer_box") {
    allow_only(kv, {"a", "V0"}, "[gegenbauer_box]");
    sc.basis = gegenbauer_box(parse_double(need("a"), "a"), parse_double(need("V0"), "V0"));
  } else if (family == "hermite_line") {
    allow_only(kv, {"V0"}, "[hermite_line]");
    sc.basis = hermite_line(parse_double(need("V0"), "V0"));
  } else if (family == "laguerre_radial") {
    allow_only(kv, {"lambda", "ell"}, "[laguerre_radial]");
    sc.basis = laguerre_radial(parse_double(need("lambda"), "lambda"), parse_int(need("ell"), "ell"));
  } else {
    throw ScenarioError("unknown basis section [" + family + "]");
  }

  allow_only(top, {"name", "mu", "theta", "c_rule", "c", "terms", "grid", "levels", "column"},
             "scenario header");
  auto top_need = [&top](const char* key) {
    const auto it = top.find(key);
    if (it == top.end()) throw ScenarioError("scenario is missing '" + std::string(key) + "'");
    return it->second;
  };
  sc.name = top.count("name") ? top.at("name") : std::string("scenario");
  sc.mu = parse_double(top_need("mu"), "mu");
  sc.theta = parse_double(top_need("theta"), "theta");
  sc.c_rule = top.count("c_rule") ? parse_c_rule(top.at("c_rule")) : natural_c_rule(sc.basis);
  if (sc.c_rule == CRule::Explicit) sc.c_explicit = parse_double(top_need("c"), "c");
  sc.terms = top.count("terms") ? parse_int(top.at("terms"), "terms") : natural_terms(sc.basis);
  if (top.count("grid")) {
    sc.grid = parse_grid(top.at("grid"));
  } else {
    const std::vector<double> g = default_grid(sc.basis, 1000);
    sc.grid = {g.front(), g.back(), 1000};
  }
  if (top.count("levels")) sc.levels = parse_levels(top.at("levels"));
  if (top.count("column")) sc.column = parse_column(top.at("column"));
  return sc;
}

Scenario load_scenario(const std::string& preset_or_path) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), preset_or_path) != names.end()) {
    return preset(preset_or_path);
  }
  std::ifstream in(preset_or_path);
  if (!in) {
    throw ScenarioError("'" + preset_or_path + "' is neither a preset nor a readable file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string_view level_style(std::size_t index) noexcept {
  static constexpr std::string_view kStyles[] = {"solid", "dashed", "dashed-dotted", "dotted"};
  return kStyles[index % 4];
}

RunResult run_scenario(const Scenario& sc, const OutputSelection& outputs,
                       const std::filesystem::path& out_dir, PrecisionGuard guard) {
  validate(sc);
  const MeixnerParams p = sc.params();
  const EnergyScale c = sc.energy_scale();
  std::filesystem::create_directories(out_dir);

  Json manifest;
  manifest["scenario"] = sc.name;
  manifest["parameters"] = parameters_json(sc);
  manifest["terms"] = sc.terms;
  manifest["column"] = sc.column.to_string();
  manifest["grid"] = grid_json(sc.grid);
  manifest["levels"] = sc.levels;
  manifest["precision_guard"] = guard == PrecisionGuard::Strict ? "strict" : "warn";
  Json energies = Json::array();
  for (int k : sc.levels) energies.push_back(Json{{"k", k}, {"E", energy(k, p, c)}});
  manifest["energy_levels"] = energies;
  manifest["files"] = Json::array();

  RunResult result;
  auto record = [&](const std::string& fname, const char* kind, std::size_t rows,
                    std::size_t flagged, Json extra) {
    Json entry;
    entry["name"] = fname;
    entry["kind"] = kind;
    entry["rows"] = rows;
    entry["flagged_points"] = flagged;
    entry["terms"] = sc.terms;
    entry["grid"] = grid_json(sc.grid);
    entry["parameters"] = parameters_json(sc);
    for (auto it = extra.begin(); it != extra.end(); ++it) entry[it.key()] = it.value();
    manifest["files"].push_back(entry);
    result.files.push_back(out_dir / fname);
  };

  if (outputs.spectrum) {
    const int top = *std::max_element(sc.levels.begin(), sc.levels.end());
    std::string csv = "x,value\n";
    for (int k = 0; k <= top; ++k) csv += std::to_string(k) + "," + fmt17(energy(k, p, c)) + "\n";
    const std::string fname = sc.name + "_spectrum.csv";
    write_text(out_dir / fname, csv);
    record(fname, "spectrum", static_cast<std::size_t>(top + 1), 0,
           Json{{"columns", "x = level k, value = E_k"}});
  }

  if (outputs.potential) {
    const std::vector<double> grid = sc.grid.points_vector();
    const PotentialMatrix V =
        potential_matrix(hamiltonian_matrix(sc.terms, p, c), kinetic_matrix(sc.basis, sc.terms),
                         sc.basis, natural_potential_kind(sc.basis));
    const SampledFunction shown = with_fixed_part(reconstruct_potential(V, grid, sc.column), sc.basis);
    std::string csv = "x,value\n";
    std::size_t rows = 0;
    for (std::size_t i = 0; i < shown.size(); ++i) {
      if (!shown.valid[i]) continue;
      csv += fmt17(shown.xs[i]) + "," + fmt17(shown.vals[i]) + "\n";
      ++rows;
    }
    const std::string fname = sc.name + "_potential.csv";
    write_text(out_dir / fname, csv);
    Json extra;
    extra["potential_kind"] = V.kind == PotentialKind::FullV ? "full-V" : "residual-Vtilde";
    extra["fixed_part"] = std::holds_alternative<LaguerreRadial>(sc.basis)
                              ? "orbital term l(l+1)/2r^2 (effective potential)"
                              : std::holds_alternative<GegenbauerBox>(sc.basis)
                                    ? "V0/cos^2(pi x/a)"
                                    : std::holds_alternative<HermiteLine>(sc.basis)
                                          ? "1/2 V0 (lambda x)^2"
                                          : "none";
    extra["column"] = sc.column.to_string();
    extra["denominator_floor"] = kDenominatorFloor;
    extra["energy_levels"] = energies;
    record(fname, "potential", rows, shown.flagged(), extra);
  }

  if (outputs.states) {
    const std::vector<double> grid = sc.grid.points_vector();
    std::string csv = "x,value,style\n";
    Json styles = Json::array();
    std::size_t rows = 0;
    for (std::size_t i = 0; i < sc.levels.size(); ++i) {
      const BoundState st = build_state(sc.levels[i], p, c, sc.basis, sc.terms, guard);
      const SampledFunction psi = eval_state(st, grid);
      const std::string style(level_style(i));
      for (std::size_t j = 0; j < psi.size(); ++j) {
        csv += fmt17(psi.xs[j]) + "," + fmt17(psi.vals[j]) + "," + style + "\n";
        ++rows;
      }
      styles.push_back(Json{{"k", st.k}, {"style", style}, {"E", st.energy}});
    }
    const std::string fname = sc.name + "_states.csv";
    write_text(out_dir / fname, csv);
    record(fname, "states", rows, 0, Json{{"styles", styles}});
  }

  const std::string mname = sc.name + "_manifest.json";
  result.manifest = manifest.dump(2) + "\n";
  write_text(out_dir / mname, result.manifest);
  result.files.push_back(out_dir / mname);
  return result;
}

}  // namespace meixner_qm
