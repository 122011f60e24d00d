#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "meixner_qm/errors.hpp"
#include "meixner_qm/quadrature.hpp"
#include "meixner_qm/scenario.hpp"
#include "meixner_qm/states.hpp"

namespace py = pybind11;
namespace mq = meixner_qm;

namespace {

py::dict sampled(const mq::SampledFunction& sf) {
  py::dict d;
  d["x"] = sf.xs;
  d["value"] = sf.vals;
  d["valid"] = sf.valid;
  d["meta"] = sf.meta;
  return d;
}

mq::ColumnSelect column_arg(const py::object& col) {
  if (col.is_none()) return mq::ColumnSelect::automatic();
  if (py::isinstance<py::str>(col)) return mq::parse_column(col.cast<std::string>());
  return mq::ColumnSelect::fixed(col.cast<int>());
}

mq::PrecisionGuard guard_arg(const std::string& g) {
  if (g == "strict") return mq::PrecisionGuard::Strict;
  if (g == "warn") return mq::PrecisionGuard::Warn;
  throw mq::DomainError("guard must be 'strict' or 'warn'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Meixner-polynomial tridiagonal Hamiltonians, potential reconstruction and bound states";

  py::register_exception<mq::AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
  py::register_exception<mq::OracleError>(m, "OracleError", PyExc_RuntimeError);
  py::register_exception<mq::SingularityError>(m, "SingularityError", PyExc_ValueError);

  py::class_<mq::MeixnerParams>(m, "MeixnerParams")
      .def(py::init<double, double>(), py::arg("mu"), py::arg("theta"))
      .def_property_readonly("mu", &mq::MeixnerParams::mu)
      .def_property_readonly("theta", &mq::MeixnerParams::theta)
      .def("__repr__", [](const mq::MeixnerParams& p) {
        return "MeixnerParams(mu=" + std::to_string(p.mu()) + ", theta=" + std::to_string(p.theta()) + ")";
      });

  py::class_<mq::EvalReport>(m, "EvalReport")
      .def_readonly("value", &mq::EvalReport::value)
      .def_readonly("est_error", &mq::EvalReport::est_error)
      .def_property_readonly("method", [](const mq::EvalReport& r) { return std::string(mq::to_string(r.method)); });

  m.def("log_pochhammer", &mq::log_pochhammer, py::arg("a"), py::arg("n"));
  m.def("meixner", &mq::meixner, py::arg("n"), py::arg("k"), py::arg("params"));
  m.def("meixner_by_recursion", &mq::meixner_by_recursion, py::arg("n_max"), py::arg("k"), py::arg("params"));
  m.def("weight", &mq::weight, py::arg("k"), py::arg("params"));
  m.def("z_of_k", &mq::z_of_k, py::arg("k"), py::arg("params"));
  m.def(
      "recursion_coeffs",
      [](int n_max, const mq::MeixnerParams& p) {
        const mq::RecursionCoeffs rc = mq::recursion_coeffs(n_max, p);
        return py::make_tuple(rc.a, rc.b);
      },
      py::arg("n_max"), py::arg("params"));

  m.def(
      "sigma_matrix", [](int N, const mq::MeixnerParams& p) { return mq::sigma_matrix(N, p).dense(); },
      py::arg("N"), py::arg("params"));
  m.def(
      "hamiltonian_matrix",
      [](int N, const mq::MeixnerParams& p, double c) {
        return mq::hamiltonian_matrix(N, p, mq::EnergyScale(c)).dense();
      },
      py::arg("N"), py::arg("params"), py::arg("c"));
  m.def(
      "energy", [](int k, const mq::MeixnerParams& p, double c) { return mq::energy(k, p, mq::EnergyScale(c)); },
      py::arg("k"), py::arg("params"), py::arg("c"));
  m.def(
      "eigencheck",
      [](int N, const mq::MeixnerParams& p, double c, int k) {
        return mq::eigencheck(N, p, mq::EnergyScale(c), k).residual;
      },
      py::arg("N"), py::arg("params"), py::arg("c"), py::arg("k"));

  py::class_<mq::SineBox>(m, "SineBox").def_readonly("a", &mq::SineBox::a);
  py::class_<mq::GegenbauerBox>(m, "GegenbauerBox")
      .def_readonly("a", &mq::GegenbauerBox::a)
      .def_readonly("V0", &mq::GegenbauerBox::V0)
      .def_readonly("nu", &mq::GegenbauerBox::nu);
  py::class_<mq::HermiteLine>(m, "HermiteLine")
      .def_readonly("V0", &mq::HermiteLine::V0)
      .def_readonly("lambda_", &mq::HermiteLine::lambda);
  py::class_<mq::LaguerreRadial>(m, "LaguerreRadial")
      .def_readonly("lambda_", &mq::LaguerreRadial::lambda)
      .def_readonly("ell", &mq::LaguerreRadial::ell)
      .def_readonly("nu", &mq::LaguerreRadial::nu);

  m.def("sine_box", &mq::sine_box, py::arg("a"));
  m.def("gegenbauer_box", &mq::gegenbauer_box, py::arg("a"), py::arg("V0"));
  m.def("hermite_line", &mq::hermite_line, py::arg("V0"));
  m.def("laguerre_radial", &mq::laguerre_radial, py::arg("lambda_"), py::arg("ell"));
  m.def("family_name", [](const mq::BasisFamily& f) { return std::string(mq::family_name(f)); });
  m.def("natural_energy_scale", [](const mq::BasisFamily& f) { return mq::natural_energy_scale(f).value(); });
  m.def("basis_values", &mq::basis_values, py::arg("basis"), py::arg("N"), py::arg("x"));
  m.def("kinetic_matrix", &mq::kinetic_matrix, py::arg("basis"), py::arg("N"));
  m.def("fixed_potential_part", &mq::fixed_potential_part, py::arg("basis"), py::arg("x"));
  m.def("nu_from_V0", &mq::nu_from_V0, py::arg("a"), py::arg("V0"));
  m.def("kinetic_element_oracle", &mq::kinetic_element_oracle, py::arg("basis"), py::arg("n"), py::arg("m"));
  m.def("default_grid", &mq::default_grid, py::arg("basis"), py::arg("points") = 1000);

  m.def(
      "reconstruct_potential",
      [](const Eigen::MatrixXd& V, const mq::BasisFamily& f, const std::vector<double>& xs,
         const py::object& column) {
        const mq::PotentialMatrix pm{V, f, mq::natural_potential_kind(f)};
        return sampled(mq::reconstruct_potential(pm, xs, column_arg(column)));
      },
      py::arg("V"), py::arg("basis"), py::arg("x"), py::arg("column") = py::none());
  m.def(
      "potential_matrix",
      [](const mq::BasisFamily& f, const mq::MeixnerParams& p, double c, int N) {
        return mq::potential_matrix(mq::hamiltonian_matrix(N, p, mq::EnergyScale(c)), mq::kinetic_matrix(f, N), f,
                                    mq::natural_potential_kind(f))
            .entries;
      },
      py::arg("basis"), py::arg("params"), py::arg("c"), py::arg("N"));

  m.def(
      "state_values",
      [](int k, const mq::MeixnerParams& p, double c, const mq::BasisFamily& f, int N,
         const std::vector<double>& xs, const std::string& guard) {
        return mq::eval_state(mq::build_state(k, p, mq::EnergyScale(c), f, N, guard_arg(guard)), xs).vals;
      },
      py::arg("k"), py::arg("params"), py::arg("c"), py::arg("basis"), py::arg("N"), py::arg("x"),
      py::arg("guard") = "strict");
  m.def(
      "state_coefficients",
      [](int k, const mq::MeixnerParams& p, double c, const mq::BasisFamily& f, int N) {
        return mq::build_state(k, p, mq::EnergyScale(c), f, N).coeffs;
      },
      py::arg("k"), py::arg("params"), py::arg("c"), py::arg("basis"), py::arg("N"));
  m.def(
      "node_count",
      [](const std::vector<double>& xs, const std::vector<double>& vals) {
        mq::SampledFunction sf;
        sf.xs = xs;
        sf.vals = vals;
        sf.valid.assign(xs.size(), true);
        return mq::node_count(sf);
      },
      py::arg("x"), py::arg("values"));

  m.def("preset_names", &mq::preset_names);
  m.def(
      "run_scenario",
      [](const std::string& scenario, const std::filesystem::path& out, bool spectrum, bool potential,
         bool states) {
        const mq::Scenario sc = mq::load_scenario(scenario);
        return mq::run_scenario(sc, {spectrum, potential, states}, out).files;
      },
      py::arg("scenario"), py::arg("out"), py::arg("spectrum") = true, py::arg("potential") = true,
      py::arg("states") = true);
  m.def(
      "verify_json",
      [](const std::string& scenario, int terms) {
        mq::Scenario sc = mq::load_scenario(scenario);
        mq::VerifyOptions opts;
        if (terms > 0) {
          sc.terms = terms;
          opts.state_terms = terms;
        }
        return mq::verify(sc, opts).to_json();
      },
      py::arg("scenario"), py::arg("terms") = 0);
}
