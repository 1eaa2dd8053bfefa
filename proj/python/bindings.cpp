#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kuga/asymptotics.hpp"
#include "kuga/cli.hpp"
#include "kuga/cone_lab.hpp"
#include "kuga/cusp_tables.hpp"
#include "kuga/cyclic_rep.hpp"
#include "kuga/reid_tai.hpp"
#include "kuga/report.hpp"
#include "kuga/siegel.hpp"
#include "kuga/symplectic.hpp"

namespace py = pybind11;
using namespace kuga;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them so
// both front ends share one schema.
std::string dump(const nlohmann::json& j) { return j.dump(); }

AngleMultiset parse_angles(const std::vector<std::string>& texts) {
  AngleMultiset out;
  for (const auto& t : texts) out.push_back(Angle::parse(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_kuga_sing, m) {
  m.doc() = "Exact Reid-Tai checks for Kuga families and their verification harnesses";

  py::register_exception<RepError>(m, "RepError", PyExc_ValueError);
  py::register_exception<ImprimitiveForm>(m, "ImprimitiveForm", PyExc_ValueError);
  py::register_exception<SiegelError>(m, "SiegelError", PyExc_ValueError);

  py::class_<RationalRep>(m, "Rep")
      .def_static("parse", [](const std::string& label) { return parse_rep(label); })
      .def_property_readonly("label", &RationalRep::label)
      .def_property_readonly("g", &RationalRep::g)
      .def_property_readonly("two_g", &RationalRep::two_g)
      .def_property_readonly("is_identity", &RationalRep::is_identity)
      .def_property_readonly("components",
                             [](const RationalRep& r) {
                               std::vector<std::pair<std::int64_t, std::int64_t>> out;
                               for (const auto& c : r.components()) out.emplace_back(c.d, c.mult);
                               return out;
                             })
      .def("angles", [](const RationalRep& r) { return angle_strings(r.angles()); })
      .def("splittings",
           [](const RationalRep& r) {
             std::vector<std::vector<std::string>> out;
             for (const auto& s : enumerate_splittings(r)) out.push_back(angle_strings(s.v_angles));
             return out;
           })
      .def("to_json", [](const RationalRep& r) { return dump(rep_to_json(r)); })
      .def("__eq__", [](const RationalRep& a, const RationalRep& b) { return a == b; })
      .def("__hash__", [](const RationalRep& r) { return py::hash(py::str(r.label())); })
      .def("__repr__", [](const RationalRep& r) { return "Rep('" + r.label() + "')"; });

  m.def("enumerate_reps", &enumerate_reps, py::arg("two_g"));
  m.def("euler_phi", &euler_phi, py::arg("d"));

  m.def(
      "reid_tai_sum",
      [](const std::vector<std::string>& angles) { return reid_tai_sum(parse_angles(angles)).get_str(); },
      py::arg("angles"));
  m.def(
      "tangent_spectrum",
      [](const std::vector<std::string>& v_angles, std::int64_t n) {
        return angle_strings(tangent_spectrum({canonical(parse_angles(v_angles))}, n).angles);
      },
      py::arg("v_angles"), py::arg("n"));
  m.def(
      "_classify",
      [](std::int64_t g, std::int64_t n, const RationalRep& rep, const std::vector<std::string>& v_angles) {
        return dump(case_to_json(classify(g, n, rep, {canonical(parse_angles(v_angles))})));
      },
      py::arg("g"), py::arg("n"), py::arg("rep"), py::arg("v_angles"));
  m.def(
      "_scan",
      [](std::int64_t g_min, std::int64_t g_max, std::int64_t n_min, std::int64_t n_max, unsigned threads) {
        ScanReport report;
        {
          py::gil_scoped_release release;
          report = scan(g_min, g_max, n_min, n_max, threads);
        }
        return dump(scan_to_json(report));
      },
      py::arg("g_min"), py::arg("g_max"), py::arg("n_min"), py::arg("n_max"), py::arg("threads") = 0);

  m.def(
      "_symplectic_word",
      [](std::size_t g, std::size_t length, std::uint64_t seed) {
        return dump(matrix_to_json(random_word(g, length, seed)));
      },
      py::arg("g"), py::arg("length"), py::arg("seed"));
  m.def(
      "check_transvection_relations",
      [](std::size_t g, std::int64_t trials, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::int64_t failures = 0;
        for (std::int64_t t = 0; t < trials; ++t) failures += !check_relations(random_relation_instance(g, rng)).all();
        return failures;
      },
      py::arg("g"), py::arg("trials"), py::arg("seed"), "Number of random instances violating a relation.");

  m.def("moebius_act",
        [](const RealMatrix& mat, const ComplexMatrix& omega) { return moebius_act(mat, SiegelPoint(omega)).omega(); },
        py::arg("m"), py::arg("omega"));
  m.def("factor_of_automorphy",
        [](const RealMatrix& mat, const ComplexMatrix& omega) { return factor_of_automorphy(mat, SiegelPoint(omega)); },
        py::arg("m"), py::arg("omega"));
  m.def(
      "_verify_siegel",
      [](Eigen::Index g, std::int64_t trials, std::uint64_t seed, double tol) {
        const auto r = verify_siegel_identities(g, trials, seed, tol);
        return py::dict(py::arg("trials") = r.trials, py::arg("max_cocycle_error") = r.max_cocycle_error,
                        py::arg("max_metric_error") = r.max_metric_error,
                        py::arg("max_volume_error") = r.max_volume_error,
                        py::arg("invalid_images") = r.invalid_images, py::arg("failures") = r.failures,
                        py::arg("passed") = r.passed());
      },
      py::arg("g"), py::arg("trials"), py::arg("seed"), py::arg("tol") = 1e-9);

  m.def(
      "petersson_flow_exponent",
      [](const Eigen::MatrixXd& im0, const Eigen::MatrixXd& q, const std::vector<double>& t_grid) {
        return petersson_flow_exponent(im0, q, t_grid);
      },
      py::arg("im_omega0"), py::arg("q"), py::arg("t_grid"));
  m.def(
      "boundary_integral",
      [](double a, double eps, double r) {
        const auto b = boundary_integral(a, eps, r);
        return std::make_pair(b.quadrature, b.closed_form);
      },
      py::arg("a"), py::arg("eps"), py::arg("r"), "(quadrature, closed form)");
  m.def(
      "_pole_model_classify",
      [](std::int64_t nu, std::int64_t mm, const std::vector<double>& grid, double r) {
        const auto c = pole_model_classify(nu, mm, grid, r);
        return py::dict(py::arg("class") = to_string(c.growth.kind), py::arg("exponent") = c.growth.exponent,
                        py::arg("max_relative_difference") = c.max_relative_difference);
      },
      py::arg("nu"), py::arg("m"), py::arg("eps_grid"), py::arg("r") = 1.0);
  m.def(
      "snc_convergence",
      [](std::int64_t mm, std::int64_t k) {
        const auto s = snc_convergence(mm, k);
        return py::dict(py::arg("converges") = s.converges, py::arg("min_exponent") = s.min_exponent,
                        py::arg("margin") = s.margin);
      },
      py::arg("m"), py::arg("k"));

  m.def(
      "cone_membership",
      [](const std::vector<std::int64_t>& coords) {
        const auto c = cone_membership(QuadForm(coords));
        return std::make_pair(to_string(c.region), c.rank);
      },
      py::arg("coords"), "(region, rank)");
  m.def("is_primitive", [](const std::vector<std::int64_t>& coords) { return is_primitive(QuadForm(coords)); },
        py::arg("coords"));
  m.def("dual_character",
        [](const std::vector<std::int64_t>& coords) { return dual_character(QuadForm(coords)).coords; },
        py::arg("coords"));
  m.def(
      "character_extends",
      [](const std::vector<std::int64_t>& chi, const std::vector<std::int64_t>& coords) {
        return to_string(character_extends({chi}, QuadForm(coords)));
      },
      py::arg("chi"), py::arg("coords"));

  m.def("weight_of", &weight_of, py::arg("g"), py::arg("n"), py::arg("m"));
  m.def("parity_vanishes", &parity_vanishes, py::arg("g"), py::arg("k"), py::arg("minus_one_in_gamma"));
  m.def("_kodaira_fact", [](std::int64_t g) { return dump(cusp_fact_to_json(kodaira_fact(g))); }, py::arg("g"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "(exit code, report, diagnostics)");
}
