#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gitstab/cli.hpp"
#include "gitstab/connectivity.hpp"
#include "gitstab/errors.hpp"
#include "gitstab/harness.hpp"
#include "gitstab/linalg.hpp"
#include "gitstab/serialize.hpp"

namespace py = pybind11;
using namespace gitstab;

namespace {

RationalMatrix to_matrix(const std::vector<std::vector<std::string>>& rows) {
  return matrix_from_json(Json(rows), "matrix");
}

OnePS to_one_ps(const std::vector<std::vector<Weight>>& gl, const std::vector<Weight>& torus) { return {gl, torus}; }

OrbitConvention convention_or_default(const std::string& text, const FamilySpec& f) {
  return text.empty() ? default_convention(family_of(f)) : parse_orbit_convention(text);
}

}  // namespace

PYBIND11_MODULE(_gitstab, m) {
  m.doc() = "Exact GIT stability, destabilizing strata and stable-locus connectivity";

  py::register_exception<gitstab::Error>(m, "GitstabError", PyExc_ValueError);

  m.def("rational_rank", [](const std::vector<std::vector<std::string>>& rows) { return rational_rank(to_matrix(rows)); },
        py::arg("rows"), "Exact rank of a matrix given as nested lists of rational strings.");

  m.def("group_dim", [](std::vector<std::size_t> gl, std::size_t torus) { return group_dim(GroupSpec(std::move(gl), torus)); },
        py::arg("gl_ranks"), py::arg("torus_rank") = 0);

  m.def(
      "centralizer_dim",
      [](std::vector<std::size_t> gl, std::size_t torus, const std::vector<std::vector<Weight>>& w,
         const std::vector<Weight>& tw) { return centralizer_dim(GroupSpec(std::move(gl), torus), OnePSClass(to_one_ps(w, tw))); },
      py::arg("gl_ranks"), py::arg("torus_rank"), py::arg("gl_weights"), py::arg("torus_weights"));

  m.def(
      "orbit_dim",
      [](std::vector<std::size_t> gl, std::size_t torus, const std::vector<std::vector<Weight>>& w,
         const std::vector<Weight>& tw, const std::string& conv) {
        return orbit_dim(GroupSpec(std::move(gl), torus), OnePSClass(to_one_ps(w, tw)), parse_orbit_convention(conv));
      },
      py::arg("gl_ranks"), py::arg("torus_rank"), py::arg("gl_weights"), py::arg("torus_weights"),
      py::arg("convention"));

  m.def(
      "character_pairing",
      [](const std::vector<Weight>& det, const std::vector<Weight>& torus_exp, const std::vector<std::vector<Weight>>& w,
         const std::vector<Weight>& tw) { return character_pairing(Character{det, torus_exp}, to_one_ps(w, tw)); },
      py::arg("det_powers"), py::arg("torus_exponents"), py::arg("gl_weights"), py::arg("torus_weights"));

  m.def("unitary_pi", [](std::size_t i, std::size_t k) { return unitary_pi(i, k).str(); }, py::arg("i"), py::arg("k"));

  m.def(
      "enumerate_strata_json",
      [](const std::string& family, const std::string& conv) {
        const FamilySpec f = family_from_json(Json::parse(family));
        Json out = Json::array();
        for (const auto& s : enumerate_strata(f, convention_or_default(conv, f))) out.push_back(stratum_to_json(s));
        return canonical_dump(out);
      },
      py::arg("family"), py::arg("convention") = "");

  m.def(
      "analyze_json",
      [](const std::string& family, const std::string& conv, std::optional<std::size_t> max_q) {
        const FamilySpec f = family_from_json(Json::parse(family));
        return canonical_dump(report_to_json(analyze(f, convention_or_default(conv, f), max_q)));
      },
      py::arg("family"), py::arg("convention") = "", py::arg("max_q") = py::none());

  m.def(
      "status_json",
      [](const std::string& instance) { return canonical_dump(status_to_json(status(instance_from_json(Json::parse(instance))))); },
      py::arg("instance"));

  m.def(
      "dag_solve_mle",
      [](const std::string& instance) {
        const auto x = instance_from_json(Json::parse(instance));
        const auto* d = std::get_if<DagInstance>(&x);
        if (d == nullptr) throw ValidationError("dag_solve_mle expects a DAG instance");
        std::vector<std::string> out;
        for (const auto& b : dag_solve_mle(*d)) out.push_back(b.str());
        return out;
      },
      py::arg("instance"));

  m.def(
      "dag_stabilize_json",
      [](const std::string& instance, const std::string& eps) {
        const auto x = instance_from_json(Json::parse(instance));
        const auto* d = std::get_if<DagInstance>(&x);
        if (d == nullptr) throw ValidationError("dag_stabilize expects a DAG instance");
        return canonical_dump(instance_to_json(dag_stabilize(*d, Rational::parse(eps))));
      },
      py::arg("instance"), py::arg("epsilon"));

  m.def(
      "sample_generic_points_json",
      [](const std::string& config) {
        TrialConfig cfg = trial_config_from_json(Json::parse(config));
        py::gil_scoped_release release;
        return canonical_dump(harness_report_to_json(sample_generic_points(cfg)));
      },
      py::arg("config"));

  m.def(
      "sample_path_stability_json",
      [](const std::string& config) {
        TrialConfig cfg = trial_config_from_json(Json::parse(config));
        py::gil_scoped_release release;
        return canonical_dump(harness_report_to_json(sample_path_stability(cfg)));
      },
      py::arg("config"));

  m.def(
      "kronecker_oracle_check_json",
      [](std::int64_t radius) { return canonical_dump(harness_report_to_json(kronecker_oracle_check(radius))); },
      py::arg("grid_radius") = 2);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
