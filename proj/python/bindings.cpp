#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coulomb/cli.hpp"
#include "coulomb/monopole.hpp"

namespace py = pybind11;
namespace cli = coulomb::cli;

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;

Terms terms_of(const coulomb::HilbertSeries& s) {
  Terms out;
  for (const auto& [e, c] : s.terms()) out.emplace_back(coulomb::to_string(e), coulomb::to_string(c));
  return out;
}

cli::RepSpec parse(const std::string& spec_json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(spec_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw coulomb::ValidationError(e.what());
  }
  return cli::parse_rep_spec(doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact anomaly checks, monopole-formula Hilbert series and orthosymplectic constructions";

  auto validation = py::register_exception<coulomb::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<coulomb::PreconditionError>(m, "PreconditionError", validation.ptr());
  py::register_exception<coulomb::ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  m.attr("SPEC_SCHEMA") = cli::kSpecSchema;
  m.attr("REPORT_SCHEMA") = cli::kReportSchema;
  m.attr("DEFAULT_SHELL_CAP") = coulomb::monopole::kDefaultShellCap;

  m.def("rep_info", [](const std::string& spec) { return cli::cmd_rep_info(parse(spec)).to_json().dump(); },
        py::arg("spec_json"), "rep-info report as a JSON string.");
  m.def("anomaly", [](const std::string& spec) { return cli::cmd_anomaly(parse(spec)).to_json().dump(); },
        py::arg("spec_json"), "anomaly report as a JSON string.");
  m.def(
      "hilbert",
      [](const std::string& spec, std::int64_t order, std::int64_t shell_cap, unsigned threads) {
        auto s = parse(spec);
        py::gil_scoped_release release;
        return cli::cmd_hilbert(s, {order, shell_cap, threads}).to_json().dump();
      },
      py::arg("spec_json"), py::arg("order"), py::arg("shell_cap") = coulomb::monopole::kDefaultShellCap,
      py::arg("threads") = 1u, "hilbert report as a JSON string.");
  m.def(
      "kostant_verify",
      [](int n, std::size_t samples, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return cli::cmd_kostant_verify(n, samples, seed, threads).to_json().dump();
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1u,
      "kostant-verify report as a JSON string.");

  m.def(
      "monopole_series",
      [](const std::string& spec, std::int64_t order, std::int64_t shell_cap, unsigned threads) {
        auto s = parse(spec);
        py::gil_scoped_release release;
        return terms_of(coulomb::monopole::monopole_hilbert_series(s.datum, s.rep, order, {shell_cap, threads}).series);
      },
      py::arg("spec_json"), py::arg("order"), py::arg("shell_cap") = coulomb::monopole::kDefaultShellCap,
      py::arg("threads") = 1u,
      "Nonzero terms (exponent, coefficient) of the monopole formula through q^order; raises ConvergenceError.");
  m.def(
      "presentation_series",
      [](std::int64_t n, std::int64_t order) {
        return terms_of(
            coulomb::monopole::presentation_hilbert_series(coulomb::monopole::sl2_presentation_for(n), order));
      },
      py::arg("monopole_number"), py::arg("order"));
  m.def(
      "sl2_relation", [](std::int64_t n) { return coulomb::monopole::sl2_presentation_for(n).relation; },
      py::arg("monopole_number"));
}
