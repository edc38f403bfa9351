#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "curvehom/cli.hpp"
#include "curvehom/verify.hpp"

namespace py = pybind11;
using namespace curvehom;

namespace {

CurveSpec make_spec(const std::string& kind, unsigned genus, unsigned nodes) {
  if (kind == "nodal") return CurveSpec::nodal(genus, nodes);
  if (kind == "cuspidal-cubic") return CurveSpec::cuspidal_cubic();
  throw InputError("unknown curve kind '" + kind + "'");
}

std::map<int, std::size_t> table_dict(const HomologyTable& t, int lo, int hi) {
  std::map<int, std::size_t> out;
  for (const auto& [d, v] : t.window(lo, hi)) out[d] = v;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact homological invariants of nodal and cuspidal curves";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def(
      "hochschild",
      [](const std::string& kind, unsigned genus, unsigned nodes, int lo, int hi) {
        return table_dict(hkr_hochschild(make_spec(kind, genus, nodes), lo, hi), lo, hi);
      },
      py::arg("kind") = "nodal", py::arg("genus") = 1, py::arg("nodes") = 1, py::arg("lo") = -4, py::arg("hi") = 6,
      "HH_n by homological degree.");
  m.def(
      "negative_cyclic",
      [](const std::string& kind, unsigned genus, unsigned nodes, int lo, int hi) {
        return table_dict(hn_table(make_spec(kind, genus, nodes), lo, hi), lo, hi);
      },
      py::arg("kind") = "nodal", py::arg("genus") = 1, py::arg("nodes") = 1, py::arg("lo") = -4, py::arg("hi") = 6,
      "HN_n by homological degree.");
  m.def(
      "degeneration_page",
      [](const std::string& kind, unsigned genus, unsigned nodes, const std::string& which) {
        if (which != "hdr" && which != "hc") throw InputError("which must be 'hdr' or 'hc'");
        return degeneration_page(make_spec(kind, genus, nodes),
                                 which == "hdr" ? SpectralKind::HodgeDeRham : SpectralKind::HochschildCyclic);
      },
      py::arg("kind") = "nodal", py::arg("genus") = 1, py::arg("nodes") = 1, py::arg("which") = "hdr");
  m.def(
      "local_cohomology",
      [](const std::string& model, unsigned k) {
        const DgModule w = wedge_power(parse_model(model), k);
        std::map<int, std::optional<std::size_t>> out;
        for (int i = w.complex.lo(); i <= w.complex.hi(); ++i) {
          const Dimension d = homology_dimension(w.complex, i);
          out[i] = d.is_finite() ? std::optional<std::size_t>(d.get()) : std::nullopt;
        }
        return out;
      },
      py::arg("model"), py::arg("k"), "dim H^i of the k-th derived wedge power; None when infinite.");
  m.def(
      "verify",
      [](const std::string& scope) {
        const VerifyReport r = verify(parse_scope(scope));
        return py::make_tuple(r.ok(), r.to_text());
      },
      py::arg("scope") = "all");
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
