#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smoothred/io.hpp"

namespace py = pybind11;
using namespace smoothred;

namespace {

py::dict result_dict(const CommandResult& r) {
  py::dict d;
  d["exit_code"] = r.exit_code;
  d["out"] = r.out;
  d["err"] = r.err;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "smoothness certificates and noetherian reduction for finitely presented algebras";

  m.def("verify", [](const std::string& text, bool json) {
    return result_dict(cmd_verify(text, json));
  }, py::arg("text"), py::arg("json") = true,
     "Check the certificate identities of a presentation file.");

  m.def("synth", [](const std::string& text, std::optional<unsigned> max_degree, bool json) {
    return result_dict(cmd_synth(text, max_degree, json));
  }, py::arg("text"), py::arg("max_degree") = py::none(), py::arg("json") = true,
     "Synthesize a smoothness certificate.");

  m.def("reduce", [](const std::string& text, bool synth, std::optional<unsigned> max_degree,
                     bool json) {
    return result_dict(cmd_reduce(text, synth, max_degree, json));
  }, py::arg("text"), py::arg("synth") = false, py::arg("max_degree") = py::none(),
     py::arg("json") = true, "Run the noetherian reduction and its five checks.");

  m.def("jacobian", [](const std::string& text) {
    return result_dict(cmd_jacobian(text));
  }, py::arg("text"), "Print the relator Jacobian.");
}
