// In-process python entry point. The full command surface is exposed as
// run(); the config knobs mirror the CODERCO_* environment variables.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "coderco/cli.hpp"
#include "coderco/config.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_coderco, m) {
    m.doc() = "Exact cohomology and deformation theory of coalgebra-coderivation pairs";

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = coderco::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "Run one command in process; returns (exit_code, stdout, stderr).");

    m.def("max_degree", [] { return coderco::config().max_degree; },
          "Largest degree for which operator matrices may be assembled.");
    m.def("set_max_degree", [](int n) { coderco::config().max_degree = n; }, py::arg("n"));
    m.def("index_bound", [] { return static_cast<long long>(coderco::config().index_bound); },
          "Largest admissible matrix dimension.");
    m.def("set_index_bound",
          [](long long n) { coderco::config().index_bound = n; }, py::arg("n"));
}
