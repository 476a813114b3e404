#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chevalley/cli.hpp"
#include "chevalley/io.hpp"
#include "chevalley/scalars.hpp"

namespace py = pybind11;
using namespace chevalley;

namespace {

std::string roots_json(const std::string& type) { return root_system_json(RootSystem(RootSystemType::parse(type))).dump(); }

std::string smith_of(const std::string& type) {
  const RootSystem roots(RootSystemType::parse(type));
  return smith_json(smith_normal_form(IntMatrix(roots.cartan()))).dump();
}

std::string determinant_of(const std::vector<std::vector<int>>& rows) { return determinant(IntMatrix(rows)).get_str(); }

int k_of(const std::string& type) { return count_k(RootSystem(RootSystemType::parse(type))); }

std::vector<std::string> nu_of(const std::string& x) {
  std::vector<std::string> out;
  for (const auto& p : nu(Rational::parse(x))) out.push_back(p.get_str());
  return out;
}

std::tuple<int, std::string, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string witness(const std::string& type, const std::string& field, const std::string& rho,
                    const std::string& delta, const std::string& diag, std::size_t n, const std::string& strategy,
                    std::uint64_t seed) {
  std::vector<std::string> args{"witness", "--type", type, "--field", field, "--n", std::to_string(n),
                                "--strategy", strategy, "--seed", std::to_string(seed), "--delta", delta};
  if (!rho.empty()) args.insert(args.end(), {"--rho", rho});
  if (!diag.empty()) args.insert(args.end(), {"--diag", diag});
  auto [code, out, err] = run(args);
  if (code != 0) throw std::runtime_error(err);
  return out;
}

bool verify(const std::string& certificate) {
  return verify_certificate(certificate_from_json(Json::parse(certificate))).valid;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Chevalley group computations";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("roots", &roots_json, py::arg("type"), "Root system as a JSON string.");
  m.def("smith", &smith_of, py::arg("type"), "Smith normal form of the Cartan matrix as a JSON string.");
  m.def("determinant", &determinant_of, py::arg("rows"));
  m.def("count_k", &k_of, py::arg("type"));
  m.def("k_formula", [](const std::string& type) { return k_formula(RootSystemType::parse(type)); }, py::arg("type"));
  m.def("nu", &nu_of, py::arg("x"));
  m.def("witness", &witness, py::arg("type"), py::arg("field") = "Q", py::arg("rho") = "", py::arg("delta") = "id",
        py::arg("diag") = "", py::arg("n") = 2, py::arg("strategy") = "P", py::arg("seed") = 0,
        "Witness certificate as a JSON string.");
  m.def("verify", &verify, py::arg("certificate"), "Recheck a certificate given as a JSON string.");
  m.def("run", &run, py::arg("args"), "Run a command line; returns (exit code, stdout, stderr).");
}
