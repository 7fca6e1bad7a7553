#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symbez/errors.hpp"
#include "symbez/fixedpoints.hpp"
#include "symbez/json.hpp"
#include "symbez/parse.hpp"
#include "symbez/random.hpp"
#include "symbez/solver.hpp"
#include "symbez/verify.hpp"

namespace py = pybind11;
using namespace symbez;

namespace {

BasisMode basis_mode(const std::string& basis) {
  if (basis == "monomial") return BasisMode::kMonomial;
  if (basis == "elementary") return BasisMode::kElementary;
  throw std::invalid_argument("basis must be 'monomial' or 'elementary'");
}

int dimension(const std::string& space) {
  if (space == "p2") return 2;
  if (space == "p3") return 3;
  throw std::invalid_argument("space must be 'p2' or 'p3'");
}

VerifyOptions verify_options(long precision) {
  VerifyOptions o;
  o.solve.precision_bits = precision;
  o.solve.max_precision_bits = std::max<long>(512, precision);
  return o;
}

std::string solve_json(const std::vector<std::string>& polys, const std::string& basis, long precision, std::uint64_t seed,
                       double tolerance, int max_product) {
  if (polys.size() != 2 && polys.size() != 3) throw std::invalid_argument("give two polynomials (P2) or three (P3)");
  const int n = static_cast<int>(polys.size()) + 1;
  std::vector<MultiPoly> fs;
  for (const auto& p : polys) fs.push_back(parse_poly(p, n, basis_mode(basis)));
  SolveOptions o;
  o.precision_bits = precision;
  o.max_precision_bits = std::max<long>(512, precision);
  o.seed = seed;
  o.match_tolerance = tolerance;
  o.max_product = max_product;
  const auto r = fs.size() == 2 ? solve_p2(fs[0], fs[1], o) : solve_p3(fs[0], fs[1], fs[2], o);
  return to_json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orbit types of symmetric intersections in P2 and P3";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CommonFactorError>(m, "CommonFactorError", PyExc_ValueError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<NotClosedError>(m, "NotClosedError", PyExc_ArithmeticError);

  m.def("solve_json", &solve_json, py::arg("polys"), py::arg("basis") = "monomial",
        py::arg("precision") = kDefaultPrecisionBits, py::arg("seed") = 0, py::arg("tolerance") = kDefaultMatchTolerance,
        py::arg("max_product") = 24, py::call_guard<py::gil_scoped_release>());

  m.def("expand", [](const std::string& text, int num_vars, const std::string& basis) {
    return parse_poly(text, num_vars, basis_mode(basis)).to_string();
  }, py::arg("text"), py::arg("num_vars"), py::arg("basis") = "monomial");

  m.def("expected_orbit_type_p2", [](int d, int e) -> std::optional<std::string> {
    const auto t = expected_orbit_type_p2(d, e);
    if (!t) return std::nullopt;
    return t->to_string();
  }, py::arg("d"), py::arg("e"));

  m.def("p3_degree_congruence", &p3_degree_congruence, py::arg("d1"), py::arg("d2"), py::arg("d3"));

  m.def("verify_p2_table_json", [](int d, int e, int trials, std::uint64_t seed, long precision) {
    return to_json(verify_p2_table(d, e, trials, seed, verify_options(precision))).dump();
  }, py::arg("d"), py::arg("e"), py::arg("trials") = 10, py::arg("seed") = 0, py::arg("precision") = kDefaultPrecisionBits,
        py::call_guard<py::gil_scoped_release>());

  m.def("verify_p3_json", [](int d1, int d2, int d3, int trials, std::uint64_t seed, long precision) {
    return to_json(verify_p3(d1, d2, d3, trials, seed, verify_options(precision))).dump();
  }, py::arg("d1"), py::arg("d2"), py::arg("d3"), py::arg("trials") = 5, py::arg("seed") = 0,
        py::arg("precision") = kDefaultPrecisionBits, py::call_guard<py::gil_scoped_release>());

  m.def("independence_json", [](const std::string& space, const std::vector<int>& degrees, int trials, std::uint64_t seed,
                                long precision) {
    return to_json(orbit_type_independence(dimension(space), degrees, trials, seed, verify_options(precision))).dump();
  }, py::arg("space"), py::arg("degrees"), py::arg("trials") = 10, py::arg("seed") = 0,
        py::arg("precision") = kDefaultPrecisionBits, py::call_guard<py::gil_scoped_release>());

  m.def("random_instance", [](const std::string& space, const std::vector<int>& degrees, std::uint64_t seed) {
    const int dim = dimension(space);
    if (static_cast<int>(degrees.size()) != dim) throw std::invalid_argument("need one degree per equation");
    std::vector<std::string> out;
    for (size_t k = 0; k < degrees.size(); ++k) {
      out.push_back(random_symmetric(dim + 1, degrees[k], derive_seed(seed, k)).to_string());
    }
    return out;
  }, py::arg("space"), py::arg("degrees"), py::arg("seed") = 0);

  m.def("fixed_points", [](const std::string& space) {
    py::list out;
    for (const auto& f : fixed_point_catalog(dimension(space))) {
      py::dict d;
      d["stabilizer"] = f.stabilizer;
      d["points"] = f.all_points ? std::string("all") : f.text;
      d["parameters"] = f.num_params;
      d["admissible"] = f.admissible;
      d["reason"] = f.reason;
      out.append(d);
    }
    return out;
  }, py::arg("space"));

  m.def("verify_catalog", [](const std::string& space) {
    return verify_catalog_by_stabilizer(dimension(space)).all_ok();
  }, py::arg("space"), py::call_guard<py::gil_scoped_release>());
}
