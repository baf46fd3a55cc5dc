// Python bindings. Records cross the boundary as JSON text; the package turns rational
// strings into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hampower/calculus.hpp"
#include "hampower/errors.hpp"
#include "hampower/graph.hpp"
#include "hampower/lab.hpp"
#include "hampower/oracle.hpp"
#include "hampower/report.hpp"
#include "hampower/rewire.hpp"
#include "hampower/slope.hpp"

namespace py = pybind11;
namespace hp = hampower;

namespace {

std::vector<hp::Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<hp::Edge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

std::vector<std::pair<int, int>> from_graph(const hp::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const hp::Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

template <typename T>
std::string dump(const T& value) {
  return hp::json(value).dump();
}

}  // namespace

PYBIND11_MODULE(_hampower, m) {
  m.doc() = "Exact calculus, constructions and oracles for powers of Hamilton cycles";

  static py::exception<hp::DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<hp::ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  static py::exception<hp::InternalError> internal_error(m, "InternalError", PyExc_AssertionError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hp::DomainError& e) {
      PyErr_SetString(domain_error.ptr(), e.what());
    } catch (const hp::ResourceError& e) {
      PyErr_SetString(resource_error.ptr(), e.what());
    } catch (const hp::InternalError& e) {
      PyErr_SetString(internal_error.ptr(), e.what());
    }
  });

  m.def("f_value", [](int k, int mm, const std::string& x) { return hp::f_value(k, mm, hp::Rational::parse(x)).str(); },
        py::arg("k"), py::arg("m"), py::arg("x"));
  m.def("params_json", [](int k, int mm) { return dump(hp::profile(k, mm)); }, py::arg("k"), py::arg("m"));
  m.def("table",
        [](int k, int from, int to, const std::string& format) {
          return hp::emit_table(k, from, to, hp::table_format_from_string(format));
        },
        py::arg("k"), py::arg("m_from"), py::arg("m_to"), py::arg("format") = "csv");
  m.def("pell_json", [](int k, int count) { return dump(hp::pell_integer_lambdas(k, count)); }, py::arg("k"),
        py::arg("count") = 1);
  m.def("slope_json", [](int k, int mm, int s) { return dump(hp::zero_statement_slope(k, mm, s)); }, py::arg("k"),
        py::arg("m"), py::arg("s"));
  m.def("segment_far_minimum", &hp::segment_far_minimum, py::arg("k"), py::arg("m"), py::arg("s"), py::arg("i"));
  m.def("min_partition_json",
        [](int L, int mm, int k) { return dump(hp::min_partition_edges(L, mm, k)); }, py::arg("L"), py::arg("m"),
        py::arg("k"));
  m.def("braid_edges",
        [](int ell, int r, int t) { return from_graph(hp::braid({ell, r, t})); }, py::arg("ell"), py::arg("r"),
        py::arg("t"));
  m.def("max_density",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
          return hp::max_density(hp::Graph::from_edges(n, to_edges(edges))).str();
        },
        py::arg("n"), py::arg("edges"));
  m.def("clique_count",
        [](int n, const std::vector<std::pair<int, int>>& edges, int s) {
          return hp::clique_count(hp::Graph::from_edges(n, to_edges(edges)), s);
        },
        py::arg("n"), py::arg("edges"), py::arg("s"));
  m.def("gnp_edges",
        [](int n, const std::string& p, std::uint64_t seed) {
          return from_graph(hp::gnp(n, hp::Rational::parse(p), seed));
        },
        py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("rewire_json",
        [](int mm, const std::vector<int>& order, const std::vector<int>& v0_positions) {
          hp::LabeledPowerPath path;
          path.m = mm;
          path.order = order;
          return dump(hp::rewire(path, v0_positions));
        },
        py::arg("m"), py::arg("order"), py::arg("v0_positions"));
}
