#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cycleprefix/cli.hpp"
#include "cycleprefix/containers.hpp"
#include "cycleprefix/oracle.hpp"
#include "cycleprefix/routing.hpp"

namespace py = pybind11;
using namespace cycleprefix;

namespace {

// Python-side handle on one instance. Vertices cross the boundary as strings.
class Network {
 public:
  Network(int delta, int dee, int r) : p_(delta, dee, r) {}

  const NetworkParams& params() const { return p_; }
  Vertex v(const std::string& text) const { return parse_vertex(text, p_); }
  std::string s(const Vertex& x) const { return x.to_string(p_); }

  std::vector<std::string> strs(const std::vector<Vertex>& xs) const {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(s(x));
    return out;
  }

 private:
  NetworkParams p_;
};

py::dict diagnostics(const Network& n, const oracle::ContainerDiagnostics& d) {
  py::dict out;
  out["valid"] = d.valid;
  out["length"] = d.length;
  out["width"] = d.width;
  out["problems"] = d.problems;
  out["shared_vertex"] = d.shared_vertex ? py::cast(n.s(*d.shared_vertex)) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Routing, containers and graph oracles for cycle-prefix digraphs";

  static py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<Network>(m, "Network")
      .def(py::init<int, int, int>(), py::arg("delta"), py::arg("dee"), py::arg("r") = 0)
      .def_property_readonly("delta", [](const Network& n) { return n.params().delta(); })
      .def_property_readonly("dee", [](const Network& n) { return n.params().dee(); })
      .def_property_readonly("r", [](const Network& n) { return n.params().r(); })
      .def_property_readonly("vertex_count", [](const Network& n) { return vertex_count(n.params()); })
      .def_property_readonly("origin", [](const Network& n) { return n.s(standard_origin(n.params())); })
      .def("__repr__", [](const Network& n) { return "<Network " + n.params().to_string() + ">"; })
      .def("out_neighbors", [](const Network& n, const std::string& x) {
        return n.strs(out_neighbors(n.v(x), n.params()));
      })
      .def("in_neighbors", [](const Network& n, const std::string& x) {
        return n.strs(in_neighbors(n.v(x), n.params()));
      })
      .def("has_arc", [](const Network& n, const std::string& a, const std::string& b) {
        return arc_between(n.v(a), n.v(b), n.params()).has_value();
      })
      .def("distance", [](const Network& n, const std::string& x, const std::string& y) {
        return distance(n.v(x), n.v(y), n.params());
      })
      .def("shortest_path", [](const Network& n, const std::string& x, const std::string& y) {
        return n.strs(shortest_path(n.v(x), n.v(y), n.params()).vertices);
      })
      .def("restricted_route", [](const Network& n, const std::string& x, const std::string& y) {
        return n.strs(restricted_route(n.v(x), n.v(y), n.params()).vertices);
      })
      .def("reach_walk", [](const Network& n, const std::string& x, const std::string& y) {
        return n.strs(reach_walk(n.v(x), n.v(y), n.params()).vertices);
      })
      .def("is_remote", [](const Network& n, const std::string& x) { return is_remote(n.v(x), n.params()); })
      .def("container",
           [](const Network& n, const std::string& x, const std::string& y) {
             std::vector<std::vector<std::string>> out;
             for (const auto& path : container(n.v(x), n.v(y), n.params()).paths) out.push_back(n.strs(path.vertices));
             return out;
           })
      .def("verify_container",
           [](const Network& n, const std::string& x, const std::string& y) {
             return diagnostics(n, oracle::verify_container(container(n.v(x), n.v(y), n.params()), n.params()));
           })
      .def("theta", [](const Network& n, const std::string& x, Symbol i) { return theta(n.v(x), i, n.params()); })
      .def("leg_distance",
           [](const Network& n, const std::string& x, Symbol i) { return leg_distance(n.v(x), i, n.params()); })
      .def("char_triple",
           [](const Network& n, const std::string& x) {
             auto t = char_triple(n.v(x), n.params());
             return py::make_tuple(t.alpha, t.beta, t.beta1);
           })
      .def("diameter", [](const Network& n, std::uint64_t cap) { return oracle::diameter(n.params(), cap); },
           py::arg("max_vertices") = oracle::kDefaultVertexCap)
      .def("bfs_distance",
           [](const Network& n, const std::string& x, const std::string& y) {
             return oracle::bfs_distances(n.v(x), n.params()).at(n.v(y));
           })
      .def("count_geodesics",
           [](const Network& n, const std::string& x, const std::string& y) {
             return oracle::count_geodesics(n.v(x), n.v(y), n.params());
           })
      .def("geodesics",
           [](const Network& n, const std::string& x, const std::string& y) {
             std::vector<std::vector<std::string>> out;
             for (const auto& path : oracle::enumerate_geodesics(n.v(x), n.v(y), n.params()))
               out.push_back(n.strs(path.vertices));
             return out;
           })
      .def("menger_disjoint_count",
           [](const Network& n, const std::string& x, const std::string& y) {
             return oracle::menger_disjoint_count(n.v(x), n.v(y), n.params());
           })
      .def("exact_k_reachable", [](const Network& n, int k) {
        return oracle::exact_k_reachable(oracle::ExplicitGraph(n.params()), k).all_pairs_reachable_in_exactly_k;
      });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the cpnet command line in-process; returns (exit_code, stdout, stderr).");
}
