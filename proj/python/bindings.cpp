#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "medianlab/circle.hpp"
#include "medianlab/cocycle.hpp"
#include "medianlab/error.hpp"
#include "medianlab/experiments.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/median.hpp"
#include "medianlab/presentation.hpp"
#include "medianlab/reports.hpp"

namespace py = pybind11;
namespace ml = medianlab;

namespace {

// Reports cross into Python as plain dicts, through the same JSON layer the
// CLI emits, so both surfaces stay schema-identical.
py::object to_py(const ml::Json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

struct PyGroup {
  std::shared_ptr<const ml::Group> g;
  const ml::Group& ref() const { return *g; }
};

struct PyElement {
  ml::Element e;
};

PyGroup make_pygroup(const std::string& spec) { return PyGroup{ml::make_group(spec)}; }

}  // namespace

PYBIND11_MODULE(_medianlab, m) {
  m.doc() = "median graphs, marked groups and central extensions";

  py::register_exception<ml::Error>(m, "MedianLabError");

  py::class_<ml::Graph>(m, "Graph")
      .def_property_readonly("vertex_count", &ml::Graph::vertex_count)
      .def_property_readonly("edge_count", &ml::Graph::edge_count)
      .def_readwrite("name", &ml::Graph::name)
      .def("__repr__", [](const ml::Graph& g) {
        return "<Graph " + (g.name.empty() ? "?" : g.name) + " n=" +
               std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("hypercube", &ml::hypercube, py::arg("k"));
  m.def("grid", &ml::grid, py::arg("rows"), py::arg("cols"));
  m.def("path", &ml::path, py::arg("n"));
  m.def("cycle", &ml::cycle, py::arg("n"));
  m.def("random_tree", &ml::random_tree, py::arg("n"), py::arg("seed"));
  m.def("quasi_line", &ml::quasi_line, py::arg("lam"), py::arg("lo"), py::arg("hi"));
  m.def("random_connected", &ml::random_connected, py::arg("n"), py::arg("extra_edges"),
        py::arg("seed"));
  m.def("parse_graph", [](const std::string& text) { return ml::parse_graph(text); });
  m.def(
      "serialize_graph",
      [](const ml::Graph& g, const std::string& format) {
        ml::GraphFormat f = format == "json"  ? ml::GraphFormat::Json
                            : format == "dot" ? ml::GraphFormat::Dot
                                              : ml::GraphFormat::EdgeList;
        return ml::serialize(g, f);
      },
      py::arg("graph"), py::arg("format") = "edgelist");

  m.def(
      "check_median",
      [](const ml::Graph& g, unsigned workers) {
        ml::DistanceMatrix dm(g, workers);
        return to_py(ml::report_median(g.name, ml::check_median(g, dm, workers)));
      },
      py::arg("graph"), py::arg("workers") = 1);
  m.def(
      "almost_median_frontier",
      [](const ml::Graph& g, int delta_max, unsigned workers) {
        ml::DistanceMatrix dm(g, workers);
        return to_py(
            ml::report_frontier(g.name, ml::almost_median_frontier(g, dm, delta_max, workers)));
      },
      py::arg("graph"), py::arg("delta_max"), py::arg("workers") = 1);
  m.def(
      "hyperplanes",
      [](const ml::Graph& g) {
        ml::DistanceMatrix dm(g);
        auto hs = ml::hyperplanes(g, dm);
        return to_py(ml::report_hyperplanes(g.name, hs, ml::cubical_dimension(hs, g)));
      },
      py::arg("graph"));

  py::class_<PyElement>(m, "Element")
      .def("__str__", [](const PyElement& e) { return e.e.str(); })
      .def("__repr__", [](const PyElement& e) { return "<Element " + e.e.str() + ">"; })
      .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.e == b.e; })
      .def("__hash__", [](const PyElement& e) { return e.e.hash(); });

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("name", [](const PyGroup& g) { return g.ref().name(); })
      .def("identity", [](const PyGroup& g) { return PyElement{g.ref().identity()}; })
      .def("parse", [](const PyGroup& g, const std::string& text) {
        return PyElement{g.ref().parse(text)};
      })
      .def("mul", [](const PyGroup& g, const PyElement& a, const PyElement& b) {
        return PyElement{g.ref().mul(a.e, b.e)};
      })
      .def("inv",
           [](const PyGroup& g, const PyElement& a) { return PyElement{g.ref().inv(a.e)}; })
      .def(
          "power",
          [](const PyGroup& g, const PyElement& a, long long n) {
            return PyElement{g.ref().power(a.e, n)};
          },
          py::arg("e"), py::arg("n"))
      .def("generators",
           [](const PyGroup& g) {
             py::dict out;
             for (const auto& gen : g.ref().generators())
               out[py::str(gen.name)] = PyElement{gen.value};
             return out;
           })
      .def(
          "word_length",
          [](const PyGroup& g, const PyElement& e) { return ml::word_length(g.ref(), e.e); },
          py::arg("e"))
      .def(
          "order",
          [](const PyGroup& g, const PyElement& e, long long bound) {
            return ml::order_of(g.ref(), e.e, bound);
          },
          py::arg("e"), py::arg("bound") = 1024)
      .def(
          "ball",
          [](const PyGroup& g, int radius, unsigned workers) {
            return to_py(ml::report_ball(ml::cayley_ball(g.ref(), radius, ml::default_caps(),
                                                         workers)));
          },
          py::arg("radius"), py::arg("workers") = 1)
      .def(
          "distortion",
          [](const PyGroup& g, const std::string& central, int radius, unsigned workers) {
            return to_py(ml::report_distortion(ml::distortion_profile(
                g.ref(), g.ref().parse(central), radius, ml::default_caps(), workers)));
          },
          py::arg("central"), py::arg("radius"), py::arg("workers") = 1)
      .def("__repr__", [](const PyGroup& g) { return "<Group " + g.ref().name() + ">"; });

  m.def("group", &make_pygroup, py::arg("spec"),
        "registry: free:k, zk:k, heisenberg, lamplighter, GI:I=..., surface:g, T, Tbar, "
        "ext:<cocycle>");

  m.def(
      "cocycle_check",
      [](const std::string& name, std::size_t samples, std::uint64_t seed) {
        return to_py(ml::report_cocycle_check(ml::check_cocycle(ml::make_cocycle(name), samples,
                                                                seed)));
      },
      py::arg("name"), py::arg("samples") = 1000, py::arg("seed") = 1);
  m.def(
      "defect",
      [](const std::string& name, int radius) {
        ml::ExtensionGroup ext(ml::make_cocycle(name));
        return to_py(ml::report_defect(ext.name(), ml::defect_over_ball(ext, radius)));
      },
      py::arg("name"), py::arg("radius") = 3);
  m.def(
      "translation_number",
      [](const std::string& name, const std::string& element, long long n) {
        ml::ExtensionGroup ext(ml::make_cocycle(name));
        return to_py(
            ml::report_translation(ext.name(), element,
                                   ml::translation_number(ext, ext.parse(element), n)));
      },
      py::arg("name"), py::arg("element"), py::arg("n") = 64);
  m.def(
      "euler_value",
      [](const std::string& g, const std::string& h) {
        ml::TGroup t;
        return ml::euler_value(t.parse(g).as<ml::CircleElement>().map(),
                               t.parse(h).as<ml::CircleElement>().map());
      },
      py::arg("g"), py::arg("h"));

  m.def(
      "check_relators",
      [](const std::string& presentation, const std::string& model, long long n_bound) {
        ml::FinitePresentation p = ml::resolve_presentation(presentation);
        auto g = ml::make_group(model);
        std::map<std::string, ml::Element> assignment;
        for (const std::string& name : p.gens)
          assignment.emplace(name, g->generator_by_name(name));
        return to_py(
            ml::report_relators(p.name, model, n_bound, ml::check_relators(p, *g, assignment,
                                                                           n_bound)));
      },
      py::arg("presentation"), py::arg("model"), py::arg("n_bound") = 20);
  m.def(
      "count_homs",
      [](const std::string& presentation, const std::string& target, bool naive) {
        ml::FinitePresentation p = ml::resolve_presentation(presentation);
        ml::FiniteGroupTable t = ml::make_target(target);
        return to_py(ml::report_homcount(naive ? ml::count_homs_naive(p, t)
                                               : ml::count_homs(p, t)));
      },
      py::arg("presentation"), py::arg("target"), py::arg("naive") = false);
  m.def(
      "separate",
      [](const std::string& a, const std::string& b, const std::vector<std::string>& targets) {
        std::vector<ml::FiniteGroupTable> tables;
        for (const auto& t : targets) tables.push_back(ml::make_target(t));
        ml::FinitePresentation pa = ml::resolve_presentation(a);
        ml::FinitePresentation pb = ml::resolve_presentation(b);
        std::vector<std::string> names(targets);
        return to_py(ml::report_separation(pa.name, pb.name, names,
                                           ml::separate(pa, pb, tables)));
      },
      py::arg("a"), py::arg("b"), py::arg("targets"));
}
