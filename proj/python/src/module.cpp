#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "p2flis/caterpillar.hpp"
#include "p2flis/error.hpp"
#include "p2flis/leaf_function.hpp"
#include "p2flis/patch_io.hpp"
#include "p2flis/render.hpp"
#include "p2flis/search.hpp"

namespace py = pybind11;
using namespace p2flis;

namespace {

py::dict chain_dict(const ChainReport& r) {
  py::dict d;
  d["order"] = r.order;
  d["shape"] = r.shape;
  d["tiles"] = r.tiles;
  py::list primes;
  for (const auto& p : r.primes) {
    py::dict e;
    e["class_id"] = p.class_id;
    e["angle"] = p.angle;
    e["side"] = p.side ? py::object(py::str(std::string(1, side_letter(*p.side)))) : py::object(py::none());
    primes.append(e);
  }
  d["primes"] = primes;
  d["colors"] = r.colors;
  d["angles"] = r.angles;
  d["violations"] = r.violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_p2flis, m) {
  m.doc() = "Penrose P2 tilings and their fully leafed induced subtrees";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  m.def("leaf_function", &leaf_function, py::arg("n"));
  m.def("is_saturated", &is_saturated, py::arg("n"));

  py::class_<Patch>(m, "Patch")
      .def_static("from_text", &patch_from_string, py::arg("text"))
      .def("to_text", &patch_to_string)
      .def("__len__", &Patch::size)
      .def_readonly("scale_exp", &Patch::scale_exp)
      .def("half_tile_counts",
           [](const Patch& p) {
             const auto c = count_halves(p);
             return py::make_tuple(c.half_kites, c.half_darts);
           })
      .def("is_valid", [](const Patch& p) { return validate_patch(p).ok(); });

  m.def(
      "generate", [](const std::string& seed, int inflations) { return inflate(seed_patch(seed), inflations); },
      py::arg("seed") = "sun", py::arg("inflations") = 0);

  py::class_<Tiling>(m, "Tiling")
      .def(py::init([](const Patch& p) { return make_tiling(p); }), py::arg("patch"))
      .def_property_readonly("patch", [](const Tiling& t) { return t.patch; })
      .def("neighbors", [](const Tiling& t, int v) { return t.graph.neighbors(v); }, py::arg("tile"))
      .def("graph_text", [](const Tiling& t) { return graph_to_string(t.graph); })
      .def("star_graph_text", [](const Tiling& t) { return star_graph_to_string(t.stars); })
      .def_property_readonly("star_count", [](const Tiling& t) { return t.stars.vertices.size(); })
      .def_property_readonly("star_edge_count", [](const Tiling& t) { return t.stars.edges.size(); })
      .def_property_readonly("sun_count", [](const Tiling& t) { return t.flowers.suns.size(); })
      .def("star_colors", [](const Tiling& t) {
        std::string s;
        for (const auto& v : t.stars.vertices) s += color_letter(v.color);
        return s;
      });

  m.def(
      "search_max_leaves",
      [](const Tiling& t, int n, std::size_t witness_cap, std::uint64_t node_limit, double time_limit) {
        SearchBudget b;
        b.witness_cap = witness_cap;
        b.node_limit = node_limit;
        b.time_limit_s = time_limit;
        py::gil_scoped_release release;
        return search_max_leaves(t.graph, n, b);
      },
      py::arg("tiling"), py::arg("n"), py::arg("witness_cap") = 64, py::arg("node_limit") = 0,
      py::arg("time_limit") = 0.0);

  py::class_<LeafRecord>(m, "LeafRecord")
      .def_readonly("n", &LeafRecord::n)
      .def_readonly("max_leaves", &LeafRecord::max_leaves)
      .def_readonly("witnesses", &LeafRecord::witnesses)
      .def_readonly("partial", &LeafRecord::partial)
      .def_readonly("witnesses_complete", &LeafRecord::witnesses_complete)
      .def_readonly("optimal_count", &LeafRecord::optimal_count)
      .def("to_text", &flis_to_string);

  m.def(
      "prime_census",
      [](const Tiling& t) {
        const auto c = prime_census(t);
        py::list rows;
        for (const auto& r : c.rows) {
          py::dict d;
          d["class_id"] = r.class_id;
          d["expected_angle"] = r.expected_angle;
          d["instances"] = r.instances;
          d["angles"] = r.angles;
          rows.append(d);
        }
        return py::make_tuple(rows, c.exceptions());
      },
      py::arg("tiling"));

  m.def(
      "chain_report",
      [](const Tiling& t, std::vector<int> tiles) {
        auto c = decompose(t.graph, InducedSubtree(t.graph, std::move(tiles)));
        analyze_chain(t, c);
        return chain_dict(chain_report(t, c));
      },
      py::arg("tiling"), py::arg("tiles"));

  m.def(
      "sea_caterpillars",
      [](const std::string& angles) {
        std::vector<std::tuple<std::string, int, int>> out;
        for (const auto& s : detect_sea_caterpillars(angles)) out.emplace_back(s.kind, s.first, s.last);
        return out;
      },
      py::arg("angles"));

  m.def(
      "forbidden_patterns",
      [](const std::string& angles, const std::vector<int>& classes) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& v : forbidden_patterns(angles, classes)) out.emplace_back(std::string(pattern_name(v.kind)), v.position);
        return out;
      },
      py::arg("angles"), py::arg("classes"));

  m.def(
      "render_svg",
      [](const Tiling& t, std::vector<int> tree, bool stars) {
        RenderOptions o;
        o.tree = std::move(tree);
        if (stars) o.stars = &t.stars;
        return render_svg(t.patch, t.graph, o);
      },
      py::arg("tiling"), py::arg("tree") = std::vector<int>{}, py::arg("stars") = false);
}
