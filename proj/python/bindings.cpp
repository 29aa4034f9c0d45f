#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "coverhom/cover.hpp"
#include "coverhom/group.hpp"
#include "coverhom/repspace.hpp"
#include "coverhom/scenarios.hpp"
#include "coverhom/stallings.hpp"
#include "coverhom/word.hpp"

namespace py = pybind11;
using namespace coverhom;

namespace {

int parse_image(const GroupSpec& spec, const std::string& s) {
  if (s.find('(') != std::string::npos)
    return spec.group->index_of(Permutation::parse(spec.group->degree(), s));
  std::vector<long long> exps;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) exps.push_back(std::stoll(part));
  int out = 0;
  for (size_t i = 0; i < exps.size() && i < spec.preferred_generators.size(); ++i)
    out = spec.group->mul(out, spec.group->power(spec.preferred_generators[i], exps[i]));
  return out;
}

CoverGraph make_cover(const std::string& group_json, const std::vector<std::string>& images,
                      int rank) {
  auto spec = group_from_json(group_json);
  std::vector<int> img;
  if (images.empty()) {
    img = spec.preferred_generators;
    if (rank <= 0) rank = (int)img.size();
    img.resize(rank, 0);
  } else {
    if (rank <= 0) rank = (int)images.size();
    for (const auto& s : images) img.push_back(parse_image(spec, s));
  }
  return CoverGraph(Epimorphism(rank, spec.group, img));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact homology representations of finite regular graph covers";

  py::class_<CoverGraph>(m, "Cover")
      .def(py::init(&make_cover), py::arg("group_json"), py::arg("images") = std::vector<std::string>{},
           py::arg("rank") = 0)
      .def_property_readonly("vertex_count", &CoverGraph::vertex_count)
      .def_property_readonly("edge_count", &CoverGraph::edge_count)
      .def_property_readonly("cycle_rank", &CoverGraph::cycle_rank)
      .def_property_readonly("rank", &CoverGraph::rank)
      .def("schreier_basis",
           [](const CoverGraph& c) {
             std::vector<std::string> out;
             for (const auto& w : c.schreier_basis()) out.push_back(w.str());
             return out;
           })
      .def("elevation",
           [](const CoverGraph& c, const std::string& word) {
             auto [k, cls] = c.preferred_elevation_class(Word::parse(c.rank(), word));
             std::vector<std::string> coords;
             for (const auto& x : cls.coordinates) coords.push_back(rat_to_string(x));
             return py::make_tuple(k, coords);
           },
           py::arg("word"))
      .def("span_dimension",
           [](const CoverGraph& c, const std::string& word) {
             auto rho = c.deck_action();
             auto [k, cls] = c.preferred_elevation_class(Word::parse(c.rank(), word));
             return span_under_action(cls.coordinates, rho).dim();
           },
           py::arg("word"))
      .def_property_readonly("kernel_dimension",
                             [](const CoverGraph& c) { return kernel_of_projection(c).dim(); })
      .def("dot", &CoverGraph::dot);

  py::class_<FoldedGraph>(m, "FoldedGraph")
      .def(py::init([](int rank, const std::vector<std::string>& words) {
             std::vector<Word> ws;
             for (const auto& s : words) ws.push_back(Word::parse(rank, s));
             return FoldedGraph(rank, ws);
           }),
           py::arg("rank"), py::arg("words"))
      .def_property_readonly("vertex_count", &FoldedGraph::vertex_count)
      .def_property_readonly("edge_count", &FoldedGraph::edge_count)
      .def_property_readonly("subgroup_rank", &FoldedGraph::subgroup_rank)
      .def("accepts", [](const FoldedGraph& f, const std::string& w) {
        return f.accepts(Word::parse(f.rank(), w));
      });

  m.def("enumerate_primitives",
        [](int rank, int depth, int len_cap) {
          std::vector<std::string> out;
          for (const auto& w : enumerate_primitives(rank, depth, len_cap)) out.push_back(w.str());
          return out;
        },
        py::arg("rank"), py::arg("depth"), py::arg("len_cap") = 0);

  m.def("enumerate_primitive_commutators",
        [](int rank, int depth, int len_cap) {
          std::vector<std::string> out;
          for (const auto& pc : enumerate_primitive_commutators(rank, depth, len_cap))
            out.push_back(pc.word.str());
          return out;
        },
        py::arg("rank"), py::arg("depth"), py::arg("len_cap") = 0);

  m.def("registered_scenarios", [] { return registered_scenarios(); });

  m.def("run_scenario",
        [](const std::string& id, const std::string& group_json,
           const std::vector<std::string>& images, int rank, int depth, int len_cap,
           long long seed) {
          ScenarioConfig cfg;
          cfg.id = id;
          cfg.group_json = group_json;
          cfg.images = images;
          cfg.rank = rank;
          cfg.depth = depth;
          cfg.len_cap = len_cap;
          cfg.seed = seed;
          Report r = run_scenario(cfg);
          return py::make_tuple(r.verdict, r.body.dump(2));
        },
        py::arg("id"), py::arg("group_json") = "", py::arg("images") = std::vector<std::string>{},
        py::arg("rank") = 0, py::arg("depth") = -1, py::arg("len_cap") = 0, py::arg("seed") = 0);
}
