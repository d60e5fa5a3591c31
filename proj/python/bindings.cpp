#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cyclebasis/ballsbins.hpp"
#include "cyclebasis/baselines.hpp"
#include "cyclebasis/engine.hpp"
#include "cyclebasis/experiments.hpp"
#include "cyclebasis/gf2.hpp"
#include "cyclebasis/multigraph.hpp"
#include "cyclebasis/randgraph.hpp"

namespace py = pybind11;
using namespace cyclebasis;

namespace {

py::dict stats_dict(const RunStats& s) {
  py::dict d;
  d["case1"] = s.case1;
  d["case2a"] = s.case2a;
  d["case2b"] = s.case2b;
  d["case3"] = s.case3;
  d["iterations"] = s.iterations();
  d["mu"] = s.mu;
  d["max_case3_cycle_len"] = s.max_case3_len;
  d["load_histogram"] = s.load_histogram;
  d["case3_cycles"] = s.case3_cycles;
  return d;
}

py::dict report_dict(const BasisReport& r) {
  py::dict d;
  d["is_cycles"] = r.is_cycles;
  d["independent"] = r.independent;
  d["rank"] = r.rank;
  d["expected_dim"] = r.expected_dim;
  d["is_basis"] = r.is_basis;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cycle bases with low maximum edge participation";

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("n"))
      .def("add_vertex", &MultiGraph::add_vertex)
      .def("add_edge", &MultiGraph::add_edge, py::arg("u"), py::arg("v"))
      .def("remove_edge", &MultiGraph::remove_edge, py::arg("e"))
      .def("remove_vertex", &MultiGraph::remove_vertex, py::arg("v"))
      .def_property_readonly("n", &MultiGraph::vertex_count)
      .def_property_readonly("m", &MultiGraph::edge_count)
      .def("degree", &MultiGraph::degree, py::arg("v"))
      .def("endpoints",
           [](const MultiGraph& g, int e) {
             auto ep = g.endpoints(e);
             return py::make_tuple(ep.u, ep.v);
           })
      .def("edges",
           [](const MultiGraph& g) {
             std::vector<std::tuple<int, int, int>> out;
             for (int e : g.live_edges()) {
               auto ep = g.endpoints(e);
               out.emplace_back(e, ep.u, ep.v);
             }
             return out;
           })
      .def("connected", &MultiGraph::connected)
      .def("component_count", &MultiGraph::component_count)
      .def("audit", &MultiGraph::audit)
      .def("to_edge_list", [](const MultiGraph& g) { return to_edge_list(g); })
      .def("__repr__", [](const MultiGraph& g) {
        std::ostringstream oss;
        oss << "MultiGraph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
        return oss.str();
      });

  m.def("parse_edge_list", [](const std::string& text) {
    std::istringstream iss(text);
    return read_edge_list(iss, "<string>");
  });
  m.def("read_edge_list_file", &read_edge_list_file, py::arg("path"));
  m.def("random_regular", &random_regular, py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("random_regular_connected", &random_regular_connected, py::arg("n"),
        py::arg("d"), py::arg("seed"));

  m.def(
      "build_cycle_basis",
      [](const MultiGraph& g, int variant, std::uint64_t seed, bool audit) {
        VariantConfig cfg = variant_config(variant);
        cfg.audit = audit;
        auto [basis, stats] = build_cycle_basis(g, cfg, seed);
        return py::make_tuple(basis.cycles, stats_dict(stats));
      },
      py::arg("graph"), py::arg("variant") = 0, py::arg("seed") = 0,
      py::arg("audit") = false,
      "Returns (cycles, stats): cycles are sorted edge-id lists in emission order.");

  m.def("verify_basis",
        [](const MultiGraph& g, const std::vector<Cycle>& cycles) {
          return report_dict(verify_basis(g, cycles));
        },
        py::arg("graph"), py::arg("cycles"));
  m.def("verify_weakly_fundamental", &verify_weakly_fundamental, py::arg("cycles"));
  m.def("max_edge_participation", &max_edge_participation, py::arg("cycles"));
  m.def("girth", &girth, py::arg("graph"));
  m.def("participation_lower_bound",
        [](const MultiGraph& g) {
          Rational r = participation_lower_bound(g);
          return py::make_tuple(r.num, r.den);
        },
        py::arg("graph"));

  m.def(
      "fundamental_basis",
      [](const MultiGraph& g, const std::string& policy, std::uint64_t seed) {
        TreePolicy p = policy == "dfs" ? TreePolicy::dfs : TreePolicy::bfs;
        return fundamental_basis(g, p, seed).cycles;
      },
      py::arg("graph"), py::arg("policy") = "bfs", py::arg("seed") = 0);
  m.def("min_weight_cycle_basis",
        [](const MultiGraph& g) { return min_weight_cycle_basis(g).cycles; },
        py::arg("graph"));
  m.def("cheeger_constant",
        [](const MultiGraph& g) {
          Rational r = cheeger_constant(g);
          return py::make_tuple(r.num, r.den);
        },
        py::arg("graph"));

  m.def(
      "process1",
      [](int m, int m_min, std::uint64_t seed) {
        Process1Result r = process1(m, m_min, seed);
        py::dict d;
        d["max_load"] = r.max_load;
        d["early_stop"] = r.early_stop;
        std::vector<std::tuple<int, int, int, int>> steps;
        for (const auto& s : r.trajectory)
          steps.emplace_back(s.iteration, s.m, s.k, s.max_load);
        d["trajectory"] = steps;
        return d;
      },
      py::arg("m"), py::arg("m_min") = 12, py::arg("seed") = 0);
  m.def(
      "process2",
      [](int m, int m_min, std::uint64_t seed, double bad_c, const std::string& balls) {
        Process2Result r = process2(m, m_min, seed, bad_c,
                                    balls == "k-3" ? BallsPerRound::k_minus_3
                                                   : BallsPerRound::k_full);
        py::dict d;
        d["max_load"] = r.max_load;
        d["early_stop"] = r.early_stop;
        std::vector<py::dict> epochs;
        for (const auto& e : r.epochs) {
          py::dict ed;
          ed["epoch"] = e.epoch;
          ed["m"] = e.m_start;
          ed["k"] = e.k;
          ed["rounds"] = e.rounds;
          ed["mu"] = e.mu;
          ed["mean_gain"] = e.mean_gain;
          ed["bad_buckets"] = e.bad_buckets;
          ed["max_load"] = e.max_load_end;
          epochs.push_back(ed);
        }
        d["epochs"] = epochs;
        return d;
      },
      py::arg("m"), py::arg("m_min") = 12, py::arg("seed") = 0,
      py::arg("bad_c") = 0.1, py::arg("balls") = "k");
  m.def(
      "coupled_run",
      [](int m, int k, std::uint64_t seed) {
        CoupledResult r = coupled_run(m, k, seed);
        py::dict d;
        d["p1"] = r.p1;
        d["p1a"] = r.p1a;
        d["p2"] = r.p2;
        d["total_balls"] = r.total_balls;
        d["dominates"] = r.dominates();
        return d;
      },
      py::arg("m"), py::arg("k"), py::arg("seed") = 0);
  m.def("theorem_bound", &theorem_bound, py::arg("c"), py::arg("M"));
}
