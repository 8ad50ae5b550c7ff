#include <functional>
#include <map>
#include <optional>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "radmax/constructions.hpp"
#include "radmax/eccentricity.hpp"
#include "radmax/formats.hpp"
#include "radmax/graph.hpp"
#include "radmax/maximality.hpp"
#include "radmax/search.hpp"

namespace py = pybind11;
using namespace radmax;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default:
            return py::none();
    }
}

py::dict profile_to_dict(const EccentricityProfile& p) {
    py::dict d;
    d["connected"] = p.connected;
    d["eccentricities"] = p.ecc;
    d["radius"] = p.radius;
    d["diameter"] = p.diameter;
    d["center"] = p.center;
    return d;
}

py::dict certificate_to_dict(const MaximalityCertificate& c) {
    py::list entries;
    for (const auto& e : c.entries) {
        py::dict entry;
        entry["non_edge"] = py::make_tuple(e.non_edge.first, e.non_edge.second);
        entry["witness"] = e.witness;
        entry["new_ecc"] = e.new_ecc;
        entries.append(entry);
    }
    py::dict d;
    d["radius"] = c.radius;
    d["entries"] = entries;
    return d;
}

SearchOptions options_from_kwargs(int order_cap, int shards, int shard, int threads,
                                  int witness_cap) {
    SearchOptions opts;
    opts.order_cap = order_cap;
    opts.shards = shards;
    opts.shard = shard;
    opts.threads = threads;
    opts.witness_cap = witness_cap;
    return opts;
}

} // namespace

PYBIND11_MODULE(_radmax, m) {
    m.doc() = "Radially maximal graphs: constructions, certificates, exhaustive search";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("order"))
        .def_static("from_edges", &Graph::from_edges, py::arg("order"), py::arg("edges"))
        .def("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("plus_edge", &Graph::plus_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, int v) { return g.neighbors(v).to_vector(); }, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("non_edges", &Graph::non_edges)
        .def("complement", &Graph::complement)
        .def("is_connected", &Graph::is_connected)
        .def("is_complete", &Graph::is_complete)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) +
                   " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("bfs_distances", &bfs_distances, py::arg("graph"), py::arg("source"));
    m.def("eccentricity_profile",
          [](const Graph& g) { return profile_to_dict(eccentricity_profile(g)); },
          py::arg("graph"));
    m.def("eccentric_vertices", &eccentric_vertices, py::arg("graph"), py::arg("v"));
    m.def("is_self_centered", &is_self_centered, py::arg("graph"));
    m.attr("UNREACHABLE") = kUnreachable;

    m.def("to_graph6", &to_graph6, py::arg("graph"));
    m.def("from_graph6", &from_graph6, py::arg("text"));
    m.def("to_dot",
          [](const Graph& g, const std::optional<std::map<std::string, int>>& labels) {
              return to_dot(g, labels ? &*labels : nullptr);
          },
          py::arg("graph"), py::arg("labels") = py::none());
    m.def("from_dot", &from_dot, py::arg("text"));
    m.def("to_edgelist", &to_edgelist, py::arg("graph"));
    m.def("from_edgelist", &from_edgelist, py::arg("text"));
    m.def("parse_graph_auto", &parse_graph_auto, py::arg("text"));

    m.def("extend", &extend, py::arg("graph"), py::arg("v"));
    m.def("is_safe_extension_vertex", &is_safe_extension_vertex, py::arg("graph"), py::arg("v"));
    m.def("classify",
          [](int r, int d, int n) {
              ConstructionParams p{r, d, n};
              const Classification c = classify(p);
              py::dict out;
              const char* kind = nullptr;
              switch (c.kind) {
                  case Feasibility::kSelfCentered: kind = "self_centered"; break;
                  case Feasibility::kNonSelfCentered: kind = "non_self_centered"; break;
                  case Feasibility::kInfeasible: kind = "infeasible"; break;
                  case Feasibility::kUnsupportedOrder: kind = "unsupported_order"; break;
              }
              out["kind"] = kind;
              out["reason"] = c.reason;
              out["feasible"] = is_feasible(c);
              return out;
          },
          py::arg("radius"), py::arg("diameter"), py::arg("order"));

    auto build_result = [](const LabeledConstruction& lc) {
        py::dict labels;
        for (const auto& [name, id] : lc.labels) labels[py::str(name)] = id;
        return py::make_tuple(lc.graph, labels);
    };
    m.def("build_self_centered",
          [build_result](int r, int n) { return build_result(build_self_centered(r, n)); },
          py::arg("radius"), py::arg("order"));
    m.def("build_H", [build_result](int r, int d) { return build_result(build_H(r, d)); },
          py::arg("radius"), py::arg("diameter"));
    m.def("build_radially_maximal",
          [build_result](int r, int d, int n) {
              return build_result(build_radially_maximal({r, d, n}));
          },
          py::arg("radius"), py::arg("diameter"), py::arg("order"));

    m.def("is_radially_maximal", &is_radially_maximal, py::arg("graph"));
    m.def("certificate",
          [](const Graph& g) { return certificate_to_dict(certificate(g)); }, py::arg("graph"));
    m.def("check_certificate",
          [](const Graph& g, const py::dict& cert) {
              MaximalityCertificate c;
              c.radius = cert["radius"].cast<int>();
              for (const auto& item : cert["entries"].cast<py::list>()) {
                  const py::dict e = item.cast<py::dict>();
                  const auto ne = e["non_edge"].cast<std::pair<int, int>>();
                  c.entries.push_back({ne, e["witness"].cast<int>(), e["new_ecc"].cast<int>()});
              }
              return check_certificate(g, c);
          },
          py::arg("graph"), py::arg("certificate"));
    m.def("verify_H_witnesses",
          [](int r, int d) {
              const HWitnessReport rep = verify_H_witnesses(r, d);
              py::list facts;
              for (const auto& f : rep.facts) {
                  py::dict fd;
                  fd["name"] = f.name;
                  fd["pass"] = f.pass;
                  facts.append(fd);
              }
              py::dict out;
              out["radius"] = rep.r;
              out["diameter"] = rep.d;
              out["facts"] = facts;
              out["all_pass"] = rep.all_pass;
              return out;
          },
          py::arg("radius"), py::arg("diameter"));

    m.def("enumerate_labeled",
          [](int n, const std::function<void(const Graph&)>& visit, int order_cap) {
              return enumerate_labeled(n, visit, order_cap);
          },
          py::arg("n"), py::arg("visit"), py::arg("order_cap") = kDefaultSearchCap);
    m.def("check_bound_all",
          [](int n, int order_cap, int shards, int shard, int threads, int witness_cap) {
              const SearchReport rep = check_bound_all(
                  n, options_from_kwargs(order_cap, shards, shard, threads, witness_cap));
              return json_to_py(nlohmann::json::parse(to_json(rep)));
          },
          py::arg("n"), py::arg("order_cap") = kDefaultSearchCap, py::arg("shards") = 1,
          py::arg("shard") = -1, py::arg("threads") = 1, py::arg("witness_cap") = 8);
    m.def("min_order_nonselfcentered",
          [](int r, int n_max, int order_cap, int shards, int shard, int threads,
             int witness_cap) {
              const SearchReport rep = min_order_nonselfcentered(
                  r, n_max, options_from_kwargs(order_cap, shards, shard, threads, witness_cap));
              return json_to_py(nlohmann::json::parse(to_json(rep)));
          },
          py::arg("radius"), py::arg("n_max"), py::arg("order_cap") = kDefaultSearchCap,
          py::arg("shards") = 1, py::arg("shard") = -1, py::arg("threads") = 1,
          py::arg("witness_cap") = 8);
    m.def("canonical_mask", &canonical_mask, py::arg("mask"), py::arg("n"));

    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
    py::register_exception<NotRadiallyMaximalError>(m, "NotRadiallyMaximalError",
                                                    PyExc_RuntimeError);
}
