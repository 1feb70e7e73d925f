// Python bindings: a small functional surface over the root systems, seeds,
// exchange graphs, configuration categories, and the verification pipeline.
// Inputs are (type, rank) with optional orientation / configuration lists;
// outputs are plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "cluscat/categorify.hpp"

namespace py = pybind11;
using namespace cluscat;

namespace {

using Arrows = std::optional<std::vector<std::pair<int, int>>>;
using Reps = std::optional<std::vector<std::pair<int, int>>>;

DynkinQuiver make_quiver(const std::string& type, int rank, const Arrows& orientation) {
  const auto fam = family_from_letter(type.size() == 1 ? type[0] : '?');
  if (!fam) throw std::invalid_argument("unknown type '" + type + "' (expected A, D, or E)");
  DynkinDiagram d = DynkinDiagram::make(*fam, rank);
  if (!orientation) return DynkinQuiver::bipartite_default(std::move(d));
  std::vector<std::pair<int, int>> arrows;
  for (const auto& [s, t] : *orientation) arrows.emplace_back(s - 1, t - 1);
  auto q = DynkinQuiver::from_arrow_list(std::move(d), arrows);
  if (!q)
    throw std::invalid_argument("orientation does not direct each diagram edge exactly once");
  return *q;
}

Configuration make_config(const Reps& reps) {
  if (!reps) return Configuration::all();
  std::vector<RQVertex> out;
  for (const auto& [i, p] : *reps) out.push_back({i - 1, p, false});
  return Configuration::orbits(std::move(out));
}

ConfigCategory make_category(const std::string& type, int rank, const Arrows& orientation,
                             const Reps& config, int f_power) {
  ConfigCategory cc(make_quiver(type, rank, orientation), make_config(config), f_power);
  if (!cc.admissibility().admissible)
    throw std::invalid_argument("configuration is not admissible");
  return cc;
}

py::list ice_rows(const IceQuiver& ice) {
  py::list b;
  for (int i = 0; i < ice.total(); ++i) {
    py::list row;
    for (int k = 0; k < ice.total(); ++k) row.append(ice.b(i, k));
    b.append(row);
  }
  return b;
}

py::dict seed_dict(const RootSystem& rs, const Seed& s) {
  std::vector<std::string> xn, pn = universal_frozen_names(rs);
  for (int i = 0; i < s.n(); ++i) xn.push_back("x" + std::to_string(i + 1));
  py::dict d;
  d["n"] = s.n();
  d["m"] = s.m();
  d["frozen"] = pn;
  d["b"] = ice_rows(s.ice);
  py::list cluster, roots, dens;
  for (const Laurent& v : s.cluster) {
    cluster.append(v.to_string(xn, pn));
    roots.append(variable_name(rs, v));
    dens.append(v.denominator_x());
  }
  d["cluster"] = cluster;
  d["cluster_roots"] = roots;
  d["denominators"] = dens;
  d["y"] = s.y;
  return d;
}

py::dict py_roots(const std::string& type, int rank, const Arrows& orientation) {
  const DynkinQuiver q = make_quiver(type, rank, orientation);
  if (!q.is_bipartite())
    throw std::invalid_argument("the tau involutions need a bipartite orientation");
  const RootSystem rs(q.diagram);
  py::dict d;
  py::list roots, tp, tm, tt;
  for (const IVec& a : rs.almost_positive()) {
    roots.append(rs.root_string(a));
    tp.append(rs.root_string(tau_eps(rs, q, +1, a)));
    tm.append(rs.root_string(tau_eps(rs, q, -1, a)));
    tt.append(rs.root_string(tau_root(rs, q, a)));
  }
  d["roots"] = roots;
  d["tau_plus"] = tp;
  d["tau_minus"] = tm;
  d["tau"] = tt;
  py::list orbits;
  for (const auto& orb : tau_orbits(rs, q)) {
    py::list one;
    for (const IVec& a : orb) one.append(rs.root_string(a));
    orbits.append(one);
  }
  d["tau_orbits"] = orbits;
  return d;
}

py::dict py_universal_seed(const std::string& type, int rank, const Arrows& orientation) {
  const DynkinQuiver q = make_quiver(type, rank, orientation);
  const RootSystem rs(q.diagram);
  return seed_dict(rs, universal_seed(rs, q));
}

py::dict py_mutate(const std::string& type, int rank, const std::vector<int>& word,
                   const Arrows& orientation) {
  const DynkinQuiver q = make_quiver(type, rank, orientation);
  const RootSystem rs(q.diagram);
  Seed s = universal_seed(rs, q);
  const auto namer = [&rs](const Laurent& v) { return variable_name(rs, v); };
  const std::vector<std::string> frozen = universal_frozen_names(rs);
  py::list relations;
  for (int k : word) {
    if (k < 1 || k > s.n()) throw std::invalid_argument("mutation word entries are 1-based");
    ExchangeRelation rel;
    s = mutate_seed(s, k - 1, &rel);
    relations.append(relation_string(rel, namer, frozen));
  }
  py::dict d = seed_dict(rs, s);
  d["relations"] = relations;
  return d;
}

py::dict py_exchange_graph(const std::string& type, int rank, size_t budget,
                           const Arrows& orientation) {
  const DynkinQuiver q = make_quiver(type, rank, orientation);
  const RootSystem rs(q.diagram);
  const ExchangeGraph eg = exchange_graph(universal_seed(rs, q), budget);
  const auto namer = [&rs](const Laurent& v) { return variable_name(rs, v); };
  const std::vector<std::string> frozen = universal_frozen_names(rs);
  py::dict d;
  d["seeds"] = eg.seeds.size();
  py::list edges;
  for (const auto& [from, k, to] : eg.edges) edges.append(py::make_tuple(from, k + 1, to));
  d["edges"] = edges;
  py::list vars;
  for (const Laurent& v : eg.variables) vars.append(variable_name(rs, v));
  d["variables"] = vars;
  py::list rels;
  for (const ExchangeRelation& rel : eg.relations)
    rels.append(relation_string(rel, namer, frozen));
  d["relations"] = rels;
  return d;
}

py::dict py_orbit_quiver(const std::string& type, int rank, const Reps& config, int f_power,
                         const Arrows& orientation) {
  const ConfigCategory cc = make_category(type, rank, orientation, config, f_power);
  const OrbitQuiver& oq = cc.orbit_quiver();
  py::dict d;
  d["non_frozen"] = oq.non_frozen;
  py::list verts;
  for (const OrbitVertex& v : oq.vertices) {
    py::dict one;
    one["label"] = v.label;
    one["frozen"] = v.frozen;
    one["rep"] = py::make_tuple(v.rep.i + 1, v.rep.p);
    verts.append(one);
  }
  d["vertices"] = verts;
  py::list arrows;
  for (const OrbitArrow& a : oq.arrows) arrows.append(py::make_tuple(a.src, a.dst, a.mult));
  d["arrows"] = arrows;
  d["dot"] = oq.to_dot();
  return d;
}

int py_ext1(const std::string& type, int rank, const std::string& a, const std::string& b,
            const Reps& config, const Arrows& orientation) {
  const ConfigCategory cc = make_category(type, rank, orientation, config, 1);
  const int oa = cc.orbit_by_label(a), ob = cc.orbit_by_label(b);
  if (oa < 0 || ob < 0) throw std::invalid_argument("no orbit with that label");
  return cc.ext1_dim(oa, ob);
}

py::dict py_verify(const std::string& type, int rank, const Arrows& orientation) {
  const VerificationReport rep = verify_main_theorem(make_quiver(type, rank, orientation));
  py::dict d;
  d["pass"] = rep.pass();
  py::list checks;
  for (const VerificationCheck& c : rep.checks) {
    py::dict one;
    one["name"] = c.name;
    one["pass"] = c.pass;
    one["detail"] = c.detail;
    checks.append(one);
  }
  d["checks"] = checks;
  d["report"] = report_text(rep);
  return d;
}

}  // namespace

PYBIND11_MODULE(_cluscat, m) {
  m.doc() = "exact cluster-algebra and orbit-category toolkit";
  m.def("roots", &py_roots, py::arg("type"), py::arg("rank"),
        py::arg("orientation") = py::none(),
        "almost-positive roots with tau images and tau orbits");
  m.def("universal_seed", &py_universal_seed, py::arg("type"), py::arg("rank"),
        py::arg("orientation") = py::none(),
        "the universal-coefficients seed of a bipartite orientation");
  m.def("mutate", &py_mutate, py::arg("type"), py::arg("rank"), py::arg("word"),
        py::arg("orientation") = py::none(),
        "apply a 1-based mutation word to the universal seed");
  m.def("exchange_graph", &py_exchange_graph, py::arg("type"), py::arg("rank"),
        py::arg("budget") = 100000, py::arg("orientation") = py::none(),
        "breadth-first mutation closure with all exchange relations");
  m.def("orbit_quiver", &py_orbit_quiver, py::arg("type"), py::arg("rank"),
        py::arg("config") = py::none(), py::arg("f_power") = 1,
        py::arg("orientation") = py::none(),
        "labeled orbit quiver of the configuration category");
  m.def("ext1_dim", &py_ext1, py::arg("type"), py::arg("rank"), py::arg("a"), py::arg("b"),
        py::arg("config") = py::none(), py::arg("orientation") = py::none(),
        "ext^1 dimension between two labeled orbits");
  m.def("verify", &py_verify, py::arg("type"), py::arg("rank"),
        py::arg("orientation") = py::none(),
        "run the categorification checks; dict with pass, checks, report");
}
