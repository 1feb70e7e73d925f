#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cluscat/config_cat.hpp"

using namespace cluscat;

namespace {

DynkinQuiver bip(Family f, int n) {
  return DynkinQuiver::bipartite_default(DynkinDiagram::make(f, n));
}

ConfigCategory full_cat(Family f, int n, int power = 1) {
  return ConfigCategory(bip(f, n), Configuration::all(), power);
}

int orb(const ConfigCategory& cc, const std::string& label) {
  const int k = cc.orbit_by_label(label);
  REQUIRE(k >= 0);
  return k;
}

// the golden list is the complete arrow set: every entry has multiplicity one
// and nothing else occurs
void check_arrow_set(const ConfigCategory& cc,
                     const std::vector<std::pair<std::string, std::string>>& golden) {
  const OrbitQuiver& oq = cc.orbit_quiver();
  for (const auto& [s, d] : golden) {
    INFO(s << " -> " << d);
    CHECK(oq.arrow_mult(orb(cc, s), orb(cc, d)) == 1);
  }
  int total = 0;
  for (const OrbitArrow& a : oq.arrows) total += a.mult;
  CHECK(total == int(golden.size()));
}

RatVec unit(int dim, int k) {
  RatVec v(dim, Rat(0));
  v[k] = 1;
  return v;
}

void axpy(RatVec& acc, const Rat& c, const RatVec& v) {
  if (acc.empty()) acc.assign(v.size(), Rat(0));
  REQUIRE(acc.size() == v.size());
  for (size_t k = 0; k < v.size(); ++k) acc[k] += c * v[k];
}

}  // namespace

TEST_CASE("A2 orbit quiver of the full configuration") {
  ConfigCategory cc = full_cat(Family::A, 2);
  const OrbitQuiver& oq = cc.orbit_quiver();

  CHECK(oq.vertices.size() == 10);
  CHECK(oq.non_frozen == 5);
  CHECK(cc.admissibility().admissible);
  CHECK(cc.admissibility().witnesses.size() == 5);

  // orbit representatives sit at the earliest window slice of their orbit
  CHECK(oq.vertices[orb(cc, "X(-a1)")].rep == RQVertex{0, -1, false});
  CHECK(oq.vertices[orb(cc, "X(-a2)")].rep == RQVertex{1, -1, false});
  CHECK(oq.vertices[orb(cc, "X(a1)")].rep == RQVertex{0, 0, false});
  CHECK(oq.vertices[orb(cc, "X(a1+a2)")].rep == RQVertex{1, 0, false});
  CHECK(oq.vertices[orb(cc, "X(a2)")].rep == RQVertex{0, 1, false});
  CHECK(oq.vertices[orb(cc, "P(-a1)")].rep == RQVertex{0, -1, true});
  CHECK(oq.vertices[orb(cc, "P(a2)")].rep == RQVertex{1, -1, true});
  CHECK(oq.vertices[orb(cc, "P(a1+a2)")].rep == RQVertex{0, 0, true});
  CHECK(oq.vertices[orb(cc, "P(a1)")].rep == RQVertex{1, 0, true});
  CHECK(oq.vertices[orb(cc, "P(-a2)")].rep == RQVertex{0, 1, true});

  check_arrow_set(cc, {
      // pentagon on the mutable part
      {"X(a1)", "X(a1+a2)"},
      {"X(a1+a2)", "X(a2)"},
      {"X(a2)", "X(-a1)"},
      {"X(-a1)", "X(-a2)"},
      {"X(-a2)", "X(a1)"},
      // into the frozen part
      {"X(a1)", "P(a1+a2)"},
      {"X(a2)", "P(-a2)"},
      {"X(a1+a2)", "P(a1)"},
      {"X(-a1)", "P(-a1)"},
      {"X(-a2)", "P(a2)"},
      // out of the frozen part
      {"P(a1)", "X(-a1)"},
      {"P(a2)", "X(a1+a2)"},
      {"P(a1+a2)", "X(a2)"},
      {"P(-a1)", "X(a1)"},
      {"P(-a2)", "X(-a2)"},
  });

  // orbit membership is F-stable
  for (int k = 0; k < int(oq.vertices.size()); ++k) {
    const RQVertex r = oq.vertices[k].rep;
    CHECK(cc.orbit_of(r) == k);
    CHECK(cc.orbit_of(cc.f_vertex(r)) == k);
  }
}

TEST_CASE("A1 orbit quiver of the full configuration") {
  ConfigCategory cc = full_cat(Family::A, 1);
  CHECK(cc.orbit_quiver().vertices.size() == 4);
  CHECK(cc.orbit_quiver().non_frozen == 2);
  CHECK(cc.admissibility().admissible);
  check_arrow_set(cc, {
      {"X(a1)", "P(a1)"},
      {"X(-a1)", "P(-a1)"},
      {"P(a1)", "X(-a1)"},
      {"P(-a1)", "X(a1)"},
  });
}

TEST_CASE("A3 orbit quiver of the full configuration") {
  ConfigCategory cc = full_cat(Family::A, 3);
  CHECK(cc.orbit_quiver().vertices.size() == 18);
  CHECK(cc.orbit_quiver().non_frozen == 9);
  CHECK(cc.admissibility().admissible);

  check_arrow_set(cc, {
      // mutable part
      {"X(a1)", "X(a1+a2+a3)"},
      {"X(a2+a3)", "X(a2)"},
      {"X(-a3)", "X(-a2)"},
      {"X(a1+a2+a3)", "X(a2+a3)"},
      {"X(a1+a2+a3)", "X(a1+a2)"},
      {"X(a2)", "X(-a3)"},
      {"X(a2)", "X(-a1)"},
      {"X(-a2)", "X(a3)"},
      {"X(-a2)", "X(a1)"},
      {"X(a3)", "X(a1+a2+a3)"},
      {"X(a1+a2)", "X(a2)"},
      {"X(-a1)", "X(-a2)"},
      // into the frozen part
      {"X(a1)", "P(a1+a2)"},
      {"X(a2+a3)", "P(a3)"},
      {"X(-a3)", "P(-a3)"},
      {"X(a1+a2+a3)", "P(a1+a2+a3)"},
      {"X(a2)", "P(-a2)"},
      {"X(-a2)", "P(a2)"},
      {"X(a3)", "P(a2+a3)"},
      {"X(a1+a2)", "P(a1)"},
      {"X(-a1)", "P(-a1)"},
      // out of the frozen part
      {"P(a1+a2)", "X(a2+a3)"},
      {"P(a3)", "X(-a3)"},
      {"P(-a3)", "X(a3)"},
      {"P(a2)", "X(a1+a2+a3)"},
      {"P(a1+a2+a3)", "X(a2)"},
      {"P(-a2)", "X(-a2)"},
      {"P(a2+a3)", "X(a1+a2)"},
      {"P(a1)", "X(-a1)"},
      {"P(-a1)", "X(a1)"},
  });
}

TEST_CASE("D4 full configuration counts and sweeps") {
  ConfigCategory cc = full_cat(Family::D, 4);
  const OrbitQuiver& oq = cc.orbit_quiver();
  // |Phi_{>=-1}| = 12 positive roots + 4 negated simples
  CHECK(oq.vertices.size() == 32);
  CHECK(oq.non_frozen == 16);
  CHECK(cc.admissibility().admissible);

  std::set<std::string> labels;
  for (const OrbitVertex& v : oq.vertices) labels.insert(v.label);
  CHECK(labels.size() == 32);

  SweepReport mesh = cc.check_mesh_exactness();
  CHECK(mesh.checked == 16);
  CHECK(mesh.ok());
  SweepReport cy = cc.check_two_cy();
  CHECK(cy.checked == 392);
  CHECK(cy.ok());
}

TEST_CASE("admissibility agrees with a direct unframed hom scan on A2") {
  const DynkinQuiver q = bip(Family::A, 2);
  const TranslationQuiver un(q, -1, 20, false);

  const std::vector<Configuration> configs = {
      Configuration::all(),
      Configuration::orbits({}),
      Configuration::orbits({{0, 0, false}}),
      Configuration::orbits({{1, 0, false}}),
      Configuration::orbits({{0, 1, false}}),
      Configuration::orbits({{0, 0, false}, {1, 0, false}}),
  };
  for (const Configuration& c : configs) {
    ConfigCategory cc(q, c);
    bool naive_ok = true;
    std::optional<RQVertex> naive_failing;
    for (int k = 0; k < cc.orbit_quiver().non_frozen && naive_ok; ++k) {
      const RQVertex x = cc.orbit_quiver().vertices[k].rep;
      bool witness = false;
      for (const RQVertex& v : un.vertices()) {
        if (!cc.in_config(v) || v.p < x.p || v.p > x.p + 10) continue;
        if (mesh_hom_dim(un, x, v) > 0) { witness = true; break; }
      }
      if (!witness) { naive_ok = false; naive_failing = x; }
    }
    INFO("full=" << c.full << " reps=" << c.reps.size());
    CHECK(cc.admissibility().admissible == naive_ok);
    if (!naive_ok) {
      REQUIRE(cc.admissibility().failing.has_value());
      CHECK(*cc.admissibility().failing == *naive_failing);
    }
  }

  // no proper subset of the A2 orbits is admissible, and the first orbit
  // representative is always the one without a witness
  ConfigCategory empty_cc(q, Configuration::orbits({}));
  CHECK_FALSE(empty_cc.admissibility().admissible);
  CHECK(*empty_cc.admissibility().failing == RQVertex{0, -1, false});
  CHECK_THROWS_AS(empty_cc.orbit_hom(0, 0), std::invalid_argument);
}

TEST_CASE("quotient category hom dimensions match the naive mesh computation") {
  ConfigCategory cc = full_cat(Family::A, 2);
  const TranslationQuiver& win = cc.window();
  for (const RQVertex& x : win.vertices()) {
    if (x.p > 3) continue;
    for (const RQVertex& y : win.vertices()) {
      if (y.p < x.p || y.p > x.p + 5) continue;
      INFO(x.to_string() << " -> " << y.to_string());
      CHECK(cc.hom_dim_rc(x, y) == mesh_hom_dim(win, x, y));
    }
  }
}

TEST_CASE("A3 zigzag configuration") {
  const DynkinQuiver q = bip(Family::A, 3);
  ConfigCategory cc(q, Configuration::orbits({{0, 0, false}, {1, 1, false}, {2, 0, false}}));
  const OrbitQuiver& oq = cc.orbit_quiver();

  CHECK(cc.admissibility().admissible);
  CHECK(cc.admissibility().witnesses.size() == 9);
  CHECK(oq.non_frozen == 9);
  // one frozen orbit per F-orbit in the configuration
  CHECK(int(oq.vertices.size()) - oq.non_frozen == 3);

  CHECK(oq.vertices[orb(cc, "P(a1+a2)")].rep == RQVertex{0, 0, true});
  CHECK(oq.vertices[orb(cc, "P(a2+a3)")].rep == RQVertex{2, 0, true});
  CHECK(oq.vertices[orb(cc, "P(-a2)")].rep == RQVertex{1, 1, true});

  SweepReport mesh = cc.check_mesh_exactness();
  CHECK(mesh.checked == 9);
  CHECK(mesh.ok());
  SweepReport cy = cc.check_two_cy();
  CHECK(cy.checked == 72);
  CHECK(cy.ok());

  // quotient homs: the kept frozen vertex receives a map, the dropped one
  // cannot (everything into it factors through the removed identity)
  CHECK(cc.hom_dim_rc({0, 0, false}, {0, 0, true}) == 1);
  CHECK(cc.hom_dim_rc({0, 0, false}, {1, 0, true}) == 0);
  CHECK(cc.hom_dim_rc({0, 0, false}, {2, 0, true}) == 0);

  // every orbit hom is certifiably finite here
  const int n = int(oq.vertices.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      INFO(oq.vertices[a].label << " -> " << oq.vertices[b].label);
      CHECK(cc.orbit_hom(a, b).certified);
    }
  for (int a = 0; a < oq.non_frozen; ++a) CHECK(cc.orbit_hom_dim(a, a) == 1);

  const std::vector<std::pair<std::string, int>> row = {
      {"X(a1)", 1},  {"X(a1+a2+a3)", 1}, {"X(a2+a3)", 1}, {"X(a2)", 1},
      {"X(a1+a2)", 1}, {"P(a1+a2)", 1},  {"P(-a2)", 1},   {"X(a3)", 0},
      {"X(-a1)", 0}, {"X(-a2)", 0},      {"X(-a3)", 0},   {"P(a2+a3)", 0},
  };
  const int a1 = orb(cc, "X(a1)");
  for (const auto& [label, d] : row) {
    INFO("X(a1) -> " << label);
    CHECK(cc.orbit_hom_dim(a1, orb(cc, label)) == d);
  }

  for (const RQVertex r : {RQVertex{0, 0, false}, RQVertex{1, 0, false}, RQVertex{2, 0, false}}) {
    auto s = cc.hom_vanishing_slice(r);
    REQUIRE(s.has_value());
    CHECK(*s == 2);
  }
}

TEST_CASE("composition in the orbit category is unital and associative") {
  const DynkinQuiver q = bip(Family::A, 3);
  ConfigCategory cc(q, Configuration::orbits({{0, 0, false}, {1, 1, false}, {2, 0, false}}));
  const int n = int(cc.orbit_quiver().vertices.size());

  // identity element: the empty path at the representative, in the l = 0 block
  for (int a = 0; a < n; ++a) {
    const OrbitHom& haa = cc.orbit_hom(a, a);
    REQUIRE(haa.dim() >= 1);
    CHECK(haa.basis[0].l == 0);
    CHECK(haa.basis[0].path.empty());
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const OrbitHom& hab = cc.orbit_hom(a, b);
      const OrbitHomElem id_a = cc.orbit_hom(a, a).basis[0];
      const OrbitHomElem id_b = cc.orbit_hom(b, b).basis[0];
      for (int k = 0; k < hab.dim(); ++k) {
        CHECK(cc.compose(a, a, b, id_a, hab.basis[k]) == unit(hab.dim(), k));
        CHECK(cc.compose(a, b, b, hab.basis[k], id_b) == unit(hab.dim(), k));
      }
    }

  // (f g) h = f (g h), expanded bilinearly through the recorded bases
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const OrbitHom& hab = cc.orbit_hom(a, b);
      if (hab.dim() == 0) continue;
      for (int c = 0; c < n; ++c) {
        const OrbitHom& hbc = cc.orbit_hom(b, c);
        if (hbc.dim() == 0) continue;
        const OrbitHom& hac = cc.orbit_hom(a, c);
        for (int d = 0; d < n; ++d) {
          const OrbitHom& hcd = cc.orbit_hom(c, d);
          if (hcd.dim() == 0) continue;
          const OrbitHom& hbd = cc.orbit_hom(b, d);
          const OrbitHom& had = cc.orbit_hom(a, d);
          for (const OrbitHomElem& f : hab.basis)
            for (const OrbitHomElem& g : hbc.basis)
              for (const OrbitHomElem& h : hcd.basis) {
                RatVec lhs(had.dim(), Rat(0)), rhs(had.dim(), Rat(0));
                const RatVec fg = cc.compose(a, b, c, f, g);
                for (int k = 0; k < hac.dim(); ++k)
                  if (fg[k] != 0) axpy(lhs, fg[k], cc.compose(a, c, d, hac.basis[k], h));
                const RatVec gh = cc.compose(b, c, d, g, h);
                for (int m = 0; m < hbd.dim(); ++m)
                  if (gh[m] != 0) axpy(rhs, gh[m], cc.compose(a, b, d, f, hbd.basis[m]));
                CHECK(lhs == rhs);
              }
        }
      }
    }
}

TEST_CASE("full configuration orbit homs are truncations without a certificate") {
  ConfigCategory cc = full_cat(Family::A, 2);
  const OrbitHom& h = cc.orbit_hom(0, 0);
  CHECK_FALSE(h.certified);
  CHECK(h.dim() == 11);
  REQUIRE(h.l_values.size() == 11);
  for (int k = 0; k < 11; ++k) CHECK(h.l_values[k] == k);
  CHECK_THROWS_AS(cc.orbit_hom_dim(0, 0), std::runtime_error);
  CHECK_FALSE(cc.hom_vanishing_slice({0, 0, false}).has_value());

  // identity laws still hold blockwise in the truncated table
  const OrbitHomElem id = h.basis[0];
  for (int k = 0; k < h.dim(); ++k) {
    CHECK(cc.compose(0, 0, 0, id, h.basis[k]) == unit(h.dim(), k));
    CHECK(cc.compose(0, 0, 0, h.basis[k], id) == unit(h.dim(), k));
  }
}

TEST_CASE("suspension crossing table on the A2 pentagon") {
  ConfigCategory cc = full_cat(Family::A, 2);
  const std::vector<std::string> order = {"X(-a1)", "X(-a2)", "X(a1)", "X(a1+a2)", "X(a2)"};
  const int golden[5][5] = {
      {0, 0, 1, 1, 0},
      {0, 0, 0, 1, 1},
      {1, 0, 0, 0, 1},
      {1, 1, 0, 0, 0},
      {0, 1, 1, 0, 0},
  };
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      INFO(order[i] << " , " << order[j]);
      CHECK(cc.ext1_dim(orb(cc, order[i]), orb(cc, order[j])) == golden[i][j]);
    }
  // frozen arguments never contribute extensions
  CHECK(cc.ext1_dim(orb(cc, "P(a1)"), orb(cc, "X(a1)")) == 0);
  CHECK(cc.ext1_dim(orb(cc, "X(a1)"), orb(cc, "P(a1)")) == 0);
}

TEST_CASE("mesh exactness and symmetry sweeps on full configurations") {
  {
    ConfigCategory cc = full_cat(Family::A, 2);
    SweepReport mesh = cc.check_mesh_exactness();
    CHECK(mesh.checked == 5);
    CHECK(mesh.ok());
    SweepReport cy = cc.check_two_cy();
    CHECK(cy.checked == 40);
    CHECK(cy.ok());
  }
  {
    ConfigCategory cc = full_cat(Family::A, 3);
    SweepReport mesh = cc.check_mesh_exactness();
    CHECK(mesh.checked == 9);
    CHECK(mesh.ok());
    SweepReport cy = cc.check_two_cy();
    CHECK(cy.checked == 126);
    CHECK(cy.ok());
  }
}

TEST_CASE("squared suspension in the orbit map gives positional labels") {
  // Sigma^2 tau^{-1} on the A2 model is (i,p) -> (i,p+4): four slices of
  // orbits per row
  ConfigCategory cc = full_cat(Family::A, 2, 2);
  const OrbitQuiver& oq = cc.orbit_quiver();
  CHECK(oq.vertices.size() == 16);
  CHECK(oq.non_frozen == 8);
  CHECK(cc.admissibility().admissible);

  std::set<std::string> labels;
  for (const OrbitVertex& v : oq.vertices) {
    CHECK_FALSE(v.root.has_value());
    labels.insert(v.label);
  }
  CHECK(labels.size() == 16);

  SweepReport mesh = cc.check_mesh_exactness();
  CHECK(mesh.checked == 8);
  CHECK(mesh.ok());

  CHECK(cc.f_vertex({0, 0, false}) == RQVertex{0, 4, false});
  CHECK(cc.f_vertex({1, -1, true}) == RQVertex{1, 3, true});
}

TEST_CASE("orbit map on window vertices") {
  ConfigCategory cc = full_cat(Family::A, 2);
  CHECK(cc.f_vertex({0, 0, false}) == RQVertex{1, 2, false});
  CHECK(cc.f_vertex({1, 0, false}) == RQVertex{0, 3, false});
  CHECK(cc.f_vertex({0, 0, true}) == RQVertex{1, 2, true});
  CHECK(cc.f_vertex({1, 2, false}, -1) == RQVertex{0, 0, false});
  CHECK(cc.f_vertex({0, 0, false}, 2) == RQVertex{0, 5, false});
  CHECK(cc.f_vertex(cc.f_vertex({1, 1, true}, -1)) == RQVertex{1, 1, true});
}

TEST_CASE("dot output") {
  ConfigCategory cc = full_cat(Family::A, 2);
  const std::string dot = cc.orbit_quiver().to_dot();
  CHECK(dot.find("\"X(a1)\" -> \"P(a1+a2)\";") != std::string::npos);
  CHECK(dot.find("\"P(a1)\" [shape=box];") != std::string::npos);
  CHECK(dot.find("digraph orbit_quiver") != std::string::npos);

  const DynkinQuiver q = bip(Family::A, 3);
  ConfigCategory zz(q, Configuration::orbits({{0, 0, false}, {1, 1, false}, {2, 0, false}}));
  const std::string cdot = zz.config_quiver_dot();
  CHECK(cdot.find("\"(1',0)\" [shape=box];") != std::string::npos);
  CHECK(cdot.find("\"(2',1)\" [shape=box];") != std::string::npos);
  CHECK(cdot.find("\"(2',0)\"") == std::string::npos);

  // byte identical across constructions
  ConfigCategory zz2(q, Configuration::orbits({{0, 0, false}, {1, 1, false}, {2, 0, false}}));
  CHECK(zz2.config_quiver_dot() == cdot);
  CHECK(zz2.orbit_quiver().to_dot() == zz.orbit_quiver().to_dot());
}
