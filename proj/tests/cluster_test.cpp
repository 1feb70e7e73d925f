#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cluscat/seed.hpp"

using namespace cluscat;

namespace {

struct A2Fixture {
  RootSystem rs{DynkinDiagram::make(Family::A, 2)};
  DynkinQuiver q{DynkinQuiver::bipartite_default(DynkinDiagram::make(Family::A, 2))};
};

IVec rt(const RootSystem& rs, const std::string& s) { return *rs.parse_root(s); }

}  // namespace

TEST_CASE("universal seed A2 matches the seven-vertex ice quiver") {
  A2Fixture f;
  Seed s = universal_seed(f.rs, f.q);
  REQUIRE(s.n() == 2);
  REQUIRE(s.m() == 5);

  // canonical frozen slot order a1, a2, a1+a2, -a1, -a2
  const auto& ap = f.rs.almost_positive();
  CHECK(ap[0] == rt(f.rs, "a1"));
  CHECK(ap[1] == rt(f.rs, "a2"));
  CHECK(ap[2] == rt(f.rs, "a1+a2"));
  CHECK(ap[3] == rt(f.rs, "-a1"));
  CHECK(ap[4] == rt(f.rs, "-a2"));

  IceQuiver want(2, 5);
  want.set_b(0, 1, 1);  // x1 -> x2 (vertex 0 is the + source)
  want.set_b(2, 0, 1);  // p(a1) -> x1
  want.set_b(4, 0, 1);  // p(a1+a2) -> x1
  want.set_b(0, 5, 1);  // x1 -> p(-a1)
  want.set_b(1, 3, 1);  // x2 -> p(a2)
  want.set_b(1, 4, 1);  // x2 -> p(a1+a2)
  want.set_b(6, 1, 1);  // p(-a2) -> x2
  CHECK(s.ice == want);

  CHECK(s.y == s.y_from_ice());
  CHECK(s.y[0] == IVec{1, 0, 1, -1, 0});   // y1 = p(a1) p(a1+a2) / p(-a1)
  CHECK(s.y[1] == IVec{0, -1, -1, 0, 1});  // y2 = p(-a2) / (p(a2) p(a1+a2))
}

TEST_CASE("universal seed A1") {
  RootSystem rs(DynkinDiagram::make(Family::A, 1));
  DynkinQuiver q = DynkinQuiver::bipartite_default(DynkinDiagram::make(Family::A, 1));
  Seed s = universal_seed(rs, q);
  REQUIRE(s.m() == 2);
  CHECK(s.y[0] == IVec{1, -1});  // y1 = p(a1) / p(-a1)

  ExchangeRelation rel;
  Seed t = mutate_seed(s, 0, &rel);
  auto namer = [&](const Laurent& v) { return variable_name(rs, v); };
  CHECK(relation_string(rel, namer, universal_frozen_names(rs)) ==
        "x(-a1)*x(a1) = p(a1) + p(-a1)");
  Seed back = mutate_seed(t, 0);
  CHECK(back.cluster == s.cluster);
  CHECK(back.ice == s.ice);
}

TEST_CASE("variable naming by denominator root") {
  A2Fixture f;
  Seed s = universal_seed(f.rs, f.q);
  CHECK(variable_name(f.rs, s.cluster[0]) == "x(-a1)");
  CHECK(variable_name(f.rs, s.cluster[1]) == "x(-a2)");
  Seed t = mutate_seed(s, 1);
  CHECK(variable_name(f.rs, t.cluster[1]) == "x(a2)");
}

TEST_CASE("pentagon walk reproduces the five universal exchange relations") {
  A2Fixture f;
  Seed s = universal_seed(f.rs, f.q);
  auto namer = [&](const Laurent& v) { return variable_name(f.rs, v); };
  const auto frozen = universal_frozen_names(f.rs);

  const int word[5] = {1, 0, 1, 0, 1};
  std::vector<std::string> got;
  std::vector<ExchangeRelation> rels;
  for (int k : word) {
    ExchangeRelation rel;
    s = mutate_seed(s, k, &rel);
    got.push_back(relation_string(rel, namer, frozen));
    rels.push_back(rel);
  }

  CHECK(got[0] == "x(-a2)*x(a2) = p(-a2)*x(-a1) + p(a2)*p(a1+a2)");
  CHECK(got[1] == "x(-a1)*x(a1+a2) = p(a1)*x(a2) + p(a2)*p(-a1)");
  CHECK(got[2] == "x(a2)*x(a1) = p(a1+a2)*x(a1+a2) + p(-a1)*p(-a2)");
  CHECK(got[3] == "x(a1+a2)*x(-a2) = p(a2)*x(a1) + p(a1)*p(-a2)");
  CHECK(got[4] == "x(a1)*x(-a1) = p(-a1)*x(-a2) + p(a1)*p(a1+a2)");

  // structural form: each relation is (old, new) variables plus the two
  // exchange monomials, checked as exact Laurent values
  for (const auto& rel : rels) {
    const Laurent lhs = rel.old_var * rel.new_var;
    CHECK(lhs == rel.m_in.value(2, 5) + rel.m_out.value(2, 5));
  }
  // relation 4 trades x(a1+a2) back for the original x2 = x(-a2)
  Seed u = universal_seed(f.rs, f.q);
  CHECK(rels[3].new_var == u.cluster[1]);

  // after the five steps the seed is the initial one with vertices 0,1 swapped
  Seed want = universal_seed(f.rs, f.q);
  std::swap(want.cluster[0], want.cluster[1]);
  CHECK(s.cluster == want.cluster);
  CHECK(s.ice == want.ice.permuted({1, 0, 2, 3, 4, 5, 6}));
}

TEST_CASE("mutation is an involution on seeds") {
  RootSystem rs(DynkinDiagram::make(Family::A, 3));
  DynkinQuiver q = DynkinQuiver::bipartite_default(DynkinDiagram::make(Family::A, 3));
  Seed s = universal_seed(rs, q);
  for (int k = 0; k < 3; ++k) {
    Seed t = mutate_seed(mutate_seed(s, k), k);
    CHECK(t.cluster == s.cluster);
    CHECK(t.ice == s.ice);
    CHECK(t.y == s.y);
  }
}

TEST_CASE("exchange graph sizes and variable counts") {
  struct Row {
    Family fam;
    int rank;
    size_t seeds, vars;
  };
  // seeds = Catalan-type cluster count, vars = |almost positive roots|
  const Row rows[] = {{Family::A, 1, 2, 2}, {Family::A, 2, 5, 5}, {Family::A, 3, 14, 9}};
  for (const Row& row : rows) {
    CAPTURE(int(row.fam));
    CAPTURE(row.rank);
    RootSystem rs(DynkinDiagram::make(row.fam, row.rank));
    DynkinQuiver q = DynkinQuiver::bipartite_default(DynkinDiagram::make(row.fam, row.rank));
    ExchangeGraph g = exchange_graph(universal_seed(rs, q));
    CHECK(g.seeds.size() == row.seeds);
    CHECK(g.variables.size() == row.vars);
    CHECK(g.variables.size() == rs.almost_positive().size());

    // every cluster variable is labeled by a distinct almost-positive root
    std::set<IVec> labels;
    for (const Laurent& v : g.variables) {
      auto lab = variable_root_label(rs, v);
      REQUIRE(lab.has_value());
      labels.insert(*lab);
    }
    CHECK(labels.size() == rs.almost_positive().size());

    // edge count = seeds * n / 2 (every seed has n neighbours)
    CHECK(g.edges.size() == g.seeds.size() * size_t(row.rank) / 2);
    CHECK(g.relations.size() == g.edges.size());
  }
}

TEST_CASE("exchange graph of the trivial-coefficient A2 seed") {
  A2Fixture f;
  ExchangeGraph g = exchange_graph(trivial_seed(f.rs, f.q));
  CHECK(g.seeds.size() == 5);
  CHECK(g.variables.size() == 5);
}

TEST_CASE("budget exhaustion throws") {
  A2Fixture f;
  CHECK_THROWS_AS(exchange_graph(universal_seed(f.rs, f.q), 3), std::runtime_error);
}

TEST_CASE("specialization universal -> trivial (A2)") {
  A2Fixture f;
  auto rep = check_specialization(universal_seed(f.rs, f.q), trivial_seed(f.rs, f.q));
  CHECK(rep.ok);
  CHECK(rep.unique);  // rank over zero target generators
  REQUIRE(rep.generator_map.size() == 5);
  for (const IVec& row : rep.generator_map) CHECK(row.empty());
}

TEST_CASE("specialization universal -> principal (A2) exists and is unique") {
  A2Fixture f;
  auto rep = check_specialization(universal_seed(f.rs, f.q), principal_seed(f.rs, f.q));
  CHECK(rep.ok);
  CHECK(rep.unique);
  REQUIRE(rep.generator_map.size() == 5);
  // phi fixes the initial coefficients: y_j agree at the initial seed by construction
  const Seed u = universal_seed(f.rs, f.q);
  const Seed p = principal_seed(f.rs, f.q);
  for (int j = 0; j < 2; ++j) {
    IVec img(2, 0);
    for (int t = 0; t < 5; ++t)
      for (int c = 0; c < 2; ++c) img[c] += u.y[j][t] * rep.generator_map[t][c];
    CHECK(img == p.y[j]);
  }
}

TEST_CASE("specialization universal -> universal is the identity") {
  A2Fixture f;
  auto rep = check_specialization(universal_seed(f.rs, f.q), universal_seed(f.rs, f.q));
  CHECK(rep.ok);
  CHECK(rep.unique);
  for (int t = 0; t < 5; ++t) {
    IVec e(5, 0);
    e[t] = 1;
    CHECK(rep.generator_map[t] == e);
  }
}

TEST_CASE("specialization rejects a mismatched mutable quiver") {
  A2Fixture f;
  DynkinQuiver rev = *DynkinQuiver::from_arrow_list(DynkinDiagram::make(Family::A, 2), {{1, 0}});
  auto rep = check_specialization(universal_seed(f.rs, f.q), trivial_seed(f.rs, rev));
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure == "mutable quivers differ");
}
