#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cluscat/root_system.hpp"

using namespace cluscat;

namespace {

RootSystem rs_of(Family f, int rank) { return RootSystem(DynkinDiagram::make(f, rank)); }

IVec rv(std::initializer_list<int> v) { return IVec(v); }

}  // namespace

TEST_CASE("positive root counts match the classical numbers") {
  CHECK(rs_of(Family::A, 1).positive_roots().size() == 1);
  CHECK(rs_of(Family::A, 2).positive_roots().size() == 3);
  CHECK(rs_of(Family::A, 3).positive_roots().size() == 6);
  CHECK(rs_of(Family::A, 4).positive_roots().size() == 10);
  CHECK(rs_of(Family::D, 4).positive_roots().size() == 12);
  CHECK(rs_of(Family::D, 5).positive_roots().size() == 20);
  CHECK(rs_of(Family::E, 6).positive_roots().size() == 36);
  CHECK(rs_of(Family::E, 7).positive_roots().size() == 63);
  CHECK(rs_of(Family::E, 8).positive_roots().size() == 120);
}

TEST_CASE("A2 positive roots in canonical order") {
  auto rs = rs_of(Family::A, 2);
  REQUIRE(rs.positive_roots().size() == 3);
  CHECK(rs.positive_roots()[0] == rv({1, 0}));
  CHECK(rs.positive_roots()[1] == rv({0, 1}));
  CHECK(rs.positive_roots()[2] == rv({1, 1}));
  CHECK(rs.almost_positive().size() == 5);
  CHECK(rs.almost_positive()[3] == rv({-1, 0}));
  CHECK(rs.almost_positive()[4] == rv({0, -1}));
}

TEST_CASE("A3 contains the full root a1+a2+a3") {
  auto rs = rs_of(Family::A, 3);
  CHECK(rs.is_positive_root(rv({1, 1, 1})));
  CHECK(rs.almost_positive().size() == 9);
}

TEST_CASE("simple reflections") {
  auto rs = rs_of(Family::A, 2);
  CHECK(rs.simple_reflection(0, rv({1, 0})) == rv({-1, 0}));
  CHECK(rs.simple_reflection(0, rv({0, 1})) == rv({1, 1}));
  // involution on arbitrary integer vectors
  for (const IVec& v : {rv({2, -3}), rv({1, 1}), rv({0, 5})})
    for (int i = 0; i < 2; ++i)
      CHECK(rs.simple_reflection(i, rs.simple_reflection(i, v)) == v);
}

TEST_CASE("roots have length two under the pairing") {
  for (auto [f, r] : {std::pair{Family::A, 3}, {Family::D, 4}, {Family::E, 6}}) {
    auto rs = rs_of(f, r);
    for (const IVec& a : rs.positive_roots()) {
      int len = 0;
      for (int i = 0; i < rs.rank(); ++i) len += a[i] * rs.pairing_with_simple(a, i);
      CHECK(len == 2);
    }
  }
}

TEST_CASE("tau_eps on A3 with the bipartite orientation 1->2<-3") {
  auto rs = rs_of(Family::A, 3);
  auto q = DynkinQuiver::bipartite_default(rs.diagram());
  // the default bipartite orientation of A3 is exactly 1->2<-3
  REQUIRE(q.arrows == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});
  CHECK(tau_eps(rs, q, +1, rv({-1, 0, 0})) == rv({1, 0, 0}));
  CHECK(tau_eps(rs, q, -1, rv({1, 0, 0})) == rv({1, 1, 0}));
  CHECK(tau_eps(rs, q, -1, rv({-1, 0, 0})) == rv({-1, 0, 0}));
}

TEST_CASE("tau_eps involutions and commuting reflection order") {
  for (auto [f, r] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::D, 4}, {Family::D, 5}}) {
    auto rs = rs_of(f, r);
    auto q = DynkinQuiver::bipartite_default(rs.diagram());
    auto e = q.eps();
    for (const IVec& a : rs.almost_positive()) {
      for (int eps : {+1, -1}) {
        IVec once = tau_eps(rs, q, eps, a);
        CHECK(rs.is_almost_positive(once));
        CHECK(tau_eps(rs, q, eps, once) == a);
        // reflections of equal sign commute: reversed application order agrees
        bool fixed = false;
        for (int j = 0; j < rs.rank(); ++j)
          if (a == ivec_neg(rs.simple(j)) && e[j] == -eps) fixed = true;
        if (!fixed) {
          IVec rev = a;
          for (int k = rs.rank() - 1; k >= 0; --k)
            if (e[k] == eps) rev = rs.simple_reflection(k, rev);
          CHECK(rev == once);
        }
      }
    }
  }
}

TEST_CASE("A3 tau orbits: sizes 6 and 3, with the displayed 3-cycle") {
  auto rs = rs_of(Family::A, 3);
  auto q = DynkinQuiver::bipartite_default(rs.diagram());
  auto orbits = tau_orbits(rs, q);
  std::multiset<size_t> sizes;
  for (const auto& o : orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<size_t>{3, 6});
  // 3-cycle: -a2 -> a2 -> a1+a2+a3 -> -a2
  CHECK(tau_root(rs, q, rv({0, -1, 0})) == rv({0, 1, 0}));
  CHECK(tau_root(rs, q, rv({0, 1, 0})) == rv({1, 1, 1}));
  CHECK(tau_root(rs, q, rv({1, 1, 1})) == rv({0, -1, 0}));
  // 6-cycle: -a1 -> a1+a2 -> a3 -> -a3 -> a2+a3 -> a1 -> -a1
  IVec cur = rv({-1, 0, 0});
  std::vector<IVec> expect = {rv({1, 1, 0}), rv({0, 0, 1}), rv({0, 0, -1}),
                              rv({0, 1, 1}), rv({1, 0, 0}), rv({-1, 0, 0})};
  for (const IVec& nxt : expect) {
    cur = tau_root(rs, q, cur);
    CHECK(cur == nxt);
  }
  // tau_root_inverse really inverts
  for (const IVec& a : rs.almost_positive())
    CHECK(tau_root_inverse(rs, q, tau_root(rs, q, a)) == a);
}

TEST_CASE("tau orbit partition is a bijection and automorphism-stable") {
  for (auto [f, r] : {std::pair{Family::A, 3}, {Family::D, 4}}) {
    auto rs = rs_of(f, r);
    auto q = DynkinQuiver::bipartite_default(rs.diagram());
    auto orbits = tau_orbits(rs, q);
    size_t covered = 0;
    for (const auto& o : orbits) covered += o.size();
    CHECK(covered == rs.almost_positive().size());

    // orientation-preserving diagram automorphisms permute tau orbits
    std::set<std::set<IVec>> orbit_sets;
    for (const auto& o : orbits) orbit_sets.insert(std::set<IVec>(o.begin(), o.end()));
    for (const auto& perm : rs.diagram().automorphisms()) {
      bool preserves_orientation = true;
      for (const auto& [a, b] : q.arrows) {
        if (!std::count(q.arrows.begin(), q.arrows.end(),
                        std::make_pair(perm[a], perm[b])))
          preserves_orientation = false;
      }
      if (!preserves_orientation) continue;
      for (const auto& o : orbit_sets) {
        std::set<IVec> image;
        for (const IVec& a : o) {
          IVec img(rs.rank());
          for (int i = 0; i < rs.rank(); ++i) img[perm[i]] = a[i];
          image.insert(img);
        }
        CHECK(orbit_sets.count(image) == 1);
      }
    }
  }
}

TEST_CASE("diagram combinatorics: coxeter numbers and automorphism groups") {
  CHECK(DynkinDiagram::make(Family::A, 1).coxeter_number() == 2);
  CHECK(DynkinDiagram::make(Family::A, 2).coxeter_number() == 3);
  CHECK(DynkinDiagram::make(Family::A, 3).coxeter_number() == 4);
  CHECK(DynkinDiagram::make(Family::D, 4).coxeter_number() == 6);
  CHECK(DynkinDiagram::make(Family::E, 6).coxeter_number() == 12);
  CHECK(DynkinDiagram::make(Family::A, 1).automorphisms().size() == 1);
  CHECK(DynkinDiagram::make(Family::A, 3).automorphisms().size() == 2);
  CHECK(DynkinDiagram::make(Family::D, 4).automorphisms().size() == 6);
  CHECK(DynkinDiagram::make(Family::D, 5).automorphisms().size() == 2);
  CHECK(DynkinDiagram::make(Family::E, 6).automorphisms().size() == 2);
}

TEST_CASE("root strings render and parse") {
  auto rs = rs_of(Family::A, 3);
  CHECK(rs.root_string(rv({1, 1, 0})) == "a1+a2");
  CHECK(rs.root_string(rv({0, 0, -1})) == "-a3");
  for (const IVec& a : rs.almost_positive()) {
    auto back = rs.parse_root(rs.root_string(a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK(!rs.parse_root("a1+a3").has_value());  // not a root
  CHECK(!rs.parse_root("garbage").has_value());

  // a multiplicity-two coefficient appears in D4 as a1+2a2+a3+a4
  auto d4 = rs_of(Family::D, 4);
  IVec high = rv({1, 2, 1, 1});
  CHECK(d4.is_positive_root(high));
  CHECK(d4.root_string(high) == "a1+2a2+a3+a4");
  CHECK(*d4.parse_root("a1+2a2+a3+a4") == high);
}

TEST_CASE("bipartite default orientations") {
  // A2: 1->2; D4: all leaves point at the center
  auto a2 = DynkinQuiver::bipartite_default(DynkinDiagram::make(Family::A, 2));
  CHECK(a2.arrows == std::vector<std::pair<int, int>>{{0, 1}});
  auto d4 = DynkinQuiver::bipartite_default(DynkinDiagram::make(Family::D, 4));
  CHECK(d4.arrows == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}, {3, 1}});
  CHECK(d4.is_bipartite());
  CHECK(d4.eps() == std::vector<int>{1, -1, 1, 1});
  // a linear A3 orientation 1->2->3 is not bipartite
  auto path = DynkinQuiver::from_arrow_list(DynkinDiagram::make(Family::A, 3), {{0, 1}, {1, 2}});
  REQUIRE(path.has_value());
  CHECK(!path->is_bipartite());
  CHECK_THROWS(path->eps());
}
