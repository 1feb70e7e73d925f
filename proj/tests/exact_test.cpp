#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cluscat/exact.hpp"

using namespace cluscat;

TEST_CASE("rank and kernel of a simple matrix") {
  // rows: (1 2 3), (2 4 6), (0 1 1)  -> rank 2, kernel dim 1
  QMat m(3, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  m.at(2, 1) = 1; m.at(2, 2) = 1;
  CHECK(m.rank() == 2);
  QMat k = m.kernel();
  CHECK(k.cols() == 1);
  // A * v == 0 for the kernel column
  RatVec v(3);
  for (int i = 0; i < 3; ++i) v[i] = k.at(i, 0);
  RatVec img = m.apply(v);
  for (const Rat& x : img) CHECK(x == 0);
}

TEST_CASE("solve consistent and inconsistent systems") {
  QMat m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = -1;
  auto x = m.solve({Rat(3), Rat(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);

  QMat s(2, 1);
  s.at(0, 0) = 1;
  s.at(1, 0) = 2;
  CHECK(!s.solve({Rat(1), Rat(3)}).has_value());
  CHECK(s.solve({Rat(1), Rat(2)}).has_value());
}

TEST_CASE("exact rationals survive scaling round trips") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  Int big("123456789012345678901234567890");
  Int big2 = big * big;
  CHECK(big2 / big == big);
}

TEST_CASE("quotient space projection has canonical lifts") {
  // k^3 modulo span{(1,1,0)}: free columns are 2 of {0,1,2}.
  QuotientSpace q(3, {{Rat(1), Rat(1), Rat(0)}});
  CHECK(q.dim() == 2);
  for (int c = 0; c < q.dim(); ++c) {
    RatVec lift(3);
    lift[q.free_cols()[c]] = 1;
    RatVec back = q.project(lift);
    for (int d = 0; d < q.dim(); ++d) CHECK(back[d] == (d == c ? 1 : 0));
  }
  // e_0 + e_1 is a relation, so it projects to zero.
  RatVec rel{Rat(1), Rat(1), Rat(0)};
  for (const Rat& x : q.project(rel)) CHECK(x == 0);
}

TEST_CASE("incremental row span tracks rank") {
  RowSpan s(3);
  CHECK(s.add({Rat(1), Rat(0), Rat(1)}));
  CHECK(s.add({Rat(0), Rat(1), Rat(1)}));
  CHECK(!s.add({Rat(1), Rat(1), Rat(2)}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({Rat(2), Rat(-1), Rat(1)}));
  CHECK(!s.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("sparse rank agrees with dense rank") {
  SparseRowSpan sp;
  std::map<int, Rat> r1{{0, Rat(1)}, {2, Rat(1)}};
  std::map<int, Rat> r2{{1, Rat(1)}, {2, Rat(-1)}};
  std::map<int, Rat> r3{{0, Rat(1)}, {1, Rat(1)}};
  CHECK(sp.add(r1));
  CHECK(sp.add(r2));
  CHECK(!sp.add(r3));
  CHECK(sp.dim() == 2);
}
