#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "setmeans/cantor.hpp"
#include "setmeans/errors.hpp"

using namespace setmeans;

TEST_CASE("classic members of the middle-thirds set") {
  CHECK(cantor01_member(0));
  CHECK(cantor01_member(1));
  CHECK(cantor01_member(Rat(1, 3)));
  CHECK(cantor01_member(Rat(2, 3)));
  CHECK(cantor01_member(Rat(1, 4)));   // 0.020202..._3
  CHECK(cantor01_member(Rat(3, 4)));
  CHECK(cantor01_member(Rat(1, 9)));
  CHECK(cantor01_member(Rat(7, 9)));
}

TEST_CASE("gap points are not members") {
  CHECK(!cantor01_member(Rat(1, 2)));
  CHECK(!cantor01_member(Rat(1, 5)));
  CHECK(!cantor01_member(Rat(4, 9)));
  CHECK(!cantor01_member(Rat(5, 6)));
  CHECK(!cantor01_member(Rat(-1, 10)));
  CHECK(!cantor01_member(Rat(11, 10)));
}

TEST_CASE("membership in shifted and scaled pieces") {
  CantorPiece p{2, Rat(1, 3), 0};  // 2 + C/3
  CHECK(cantor_member(p, 2));
  CHECK(cantor_member(p, 2 + Rat(1, 12)));
  CHECK(!cantor_member(p, 2 + Rat(1, 6)));
}

TEST_CASE("cut at a gap point splits into children") {
  CantorPiece p{0, 1, 0};
  CantorCut c = cantor_cut(p, false, 0, false, true, Rat(1, 2), false);
  REQUIRE(c.pieces.size() == 1);
  CHECK(c.pieces[0] == CantorPiece{0, Rat(1, 3), 0});
  CHECK(c.points.empty());
}

TEST_CASE("cut at a member endpoint keeps the point") {
  CantorPiece p{0, 1, 0};
  // [1/3, 1]: right child plus the isolated-in-window endpoint 1/3.
  CantorCut c = cantor_cut(p, true, Rat(1, 3), false, false, 0, false);
  REQUIRE(c.pieces.size() == 1);
  CHECK(c.pieces[0] == CantorPiece{Rat(2, 3), Rat(1, 3), 0});
  REQUIRE(c.points.size() == 1);
  CHECK(c.points[0] == Rat(1, 3));
  // strict cut drops the endpoint but keeps the rest of the left child
  CantorCut s = cantor_cut(p, true, Rat(1, 3), true, false, 0, false);
  for (const auto& pt : s.points) CHECK(pt != Rat(1, 3));
}

TEST_CASE("cut at an irrational-like non-gap member throws depth error") {
  // 1/4 is a member but never an endpoint of a removed gap, so a window edge
  // there cannot resolve into finitely many pieces.
  CantorPiece p{0, 1, 0};
  CHECK_THROWS_AS(cantor_cut(p, true, Rat(1, 4), true, false, 0, false),
                  ApproximationDepthError);
}

TEST_CASE("relation between pieces") {
  CantorPiece whole{0, 1, 0};
  CantorPiece left{0, Rat(1, 3), 0}, right{Rat(2, 3), Rat(1, 3), 0};
  CHECK(cantor_relation(whole, left) == CantorRelation::FirstContainsSecond);
  CHECK(cantor_relation(left, whole) == CantorRelation::SecondContainsFirst);
  CHECK(cantor_relation(whole, whole) == CantorRelation::Equal);
  CHECK(cantor_relation(left, right) == CantorRelation::Disjoint);
  CHECK(cantor_relation(CantorPiece{0, Rat(1, 2), 0}, whole) ==
        CantorRelation::Unsupported);
}

TEST_CASE("distance to a piece") {
  CantorPiece p{0, 1, 0};
  CHECK(cantor_distance(p, Rat(1, 4)) == 0);
  CHECK(cantor_distance(p, Rat(1, 2)) == Rat(1, 6));  // nearest points 1/3, 2/3
  CHECK(cantor_distance(p, 2) == 1);
  CHECK(cantor_distance(p, Rat(-1, 2)) == Rat(1, 2));
}

TEST_CASE("meets interval") {
  CantorPiece p{0, 1, 0};
  CHECK(cantor_meets_interval(p, Rat(1, 3), Rat(2, 3)));     // endpoints touch
  CHECK(!cantor_meets_interval(p, Rat(2, 5), Rat(3, 5)));    // inside the big gap
  CHECK(cantor_meets_interval(p, Rat(-1), Rat(0)));
  CHECK(!cantor_meets_interval(p, Rat(11, 10), Rat(2)));
}
