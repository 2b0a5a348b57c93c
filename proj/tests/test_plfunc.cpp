#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "setmeans/errors.hpp"
#include "setmeans/fixtures.hpp"
#include "setmeans/plfunc.hpp"

using namespace setmeans;

namespace {

CanonicalSet canon(std::vector<Atom> raw) { return CanonicalSet::canonicalize(std::move(raw)); }

Seq harm(Rat limit, Rat c, long start = 1) {
  Seq s;
  s.limit = limit;
  s.c = c;
  s.start = start;
  return s;
}

}  // namespace

TEST_CASE("eval interpolates and extends constantly") {
  PLFunc f{{0, 2}, {0, 1}};
  CHECK(f.eval(-5) == 0);
  CHECK(f.eval(1) == Rat(1, 2));
  CHECK(f.eval(2) == 1);
  CHECK(f.eval(7) == 1);
}

TEST_CASE("validate rejects unsorted breakpoints") {
  CHECK_THROWS_AS(validate_plfunc(PLFunc{{1, 0}, {0, 1}}), InvalidAtomError);
  CHECK_THROWS_AS(validate_plfunc(PLFunc{{0, 1}, {0}}), InvalidAtomError);
  CHECK_THROWS_AS(validate_plfunc(PLFunc{{}, {}}), InvalidAtomError);
}

TEST_CASE("sup distance at knot union") {
  PLFunc f{{0, 2}, {0, 2}}, g{{0, 2}, {0, 0}};
  CHECK(sup_distance(f, g) == 2);
  CHECK(sup_distance(f, f) == 0);
  CHECK(sup_distance(fcont_element(2), fcont_limit()) == 1);   // n = 1: 1/n
  CHECK(sup_distance(fcont_element(20), fcont_limit()) == Rat(1, 10));
}

TEST_CASE("identity and constant images") {
  CanonicalSet h = canon({Interval{0, 1}, Interval{2, 3}, harm(5, 1)});
  PLFunc id{{-10, 10}, {-10, 10}};
  CHECK(apply_pl(h, id) == h);
  PLFunc c7{{0, 1}, {7, 7}};
  CHECK(apply_pl(h, c7) == canon({FinitePoints{{7}}}));
}

TEST_CASE("paper f_2 image matches the closed form at n=1") {
  CanonicalSet h = canon({Interval{0, 1}, Interval{2, 3}});
  // f_2(H) = [0,1/1] ∪ [1-1/2, 1] = [0,1]
  CHECK(apply_pl(h, fcont_element(2)) == canon({Interval{0, 1}}));
  // f_3 (n=1 odd case): [0,1/2] ∪ [0,1] = [0,1]
  CHECK(apply_pl(h, fcont_element(3)) == canon({Interval{0, 1}}));
  // f_4 (n=2 even): [0,1/2] ∪ [3/4,1]
  CHECK(apply_pl(h, fcont_element(4)) ==
        canon({Interval{0, Rat(1, 2)}, Interval{Rat(3, 4), 1}}));
}

TEST_CASE("sequences map to sequences with head exceptions") {
  CanonicalSet h = canon({harm(0, 1)});  // 1, 1/2, 1/3 ... -> 0
  PLFunc f{{0, Rat(1, 2)}, {0, 1}};     // doubles below 1/2, constant 1 above
  CanonicalSet img = apply_pl(h, f);
  CHECK(img.member(1));           // f(1) = f(1/2) = 1
  CHECK(img.member(Rat(2, 3)));   // f(1/3) = 2/3
  CHECK(img.member(Rat(1, 2)));   // f(1/4)
  CHECK(!img.member(Rat(3, 4)));
  bool has_seq = false;
  for (const auto& a : img.atoms()) has_seq = has_seq || std::holds_alternative<Seq>(a);
  CHECK(has_seq);
}

TEST_CASE("cantor pieces map exactly when breakpoints hit gaps") {
  CanonicalSet c = canon({CantorPiece{0, 1, 0}});
  PLFunc f{{0, Rat(1, 2)}, {0, 1}};  // break at the central gap
  CanonicalSet img = apply_pl(c, f);
  // left half scales to 2*(C/3) = cantor(0,2/3); right half collapses to {1}
  CHECK(img == canon({CantorPiece{0, Rat(2, 3), 0}, FinitePoints{{1}}}));
  PLFunc bad{{0, Rat(1, 4)}, {0, 1}};  // 1/4 is a non-gap member
  CHECK_THROWS_AS(apply_pl(c, bad), NonPLBreakOnCantorError);
}

TEST_CASE("cantor approximants pin the fixture value") {
  CanonicalSet h = canon({Interval{0, Rat(1, 3)}, CantorPiece{0, 1, 0}});
  for (int n = 1; n <= 4; ++n) {
    CanonicalSet img = apply_pl(h, cantor_approximant(n));
    // image of [0,1/3] under the n-th approximant is [0,1/2]
    CHECK(subset_of(canon({Interval{0, Rat(1, 2)}}), img));
  }
}
