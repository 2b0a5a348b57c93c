#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "setmeans/errors.hpp"
#include "setmeans/generator.hpp"
#include "setmeans/geometry.hpp"

using namespace setmeans;

namespace {

CanonicalSet canon(std::vector<Atom> raw) { return CanonicalSet::canonicalize(std::move(raw)); }

Seq harm(Rat limit, Rat c) {
  Seq s;
  s.limit = limit;
  s.c = c;
  return s;
}

}  // namespace

TEST_CASE("interval measure and moment") {
  MeasureResult r = geometry(canon({Interval{0, 2}, Interval{3, 4}}));
  CHECK(r.dim == Dim::D1);
  CHECK(r.exact);
  CHECK(r.measure == 3);
  CHECK(r.moment == Rat(11, 2));
}

TEST_CASE("cantor weight and moment") {
  MeasureResult r = geometry(canon({CantorPiece{0, 1, 0}}));
  CHECK(r.dim == Dim::DC);
  CHECK(r.exact);
  CHECK(r.measure == 1);
  CHECK(r.moment == Rat(1, 2));
}

TEST_CASE("top dimension wins") {
  MeasureResult r = geometry(canon({CantorPiece{0, 1, 0}, Interval{1, 2}}));
  CHECK(r.dim == Dim::D1);
  CHECK(r.measure == 1);
  CHECK(r.moment == Rat(3, 2));
}

TEST_CASE("finite D0 uses counting measure") {
  MeasureResult r = geometry(canon({FinitePoints{{0, 1, 5}}}));
  CHECK(r.dim == Dim::D0);
  CHECK(r.measure == 3);
  CHECK(r.moment == 6);
}

TEST_CASE("infinite countable top part is not an s-set") {
  CHECK_THROWS_AS(geometry(canon({harm(0, 1)})), NotAnSSetError);
  CHECK_THROWS_AS(geometry(CanonicalSet{}), EmptySetError);
  // lower-dimension seq under an interval is fine
  CHECK_NOTHROW(geometry(canon({harm(0, 1), Interval{2, 3}})));
}

TEST_CASE("cantor weight halves per extra depth") {
  MeasureResult r1 = geometry(canon({CantorPiece{0, 1, 0}}));
  MeasureResult r2 = geometry(canon({CantorPiece{0, Rat(1, 3), 0}}));
  MeasureResult r3 = geometry(canon({CantorPiece{0, Rat(1, 9), 0}}));
  // widths 1, 1/3, 1/9 in a shared family would weigh 1, 1/2, 1/4; computed
  // separately the reference is the piece itself, so compare a joint set
  MeasureResult joint =
      geometry(canon({CantorPiece{0, 1, 0}, CantorPiece{2, Rat(1, 3), 0},
                      CantorPiece{3, Rat(1, 9), 0}}));
  CHECK(joint.exact);
  CHECK(joint.measure == Rat(7, 4));  // 1 + 1/2 + 1/4
  CHECK(r1.measure == 1);
  CHECK(r2.measure == 1);
  CHECK(r3.measure == 1);
}

TEST_CASE("incommensurable cantor widths give enclosures") {
  MeasureResult r = geometry(canon({CantorPiece{0, 1, 0}, CantorPiece{2, Rat(1, 2), 0}}));
  CHECK(!r.exact);
  CHECK(r.measure_lo <= r.measure_hi);
  // w^s for w = 1/2, s = log2/log3 is about 0.6444
  CHECK(r.measure_lo > Rat(16, 10));
  CHECK(r.measure_hi < Rat(17, 10));
}

TEST_CASE("geometry additivity on disjoint same-dim parts") {
  for (unsigned long long seed = 1; seed <= 40; ++seed) {
    GenProfile p;
    p.intervals = 2;
    GenProfile q = p;
    q.origin = 100;
    CanonicalSet a = gen_random_set(seed, p), b = gen_random_set(seed + 1000, q);
    MeasureResult ra = geometry(a), rb = geometry(b), ru = geometry(set_union(a, b));
    CHECK(ru.exact);
    CHECK(ru.measure == ra.measure + rb.measure);
    CHECK(ru.moment == ra.moment + rb.moment);
  }
}

TEST_CASE("interval scaling law under affine maps") {
  for (unsigned long long seed = 1; seed <= 20; ++seed) {
    GenProfile p;
    p.intervals = 2;
    CanonicalSet h = gen_random_set(seed, p);
    Rat alpha(-3, 2), beta(7, 3);
    MeasureResult r = geometry(h), rm = geometry(affine_map(h, alpha, beta));
    CHECK(rm.measure == abs_of(alpha) * r.measure);
    // change of variables: ∫ (αx+β) |α| dx
    CHECK(rm.moment == abs_of(alpha) * (alpha * r.moment + beta * r.measure));
  }
}
