#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "setmeans/atom.hpp"
#include "setmeans/errors.hpp"

using namespace setmeans;

namespace {

Seq harm(Rat limit, Rat c, long start = 1) {
  Seq s;
  s.limit = limit;
  s.kind = SeqKind::Harmonic;
  s.c = c;
  s.start = start;
  return s;
}

Seq geom(Rat limit, Rat c, Rat q) {
  Seq s;
  s.limit = limit;
  s.kind = SeqKind::Geometric;
  s.c = c;
  s.q = q;
  return s;
}

}  // namespace

TEST_CASE("harmonic terms") {
  Seq s = harm(2, -1, 3);
  CHECK(s.term(3) == Rat(2) - Rat(1, 3));
  CHECK(s.term(10) == Rat(19, 10));
  CHECK(s.side() == -1);
  CHECK(s.dist(4) == Rat(1, 4));
}

TEST_CASE("geometric terms") {
  Seq s = geom(1, 1, Rat(1, 2));
  CHECK(s.term(1) == Rat(3, 2));
  CHECK(s.term(4) == Rat(17, 16));
  CHECK(s.side() == 1);
}

TEST_CASE("harmonic-geometric terms keep one-sided monotonicity") {
  Seq s;
  s.limit = 5;
  s.kind = SeqKind::HarmonicGeometric;
  s.c = 1;
  s.c2 = 1;
  s.q = Rat(1, 2);
  CHECK(s.term(1) == Rat(5) + 1 + Rat(1, 2));
  CHECK(s.term(2) == Rat(5) + Rat(1, 2) + Rat(1, 4));
  for (long n = 1; n < 30; ++n) CHECK(s.dist(n) > s.dist(n + 1));
}

TEST_CASE("seq_index_of solves exactly") {
  Seq s = harm(0, 1);
  CHECK(seq_index_of(s, Rat(1, 7)) == 7);
  CHECK(!seq_index_of(s, Rat(2, 7)).has_value());
  CHECK(!seq_index_of(s, Rat(0)).has_value());  // the limit is not a member
  Seq g = geom(0, 1, Rat(1, 2));
  CHECK(seq_index_of(g, Rat(1, 1024)) == 10);
  CHECK(!seq_index_of(g, Rat(3, 1024)).has_value());
}

TEST_CASE("seq_indices_in is a contiguous range") {
  Seq s = harm(0, 1);  // 1, 1/2, 1/3, ...
  SeqIndexRange r = seq_indices_in(s, Rat(1, 5), false, Rat(1, 2), false);
  CHECK(!r.empty);
  CHECK(!r.tail);
  CHECK(r.lo == 2);
  CHECK(r.hi == 5);
  r = seq_indices_in(s, Rat(0), true, Rat(1, 10), false);
  CHECK(r.tail);
  CHECK(r.lo == 10);
  r = seq_indices_in(s, Rat(2), false, Rat(3), false);
  CHECK(r.empty);
}

TEST_CASE("seq_first_within") {
  Seq s = harm(0, 1);
  CHECK(s.dist(seq_first_within(s, Rat(1, 100))) < Rat(1, 100));
  CHECK(seq_first_within(s, Rat(1, 100)) == 101);
}

TEST_CASE("cmp_scaled_pow decides without materializing huge powers") {
  CHECK(cmp_scaled_pow(1, Rat(1, 2), 10, Rat(1, 1024)) == 0);
  CHECK(cmp_scaled_pow(1, Rat(1, 2), 9, Rat(1, 1024)) > 0);
  CHECK(cmp_scaled_pow(1, Rat(1, 2), 100000, Rat(1, 1024)) < 0);
}

TEST_CASE("atom bounds and membership") {
  Atom iv = Interval{Rat(1, 2), 2};
  CHECK(atom_inf(iv) == Rat(1, 2));
  CHECK(atom_sup(iv) == 2);
  CHECK(atom_member(iv, 1));
  CHECK(!atom_member(iv, 3));
  Atom sq = harm(1, -1);  // 0, 1/2, 2/3, ... -> 1
  CHECK(atom_inf(sq) == 0);
  CHECK(atom_sup(sq) == 1);  // supremum, not attained
  CHECK(atom_member(sq, Rat(2, 3)));
  CHECK(!atom_member(sq, 1));
}

TEST_CASE("validate_atom rejects broken invariants") {
  CHECK_THROWS_AS(validate_atom(Interval{2, 1}), InvalidAtomError);
  Seq s = harm(0, 0);
  CHECK_THROWS_AS(validate_atom(Atom{s}), InvalidAtomError);
  Seq g = geom(0, 1, Rat(3, 2));  // |q| >= 1 diverges
  CHECK_THROWS_AS(validate_atom(Atom{g}), InvalidAtomError);
  CHECK_THROWS_AS(validate_atom(CantorPiece{0, -1, 0}), InvalidAtomError);
}

TEST_CASE("cantor piece width folds depth") {
  CantorPiece p{0, 1, 2};
  CHECK(p.width() == Rat(1, 9));
  CHECK(p.left_child().width() == Rat(1, 27));
  CHECK(p.right_child().offset == Rat(2, 27));
}
