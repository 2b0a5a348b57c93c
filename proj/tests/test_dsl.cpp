#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "setmeans/dsl.hpp"
#include "setmeans/errors.hpp"
#include "setmeans/generator.hpp"

using namespace setmeans;

TEST_CASE("atoms parse") {
  CanonicalSet s = parse_dsl("[0,1]|[11,12]");
  REQUIRE(s.atoms().size() == 2);
  CHECK(parse_dsl("{}").empty());
  CHECK(parse_dsl("{1/2, 3}").member(Rat(1, 2)));
  CHECK(parse_dsl("seq(0;harm;1)").member(Rat(1, 9)));
  CHECK(parse_dsl("seq(1;geom;1;1/2)").member(Rat(3, 2)));
  CHECK(parse_dsl("seq(5;harmgeom;1,1;1/2)").member(Rat(13, 2)));
  CHECK(parse_dsl("cantor(0,1)").member(Rat(1, 4)));
  CHECK(parse_dsl("[2,2]") == parse_dsl("{2}"));  // degenerate interval
}

TEST_CASE("functions parse and apply") {
  CHECK(parse_dsl("shift([2,3], 1)") == parse_dsl("[3,4]"));
  CHECK(parse_dsl("scale([1,2], -2)") == parse_dsl("[-4,-2]"));
  CHECK(parse_dsl("refl(cantor(0,1), 1/2)") == parse_dsl("cantor(0,1)"));
  CHECK(parse_dsl("cut_le(cantor(0,1)|[1,2], 1)") == parse_dsl("cantor(0,1)|{1}"));
  CHECK(parse_dsl("cut_ge([0,1], 1/2)") == parse_dsl("[1/2,1]"));
  CHECK(parse_dsl("clip([0,2], 1, 3)") == parse_dsl("[1,2]"));
  CHECK(parse_dsl("delball([0,1], 1/2, 1/4)") == parse_dsl("[0,1/4]|[3/4,1]"));
  CHECK(parse_dsl("( [0,1] | [2,3] )") == parse_dsl("[0,1]|[2,3]"));
}

TEST_CASE("syntax errors carry a position") {
  for (const char* bad : {"[0,1", "{1,", "0.5", "seq(0;harm)", "frob([0,1])",
                          "[0,1] junk", "", "[1/0,2]"}) {
    try {
      parse_dsl(bad);
      FAIL_CHECK("expected a parse error for: " << bad);
    } catch (const SyntaxError& e) {
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    } catch (const InvalidAtomError&) {
      // acceptable for structurally valid but invariant-breaking atoms
    } catch (const std::invalid_argument&) {
    }
  }
}

TEST_CASE("decimals are rejected") {
  CHECK_THROWS_AS(parse_dsl("[0.5,1]"), SyntaxError);
}

TEST_CASE("round-trip on 500 generated sets") {
  for (unsigned long long seed = 1; seed <= 500; ++seed) {
    GenProfile p;
    p.points = 1 + seed % 2;
    p.intervals = seed % 3;
    p.seqs = seed % 4 ? 1 : 2;
    p.cantors = seed % 5 ? 0 : 2;
    CanonicalSet s = gen_random_set(seed, p);
    CanonicalSet back = parse_dsl(format_set(s));
    CHECK(back == s);
  }
}

TEST_CASE("format_value") {
  MeanValue exact{true, Rat(29, 6), Rat(29, 6), Rat(29, 6)};
  CHECK(format_value(exact) == "29/6 (4.83333333333)");
  MeanValue six{true, 6, 6, 6};
  CHECK(format_value(six) == "6 (6.00000000000)");
  MeanValue approx{false, {}, Rat(1, 3), Rat(2, 5)};
  CHECK(format_value(approx) == "[1/3, 2/5] approx");
}

TEST_CASE("format_set is canonical") {
  CHECK(format_set(parse_dsl("[1,2]|[0,1]")) == "[0,2]");
  CHECK(format_set(CanonicalSet{}) == "{}");
  CHECK(format_set(parse_dsl("seq(0;harm;1;3)")) == "seq(0;harm;1;3)");
}
