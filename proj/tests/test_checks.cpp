#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "setmeans/checks.hpp"
#include "setmeans/errors.hpp"
#include "setmeans/fixtures.hpp"

using namespace setmeans;

namespace {

Seq harm(Rat limit, Rat c, long start = 1) {
  Seq s;
  s.limit = limit;
  s.c = c;
  s.start = start;
  return s;
}

CanonicalSet canon(std::vector<Atom> raw) { return CanonicalSet::canonicalize(std::move(raw)); }

}  // namespace

TEST_CASE("internality grades") {
  PropertyReport r = internality_check("avg", make_intervals({{0, 1}, {2, 3}}));
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.detail == "strict-strong");
  // midrange on the witness: internal but not strong
  r = internality_check("midrange", canon({FinitePoints{{0}}, harm(1, -1)}));
  CHECK(r.verdict == Verdict::Holds);  // midrange only declares internality
  CHECK(r.detail.substr(0, 13) == "fails(strong)");
}

TEST_CASE("midrange witness reports exact values 1/2 vs liminf 1") {
  PropertyReport r =
      run_named_fixture("strong-internality", "midrange", "midrange-witness");
  CHECK(r.verdict == Verdict::Violated);
  bool saw_value = false, saw_liminf = false;
  for (const auto& [k, v] : r.values) {
    if (k == "value") saw_value = v == "1/2";
    if (k == "liminf") saw_liminf = v == "1";
  }
  CHECK(saw_value);
  CHECK(saw_liminf);
}

TEST_CASE("invariance check") {
  CanonicalSet h = make_intervals({{0, 1}, {3, 4}});
  CHECK(invariance_check("avg", h, Rat(-3, 2), Rat(1, 3)).verdict == Verdict::Holds);
  CHECK(invariance_check("mlis", h, 2, -7).verdict == Verdict::Holds);
}

TEST_CASE("weakened hypotheses gate to inapplicable with raw values intact") {
  PropertyReport r = monotonicity_check(
      "part-shift", "avg", {make_intervals({{0, 1}}), make_intervals({{0, 1}, {11, 12}})},
      1);
  CHECK(r.verdict == Verdict::Inapplicable);
  REQUIRE(r.values.size() >= 2);
  CHECK(r.values[0].second == "6");
  CHECK(r.values[1].second == "29/6");
}

TEST_CASE("base-monotonicity counterexample for avg") {
  PropertyReport r = run_named_fixture("base-monotone", "avg", "base-avg");
  CHECK(r.verdict == Verdict::Violated);
}

TEST_CASE("slice scan finds the jump on C u [1,2]") {
  ScanResult res = slice_scan("avg", slice_fixture_set(), 0, 2, Rat(1, 4), SliceSide::Le);
  REQUIRE(res.rows.size() == 9);
  const ScanRow* at1 = nullptr;
  for (const auto& row : res.rows)
    if (row.x == 1) at1 = &row;
  REQUIRE(at1);
  CHECK(at1->in_domain);
  CHECK(at1->value == Rat(1, 2));
  // beyond 1 the interval dominates: avg([1, 1+eps]) = 1 + eps/2
  bool jump_at_1 = false;
  for (const auto& [a, b] : res.jumps) jump_at_1 = jump_at_1 || (a == 1 || b == 1);
  CHECK(jump_at_1);
}

TEST_CASE("point continuity probes") {
  std::vector<Rat> eps{Rat(1, 2), Rat(1, 4), Rat(1, 8), Rat(1, 16)};
  ProbeResult r = point_cont_probe("mlis", three_seq_set(), 0, eps);
  CHECK(r.verdict == Verdict::Violated);
  CHECK(r.limit == Rat(3, 2));
  r = point_cont_probe("mlis", three_seq_set(), 1, eps);
  CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("cantor chain probe flags the oscillating corrected chain") {
  std::vector<CanonicalSet> chain;
  for (long i = 2; i <= 40; ++i) chain.push_back(interval_chain_element(i));
  ChainResult r = cantor_chain_probe("avg", chain, interval_chain_tail());
  CHECK(r.verdict == Verdict::Violated);
  CHECK(r.tail_value == Rat(1, 2));
}

TEST_CASE("independence of avg from countable sets") {
  CanonicalSet h = make_intervals({{0, 1}, {2, 3}});
  CanonicalSet v = canon({harm(5, 1), FinitePoints{{7}}});
  PropertyReport r = independence_check("avg", h, v, Ideal::CountableSets);
  CHECK(r.verdict == Verdict::Holds);
  r = independence_check("mlis", h, v, Ideal::CountableSets);
  CHECK(r.verdict == Verdict::Violated);  // limsup moves to 5
}

TEST_CASE("self-shift identity") {
  CanonicalSet h = make_intervals({{0, 1}});
  PropertyReport r = shift_invariance_check("self", "avg", h, h, 5);
  CHECK(r.verdict == Verdict::Holds);
  r = shift_invariance_check("self", "avg", h, h, Rat(1, 2));  // copies interleave
  CHECK(r.verdict == Verdict::Inapplicable);
}

TEST_CASE("condensed check") {
  CanonicalSet h = canon({Interval{0, 1}, FinitePoints{{5}}, harm(3, 1)});
  CHECK(condensed_check("avg", h).verdict == Verdict::Holds);
  CHECK(condensed_check("midrange", h).verdict == Verdict::Violated);
}

TEST_CASE("root finder on [0,1] is exactly 1/2 in both modes") {
  CanonicalSet h = make_intervals({{0, 1}});
  for (const char* mode : {"mean-value", "fixed-point"}) {
    RootResult r = slice_mean_root("avg", h, mode, Rat(1, 1000000000));
    CHECK(r.x == Rat(1, 2));
    CHECK(r.residual == 0);
  }
  CHECK_THROWS_AS(slice_mean_root("avg", canon({FinitePoints{{1, 2}}}), "mean-value",
                                  Rat(1, 1000)),
                  NoSignChangeError);
}

TEST_CASE("diff_finite") {
  CanonicalSet h = canon({Interval{0, 1}, FinitePoints{{3, 4}}, harm(6, 1)});
  auto r = diff_finite(h, {Rat(3), Rat(13, 2)});  // 13/2 = 6 + 1/2, a seq term
  REQUIRE(r);
  CHECK(!r->member(3));
  CHECK(r->member(4));
  CHECK(!r->member(Rat(13, 2)));
  CHECK(r->member(7));
  CHECK(!diff_finite(h, {Rat(1, 2)}).has_value());  // interior interval point
}

TEST_CASE("domain closure report covers items 1-7") {
  auto rep = dom_closure_report("avg");
  CHECK(rep.size() >= 9);
  int unsupported = 0;
  for (const auto& [item, status] : rep) {
    if (status.substr(0, 20) == "unsupported-by-class")
      ++unsupported;
    else
      CHECK(status.substr(0, 10) != "not closed");
  }
  CHECK(unsupported == 2);
}
