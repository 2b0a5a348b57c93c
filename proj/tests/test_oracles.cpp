#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "setmeans/checks.hpp"
#include "setmeans/generator.hpp"
#include "setmeans/means.hpp"

using namespace setmeans;

namespace {

double to_d(const Rat& r) {
  return static_cast<double>(rat_num(r)) / static_cast<double>(rat_den(r));
}

CanonicalSet interval_union(unsigned long long seed) {
  GenProfile p;
  p.intervals = 2 + seed % 2;
  return gen_random_set(seed, p);
}

}  // namespace

TEST_CASE("avg agrees with a midpoint Riemann oracle on 100 interval unions") {
  for (unsigned long long seed = 1; seed <= 100; ++seed) {
    CanonicalSet h = interval_union(seed);
    double total_len = 0;
    for (const auto& a : h.atoms()) {
      const auto& iv = std::get<Interval>(a);
      total_len += to_d(iv.hi) - to_d(iv.lo);
    }
    const long samples = 1000000;
    double mass = 0, moment = 0;
    for (const auto& a : h.atoms()) {
      const auto& iv = std::get<Interval>(a);
      double lo = to_d(iv.lo), hi = to_d(iv.hi);
      long n = std::max(1L, static_cast<long>(samples * (hi - lo) / total_len));
      double step = (hi - lo) / n;
      for (long i = 0; i < n; ++i) moment += (lo + (i + 0.5) * step) * step;
      mass += hi - lo;
    }
    double oracle = moment / mass;
    MeanValue v = avg(h);
    REQUIRE(v.exact);
    CHECK(std::abs(to_d(v.value) - oracle) <= 1e-9);
  }
}

TEST_CASE("membership agrees with definitional membership, 1000 probes per set") {
  std::mt19937_64 rng(2024);
  for (unsigned long long seed = 1; seed <= 100; ++seed) {
    CanonicalSet h = interval_union(seed);
    SetBounds b = bounds(h);
    std::uniform_int_distribution<long> num(0, 4000), den(1, 17);
    for (int i = 0; i < 1000; ++i) {
      Rat x = b.inf - 1 + (b.sup - b.inf + 2) * Rat(num(rng), 4000) + Rat(1, 4000 * den(rng));
      bool definitional = false;
      for (const auto& a : h.atoms()) {
        const auto& iv = std::get<Interval>(a);
        definitional = definitional || (iv.lo <= x && x <= iv.hi);
      }
      CHECK(h.member(x) == definitional);
    }
  }
}

TEST_CASE("mean-value root on [0,1] u [2,4] matches a grid-scan oracle") {
  CanonicalSet h = CanonicalSet::canonicalize({Interval{0, 1}, Interval{2, 4}});
  Rat tol(1, 2000000000);  // 5e-10 < 1e-9
  RootResult r = slice_mean_root("avg", h, "mean-value", tol);
  CHECK(r.bracket_hi - r.bracket_lo <= Rat(1, 1000000000));

  // independent oracle: residual g(x) = (avg(H<=x) + avg(H>=x))/2 - avg(H),
  // located by repeated 8-way grid refinement with exact sign evaluation
  Rat target = avg(h).value;
  auto residual = [&](const Rat& x) {
    return (avg(slice(h, x, SliceSide::Le)).value +
            avg(slice(h, x, SliceSide::Ge)).value) /
               2 -
           target;
  };
  Rat lo(2), hi(4);  // g < 0 across the gap, g > 0 near sup
  REQUIRE(residual(lo) < 0);
  REQUIRE(residual(hi) > 0);
  while (hi - lo > Rat(1, 4000000000)) {
    Rat w = (hi - lo) / 8;
    Rat a = lo;
    for (int i = 1; i <= 8; ++i) {
      Rat b = i == 8 ? hi : lo + w * i;
      if (residual(a) <= 0 && residual(b) >= 0) {
        lo = a;
        hi = b;
        break;
      }
      a = b;
    }
  }
  // the two methods agree to within the combined bracket widths
  CHECK(abs_of(r.x - (lo + hi) / 2) <= Rat(2, 1000000000));
}
