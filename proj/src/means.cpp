#include "setmeans/means.hpp"

#include <algorithm>

#include "setmeans/errors.hpp"
#include "setmeans/geometry.hpp"

namespace setmeans {

namespace {

DomainVerdict avg_dom(const CanonicalSet& h) {
  if (h.empty()) return {false, "EmptySet"};
  try {
    geometry(h);
  } catch (const NotAnSSetError&) {
    return {false, "NotAnSSet"};
  }
  return {};
}

MeanValue avg_eval(const CanonicalSet& h) {
  MeasureResult g = geometry(h);
  MeanValue out;
  if (g.exact) {
    out.value = g.moment / g.measure;
    out.lo = out.hi = out.value;
    return out;
  }
  out.exact = false;
  Rat q1 = g.moment_lo / g.measure_lo, q2 = g.moment_lo / g.measure_hi;
  Rat q3 = g.moment_hi / g.measure_lo, q4 = g.moment_hi / g.measure_hi;
  out.lo = std::min(std::min(q1, q2), std::min(q3, q4));
  out.hi = std::max(std::max(q1, q2), std::max(q3, q4));
  out.value = (out.lo + out.hi) / 2;
  return out;
}

DomainVerdict mlis_dom(const CanonicalSet& h) {
  if (h.empty()) return {false, "EmptySet"};
  if (derived_once(h).empty()) return {false, "FiniteSetOutOfDomain"};
  return {};
}

DomainVerdict macc_dom(const CanonicalSet& h) {
  if (h.empty()) return {false, "EmptySet"};
  for (const auto& a : h.atoms())
    if (std::holds_alternative<Interval>(a) || std::holds_alternative<CantorPiece>(a))
      return {false, "PerfectPartOutOfDomain"};
  return {};
}

DomainVerdict nonempty_dom(const CanonicalSet& h) {
  if (h.empty()) return {false, "EmptySet"};
  return {};
}

MeanValue exact_value(const Rat& v) { return {true, v, v, v}; }

Rat arithmetic_mean(const CanonicalSet& h) {
  Rat sum = 0;
  long n = 0;
  for (const auto& a : h.atoms()) {
    const auto& p = std::get<FinitePoints>(a);
    for (const auto& x : p.points) sum += x;
    n += static_cast<long>(p.points.size());
  }
  return sum / n;
}

void require(const DomainVerdict& v) {
  if (!v.in_domain) throw OutOfDomainError(v.reason);
}

}  // namespace

MeanValue avg(const CanonicalSet& h) {
  require(avg_dom(h));
  return avg_eval(h);
}

Rat mlis(const CanonicalSet& h) {
  require(mlis_dom(h));
  SetBounds b = bounds(h);
  return (*b.liminf + *b.limsup) / 2;
}

Rat macc_fds(const CanonicalSet& h) {
  require(macc_dom(h));
  DerivedResult d = derived_chain(h);
  if (!d.rank) throw OutOfDomainError("PerfectPartOutOfDomain");
  return arithmetic_mean(d.final_set);
}

Rat midrange(const CanonicalSet& h) {
  require(nonempty_dom(h));
  SetBounds b = bounds(h);
  return (b.inf + b.sup) / 2;
}

const std::vector<MeanSpec>& mean_registry() {
  static const std::vector<MeanSpec> regs = {
      {"avg", avg_dom, avg_eval,
       {"internality", "strict-strong-internality", "affine-equivariance",
        "point-symmetry", "disjoint-monotone", "part-shift-monotone",
        "union-monotone", "d-monotone", "part-shift-invariance", "condensed"}},
      {"mlis", mlis_dom, [](const CanonicalSet& h) { return exact_value(mlis(h)); },
       {"internality", "strict-strong-internality", "affine-equivariance",
        "point-symmetry", "base-monotone", "convexity"}},
      {"macc_fds", macc_dom, [](const CanonicalSet& h) { return exact_value(macc_fds(h)); },
       {"internality", "affine-equivariance", "point-symmetry"}},
      {"midrange", nonempty_dom,
       [](const CanonicalSet& h) { return exact_value(midrange(h)); },
       {"internality", "affine-equivariance", "point-symmetry"}},
  };
  return regs;
}

const MeanSpec& mean_spec(const std::string& id) {
  for (const auto& m : mean_registry())
    if (m.id == id) return m;
  throw UnknownMeanError(id);
}

MeanResult mean_eval(const std::string& id, const CanonicalSet& h) {
  const MeanSpec& m = mean_spec(id);
  MeanResult out;
  out.verdict = m.dom(h);
  if (out.verdict.in_domain) out.value = m.eval(h);
  return out;
}

}  // namespace setmeans
