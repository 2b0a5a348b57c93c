#include "setmeans/geometry.hpp"

#include <cmath>

#include "setmeans/errors.hpp"

namespace setmeans {

namespace {

// width = ref / 3^k for a nonnegative integer k?
std::optional<long> power_of_three_ratio(const Rat& ref, const Rat& width) {
  Rat r = ref / width;
  long k = 0;
  while (r > 1) {
    r /= 3;
    ++k;
    if (k > 4096) return std::nullopt;
  }
  if (r == 1) return k;
  return std::nullopt;
}

// Rational enclosure of x^s, s = log2/log3, for 0 < x <= 1.
std::pair<Rat, Rat> pow_s_bounds(const Rat& x) {
  static const double s = std::log(2.0) / std::log(3.0);
  double v = std::pow(static_cast<double>(x), s);
  double lo = v * (1 - 1e-9), hi = v * (1 + 1e-9);
  auto to_rat = [](double d) {
    long long scaled = static_cast<long long>(d * 1e15);
    return Rat(Int(scaled), Int(1000000000000000LL));
  };
  return {to_rat(lo), to_rat(hi)};
}

}  // namespace

MeasureResult geometry(const CanonicalSet& a) {
  if (a.empty()) throw EmptySetError();
  Dim dim = Dim::D0;
  for (const auto& atom : a.atoms()) {
    if (std::holds_alternative<Interval>(atom)) dim = Dim::D1;
    if (std::holds_alternative<CantorPiece>(atom) && dim != Dim::D1) dim = Dim::DC;
  }

  MeasureResult out;
  out.dim = dim;
  out.measure = out.moment = 0;

  if (dim == Dim::D1) {
    for (const auto& atom : a.atoms()) {
      if (const auto* iv = std::get_if<Interval>(&atom)) {
        out.measure += iv->hi - iv->lo;
        out.moment += (iv->hi * iv->hi - iv->lo * iv->lo) / 2;
      }
    }
    out.measure_lo = out.measure_hi = out.measure;
    out.moment_lo = out.moment_hi = out.moment;
    return out;
  }

  if (dim == Dim::DC) {
    // Reference width: the widest piece. Exact when every width is ref/3^k.
    Rat ref = 0;
    for (const auto& atom : a.atoms())
      if (const auto* cp = std::get_if<CantorPiece>(&atom))
        ref = std::max(ref, cp->width());
    bool exact = true;
    Rat mlo = 0, mhi = 0, molo = 0, mohi = 0;
    for (const auto& atom : a.atoms()) {
      const auto* cp = std::get_if<CantorPiece>(&atom);
      if (!cp) continue;
      Rat w = cp->width();
      Rat center = cp->offset + w / 2;
      auto k = power_of_three_ratio(ref, w);
      if (k) {
        Rat weight = 1 / pow_rat(Rat(2), *k);
        out.measure += weight;
        out.moment += weight * center;
        mlo += weight;
        mhi += weight;
        molo += weight * center;
        mohi += weight * center;
      } else {
        exact = false;
        auto [wl, wh] = pow_s_bounds(w / ref);
        mlo += wl;
        mhi += wh;
        // center may be negative: pick the pessimistic weight per sign.
        if (center >= 0) {
          molo += wl * center;
          mohi += wh * center;
        } else {
          molo += wh * center;
          mohi += wl * center;
        }
      }
    }
    out.exact = exact;
    if (exact) {
      out.measure_lo = out.measure_hi = out.measure;
      out.moment_lo = out.moment_hi = out.moment;
    } else {
      out.measure = out.moment = 0;  // not meaningful
      out.measure_lo = mlo;
      out.measure_hi = mhi;
      out.moment_lo = molo;
      out.moment_hi = mohi;
    }
    return out;
  }

  // D0: counting measure; infinite iff any Seq atom survives at top level.
  for (const auto& atom : a.atoms()) {
    if (std::holds_alternative<Seq>(atom))
      throw NotAnSSetError("countably infinite set has no finite positive measure");
    if (const auto* p = std::get_if<FinitePoints>(&atom)) {
      out.measure += static_cast<long>(p->points.size());
      for (const auto& x : p->points) out.moment += x;
    }
  }
  out.measure_lo = out.measure_hi = out.measure;
  out.moment_lo = out.moment_hi = out.moment;
  return out;
}

}  // namespace setmeans
