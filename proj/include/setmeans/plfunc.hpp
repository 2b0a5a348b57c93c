#ifndef SETMEANS_PLFUNC_HPP
#define SETMEANS_PLFUNC_HPP

#include <vector>

#include "setmeans/set.hpp"

namespace setmeans {

// Continuous piecewise-linear function: linear between consecutive
// breakpoints, constant beyond both ends.
struct PLFunc {
  std::vector<Rat> breakpoints;  // sorted strictly increasing, nonempty
  std::vector<Rat> values;       // same length

  Rat eval(const Rat& x) const;
};

void validate_plfunc(const PLFunc& f);

// Exact sup-norm distance, attained at a breakpoint of the union knot set.
Rat sup_distance(const PLFunc& f, const PLFunc& g);

// Image f(a). Throws NonPLBreakOnCantorError when a breakpoint inside a
// Cantor piece fails to land in a ternary gap.
CanonicalSet apply_pl(const CanonicalSet& a, const PLFunc& f);

}  // namespace setmeans

#endif
