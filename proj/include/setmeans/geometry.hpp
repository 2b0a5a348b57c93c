#ifndef SETMEANS_GEOMETRY_HPP
#define SETMEANS_GEOMETRY_HPP

#include "setmeans/set.hpp"

namespace setmeans {

// Hausdorff dimension restricted to the three values that occur in the
// representable class: 0 < log2/log3 < 1.
enum class Dim { D0, DC, D1 };

// Measure and first moment of the top-dimension part. Cantor weights are in
// units of w0^s (w0 the reference width); the normalization cancels in every
// ratio. When exact, `measure`/`moment` are the values and the bound pairs
// coincide with them.
struct MeasureResult {
  Dim dim = Dim::D0;
  bool exact = true;
  Rat measure, moment;
  Rat measure_lo, measure_hi;
  Rat moment_lo, moment_hi;
};

// Throws EmptySetError, NotAnSSetError (countably infinite top part).
MeasureResult geometry(const CanonicalSet& a);

}  // namespace setmeans

#endif
