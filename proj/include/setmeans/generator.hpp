#ifndef SETMEANS_GENERATOR_HPP
#define SETMEANS_GENERATOR_HPP

#include "setmeans/set.hpp"

namespace setmeans {

// Atom counts by kind plus coordinate shaping. Atoms are laid out in
// separated slots so the result is canonical by construction and free of
// unsupported overlaps.
struct GenProfile {
  int points = 0;     // number of stray finite points
  int intervals = 0;
  int seqs = 0;
  int cantors = 0;
  long den_bound = 12;           // denominators drawn from [1, den_bound]
  Rat origin = 0;                // left edge of the layout
  bool shared_cantor_base = true;  // widths ref/3^k => exact geometry
};

CanonicalSet gen_random_set(unsigned long long seed, const GenProfile& profile);

}  // namespace setmeans

#endif
