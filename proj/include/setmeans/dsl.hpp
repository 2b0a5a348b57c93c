#ifndef SETMEANS_DSL_HPP
#define SETMEANS_DSL_HPP

#include <string>

#include "setmeans/means.hpp"
#include "setmeans/set.hpp"

namespace setmeans {

// Grammar:
//   set  := term ("|" term)*
//   term := atom | fn "(" set ["," rat]* ")" | "(" set ")"
//   atom := "[" rat "," rat "]" | "{" rat ("," rat)* "}"
//         | "seq(" rat ";" kind ";" rat ["," rat] [";" rat] [";" int] ")"
//         | "cantor(" rat "," rat ")"
//   kind := "harm" | "geom" | "harmgeom"
//   fn   := shift | scale | refl | cut_le | cut_ge | clip | delball
// Rationals are "p" or "p/q"; decimals are rejected.
// Throws SyntaxError (with position) and InvalidAtomError.
CanonicalSet parse_dsl(const std::string& text);

// Canonical printer; parse_dsl(format_set(s)) == s structurally.
std::string format_set(const CanonicalSet& s);

// "p/q (decimal)" for exact values, "[lo, hi] approx" for enclosures.
std::string format_value(const MeanValue& v);

}  // namespace setmeans

#endif
