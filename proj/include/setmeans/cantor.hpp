#ifndef SETMEANS_CANTOR_HPP
#define SETMEANS_CANTOR_HPP

#include <vector>

#include "setmeans/atom.hpp"

namespace setmeans {

inline constexpr long kCantorCutDepthLimit = 64;

// Exact membership of a rational in the middle-thirds Cantor set on [0,1].
// Terminates because the ternary digit stream of a rational is eventually
// periodic (cycle detection on the remainder).
bool cantor01_member(const Rat& y);

bool cantor_member(const CantorPiece& p, const Rat& x);

// Intersection of a piece with the window {x : a (<|<=) x (<|<=) b} by
// recursive ternary descent. Window ends may be unbounded (has_a/has_b).
// Pieces whose intersection degenerates to a single point are reported in
// `points`. Throws ApproximationDepthError when a cut point fails to reach
// a gap within the depth limit.
struct CantorCut {
  std::vector<CantorPiece> pieces;
  std::vector<Rat> points;
};

CantorCut cantor_cut(const CantorPiece& p, bool has_a, const Rat& a, bool a_strict,
                     bool has_b, const Rat& b, bool b_strict,
                     long depth_limit = kCantorCutDepthLimit);

// Nesting relation between two pieces with overlapping spans.
enum class CantorRelation { Disjoint, Equal, FirstContainsSecond, SecondContainsFirst, Unsupported };

CantorRelation cantor_relation(const CantorPiece& a, const CantorPiece& b);

// Exact distance from x to the (closed) piece; 0 iff member.
// Requires x not in the piece's residual ambiguity: always exact since
// membership itself is decidable.
Rat cantor_distance(const CantorPiece& p, const Rat& x);

// Does the piece meet the closed interval [a, b]?
bool cantor_meets_interval(const CantorPiece& p, const Rat& a, const Rat& b);

}  // namespace setmeans

#endif
