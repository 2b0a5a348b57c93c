#ifndef SETMEANS_ATOM_HPP
#define SETMEANS_ATOM_HPP

#include <optional>
#include <variant>
#include <vector>

#include "setmeans/rat.hpp"

namespace setmeans {

// Sorted distinct rationals.
struct FinitePoints {
  std::vector<Rat> points;
  bool operator==(const FinitePoints&) const = default;
};

// Closed interval, lo < hi. Degenerate intervals normalize to FinitePoints.
struct Interval {
  Rat lo, hi;
  bool operator==(const Interval&) const = default;
};

enum class SeqKind { Harmonic, Geometric, HarmonicGeometric };

// A strictly monotone sequence of isolated points converging one-sidedly to
// `limit`. The limit itself is not a member.
//   Harmonic:          limit + c/n          (n >= start)
//   Geometric:         limit + c*q^n
//   HarmonicGeometric: limit + c/n + c2*q^n (c, c2 same sign)
struct Seq {
  Rat limit;
  SeqKind kind = SeqKind::Harmonic;
  Rat c;
  Rat c2;
  Rat q;
  long start = 1;
  bool operator==(const Seq&) const = default;

  // +1 when terms approach the limit from above, -1 from below.
  int side() const { return sign_of(c); }
  Rat term(long n) const;
  // |term(n) - limit|, strictly decreasing in n.
  Rat dist(long n) const;
};

// offset + (base_width * 3^-depth) * C, with C the middle-thirds Cantor set
// on [0,1]. Canonical form keeps depth folded into base_width (depth == 0).
struct CantorPiece {
  Rat offset;
  Rat base_width;
  long depth = 0;

  Rat width() const;
  Rat sup() const { return offset + width(); }
  CantorPiece left_child() const;
  CantorPiece right_child() const;
  bool operator==(const CantorPiece& o) const {
    return offset == o.offset && width() == o.width();
  }
};

using Atom = std::variant<FinitePoints, Interval, Seq, CantorPiece>;

// Throws InvalidAtomError when an invariant fails.
void validate_atom(const Atom& a);

Rat atom_inf(const Atom& a);
Rat atom_sup(const Atom& a);
bool atom_member(const Atom& a, const Rat& x);

// --- Seq index machinery ------------------------------------------------

// Maximal index range {n : a (<|<=) term(n) (<|<=) b}. Because terms are
// strictly monotone, the range is contiguous; `tail` marks an infinite
// upper end (every n >= lo qualifies).
struct SeqIndexRange {
  bool empty = true;
  bool tail = false;
  long lo = 0, hi = 0;
};

SeqIndexRange seq_indices_in(const Seq& s, const Rat& a, bool a_strict,
                             const Rat& b, bool b_strict);

// Exact solve of term(n) == x.
std::optional<long> seq_index_of(const Seq& s, const Rat& x);

// Least n >= start with dist(n) < r (r > 0; always exists).
long seq_first_within(const Seq& s, const Rat& r);

// Sign of coeff*q^n - rhs for coeff > 0, 0 < q < 1. Avoids materializing
// q^n for large n when log2 bounds already decide the comparison.
int cmp_scaled_pow(const Rat& coeff, const Rat& q, long n, const Rat& rhs);

}  // namespace setmeans

#endif
