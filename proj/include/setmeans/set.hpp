#ifndef SETMEANS_SET_HPP
#define SETMEANS_SET_HPP

#include <optional>
#include <vector>

#include "setmeans/atom.hpp"

namespace setmeans {

// Open interval (center - radius, center + radius).
struct Ball {
  Rat center;
  Rat radius;
};

enum class SliceSide { Le, Ge };

// Bounded subset of the reals in normal form: atoms pairwise disjoint up to
// shared closed endpoints, sorted by infimum. The empty set has no atoms.
class CanonicalSet {
 public:
  CanonicalSet() = default;

  // Builds the normal form of a raw union of atoms. Throws InvalidAtomError,
  // UnsupportedOverlapError or ApproximationDepthError.
  static CanonicalSet canonicalize(std::vector<Atom> raw);

  // Wraps atoms already known to satisfy the invariants (sorts only).
  static CanonicalSet from_canonical_atoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  bool member(const Rat& x) const;

  bool operator==(const CanonicalSet&) const = default;

 private:
  std::vector<Atom> atoms_;
};

struct SetBounds {
  Rat inf, sup;
  std::optional<Rat> liminf, limsup;  // absent for finite sets
};

enum class CardTagKind { Finite, CountablyInfinite, Uncountable };
struct CardTag {
  CardTagKind kind = CardTagKind::Finite;
  long count = 0;  // exact when finite
};

CanonicalSet set_union(const CanonicalSet& a, const CanonicalSet& b);
CanonicalSet intersect_interval(const CanonicalSet& a, const Rat& lo, const Rat& hi);
CanonicalSet subtract_ball(const CanonicalSet& a, const Ball& b);
// alpha == 0 collapses to the single point {beta} (flagged degenerate by the caller).
CanonicalSet affine_map(const CanonicalSet& a, const Rat& alpha, const Rat& beta);
CanonicalSet slice(const CanonicalSet& a, const Rat& x, SliceSide side);

// Throws EmptySetError.
SetBounds bounds(const CanonicalSet& a);

// One application of the derived-set (accumulation point) operator.
CanonicalSet derived_once(const CanonicalSet& a);

struct DerivedResult {
  CanonicalSet final_set;     // last nonempty H^(l), or the perfect fixpoint
  std::optional<long> rank;   // least l with H^(l+1) empty; absent when perfect
};
DerivedResult derived_chain(const CanonicalSet& a);

struct StructurePoints {
  CanonicalSet closure;
  CanonicalSet isolated;
  CardTag isolated_card;
  CanonicalSet condensation;
};
StructurePoints structure_points(const CanonicalSet& a);

// Do the two sets share at least one point? Conservative: returns true when
// disjointness cannot be certified exactly.
bool intersects(const CanonicalSet& a, const CanonicalSet& b);

// True when every point of a belongs to b (decided atom-wise; conservative
// `false` when containment cannot be certified).
bool subset_of(const CanonicalSet& a, const CanonicalSet& b);

}  // namespace setmeans

#endif
