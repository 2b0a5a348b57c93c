#include "setmeans/atom.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "setmeans/cantor.hpp"
#include "setmeans/errors.hpp"

namespace setmeans {

Rat Seq::term(long n) const {
  switch (kind) {
    case SeqKind::Harmonic:
      return limit + c / n;
    case SeqKind::Geometric:
      return limit + c * pow_rat(q, n);
    case SeqKind::HarmonicGeometric:
      return limit + c / n + c2 * pow_rat(q, n);
  }
  throw std::logic_error("bad SeqKind");
}

Rat Seq::dist(long n) const { return abs_of(term(n) - limit); }

Rat CantorPiece::width() const {
  return base_width / pow_rat(Rat(3), depth);
}

CantorPiece CantorPiece::left_child() const {
  return CantorPiece{offset, base_width, depth + 1};
}

CantorPiece CantorPiece::right_child() const {
  Rat w = width();
  return CantorPiece{offset + 2 * w / 3, base_width, depth + 1};
}

void validate_atom(const Atom& a) {
  struct V {
    void operator()(const FinitePoints& p) const {
      std::set<Rat> seen;
      for (const auto& x : p.points)
        if (!seen.insert(x).second)
          throw InvalidAtomError("duplicate point " + rat_to_string(x));
    }
    void operator()(const Interval& i) const {
      if (i.lo > i.hi) throw InvalidAtomError("interval with lo > hi");
    }
    void operator()(const Seq& s) const {
      if (s.c == 0) throw InvalidAtomError("sequence with c == 0");
      if (s.start < 1) throw InvalidAtomError("sequence start must be >= 1");
      if (s.kind != SeqKind::Harmonic) {
        if (!(s.q > 0 && s.q < 1))
          throw InvalidAtomError("geometric ratio must satisfy 0 < q < 1");
      }
      if (s.kind == SeqKind::HarmonicGeometric) {
        if (s.c2 == 0 || sign_of(s.c2) != sign_of(s.c))
          throw InvalidAtomError("harmonic-geometric coefficients must share a sign");
      }
    }
    void operator()(const CantorPiece& p) const {
      if (p.base_width <= 0) throw InvalidAtomError("cantor piece needs base_width > 0");
      if (p.depth < 0) throw InvalidAtomError("cantor piece needs depth >= 0");
    }
  };
  std::visit(V{}, a);
}

Rat atom_inf(const Atom& a) {
  struct V {
    Rat operator()(const FinitePoints& p) const { return p.points.front(); }
    Rat operator()(const Interval& i) const { return i.lo; }
    Rat operator()(const Seq& s) const {
      return s.side() > 0 ? s.limit : s.term(s.start);
    }
    Rat operator()(const CantorPiece& p) const { return p.offset; }
  };
  return std::visit(V{}, a);
}

Rat atom_sup(const Atom& a) {
  struct V {
    Rat operator()(const FinitePoints& p) const { return p.points.back(); }
    Rat operator()(const Interval& i) const { return i.hi; }
    Rat operator()(const Seq& s) const {
      return s.side() > 0 ? s.term(s.start) : s.limit;
    }
    Rat operator()(const CantorPiece& p) const { return p.sup(); }
  };
  return std::visit(V{}, a);
}

bool atom_member(const Atom& a, const Rat& x) {
  struct V {
    const Rat& x;
    bool operator()(const FinitePoints& p) const {
      return std::binary_search(p.points.begin(), p.points.end(), x);
    }
    bool operator()(const Interval& i) const { return i.lo <= x && x <= i.hi; }
    bool operator()(const Seq& s) const { return seq_index_of(s, x).has_value(); }
    bool operator()(const CantorPiece& p) const { return cantor_member(p, x); }
  };
  return std::visit(V{x}, a);
}

namespace {

// Integer bounds on log2 of a positive rational.
long ilog2_lower(const Rat& x) {
  return static_cast<long>(msb(rat_num(x))) - static_cast<long>(msb(rat_den(x))) - 1;
}
long ilog2_upper(const Rat& x) {
  return static_cast<long>(msb(rat_num(x))) - static_cast<long>(msb(rat_den(x))) + 1;
}

constexpr long kExactPowThreshold = 512;

}  // namespace

int cmp_scaled_pow(const Rat& coeff, const Rat& q, long n, const Rat& rhs) {
  if (rhs <= 0) return +1;
  if (n <= kExactPowThreshold) {
    Rat lhs = coeff * pow_rat(q, n);
    return lhs < rhs ? -1 : (lhs > rhs ? +1 : 0);
  }
  // log2(q) enclosed via q^64 to get sub-integer resolution.
  Rat q64 = pow_rat(q, 64);
  Rat log_q_lo(ilog2_lower(q64), 64), log_q_hi(ilog2_upper(q64), 64);
  Rat lhs_lo = Rat(ilog2_lower(coeff)) + n * log_q_lo;
  Rat lhs_hi = Rat(ilog2_upper(coeff)) + n * log_q_hi;
  Rat rhs_lo(ilog2_lower(rhs)), rhs_hi(ilog2_upper(rhs));
  if (lhs_hi < rhs_lo) return -1;
  if (lhs_lo > rhs_hi) return +1;
  Rat lhs = coeff * pow_rat(q, n);
  return lhs < rhs ? -1 : (lhs > rhs ? +1 : 0);
}

namespace {

// Sign of dist(n) - r without materializing large powers when avoidable.
int dist_cmp(const Seq& s, long n, const Rat& r) {
  switch (s.kind) {
    case SeqKind::Harmonic: {
      Rat d = abs_of(s.c) / n;
      return d < r ? -1 : (d > r ? +1 : 0);
    }
    case SeqKind::Geometric:
      return cmp_scaled_pow(abs_of(s.c), s.q, n, r);
    case SeqKind::HarmonicGeometric:
      return cmp_scaled_pow(abs_of(s.c2), s.q, n, r - abs_of(s.c) / n);
  }
  throw std::logic_error("bad SeqKind");
}

// Least n >= start with dist(n) < r (strict) or <= r. Requires r > 0 for
// existence (dist decreases to 0).
long least_n_with_dist_below(const Seq& s, const Rat& r, bool strict) {
  auto ok = [&](long n) {
    int c = dist_cmp(s, n, r);
    return strict ? c < 0 : c <= 0;
  };
  if (ok(s.start)) return s.start;
  long lo = s.start;  // known false
  if (s.kind == SeqKind::Harmonic) {
    Rat bound = abs_of(s.c) / r;  // need n > bound (strict) or n >= bound
    Int n0 = strict ? floor_rat(bound) + 1 : ceil_rat(bound);
    return static_cast<long>(std::max(Int(s.start), n0));
  }
  if (s.kind == SeqKind::HarmonicGeometric) {
    // dist > |c|/n, so no n at or below |c|/r can qualify.
    Int n0 = floor_rat(abs_of(s.c) / r);
    if (n0 > lo) lo = static_cast<long>(n0);
    if (ok(lo)) {
      // lo might already qualify after the jump; bisect down to start+?
      long a = s.start, b = lo;  // ok(b), !ok(a) not guaranteed; a may be < n0
      while (b - a > 1) {
        long m = a + (b - a) / 2;
        (ok(m) ? b : a) = m;
      }
      return ok(a) ? a : b;
    }
  }
  long hi = lo + 1;
  while (!ok(hi)) {
    lo = hi;
    if (hi > (std::numeric_limits<long>::max() >> 1))
      throw std::overflow_error("sequence index search overflow");
    hi *= 2;
  }
  while (hi - lo > 1) {
    long m = lo + (hi - lo) / 2;
    (ok(m) ? hi : lo) = m;
  }
  return hi;
}

}  // namespace

long seq_first_within(const Seq& s, const Rat& r) {
  return least_n_with_dist_below(s, r, /*strict=*/true);
}

SeqIndexRange seq_indices_in(const Seq& s, const Rat& a, bool a_strict,
                             const Rat& b, bool b_strict) {
  if (a > b || (a == b && (a_strict || b_strict))) return {};
  // Translate the value window into a distance window [dlo, dhi].
  Rat dlo, dhi;
  bool dlo_strict, dhi_strict;
  if (s.side() > 0) {
    dlo = a - s.limit;
    dlo_strict = a_strict;
    dhi = b - s.limit;
    dhi_strict = b_strict;
  } else {
    dlo = s.limit - b;
    dlo_strict = b_strict;
    dhi = s.limit - a;
    dhi_strict = a_strict;
  }
  if (dhi < 0 || (dhi == 0)) return {};  // dist(n) > 0 always
  long lo = least_n_with_dist_below(s, dhi, dhi_strict);
  if (dlo < 0 || (dlo == 0 && true)) {
    // Lower distance bound never binds: all of the tail qualifies.
    return {false, true, lo, 0};
  }
  // Greatest n with dist(n) >= dlo (resp. >): one before the first below.
  long first_below = least_n_with_dist_below(s, dlo, /*strict=*/!dlo_strict);
  long hi = first_below - 1;
  if (hi < lo) return {};
  return {false, false, lo, hi};
}

std::optional<long> seq_index_of(const Seq& s, const Rat& x) {
  Rat d = x - s.limit;
  if (sign_of(d) != s.side()) return std::nullopt;
  Rat a = abs_of(d);
  switch (s.kind) {
    case SeqKind::Harmonic: {
      Rat n = abs_of(s.c) / a;
      if (rat_den(n) != 1) return std::nullopt;
      Int ni = rat_num(n);
      if (ni < s.start || ni > std::numeric_limits<long>::max()) return std::nullopt;
      return static_cast<long>(ni);
    }
    case SeqKind::Geometric: {
      // a/|c| must equal q^n; q reduced means q^n = num^n/den^n reduced.
      Rat ratio = a / abs_of(s.c);
      Int qn = rat_num(s.q), qd = rat_den(s.q);
      Int rd = rat_den(ratio);
      long n = 0;
      while (rd > 1) {
        if (rd % qd != 0) return std::nullopt;
        rd /= qd;
        ++n;
      }
      if (n < s.start) return std::nullopt;
      Int expect = 1;
      for (long i = 0; i < n; ++i) expect *= qn;
      if (expect != rat_num(ratio)) return std::nullopt;
      return n;
    }
    case SeqKind::HarmonicGeometric: {
      long n = least_n_with_dist_below(s, a, /*strict=*/false);
      if (dist_cmp(s, n, a) == 0 && n >= s.start) return n;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace setmeans
