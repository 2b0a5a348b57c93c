#include "setmeans/plfunc.hpp"

#include <algorithm>

#include "setmeans/cantor.hpp"
#include "setmeans/errors.hpp"

namespace setmeans {

void validate_plfunc(const PLFunc& f) {
  if (f.breakpoints.empty() || f.breakpoints.size() != f.values.size())
    throw InvalidAtomError("plfunc needs matching nonempty breakpoint/value lists");
  for (std::size_t i = 1; i < f.breakpoints.size(); ++i)
    if (!(f.breakpoints[i - 1] < f.breakpoints[i]))
      throw InvalidAtomError("plfunc breakpoints must be strictly increasing");
}

Rat PLFunc::eval(const Rat& x) const {
  if (x <= breakpoints.front()) return values.front();
  if (x >= breakpoints.back()) return values.back();
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breakpoints.begin());  // b[i-1] < x < b[i]
  const Rat &x0 = breakpoints[i - 1], &x1 = breakpoints[i];
  const Rat &y0 = values[i - 1], &y1 = values[i];
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

Rat sup_distance(const PLFunc& f, const PLFunc& g) {
  std::vector<Rat> knots = f.breakpoints;
  knots.insert(knots.end(), g.breakpoints.begin(), g.breakpoints.end());
  std::sort(knots.begin(), knots.end());
  Rat best = 0;
  for (const auto& x : knots) best = std::max(best, abs_of(f.eval(x) - g.eval(x)));
  return best;
}

namespace {

struct AffinePiece {
  Rat a, b;  // y = a*x + b
};

// The affine piece of f on the closed segment [x0, x1] assuming no
// breakpoint lies strictly inside.
AffinePiece piece_on(const PLFunc& f, const Rat& x0, const Rat& x1) {
  Rat y0 = f.eval(x0), y1 = f.eval(x1);
  if (x0 == x1) return {0, y0};
  Rat a = (y1 - y0) / (x1 - x0);
  return {a, y0 - a * x0};
}

// Affine piece valid on a one-sided neighborhood of L (side +1: just above),
// plus the nearest breakpoint strictly on that side, if any.
std::pair<AffinePiece, std::optional<Rat>> piece_one_sided(const PLFunc& f, const Rat& L,
                                                           int side) {
  std::optional<Rat> boundary;
  if (side > 0) {
    for (const auto& b : f.breakpoints)
      if (b > L) { boundary = b; break; }
    Rat probe = boundary ? Rat((L + *boundary) / 2) : Rat(L + 1);
    return {piece_on(f, L, probe), boundary};
  }
  for (auto it = f.breakpoints.rbegin(); it != f.breakpoints.rend(); ++it)
    if (*it < L) { boundary = *it; break; }
  Rat probe = boundary ? Rat((L + *boundary) / 2) : Rat(L - 1);
  return {piece_on(f, probe, L), boundary};
}

void map_interval(const PLFunc& f, const Interval& iv, std::vector<Atom>& out) {
  std::vector<Rat> cuts{iv.lo};
  for (const auto& b : f.breakpoints)
    if (b > iv.lo && b < iv.hi) cuts.push_back(b);
  cuts.push_back(iv.hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rat y0 = f.eval(cuts[i]), y1 = f.eval(cuts[i + 1]);
    if (y0 == y1)
      out.emplace_back(FinitePoints{{y0}});
    else
      out.emplace_back(Interval{std::min(y0, y1), std::max(y0, y1)});
  }
}

void map_seq(const PLFunc& f, const Seq& s, std::vector<Atom>& out) {
  auto [pc, boundary] = piece_one_sided(f, s.limit, s.side());
  long tail_start = s.start;
  if (boundary) {
    Rat r = abs_of(*boundary - s.limit);
    tail_start = seq_first_within(s, r);
    if (tail_start - s.start > 100000)
      throw UnsupportedOverlapError("sequence head too large under plfunc");
    std::vector<Rat> head;
    for (long n = s.start; n < tail_start; ++n) head.push_back(f.eval(s.term(n)));
    std::sort(head.begin(), head.end());
    head.erase(std::unique(head.begin(), head.end()), head.end());
    if (!head.empty()) out.emplace_back(FinitePoints{std::move(head)});
  }
  if (pc.a == 0) {
    out.emplace_back(FinitePoints{{pc.b}});
    return;
  }
  Seq img = s;
  img.limit = pc.a * s.limit + pc.b;
  img.c = pc.a * s.c;
  img.c2 = pc.a * s.c2;
  img.start = tail_start;
  out.emplace_back(img);
}

void map_cantor(const PLFunc& f, const CantorPiece& cp, std::vector<Atom>& out) {
  std::vector<CantorPiece> pieces{CantorPiece{cp.offset, cp.width(), 0}};
  std::vector<Rat> stray;
  for (const auto& b : f.breakpoints) {
    std::vector<CantorPiece> next;
    for (const auto& p : pieces) {
      if (b <= p.offset || b >= p.sup()) {
        next.push_back(p);
        continue;
      }
      try {
        CantorCut left = cantor_cut(p, false, {}, false, true, b, false);
        CantorCut right = cantor_cut(p, true, b, false, false, {}, false);
        for (auto& q : left.pieces) next.push_back(q);
        for (auto& q : right.pieces) next.push_back(q);
        for (auto& x : left.points) stray.push_back(x);
        for (auto& x : right.points) stray.push_back(x);
      } catch (const ApproximationDepthError&) {
        throw NonPLBreakOnCantorError("breakpoint " + rat_to_string(b) +
                                      " is not a ternary gap point of the cantor piece");
      }
    }
    pieces = std::move(next);
  }
  for (const auto& p : pieces) {
    AffinePiece pc = piece_on(f, p.offset, p.sup());
    if (pc.a == 0) {
      out.emplace_back(FinitePoints{{pc.b}});
    } else {
      Rat w = p.width();
      Rat off = pc.a > 0 ? Rat(pc.a * p.offset + pc.b) : Rat(pc.a * p.offset + pc.b + pc.a * w);
      out.emplace_back(CantorPiece{off, abs_of(pc.a) * w, 0});
    }
  }
  for (auto& x : stray) out.emplace_back(FinitePoints{{f.eval(x)}});
}

}  // namespace

CanonicalSet apply_pl(const CanonicalSet& a, const PLFunc& f) {
  validate_plfunc(f);
  std::vector<Atom> out;
  for (const auto& atom : a.atoms()) {
    if (const auto* p = std::get_if<FinitePoints>(&atom)) {
      std::vector<Rat> img;
      for (const auto& x : p->points) img.push_back(f.eval(x));
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      out.emplace_back(FinitePoints{std::move(img)});
    } else if (const auto* iv = std::get_if<Interval>(&atom)) {
      map_interval(f, *iv, out);
    } else if (const auto* s = std::get_if<Seq>(&atom)) {
      map_seq(f, *s, out);
    } else {
      map_cantor(f, std::get<CantorPiece>(atom), out);
    }
  }
  return CanonicalSet::canonicalize(std::move(out));
}

}  // namespace setmeans
