#include "setmeans/cantor.hpp"

#include <set>

#include "setmeans/errors.hpp"

namespace setmeans {

bool cantor01_member(const Rat& y) {
  if (y < 0 || y > 1) return false;
  Rat third(1, 3), two_thirds(2, 3);
  Rat cur = y;
  std::set<Rat> seen;
  while (true) {
    if (cur == 0 || cur == 1 || cur == third || cur == two_thirds) return true;
    if (cur > third && cur < two_thirds) return false;
    if (!seen.insert(cur).second) return true;  // periodic without hitting a gap
    cur = cur < third ? Rat(3 * cur) : Rat(3 * cur - 2);
  }
}

bool cantor_member(const CantorPiece& p, const Rat& x) {
  Rat w = p.width();
  return cantor01_member((x - p.offset) / w);
}

namespace {

void cut_rec(const CantorPiece& p, bool has_a, const Rat& a, bool a_strict,
             bool has_b, const Rat& b, bool b_strict, long budget, CantorCut& out) {
  Rat lo = p.offset, hi = p.sup();
  // Entire span inside the window?
  bool lo_in = !has_a || lo > a || (lo == a && !a_strict);
  bool hi_in = !has_b || hi < b || (hi == b && !b_strict);
  if (lo_in && hi_in) {
    out.pieces.push_back(p);
    return;
  }
  // Entirely outside?
  if ((has_a && (hi < a || (hi == a && a_strict))) ||
      (has_b && (lo > b || (lo == b && b_strict)))) {
    return;
  }
  // Single shared endpoint.
  if (has_a && hi == a && !a_strict) {
    out.points.push_back(hi);
    return;
  }
  if (has_b && lo == b && !b_strict) {
    out.points.push_back(lo);
    return;
  }
  if (budget == 0)
    throw ApproximationDepthError("cantor cut point did not reach a ternary gap within the depth limit");
  cut_rec(p.left_child(), has_a, a, a_strict, has_b, b, b_strict, budget - 1, out);
  cut_rec(p.right_child(), has_a, a, a_strict, has_b, b, b_strict, budget - 1, out);
}

}  // namespace

CantorCut cantor_cut(const CantorPiece& p, bool has_a, const Rat& a, bool a_strict,
                     bool has_b, const Rat& b, bool b_strict, long depth_limit) {
  CantorCut out;
  cut_rec(p, has_a, a, a_strict, has_b, b, b_strict, depth_limit, out);
  return out;
}

CantorRelation cantor_relation(const CantorPiece& a, const CantorPiece& b) {
  // Touching spans share exactly one boundary point; like adjacent closed
  // intervals they are kept side by side, so they count as Disjoint here.
  // Callers that care about the shared point must test it separately.
  if (a.sup() <= b.offset || b.sup() <= a.offset) return CantorRelation::Disjoint;
  if (a == b) return CantorRelation::Equal;
  Rat wa = a.width(), wb = b.width();
  if (wa < wb) {
    CantorRelation r = cantor_relation(b, a);
    if (r == CantorRelation::FirstContainsSecond) return CantorRelation::SecondContainsFirst;
    if (r == CantorRelation::SecondContainsFirst) return CantorRelation::FirstContainsSecond;
    return r;
  }
  // wa >= wb: descend `a` looking for b's span.
  CantorPiece cur = a;
  for (long d = 0; d <= kCantorCutDepthLimit; ++d) {
    if (cur == b) return CantorRelation::FirstContainsSecond;
    Rat w = cur.width();
    Rat g1 = cur.offset + w / 3, g2 = cur.offset + 2 * w / 3;
    if (b.offset > g1 && b.sup() < g2) return CantorRelation::Disjoint;  // inside the gap
    if (b.sup() <= g1) {
      cur = cur.left_child();
    } else if (b.offset >= g2) {
      cur = cur.right_child();
    } else {
      return CantorRelation::Unsupported;  // straddles a gap boundary
    }
  }
  return CantorRelation::Unsupported;
}

Rat cantor_distance(const CantorPiece& p, const Rat& x) {
  if (x <= p.offset) return p.offset - x;
  if (x >= p.sup()) return x - p.sup();
  if (cantor_member(p, x)) return 0;
  // x lies in some gap; descend until it shows up.
  CantorPiece cur = p;
  while (true) {
    Rat w = cur.width();
    Rat g1 = cur.offset + w / 3, g2 = cur.offset + 2 * w / 3;
    if (x > g1 && x < g2) return std::min(Rat(x - g1), Rat(g2 - x));
    cur = (x <= g1) ? cur.left_child() : cur.right_child();
  }
}

bool cantor_meets_interval(const CantorPiece& p, const Rat& a, const Rat& b) {
  if (a > b) return false;
  if (cantor_member(p, a) || cantor_member(p, b)) return true;
  // Both ends are outside the set, so the descent terminates.
  struct Rec {
    const Rat &a, &b;
    bool run(const CantorPiece& c, long budget) const {
      Rat lo = c.offset, hi = c.sup();
      if (hi < a || lo > b) return false;
      if (lo >= a && hi <= b) return true;
      if (budget == 0) return true;  // undecided: be conservative
      return run(c.left_child(), budget - 1) || run(c.right_child(), budget - 1);
    }
  };
  return Rec{a, b}.run(p, 4 * kCantorCutDepthLimit);
}

}  // namespace setmeans
