#include "setmeans/checks.hpp"

#include <algorithm>

#include "setmeans/cantor.hpp"
#include "setmeans/errors.hpp"
#include "setmeans/generator.hpp"

namespace setmeans {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

bool ideal_member(const CanonicalSet& h, Ideal ideal) {
  for (const auto& a : h.atoms()) {
    if (std::holds_alternative<Interval>(a) || std::holds_alternative<CantorPiece>(a))
      return false;
    if (ideal == Ideal::FiniteSets && std::holds_alternative<Seq>(a)) return false;
  }
  return true;
}

namespace {

struct Ev {
  bool ok = false;
  Rat v;
  std::string reason;
};

Ev ev(const std::string& mean, const CanonicalSet& h) {
  MeanResult r = mean_eval(mean, h);
  if (!r.verdict.in_domain) return {false, {}, r.verdict.reason};
  if (!r.value->exact) return {false, {}, "InexactValue"};
  return {true, r.value->value, {}};
}

void put(PropertyReport& rep, const std::string& label, const Rat& v) {
  rep.values.emplace_back(label, rat_to_string(v));
}

PropertyReport inapplicable(PropertyReport rep, const std::string& why) {
  rep.verdict = Verdict::Inapplicable;
  rep.detail = why;
  return rep;
}

}  // namespace

PropertyReport internality_check(const std::string& mean, const CanonicalSet& h) {
  PropertyReport rep{"internality", mean};
  Ev e = ev(mean, h);
  if (!e.ok) return inapplicable(rep, "out of domain: " + e.reason);
  SetBounds b = bounds(h);
  put(rep, "value", e.v);
  put(rep, "inf", b.inf);
  put(rep, "sup", b.sup);

  bool internal = b.inf <= e.v && e.v <= b.sup;
  if (!internal) {
    rep.verdict = Verdict::Violated;
    rep.detail = "fails(internal): value " + rat_to_string(e.v) + " outside [" +
                 rat_to_string(b.inf) + ", " + rat_to_string(b.sup) + "]";
    return rep;
  }
  if (!b.liminf) {
    rep.detail = "internal";  // strong levels inapplicable for finite sets
    return rep;
  }
  put(rep, "liminf", *b.liminf);
  put(rep, "limsup", *b.limsup);
  bool strong = *b.liminf <= e.v && e.v <= *b.limsup;
  const auto& declared = mean_spec(mean).declared;
  bool wants_strict = std::find(declared.begin(), declared.end(),
                                "strict-strong-internality") != declared.end();
  if (!strong) {
    rep.detail = "fails(strong): value " + rat_to_string(e.v);
    if (e.v < *b.liminf)
      rep.detail += " < liminf " + rat_to_string(*b.liminf);
    else
      rep.detail += " > limsup " + rat_to_string(*b.limsup);
    rep.verdict = wants_strict ? Verdict::Violated : Verdict::Holds;
    return rep;
  }
  if (*b.liminf < *b.limsup) {  // at least 2 accumulation points
    bool strict = *b.liminf < e.v && e.v < *b.limsup;
    rep.detail = strict ? "strict-strong" : "fails(strict-strong): value on the boundary";
    rep.verdict = (strict || !wants_strict) ? Verdict::Holds : Verdict::Violated;
    return rep;
  }
  rep.detail = "strong";
  return rep;
}

PropertyReport invariance_check(const std::string& mean, const CanonicalSet& h,
                                const Rat& alpha, const Rat& beta) {
  PropertyReport rep{"affine-invariance", mean};
  Ev e = ev(mean, h);
  if (!e.ok) return inapplicable(rep, "out of domain: " + e.reason);
  CanonicalSet g = affine_map(h, alpha, beta);
  Ev ei = ev(mean, g);
  if (!ei.ok) return inapplicable(rep, "image out of domain: " + ei.reason);
  Rat expect = alpha * e.v + beta;
  put(rep, "mean(h)", e.v);
  put(rep, "mean(alpha*h+beta)", ei.v);
  put(rep, "alpha*mean(h)+beta", expect);
  if (ei.v != expect) {
    rep.verdict = Verdict::Violated;
    rep.detail = "equivariance broken";
  }
  return rep;
}

PropertyReport point_symmetry_check(const std::string& mean, const CanonicalSet& h) {
  PropertyReport rep{"point-symmetry", mean};
  if (h.empty()) return inapplicable(rep, "empty set");
  SetBounds b = bounds(h);
  Rat s = (b.inf + b.sup) / 2;
  if (!(affine_map(h, -1, 2 * s) == h))
    return inapplicable(rep, "set is not T_s-symmetric");
  Ev e = ev(mean, h);
  if (!e.ok) return inapplicable(rep, "out of domain: " + e.reason);
  put(rep, "s", s);
  put(rep, "value", e.v);
  if (e.v != s) {
    rep.verdict = Verdict::Violated;
    rep.detail = "symmetric set, value != center";
  }
  return rep;
}

namespace {

// Chain K(H1) <= K(H1 u H2) <= K(H2) shared by several monotonicity kinds.
PropertyReport chain_check(PropertyReport rep, const std::string& mean,
                           const CanonicalSet& h1, const CanonicalSet& h2) {
  Ev e1 = ev(mean, h1), e2 = ev(mean, h2);
  if (!e1.ok || !e2.ok)
    return inapplicable(std::move(rep),
                        "out of domain: " + (e1.ok ? e2.reason : e1.reason));
  Ev eu = ev(mean, set_union(h1, h2));
  if (!eu.ok) return inapplicable(std::move(rep), "union out of domain: " + eu.reason);
  put(rep, "K(H1)", e1.v);
  put(rep, "K(H2)", e2.v);
  put(rep, "K(H1uH2)", eu.v);
  if (!(e1.v <= eu.v && eu.v <= e2.v)) {
    rep.verdict = Verdict::Violated;
    rep.detail = "chain K(H1) <= K(union) <= K(H2) broken";
  }
  return rep;
}

std::optional<Rat> limsup_of(const CanonicalSet& h) {
  if (h.empty()) return std::nullopt;
  return bounds(h).limsup;
}
std::optional<Rat> liminf_of(const CanonicalSet& h) {
  if (h.empty()) return std::nullopt;
  return bounds(h).liminf;
}

}  // namespace

PropertyReport monotonicity_check(const std::string& kind, const std::string& mean,
                                  const std::vector<CanonicalSet>& sets, const Rat& x) {
  PropertyReport rep{kind + "-monotonicity", mean};

  if (kind == "monotone" || kind == "strong-monotone") {
    const auto &h1 = sets.at(0), &h2 = sets.at(1);
    if (kind == "monotone") {
      if (!(bounds(h1).sup <= bounds(h2).inf))
        return inapplicable(rep, "sup H1 > inf H2");
    } else {
      auto ls1 = limsup_of(h1), li2 = liminf_of(h2);
      if (!ls1 || !li2) return inapplicable(rep, "finite set: no liminf/limsup");
      if (!(*ls1 <= *li2)) return inapplicable(rep, "limsup H1 > liminf H2");
    }
    return chain_check(std::move(rep), mean, h1, h2);
  }

  if (kind == "disjoint") {
    const auto &h1 = sets.at(0), &h2 = sets.at(1);
    if (intersects(h1, h2)) return inapplicable(rep, "H1 and H2 intersect");
    Ev e1 = ev(mean, h1), e2 = ev(mean, h2);
    if (!e1.ok || !e2.ok)
      return inapplicable(rep, "out of domain: " + (e1.ok ? e2.reason : e1.reason));
    // Order roles so K(H1) <= K(H2), as the hypothesis requires.
    return e1.v <= e2.v ? chain_check(std::move(rep), mean, h1, h2)
                        : chain_check(std::move(rep), mean, h2, h1);
  }

  if (kind == "part-shift") {
    const auto &h1 = sets.at(0), &h2 = sets.at(1);
    CanonicalSet h2x = affine_map(h2, 1, x);
    Ev ea = ev(mean, set_union(h1, h2));
    Ev eb = ev(mean, set_union(h1, h2x));
    if (ea.ok) put(rep, "K(H1uH2)", ea.v);
    if (eb.ok) put(rep, "K(H1u(H2+x))", eb.v);
    if (!(x > 0)) return inapplicable(rep, "x <= 0");
    if (intersects(h1, h2)) return inapplicable(rep, "H1 and H2 intersect");
    if (intersects(h1, h2x)) return inapplicable(rep, "H1 and H2+x intersect");
    if (!ea.ok || !eb.ok)
      return inapplicable(rep, "out of domain: " + (ea.ok ? eb.reason : ea.reason));
    if (!(ea.v <= eb.v)) {
      rep.verdict = Verdict::Violated;
      rep.detail = "shifting a part upward decreased the mean";
    }
    return rep;
  }

  if (kind == "mean-monotone" || kind == "strong-mean-monotone") {
    const auto &h = sets.at(0), &k1 = sets.at(1), &k2 = sets.at(2);
    Ev eh = ev(mean, h), e1 = ev(mean, k1), e2 = ev(mean, k2);
    if (!eh.ok || !e1.ok || !e2.ok) return inapplicable(rep, "out of domain");
    bool hyp;
    if (kind == "mean-monotone") {
      hyp = bounds(k1).sup <= eh.v && eh.v <= bounds(k2).inf;
    } else {
      auto ls = limsup_of(k1), li = liminf_of(k2);
      hyp = ls && li && *ls <= eh.v && eh.v <= *li;
    }
    if (!hyp) return inapplicable(rep, "mean bracketing hypothesis fails");
    Ev eu1 = ev(mean, set_union(h, k1)), eu2 = ev(mean, set_union(h, k2));
    if (!eu1.ok || !eu2.ok) return inapplicable(rep, "union out of domain");
    put(rep, "K(H)", eh.v);
    put(rep, "K(HuK1)", eu1.v);
    put(rep, "K(HuK2)", eu2.v);
    if (!(eu1.v <= eh.v && eh.v <= eu2.v)) {
      rep.verdict = Verdict::Violated;
      rep.detail = "mean-monotone chain broken";
    }
    return rep;
  }

  if (kind == "base") {
    const auto &h1 = sets.at(0), &h2 = sets.at(1);
    Ev e1 = ev(mean, h1), e2 = ev(mean, h2);
    if (!e1.ok || !e2.ok)
      return inapplicable(rep, "out of domain: " + (e1.ok ? e2.reason : e1.reason));
    Ev eu = ev(mean, set_union(h1, h2));
    if (!eu.ok) return inapplicable(rep, "union out of domain: " + eu.reason);
    put(rep, "K(H1)", e1.v);
    put(rep, "K(H2)", e2.v);
    put(rep, "K(H1uH2)", eu.v);
    Rat lo = std::min(e1.v, e2.v), hi = std::max(e1.v, e2.v);
    if (!(lo <= eu.v && eu.v <= hi)) {
      rep.verdict = Verdict::Violated;
      rep.detail = "min " + rat_to_string(lo) + " .. max " + rat_to_string(hi) +
                   " does not bracket " + rat_to_string(eu.v);
    }
    if (intersects(h1, h2)) rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("note: H1 and H2 intersect");
    return rep;
  }

  if (kind == "countable-base") {
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j)
        if (intersects(sets[i], sets[j]))
          return inapplicable(rep, "family not pairwise disjoint");
    std::optional<Rat> lo, hi;
    CanonicalSet u;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      Ev e = ev(mean, sets[i]);
      if (!e.ok) return inapplicable(rep, "member out of domain: " + e.reason);
      put(rep, "K(H" + std::to_string(i + 1) + ")", e.v);
      lo = lo ? std::min(*lo, e.v) : e.v;
      hi = hi ? std::max(*hi, e.v) : e.v;
      u = set_union(u, sets[i]);
    }
    Ev eu = ev(mean, u);
    if (!eu.ok) return inapplicable(rep, "union out of domain: " + eu.reason);
    put(rep, "K(union)", eu.v);
    if (!(*lo <= eu.v && eu.v <= *hi)) {
      rep.verdict = Verdict::Violated;
      rep.detail = "family mean bracket broken";
    }
    return rep;
  }

  if (kind == "union") {
    const auto &a = sets.at(0), &b = sets.at(1), &c = sets.at(2);
    Ev ea = ev(mean, a);
    Ev eab = ev(mean, set_union(a, b));
    Ev eac = ev(mean, set_union(a, c));
    Ev eabc = ev(mean, set_union(set_union(a, b), c));
    if (ea.ok) put(rep, "K(A)", ea.v);
    if (eab.ok) put(rep, "K(AuB)", eab.v);
    if (eac.ok) put(rep, "K(AuC)", eac.v);
    if (eabc.ok) put(rep, "K(AuBuC)", eabc.v);
    if (intersects(b, c)) return inapplicable(rep, "B and C intersect");
    if (!ea.ok || !eab.ok || !eac.ok || !eabc.ok)
      return inapplicable(rep, "out of domain");
    if (ea.v <= eab.v && ea.v <= eac.v) {
      bool strict = ea.v < eab.v || ea.v < eac.v;
      if (!(ea.v <= eabc.v) || (strict && !(ea.v < eabc.v))) {
        rep.verdict = Verdict::Violated;
        rep.detail = strict ? "strict ascending clause broken" : "ascending clause broken";
      }
      return rep;
    }
    if (eab.v <= ea.v && eac.v <= ea.v) {
      bool strict = eab.v < ea.v || eac.v < ea.v;
      if (!(eabc.v <= ea.v) || (strict && !(eabc.v < ea.v))) {
        rep.verdict = Verdict::Violated;
        rep.detail = strict ? "strict descending clause broken" : "descending clause broken";
      }
      return rep;
    }
    return inapplicable(rep, "premise inequalities not one-sided");
  }

  if (kind == "d-monotone") {
    const auto &l = sets.at(0), &b = sets.at(1);
    CanonicalSet lb = set_union(l, b);
    CanonicalSet bx = affine_map(b, 1, x);
    if (intersects(l, b)) return inapplicable(rep, "L and B intersect");
    if (intersects(lb, bx)) return inapplicable(rep, "(LuB) and B+x intersect");
    Ev el = ev(mean, l), elb = ev(mean, lb), eall = ev(mean, set_union(lb, bx));
    if (!el.ok || !elb.ok || !eall.ok) return inapplicable(rep, "out of domain");
    put(rep, "K(L)", el.v);
    put(rep, "K(LuB)", elb.v);
    put(rep, "K(LuBu(B+x))", eall.v);
    if (el.v < elb.v && x > 0) {
      if (!(elb.v < eall.v)) {
        rep.verdict = Verdict::Violated;
        rep.detail = "ascending d-monotone clause broken";
      }
      return rep;
    }
    if (el.v > elb.v && x < 0) {
      if (!(elb.v > eall.v)) {
        rep.verdict = Verdict::Violated;
        rep.detail = "descending d-monotone clause broken";
      }
      return rep;
    }
    return inapplicable(rep, "premise not satisfied");
  }

  throw std::invalid_argument("unknown monotonicity kind: " + kind);
}

ScanResult slice_scan(const std::string& mean, const CanonicalSet& h, const Rat& from,
                      const Rat& to, const Rat& step, SliceSide side) {
  if (step <= 0) throw std::invalid_argument("step must be positive");
  ScanResult out;
  for (Rat x = from; x <= to; x += step) {
    ScanRow row;
    row.x = x;
    CanonicalSet s;
    bool cut_ok = true;
    try {
      s = slice(h, x, side);
    } catch (const ApproximationDepthError&) {
      // grid point inside a Cantor piece without a reachable gap: no exact cut
      row.reason = "ApproximationDepth";
      cut_ok = false;
    }
    if (!cut_ok) {
      // fallthrough with the row marked out of domain
    } else if (s.empty()) {
      row.reason = "EmptySet";
    } else {
      MeanResult r = mean_eval(mean, s);
      if (r.verdict.in_domain) {
        row.in_domain = true;
        row.exact = r.value->exact;
        row.value = r.value->value;
        row.lo = r.value->lo;
        row.hi = r.value->hi;
      } else {
        row.reason = r.verdict.reason;
      }
    }
    out.rows.push_back(std::move(row));
  }
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    const auto &a = out.rows[i - 1], &b = out.rows[i];
    if (a.in_domain && b.in_domain && abs_of(a.value - b.value) > step)
      out.jumps.emplace_back(a.x, b.x);
  }
  return out;
}

ProbeResult point_cont_probe(const std::string& mean, const CanonicalSet& h, const Rat& x,
                             const std::vector<Rat>& eps) {
  ProbeResult out;
  Ev base = ev(mean, h);
  if (!base.ok) {
    out.detail = "out of domain: " + base.reason;
    return out;
  }
  std::vector<std::pair<Rat, Rat>> pts;  // (eps, value)
  for (const auto& e : eps) {
    CanonicalSet cut = subtract_ball(h, Ball{x, e});
    Ev v = cut.empty() ? Ev{false, {}, "EmptySet"} : ev(mean, cut);
    if (v.ok) {
      out.values.emplace_back(v.v);
      pts.emplace_back(e, v.v);
    } else {
      out.values.emplace_back(std::nullopt);
    }
  }
  if (pts.size() < 2) {
    out.detail = "too few in-domain evaluations";
    return out;
  }
  std::size_t n = pts.size();
  if (pts[n - 1].second == pts[n - 2].second) {
    out.limit = pts[n - 1].second;  // tail stabilized exactly
  } else if (n >= 3) {
    // Try the linear-in-eps closed form v = a + b*eps over the last three.
    const auto& [e1, v1] = pts[n - 1];
    const auto& [e2, v2] = pts[n - 2];
    const auto& [e3, v3] = pts[n - 3];
    Rat b = (v1 - v2) / (e1 - e2);
    Rat a = v1 - b * e1;
    if (v3 == a + b * e3) out.limit = a;
  }
  if (!out.limit) {
    out.detail = "no stable tail pattern";
    return out;
  }
  if (*out.limit == base.v) {
    out.verdict = Verdict::Holds;
    out.detail = "stabilized at K(H) = " + rat_to_string(base.v);
  } else {
    out.verdict = Verdict::Violated;
    out.detail = "limit " + rat_to_string(*out.limit) + " != K(H) " + rat_to_string(base.v);
  }
  return out;
}

namespace {

void chain_verdict(ChainResult& out) {
  std::vector<std::pair<std::size_t, Rat>> vals;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    if (out.values[i]) vals.emplace_back(i, *out.values[i]);
  if (vals.size() < 2 || !out.tail_value) {
    out.detail = "too few values";
    return;
  }
  // Converging when the last two values (covering both parities of an
  // oscillating chain) are much closer to the tail than the first one.
  Rat d_first = abs_of(vals.front().second - *out.tail_value);
  Rat d_last = abs_of(vals.back().second - *out.tail_value);
  Rat d_prev = abs_of(vals[vals.size() - 2].second - *out.tail_value);
  bool conv = d_first == 0 ? (d_last == 0 && d_prev == 0)
                           : (d_last <= d_first / 8 && d_prev <= d_first / 8);
  out.verdict = conv ? Verdict::Holds : Verdict::Violated;
  out.detail = conv ? "converging to tail value" : "diverging";
  if (!conv) {
    // report the trailing even/odd-index values as sublimit estimates
    std::optional<Rat> even, odd;
    for (const auto& [i, v] : vals)
      (i % 2 == 0 ? even : odd) = v;
    if (even) out.detail += "; even-tail " + rat_to_string(*even);
    if (odd) out.detail += "; odd-tail " + rat_to_string(*odd);
  }
}

}  // namespace

ChainResult cantor_chain_probe(const std::string& mean,
                               const std::vector<CanonicalSet>& chain,
                               const CanonicalSet& tail) {
  ChainResult out;
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!subset_of(chain[i], chain[i - 1])) out.hypothesis_ok = false;
  for (const auto& h : chain) {
    Ev e = ev(mean, h);
    out.values.push_back(e.ok ? std::optional<Rat>(e.v) : std::nullopt);
  }
  Ev et = ev(mean, tail);
  if (et.ok) out.tail_value = et.v;
  chain_verdict(out);
  if (!out.hypothesis_ok) out.detail += "; chain inclusion not verified";
  return out;
}

ChainResult fcont_probe(const std::string& mean, const CanonicalSet& h,
                        const std::vector<PLFunc>& fns,
                        const std::optional<PLFunc>& f_limit,
                        const CanonicalSet& limit_image) {
  ChainResult out;
  if (f_limit) {
    Rat prev;
    bool first = true;
    for (const auto& f : fns) {
      Rat d = sup_distance(f, *f_limit);
      if (!first && d > prev) out.hypothesis_ok = false;
      prev = d;
      first = false;
    }
  }
  for (const auto& f : fns) {
    Ev e = ev(mean, apply_pl(h, f));
    out.values.push_back(e.ok ? std::optional<Rat>(e.v) : std::nullopt);
  }
  Ev et = ev(mean, limit_image);
  if (et.ok) out.tail_value = et.v;
  chain_verdict(out);
  if (!out.hypothesis_ok) out.detail += "; sup distances not decreasing";
  return out;
}

std::optional<CanonicalSet> diff_finite(const CanonicalSet& h,
                                        const std::vector<Rat>& points) {
  std::vector<Atom> out;
  for (const auto& atom : h.atoms()) {
    if (const auto* p = std::get_if<FinitePoints>(&atom)) {
      FinitePoints keep;
      for (const auto& v : p->points)
        if (std::find(points.begin(), points.end(), v) == points.end())
          keep.points.push_back(v);
      if (!keep.points.empty()) out.emplace_back(std::move(keep));
    } else if (const auto* iv = std::get_if<Interval>(&atom)) {
      for (const auto& v : points)
        if (iv->lo < v && v < iv->hi) return std::nullopt;  // punctured interval
      out.push_back(atom);
    } else if (const auto* s = std::get_if<Seq>(&atom)) {
      Seq cur = *s;
      std::vector<Rat> survivors;
      bool have_tail = true;
      for (const auto& v : points) {
        auto n = seq_index_of(cur, v);
        if (!n) continue;
        // split: keep head terms except v, raise the start past v
        for (long m = cur.start; m < *n; ++m) survivors.push_back(cur.term(m));
        cur.start = *n + 1;
      }
      if (!survivors.empty()) out.emplace_back(FinitePoints{std::move(survivors)});
      if (have_tail) out.emplace_back(cur);
    } else {
      const auto& cp = std::get<CantorPiece>(atom);
      for (const auto& v : points)
        if (cantor_member(cp, v)) return std::nullopt;
      out.push_back(atom);
    }
  }
  return CanonicalSet::canonicalize(std::move(out));
}

PropertyReport independence_check(const std::string& mean, const CanonicalSet& h,
                                  const CanonicalSet& v, Ideal ideal) {
  PropertyReport rep{"independence", mean};
  if (!ideal_member(v, ideal)) return inapplicable(rep, "V not in the ideal");
  if (ideal_member(h, ideal)) return inapplicable(rep, "H belongs to the ideal");
  Ev eh = ev(mean, h);
  if (!eh.ok) return inapplicable(rep, "out of domain: " + eh.reason);
  Ev eu = ev(mean, set_union(h, v));
  if (!eu.ok) return inapplicable(rep, "union out of domain: " + eu.reason);
  put(rep, "K(H)", eh.v);
  put(rep, "K(HuV)", eu.v);
  if (eu.v != eh.v) {
    rep.verdict = Verdict::Violated;
    rep.detail = "union form broken";
    return rep;
  }
  // Removal form, testable when V is finite and removable from H.
  std::vector<Rat> pts;
  bool v_finite = true;
  for (const auto& a : v.atoms()) {
    if (const auto* p = std::get_if<FinitePoints>(&a))
      pts.insert(pts.end(), p->points.begin(), p->points.end());
    else
      v_finite = false;
  }
  if (v_finite) {
    auto hv = diff_finite(h, pts);
    if (hv && !hv->empty()) {
      Ev er = ev(mean, *hv);
      if (er.ok) {
        put(rep, "K(H-V)", er.v);
        if (er.v != eh.v) {
          rep.verdict = Verdict::Violated;
          rep.detail = "removal form broken";
          return rep;
        }
      }
    }
  }
  rep.detail = "union form" + std::string(v_finite ? " and removal form" : "") + " hold";
  return rep;
}

PropertyReport shift_invariance_check(const std::string& variant, const std::string& mean,
                                      const CanonicalSet& h1, const CanonicalSet& h2,
                                      const Rat& x) {
  PropertyReport rep{variant + "-shift-invariance", mean};
  if (variant == "self") {
    Ev e = ev(mean, h1);
    if (!e.ok) return inapplicable(rep, "out of domain: " + e.reason);
    SetBounds b = bounds(h1);
    Rat lo = b.liminf ? *b.liminf : b.inf;
    Rat hi = b.limsup ? *b.limsup : b.sup;
    if (!(hi <= lo + x || hi + x <= lo))
      return inapplicable(rep, "shift too small: copies interleave");
    Ev eu = ev(mean, set_union(h1, affine_map(h1, 1, x)));
    if (!eu.ok) return inapplicable(rep, "union out of domain: " + eu.reason);
    Rat expect = e.v + x / 2;
    put(rep, "K(H)", e.v);
    put(rep, "K(Hu(H+x))", eu.v);
    put(rep, "K(H)+x/2", expect);
    if (eu.v != expect) {
      rep.verdict = Verdict::Violated;
      rep.detail = "self-shift identity broken";
    }
    return rep;
  }
  // part form
  CanonicalSet h2x = affine_map(h2, 1, x);
  Ev ea = ev(mean, set_union(h1, h2));
  Ev eb = ev(mean, set_union(h1, h2x));
  if (ea.ok) put(rep, "K(H1uH2)", ea.v);
  if (eb.ok) put(rep, "K(H1u(H2+x))", eb.v);
  if (intersects(h1, h2)) return inapplicable(rep, "H1 and H2 intersect");
  if (intersects(h1, h2x)) return inapplicable(rep, "H1 and H2+x intersect");
  if (!ea.ok || !eb.ok)
    return inapplicable(rep, "out of domain: " + (ea.ok ? eb.reason : ea.reason));
  Rat delta = eb.v - ea.v;
  put(rep, "delta", delta);
  bool sign_ok = sign_of(delta) == sign_of(x) || (x != 0 && delta == 0);
  // sign(delta) must match sign(x); the paper allows |delta| <= |x|.
  if (sign_of(delta) != sign_of(x) && !(x == 0 && delta == 0)) sign_ok = false;
  if (!sign_ok || abs_of(delta) > abs_of(x)) {
    rep.verdict = Verdict::Violated;
    rep.detail = "part-shift sign/bound broken";
  }
  return rep;
}

PropertyReport condensed_check(const std::string& mean, const CanonicalSet& h) {
  PropertyReport rep{"condensed", mean};
  CanonicalSet hs = structure_points(h).condensation;
  if (hs.empty()) return inapplicable(rep, "no condensation points");
  Ev e = ev(mean, h), es = ev(mean, hs);
  if (!e.ok || !es.ok)
    return inapplicable(rep, "out of domain: " + (e.ok ? es.reason : e.reason));
  put(rep, "K(H)", e.v);
  put(rep, "K(H*)", es.v);
  if (e.v != es.v) {
    rep.verdict = Verdict::Violated;
    rep.detail = "K(H*) != K(H)";
  }
  return rep;
}

PropertyReport convexity_check(const std::string& mean, const CanonicalSet& h,
                               const CanonicalSet& l, const Interval& i) {
  PropertyReport rep{"convexity", mean};
  Ev e = ev(mean, h);
  if (!e.ok) return inapplicable(rep, "out of domain: " + e.reason);
  if (!(i.lo <= e.v && e.v <= i.hi)) return inapplicable(rep, "K(H) outside I");
  CanonicalSet iset = CanonicalSet::canonicalize({Interval{i.lo, i.hi}});
  if (!subset_of(l, iset)) return inapplicable(rep, "L not inside I");
  Ev eu = ev(mean, set_union(h, l));
  if (!eu.ok) return inapplicable(rep, "union out of domain: " + eu.reason);
  put(rep, "K(H)", e.v);
  put(rep, "K(HuL)", eu.v);
  if (!(i.lo <= eu.v && eu.v <= i.hi)) {
    rep.verdict = Verdict::Violated;
    rep.detail = "K(HuL) left I";
  }
  return rep;
}

RootResult slice_mean_root(const std::string& mean, const CanonicalSet& h,
                           const std::string& mode, const Rat& tol) {
  bool fixed_point = mode == "fixed-point";
  if (!fixed_point && mode != "mean-value")
    throw std::invalid_argument("unknown root mode: " + mode);
  Ev eh = ev(mean, h);
  if (!eh.ok) throw OutOfDomainError(eh.reason);
  SetBounds b = bounds(h);
  Rat lo = b.liminf ? *b.liminf : b.inf;
  Rat hi = b.limsup ? *b.limsup : b.sup;
  if (!(lo < hi)) throw NoSignChangeError("degenerate slice interval");

  auto residual = [&](const Rat& x) -> std::optional<Rat> {
    CanonicalSet le = slice(h, x, SliceSide::Le);
    CanonicalSet ge = slice(h, x, SliceSide::Ge);
    if (le.empty() || ge.empty()) return std::nullopt;
    Ev el = ev(mean, le), eg = ev(mean, ge);
    if (!el.ok || !eg.ok) return std::nullopt;
    Rat target = fixed_point ? x : eh.v;
    return (el.v + eg.v) / 2 - target;
  };

  // Symmetric initial bracket slightly inside (lo, hi), so that symmetric
  // instances bisect to the exact center.
  Rat w = hi - lo;
  Rat a = lo + w / 1024, bnd = hi - w / 1024;
  auto ra = residual(a), rb = residual(bnd);
  if (!ra || !rb || sign_of(*ra) == sign_of(*rb)) {
    // Grid scan for any sign change.
    bool found = false;
    Rat prev_x = a;
    std::optional<Rat> prev_r = ra;
    for (int i = 1; i <= 64 && !found; ++i) {
      Rat x = a + (bnd - a) * i / 64;
      auto r = residual(x);
      if (prev_r && r && sign_of(*prev_r) != sign_of(*r)) {
        a = prev_x;
        bnd = x;
        ra = prev_r;
        rb = r;
        found = true;
      }
      if (r) {
        prev_x = x;
        prev_r = r;
      }
    }
    if (!found) throw NoSignChangeError("no residual sign change on the slice interval");
  }
  if (*ra == 0) return {a, 0, a, a, false};
  if (*rb == 0) return {bnd, 0, bnd, bnd, false};

  while (bnd - a > tol) {
    Rat m = (a + bnd) / 2;
    auto rm = residual(m);
    if (!rm) break;  // out-of-domain pocket: stop with the current bracket
    if (*rm == 0) return {m, 0, m, m, false};
    if (sign_of(*rm) == sign_of(*ra)) {
      a = m;
      ra = rm;
    } else {
      bnd = m;
      rb = rm;
    }
  }
  Rat mid = (a + bnd) / 2;
  auto rm = residual(mid);
  Rat res = rm ? *rm : Rat(0);
  bool jump = abs_of(res) > tol && abs_of(*ra) > tol && abs_of(*rb) > tol;
  return {mid, res, a, bnd, jump};
}

PropertyReport shrink_to_point_probe(const std::string& mean,
                                     const std::vector<CanonicalSet>& sets, const Rat& x) {
  PropertyReport rep{"shrink-to-point", mean};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    long n = static_cast<long>(i) + 1;
    SetBounds b = bounds(sets[i]);
    if (!(x - Rat(1, n) < b.inf && b.sup < x + Rat(1, n)))
      return inapplicable(rep, "H_" + std::to_string(n) + " not inside (x-1/n, x+1/n)");
    Ev e = ev(mean, sets[i]);
    if (!e.ok) return inapplicable(rep, "out of domain: " + e.reason);
    if (abs_of(e.v - x) > Rat(1, n)) {
      rep.verdict = Verdict::Violated;
      rep.detail = "value strayed outside the shrinking window";
      put(rep, "K(H_" + std::to_string(n) + ")", e.v);
      return rep;
    }
  }
  rep.detail = "values converge to x";
  return rep;
}

std::vector<std::pair<std::string, std::string>> dom_closure_report(const std::string& mean) {
  std::vector<std::pair<std::string, std::string>> out;
  const MeanSpec& spec = mean_spec(mean);
  auto in_dom = [&](const CanonicalSet& s) { return !s.empty() && spec.dom(s).in_domain; };

  std::vector<CanonicalSet> samples;
  for (unsigned long long seed = 1; seed <= 8; ++seed) {
    GenProfile prof;
    prof.intervals = 1;
    prof.seqs = (seed % 2 == 0) ? 1 : 0;
    prof.points = 1;
    samples.push_back(gen_random_set(seed, prof));
  }
  auto all = [&](auto&& f) {
    for (const auto& s : samples) {
      if (!in_dom(s)) continue;
      if (!f(s)) return false;
    }
    return true;
  };

  out.emplace_back("1 finite union/intersection",
                   all([&](const CanonicalSet& s) {
                     CanonicalSet t = affine_map(s, 1, 100);
                     return in_dom(set_union(s, t));
                   })
                       ? "closed"
                       : "not closed");
  out.emplace_back("2 intersect with interval",
                   all([&](const CanonicalSet& s) {
                     SetBounds b = bounds(s);
                     CanonicalSet cut = intersect_interval(s, b.inf, (b.inf + b.sup) / 2);
                     return cut.empty() || in_dom(cut) ||
                            spec.dom(cut).reason == "FiniteSetOutOfDomain";
                   })
                       ? "closed (finite slices noted for mlis)"
                       : "not closed");
  out.emplace_back("3 slices in dom imply set in dom", "holds by item 1");
  out.emplace_back("4 translation/reflection/dilation",
                   all([&](const CanonicalSet& s) {
                     return in_dom(affine_map(s, 1, 3)) && in_dom(affine_map(s, -1, 0)) &&
                            in_dom(affine_map(s, Rat(1, 2), 0));
                   })
                       ? "closed"
                       : "not closed");
  out.emplace_back("5 closure",
                   all([&](const CanonicalSet& s) {
                     return in_dom(structure_points(s).closure);
                   })
                       ? "closed"
                       : "not closed");
  out.emplace_back("6 interval minus set",
                   mean == "avg" || mean == "midrange"
                       ? "closed on interval-union instances"
                       : "depends on instance (finite remainders leave the domain)");
  out.emplace_back("7 derived set",
                   all([&](const CanonicalSet& s) {
                     CanonicalSet d = derived_once(s);
                     return d.empty() || in_dom(d) ||
                            spec.dom(d).reason == "FiniteSetOutOfDomain";
                   })
                       ? "closed (finite derived sets noted for mlis)"
                       : "not closed");
  out.emplace_back("8 countable union/intersection", "unsupported-by-class");
  out.emplace_back("9 continuous images", "unsupported-by-class (piecewise-linear only)");
  return out;
}

}  // namespace setmeans
