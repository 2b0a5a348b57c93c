#include "setmeans/dsl.hpp"

#include <cctype>

#include "setmeans/errors.hpp"

namespace setmeans {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a name");
    return text.substr(start, pos - start);
  }

  Rat rat() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '.') fail("decimals are not accepted");
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    if (pos == start) fail("expected a rational");
    try {
      return parse_rat(text.substr(start, pos - start));
    } catch (const std::invalid_argument& e) {
      pos = start;
      fail(e.what());
    }
  }

  long integer() {
    Rat r = rat();
    if (rat_den(r) != 1) fail("expected an integer");
    return static_cast<long>(rat_num(r));
  }

  std::vector<Atom> parse_set() {
    std::vector<Atom> atoms = parse_term();
    while (eat('|')) {
      std::vector<Atom> more = parse_term();
      atoms.insert(atoms.end(), more.begin(), more.end());
    }
    return atoms;
  }

  std::vector<Atom> parse_term() {
    char c = peek();
    if (c == '[') {
      ++pos;
      Rat lo = rat();
      expect(',');
      Rat hi = rat();
      expect(']');
      if (lo == hi) return {FinitePoints{{lo}}};
      return {Interval{lo, hi}};
    }
    if (c == '{') {
      ++pos;
      if (eat('}')) return {};  // explicit empty set
      std::vector<Rat> pts{rat()};
      while (eat(',')) pts.push_back(rat());
      expect('}');
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      return {FinitePoints{std::move(pts)}};
    }
    if (c == '(') {
      ++pos;
      std::vector<Atom> inner = parse_set();
      expect(')');
      return inner;
    }
    std::string name = ident();
    expect('(');
    if (name == "seq") return {parse_seq_body()};
    if (name == "cantor") {
      Rat off = rat();
      expect(',');
      Rat w = rat();
      expect(')');
      return {CantorPiece{off, w, 0}};
    }
    std::vector<Atom> arg = parse_set();
    CanonicalSet s = CanonicalSet::canonicalize(std::move(arg));
    CanonicalSet r;
    if (name == "shift") {
      expect(',');
      Rat x = rat();
      r = affine_map(s, 1, x);
    } else if (name == "scale") {
      expect(',');
      Rat a = rat();
      r = affine_map(s, a, 0);
    } else if (name == "refl") {
      expect(',');
      Rat c = rat();
      r = affine_map(s, -1, 2 * c);
    } else if (name == "cut_le") {
      expect(',');
      Rat x = rat();
      r = slice(s, x, SliceSide::Le);
    } else if (name == "cut_ge") {
      expect(',');
      Rat x = rat();
      r = slice(s, x, SliceSide::Ge);
    } else if (name == "clip") {
      expect(',');
      Rat lo = rat();
      expect(',');
      Rat hi = rat();
      r = intersect_interval(s, lo, hi);
    } else if (name == "delball") {
      expect(',');
      Rat c = rat();
      expect(',');
      Rat rad = rat();
      r = subtract_ball(s, Ball{c, rad});
    } else {
      fail("unknown function '" + name + "'");
    }
    expect(')');
    return r.atoms();
  }

  Atom parse_seq_body() {
    Seq s;
    s.limit = rat();
    expect(';');
    std::string kind = ident();
    if (kind == "harm")
      s.kind = SeqKind::Harmonic;
    else if (kind == "geom")
      s.kind = SeqKind::Geometric;
    else if (kind == "harmgeom")
      s.kind = SeqKind::HarmonicGeometric;
    else
      fail("unknown sequence kind '" + kind + "'");
    expect(';');
    s.c = rat();
    if (eat(',')) s.c2 = rat();
    if (eat(';')) {
      if (s.kind == SeqKind::Harmonic)
        s.start = integer();
      else {
        s.q = rat();
        if (eat(';')) s.start = integer();
      }
    }
    expect(')');
    return s;
  }
};

void append_rat_list(std::string& out, const std::vector<Rat>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += rat_to_string(xs[i]);
  }
}

}  // namespace

CanonicalSet parse_dsl(const std::string& text) {
  Parser p{text};
  std::vector<Atom> atoms = p.parse_set();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return CanonicalSet::canonicalize(std::move(atoms));
}

std::string format_set(const CanonicalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  bool first = true;
  for (const auto& atom : s.atoms()) {
    if (!first) out += '|';
    first = false;
    if (const auto* p = std::get_if<FinitePoints>(&atom)) {
      out += '{';
      append_rat_list(out, p->points);
      out += '}';
    } else if (const auto* iv = std::get_if<Interval>(&atom)) {
      out += '[' + rat_to_string(iv->lo) + ',' + rat_to_string(iv->hi) + ']';
    } else if (const auto* q = std::get_if<Seq>(&atom)) {
      out += "seq(" + rat_to_string(q->limit) + ';';
      switch (q->kind) {
        case SeqKind::Harmonic: out += "harm"; break;
        case SeqKind::Geometric: out += "geom"; break;
        case SeqKind::HarmonicGeometric: out += "harmgeom"; break;
      }
      out += ';' + rat_to_string(q->c);
      if (q->kind == SeqKind::HarmonicGeometric) out += ',' + rat_to_string(q->c2);
      if (q->kind != SeqKind::Harmonic) out += ';' + rat_to_string(q->q);
      if (q->start != 1) out += ';' + std::to_string(q->start);
      out += ')';
    } else {
      const auto& cp = std::get<CantorPiece>(atom);
      out += "cantor(" + rat_to_string(cp.offset) + ',' + rat_to_string(cp.width()) + ')';
    }
  }
  return out;
}

std::string format_value(const MeanValue& v) {
  if (v.exact) return rat_to_string(v.value) + " (" + rat_to_decimal(v.value) + ")";
  return "[" + rat_to_string(v.lo) + ", " + rat_to_string(v.hi) + "] approx";
}

}  // namespace setmeans
