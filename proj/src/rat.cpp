#include "setmeans/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace setmeans {

Int floor_rat(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer part");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("bad rational literal: " + s);
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rat(Int(text));
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d <= 0) throw std::invalid_argument("denominator must be positive: " + text);
  return Rat(Int(num), d);
}

std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

std::string rat_to_decimal(const Rat& r, int significant_digits) {
  if (r == 0) {
    std::string s = "0.";
    for (int i = 1; i < significant_digits; ++i) s += '0';
    return s;
  }
  bool neg = r < 0;
  Rat a = abs_of(r);
  // Find exponent e with 10^e <= a < 10^(e+1).
  int e = 0;
  Rat t = a;
  while (t >= 10) { t /= 10; ++e; }
  while (t < 1) { t *= 10; --e; }
  // Scale so that the integer part carries all significant digits.
  int shift = significant_digits - 1 - e;
  Rat scaled = a;
  for (int i = 0; i < shift; ++i) scaled *= 10;
  for (int i = 0; i < -shift; ++i) scaled /= 10;
  Int digits = floor_rat(scaled + Rat(1, 2));
  std::string ds = digits.str();
  if (static_cast<int>(ds.size()) > significant_digits) {
    // Rounding carried over (e.g. 9.99 -> 10.0).
    ds.pop_back();
    ++e;
  }
  std::string out;
  if (neg) out += '-';
  if (e >= significant_digits - 1 || e < -4) {
    out += ds.substr(0, 1);
    out += '.';
    out += ds.substr(1);
    out += 'e';
    out += std::to_string(e);
  } else if (e >= 0) {
    out += ds.substr(0, e + 1);
    out += '.';
    out += ds.substr(e + 1);
  } else {
    out += "0.";
    for (int i = 1; i < -e; ++i) out += '0';
    out += ds;
  }
  return out;
}

Rat pow_rat(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    return Rat(1) / pow_rat(base, -exp);
  }
  Rat result(1), b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace setmeans
