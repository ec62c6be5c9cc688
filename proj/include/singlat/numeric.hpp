#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace singlat {

// All core arithmetic is exact. Integers and rationals are arbitrary
// precision; nothing in the library touches floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline Int numerator(const Rat& r) {
  return boost::multiprecision::numerator(r);
}

inline Int denominator(const Rat& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string to_string(const Int& v) { return v.str(); }

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Int int_from_string(const std::string& s) {
  if (s.empty()) throw error("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw error("bad integer literal '" + s + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw error("bad integer literal '" + s + "'");
  return Int(s);
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw error("zero denominator in '" + s + "'");
  return Rat(num, den);
}

// Exact x/y where y must divide x; used by fraction-free elimination.
inline Int exact_div(const Int& x, const Int& y) {
  Int q, r;
  boost::multiprecision::divide_qr(x, y, q, r);
  if (r != 0) throw error("exact_div: not divisible");
  return q;
}

}  // namespace singlat
