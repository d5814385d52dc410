#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace dcmv {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int floordiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// representative of a mod m in [0, m), m > 0
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }  // always > 0

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Int rat_floor(const Rat& q) { return floordiv(num(q), den(q)); }

// fractional part in [0, 1)
inline Rat frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a * b) / gcd(a, b);
}

inline std::string to_string(const Int& a) { return a.str(); }
inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash))) / Rat(Int(s.substr(slash + 1)));
}

}  // namespace dcmv
