#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zdisk {

// Exact arithmetic backbone: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

enum class Errc {
  denominator_not_supported,
  factorization_limit,
  search_inconclusive,
  iteration_limit,
  bad_shape,
  invalid_argument,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Floor of the square root of a non-negative integer.
inline Int isqrt(const Int& v) {
  if (v < 0) throw Error(Errc::invalid_argument, "isqrt of negative value");
  if (v == 0) return 0;
  Int x = Int(1) << (unsigned)((boost::multiprecision::msb(v) / 2) + 1);
  for (;;) {
    Int y = (x + v / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

inline bool is_perfect_square(const Int& v, Int* root = nullptr) {
  if (v < 0) return false;
  Int r = isqrt(v);
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

inline Int pow_int(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) throw Error(Errc::invalid_argument, "0 cannot be raised to a negative power");
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long k = e > 0 ? (unsigned long)e : (unsigned long)(-(e + 1)) + 1;
  Rat r = 1;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// p-adic valuation of a nonzero rational (negative when p divides the denominator).
inline long p_valuation(const Int& p, const Rat& q) {
  if (q == 0) throw Error(Errc::invalid_argument, "valuation of zero");
  long v = 0;
  Int n = num(q);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  Int d = den(q);
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

// Total order on rationals used for deterministic tie-breaking.
inline bool rat_less(const Rat& a, const Rat& b) { return a < b; }

inline std::string rat_str(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash))) / Rat(Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "bad rational literal: " + s);
  }
}

}  // namespace zdisk
