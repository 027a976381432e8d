#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zdisk/numeric.hpp"

namespace zdisk {

// Integer Laurent polynomial, stored as a sparse exponent -> coefficient map.
// Zero coefficients are never stored; the zero polynomial has an empty map.
// Values are immutable after construction and safe to share across threads.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Int>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(Int c);
  static LaurentPoly one() { return constant(1); }
  // c * t^e
  static LaurentPoly monomial(Int c, std::int64_t e);
  static LaurentPoly t(std::int64_t e = 1) { return monomial(1, e); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Int coeff(std::int64_t e) const;
  std::int64_t min_exp() const;  // requires nonzero
  std::int64_t max_exp() const;  // requires nonzero
  std::int64_t span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // t -> t^{-1}, the conjugation involution of the ring.
  LaurentPoly involute() const;

  // t^j * p
  LaurentPoly shifted(std::int64_t j) const;

  Int evaluate_at_one() const;
  // Evaluate at a nonzero rational point.
  Rat evaluate(const Rat& r) const;

  // Exact division in Z[t^{±1}]: returns q with *this = d * q, or nullopt
  // when no such integer Laurent polynomial exists.
  std::optional<LaurentPoly> divided_by(const LaurentPoly& d) const;

  // Deterministic structural order: by term count, then by the
  // (exponent, coefficient) sequence.  Used to pick class representatives.
  static bool struct_less(const LaurentPoly& a, const LaurentPoly& b);

  // Textual syntax: signed monomials "c*t^e" joined by '+'/'-',
  // e.g. "-2*t^1 + 3 - 2*t^-1".  parse() accepts relaxed spacing and
  // bare "t"/"t^e" monomials; str() emits the canonical form, which
  // round-trips through parse().
  std::string str() const;
  static LaurentPoly parse(std::string_view text);

 private:
  Terms terms_;
};

// An Alexander polynomial in its canonical form: symmetric under the
// involution and evaluating to -1 at t = 1.
class AlexanderPoly {
 public:
  explicit AlexanderPoly(LaurentPoly p);
  const LaurentPoly& poly() const { return poly_; }
  std::string str() const { return poly_.str(); }
  bool operator==(const AlexanderPoly& o) const { return poly_ == o.poly_; }

 private:
  LaurentPoly poly_;
};

// The quadratic family n*t - (2n+1) + n*t^{-1}; n = 0 gives the constant -1.
AlexanderPoly delta_n(std::int64_t n);

// Multiplies p by the unique ±t^k that makes it symmetric with value -1 at 1.
// Throws Errc::bad_shape when no unit multiple is symmetric or p(1) is not ±1.
AlexanderPoly normalize_alexander(const LaurentPoly& p);

// Recovers n when p equals delta_n(n); n = 0 for the constant -1.
std::optional<std::int64_t> recognize_quadratic(const AlexanderPoly& p);

}  // namespace zdisk
