#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zdisk/laurent.hpp"
#include "zdisk/localized.hpp"
#include "zdisk/quadint.hpp"

namespace zdisk {

enum class ShiftMode { t_only, plus_minus_t };

// Witness that u = sign * t^j * v holds exactly in the quotient ring.
struct TShiftWitness {
  std::int64_t j = 0;
  int sign = 1;  // always +1 in t_only mode
};

// Element of Lambda_n = Z[t^{±1}]/(n*t - (2n+1) + n*t^{-1}), stored in the
// coordinates of the canonical embedding:
//   irreducible discriminant: u + v*xi in Z[1/n, xi], with t -> (n + xi)/n;
//   reducible (n = m(m+1)):   a pair in Z[1/n] ⊕ Z[1/n], with
//                             t -> (m/(m+1), (m+1)/m);
//   n = 0:                    the trivial ring, whose unique element is 0 = 1.
// Coordinate equality is ring equality, since both embeddings have kernel
// exactly (delta_n).
class LambdaElement {
 public:
  enum class Case { irreducible, reducible, trivial };

  static LambdaElement from_int(const Int& v, const DiscriminantData& ctx);
  static LambdaElement one(const DiscriminantData& ctx) { return from_int(1, ctx); }
  static LambdaElement zero(const DiscriminantData& ctx) { return from_int(0, ctx); }
  // (u, v) meaning u + v*xi; requires an irreducible context.
  static LambdaElement from_xi_coords(Rat u, Rat v, const DiscriminantData& ctx);
  // Componentwise pair; requires a reducible context, and the pair must lie
  // in the image subring S (second - first divisible by 2m+1 in Z[1/n]).
  static LambdaElement from_pair(Rat a, Rat b, const DiscriminantData& ctx);

  const DiscriminantData& context() const { return ctx_; }
  Case element_case() const { return case_; }
  // Coordinate pair: (u, v) / (a, b) / (0, 0).
  const Rat& first() const { return c0_; }
  const Rat& second() const { return c1_; }

  bool operator==(const LambdaElement& o) const;
  bool operator!=(const LambdaElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  LambdaElement(Case c, Rat c0, Rat c1, DiscriminantData ctx);
  DiscriminantData ctx_;
  Case case_;
  Rat c0_, c1_;
};

// Ring homomorphism Z[t^{±1}] -> Lambda_n with kernel (delta_n).
LambdaElement embed(const LaurentPoly& p, const DiscriminantData& ctx);

LambdaElement lambda_mul(const LambdaElement& a, const LambdaElement& b);
LambdaElement lambda_add(const LambdaElement& a, const LambdaElement& b);
LambdaElement lambda_neg(const LambdaElement& a);
// Conjugation induced by t -> t^{-1}: (u, v) -> (u + v, -v) in xi-coordinates,
// component swap in the reducible case.
LambdaElement lambda_conj(const LambdaElement& a);
// a * conj(a)
LambdaElement lambda_norm(const LambdaElement& a);
bool is_unitary(const LambdaElement& a);
// Integer power; negative exponents require a unitary element.
LambdaElement lambda_pow(const LambdaElement& a, std::int64_t e);

// Decides whether u = sign * t^j * v in Lambda_n and returns the exact
// witness.  The candidate exponent is derived exactly (prime-ideal valuations
// in the irreducible case, p-adic valuations of the first coordinate in the
// reducible case) and then verified by exact arithmetic, so both presence and
// absence are proven.  The torsion contexts n = -1, 1 use a bounded scan of
// the t-orbit.  Inputs must be unitary.
std::optional<TShiftWitness> t_shift_class(const LambdaElement& u, const LambdaElement& v,
                                           ShiftMode mode);

// Deterministic representative of the class {±t^k * u}: minimizes the total
// prime-valuation imbalance over shifts, breaking ties by coordinate order.
LambdaElement canonical_shift_rep(const LambdaElement& u, ShiftMode mode = ShiftMode::t_only);

}  // namespace zdisk
