#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zdisk/factor.hpp"
#include "zdisk/numeric.hpp"

namespace zdisk {

// Discriminant bookkeeping for the quadratic family: disc = 4n+1 = c^2 d with
// d squarefree.  The polynomial is reducible exactly when disc is a perfect
// square, i.e. n = m(m+1).
struct DiscriminantData {
  std::int64_t n = 0;
  Int disc;             // 4n + 1
  Int c;                // positive
  Int d;                // squarefree, disc = c^2 d
  bool reducible = false;
  std::optional<std::int64_t> m;  // set iff reducible and n > 0
  int omega_n = 0;                // distinct positive primes dividing n (0 for n = 0)
  bool degenerate = false;        // n == 0: the quotient ring is trivial
};

DiscriminantData analyze_discriminant(std::int64_t n, std::uint64_t factor_limit = kDefaultFactorLimit);

// An element x + y*omega of the quadratic field Q(sqrt(d)), d squarefree:
//   omega = (1+sqrt(d))/2  when d = 1 mod 4   (omega^2 = omega + (d-1)/4)
//   omega = sqrt(d)        when d = 2,3 mod 4 (omega^2 = d)
// Coordinates are exact rationals; "integral" means both lie in Z.
class QuadIntElement {
 public:
  QuadIntElement(Rat x, Rat y, Int d);

  static QuadIntElement from_int(Int v, const Int& d) { return {Rat(std::move(v)), Rat(0), d}; }
  static QuadIntElement omega(const Int& d) { return {Rat(0), Rat(1), d}; }
  // xi = (1 + c*sqrt(d))/2 = c*omega - (c-1)/2, for d = 1 mod 4.
  static QuadIntElement xi(const Int& c, const Int& d);

  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }
  const Int& d() const { return d_; }
  bool is_integral() const { return den(x_) == 1 && den(y_) == 1; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  QuadIntElement operator+(const QuadIntElement& o) const;
  QuadIntElement operator-(const QuadIntElement& o) const;
  QuadIntElement operator-() const;
  QuadIntElement operator*(const QuadIntElement& o) const;
  QuadIntElement operator*(const Rat& r) const;
  QuadIntElement operator/(const QuadIntElement& o) const;  // exact; o must be nonzero
  bool operator==(const QuadIntElement& o) const;

  QuadIntElement conj() const;
  Rat norm() const;   // x * conj(x)
  Rat trace() const;  // x + conj(x)
  QuadIntElement pow(long e) const;  // negative e inverts (element must have nonzero norm)

  std::string str() const;

 private:
  void check_context(const QuadIntElement& o) const;
  Rat x_, y_;
  Int d_;
};

enum class SplittingType { ramified, split, inert };

// Factorization shape of (p) in Z[omega] for d = 1 mod 4 squarefree:
// ramified iff p | d; otherwise split/inert by the quadratic-residue test
// (for p = 2: d = 1 mod 8 splits, d = 5 mod 8 is inert).
SplittingType splitting_type(const Int& p, const Int& d);

// Ideal of Z[omega] in Hermite normal form: a*Z + (b + g*omega)*Z with
// a, g > 0, g | a, g | b, a*g | Norm(b + g*omega), 0 <= b < a.
class QuadIdeal {
 public:
  QuadIdeal(Int a, Int b, Int g, Int d);  // validates the HNF invariants

  static QuadIdeal unit_ideal(const Int& d) { return {1, 0, 1, d}; }
  static QuadIdeal principal(const QuadIntElement& z);  // z integral and nonzero
  // Z[omega]-ideal generated by a list of integral elements.
  static QuadIdeal from_generators(const std::vector<QuadIntElement>& gens);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& g() const { return g_; }
  const Int& d() const { return d_; }

  Int norm() const { return a_ * g_; }
  bool is_unit_ideal() const { return a_ == 1 && g_ == 1; }
  QuadIdeal conj() const;
  bool contains(const QuadIntElement& z) const;  // z integral
  bool operator==(const QuadIdeal& o) const {
    return a_ == o.a_ && b_ == o.b_ && g_ == o.g_ && d_ == o.d_;
  }

  std::string str() const;

 private:
  Int a_, b_, g_, d_;
};

QuadIdeal ideal_mul(const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal ideal_pow(const QuadIdeal& i, unsigned e);
inline Int ideal_norm(const QuadIdeal& i) { return i.norm(); }

// p-adic valuation of a nonzero integral element at a prime ideal.
int ideal_valuation(const QuadIdeal& prime, const QuadIntElement& z);

// Searches for a generator.  Imaginary d: exhaustive over the norm form, so
// absence is definitive.  Real d: continued-fraction reduction of the
// associated indefinite form, walking its full cycle; absence is definitive,
// but exceeding `cap` steps throws Errc::search_inconclusive.
std::optional<QuadIntElement> is_principal(const QuadIdeal& ideal, std::uint64_t cap = 4'000'000);

struct ClassGroupData {
  Int d;
  std::optional<Int> h;
  enum class Method { reduced_forms, bounded_search, unknown } method = Method::unknown;
};

// Class number of Z[omega].  d < 0: reduced-form enumeration (always exact).
// d > 0: cycle counting over reduced indefinite forms, downgrading to
// method = unknown past the cap.
ClassGroupData class_number(const Int& d, std::uint64_t cap = 4'000'000);

// Fundamental unit of Z[omega] for d > 0, from the continued fraction of
// omega.  Throws Errc::iteration_limit past the cap.
QuadIntElement fundamental_unit(const Int& d, std::uint64_t cap = 4'000'000);

// Torsion units of Z[omega] for d < 0: {±1, ±i} for d = -1, six units for
// d = -3, {±1} otherwise.
std::vector<QuadIntElement> unit_torsion(const Int& d);

// Prime-ideal factorization of (n) in Z[omega] for the irreducible family:
// every prime of n splits, and the two primes over p are (p, xi) and
// (p, conj(xi)), listed in that order with multiplicity v_p(n).
std::vector<std::pair<QuadIdeal, int>> factor_n_ideal(const DiscriminantData& data,
                                                      std::uint64_t factor_limit = kDefaultFactorLimit);

}  // namespace zdisk
