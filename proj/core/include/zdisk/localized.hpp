#pragma once

#include <cstdint>

#include "zdisk/factor.hpp"
#include "zdisk/numeric.hpp"

namespace zdisk {

// True when every prime of q's reduced denominator divides n.  Checked by
// repeated gcd-stripping, so no factorization of n is needed.
bool denominator_supported(const Rat& q, const Int& n);

// True when q is a unit of Z[1/n]: numerator and denominator both strip
// to ±1 against n.
bool is_unit_in_z1n(const Rat& q, const Int& n);

// A rational constrained to the subring Z[1/n] (denominator supported on the
// primes of n).  Immutable.
class LocalizedRational {
 public:
  LocalizedRational(Rat value, Int n);  // throws Errc::denominator_not_supported

  const Rat& value() const { return value_; }
  const Int& context() const { return n_; }

  LocalizedRational operator+(const LocalizedRational& o) const;
  LocalizedRational operator-(const LocalizedRational& o) const;
  LocalizedRational operator*(const LocalizedRational& o) const;
  // Valid only when the divisor is a unit of Z[1/n].
  LocalizedRational operator/(const LocalizedRational& o) const;
  bool operator==(const LocalizedRational& o) const { return value_ == o.value_; }

 private:
  Rat value_;
  Int n_;
};

inline LocalizedRational make_localized(const Rat& q, const Int& n) {
  return LocalizedRational(q, n);
}

// rk(Z[1/n]^x) = number of distinct positive primes dividing n.
int unit_group_rank_z1n(std::int64_t n, std::uint64_t limit = kDefaultFactorLimit);

// An element of Z[1/n] ⊕ Z[1/n] in the split quotient-ring picture, with
// n = m(m+1).  Membership in the image subring S is the in_s() predicate.
struct ReduciblePair {
  LocalizedRational first;
  LocalizedRational second;
  std::int64_t m;

  ReduciblePair(LocalizedRational a, LocalizedRational b, std::int64_t m);
  Int n() const { return Int(m) * (m + 1); }
  bool operator==(const ReduciblePair& o) const {
    return first == o.first && second == o.second && m == o.m;
  }
};

// second - first ∈ (2m+1) * Z[1/n].
bool in_s(const ReduciblePair& p);

// x is a unit of Z[1/n] and x - x^{-1} ∈ (2m+1) * Z[1/n].  These x form the
// group the unitary units land in for the split quotient ring.
bool in_t(const Rat& x, std::int64_t m);

}  // namespace zdisk
