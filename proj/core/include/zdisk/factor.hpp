#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zdisk/numeric.hpp"

namespace zdisk {

// Inputs whose magnitude exceeds this are rejected with Errc::factorization_limit
// rather than risking an incomplete factorization.  Overridable per call (the CLI
// wires it to the ZDISK_FACTOR_LIMIT environment variable).
inline constexpr std::uint64_t kDefaultFactorLimit = 1'000'000'000'000'000'000ULL;

struct Factorization {
  // (prime, multiplicity), primes ascending.  Factorization of |n|; sign kept aside.
  std::vector<std::pair<Int, int>> primes;
  int sign = 1;

  int omega() const { return (int)primes.size(); }
};

bool is_prime_u64(std::uint64_t n);

// Factors |n| completely (trial division then deterministic Brent-rho).
// Throws Errc::factorization_limit when |n| > limit, Errc::invalid_argument for n = 0.
Factorization factor(const Int& n, std::uint64_t limit = kDefaultFactorLimit);

// Number of distinct positive primes dividing n.
int omega(const Int& n, std::uint64_t limit = kDefaultFactorLimit);

// If |n| = p^k for a prime p, reports (p, k).
bool is_prime_power(const Int& n, Int* p, int* k, std::uint64_t limit = kDefaultFactorLimit);

// Splits |v| = c^2 * d with d squarefree; returns (c, d) with d carrying the sign of v.
std::pair<Int, Int> squarefree_decomposition(const Int& v, std::uint64_t limit = kDefaultFactorLimit);

}  // namespace zdisk
