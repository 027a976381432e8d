#include "zdisk/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace zdisk {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (n % a == 0) return n == a;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Deterministic for all 64-bit inputs with this witness set.
const u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

u64 pollard_brent(u64 n) {
  if ((n & 1) == 0) return 2;
  u64 c = 1;
  for (;;) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
    const u64 m = 128;
    u64 r = 1;
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      // Back up and retry step by step; on failure restart with a new constant.
      d = 1;
      while (d == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_u64(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : kWitnesses) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Factorization factor(const Int& n, std::uint64_t limit) {
  if (n == 0) throw Error(Errc::invalid_argument, "factor(0)");
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  Int a = abs_int(n);
  if (a > Int(limit)) {
    throw Error(Errc::factorization_limit,
                "factorization limit exceeded for |n| = " + a.str());
  }
  u64 v = (u64)a;
  std::map<u64, int> m;
  // Trial division knocks out small primes before rho takes over.
  for (u64 p = 2; p <= 1'000'000 && p * p <= v; p += (p == 2 ? 1 : 2)) {
    while (v % p == 0) {
      v /= p;
      ++m[p];
    }
  }
  if (v > 1) factor_u64(v, m);
  for (auto& [p, e] : m) f.primes.emplace_back(Int(p), e);
  return f;
}

int omega(const Int& n, std::uint64_t limit) {
  if (n == 0) throw Error(Errc::invalid_argument, "omega(0)");
  if (abs_int(n) == 1) return 0;
  return factor(n, limit).omega();
}

bool is_prime_power(const Int& n, Int* p, int* k, std::uint64_t limit) {
  if (n == 0 || abs_int(n) == 1) return false;
  Factorization f = factor(n, limit);
  if (f.primes.size() != 1) return false;
  if (p) *p = f.primes[0].first;
  if (k) *k = f.primes[0].second;
  return true;
}

std::pair<Int, Int> squarefree_decomposition(const Int& v, std::uint64_t limit) {
  if (v == 0) throw Error(Errc::invalid_argument, "squarefree_decomposition(0)");
  Factorization f = factor(v, limit);
  Int c = 1, d = f.sign;
  for (auto& [p, e] : f.primes) {
    c *= pow_int(p, e / 2);
    if (e % 2) d *= p;
  }
  return {c, d};
}

}  // namespace zdisk
