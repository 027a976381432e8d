#include "zdisk/localized.hpp"

namespace zdisk {

namespace {

// Strips from v every prime factor it shares with n; returns the cofactor.
Int strip_against(Int v, const Int& n) {
  if (n == 0) throw Error(Errc::invalid_argument, "localization context n must be nonzero");
  Int base = abs_int(n);
  if (base == 1) return v;
  for (;;) {
    Int g = boost::multiprecision::gcd(v, base);
    if (g == 1) return v;
    while (v % g == 0) v /= g;
  }
}

}  // namespace

bool denominator_supported(const Rat& q, const Int& n) {
  return strip_against(den(q), n) == 1;
}

bool is_unit_in_z1n(const Rat& q, const Int& n) {
  if (q == 0) return false;
  return strip_against(den(q), n) == 1 && strip_against(abs_int(num(q)), n) == 1;
}

LocalizedRational::LocalizedRational(Rat value, Int n) : value_(std::move(value)), n_(std::move(n)) {
  if (n_ == 0) throw Error(Errc::invalid_argument, "localization context n must be nonzero");
  if (!denominator_supported(value_, n_)) {
    throw Error(Errc::denominator_not_supported,
                "denominator of " + rat_str(value_) + " not supported on primes of " + n_.str());
  }
}

LocalizedRational LocalizedRational::operator+(const LocalizedRational& o) const {
  return LocalizedRational(value_ + o.value_, n_);
}

LocalizedRational LocalizedRational::operator-(const LocalizedRational& o) const {
  return LocalizedRational(value_ - o.value_, n_);
}

LocalizedRational LocalizedRational::operator*(const LocalizedRational& o) const {
  return LocalizedRational(value_ * o.value_, n_);
}

LocalizedRational LocalizedRational::operator/(const LocalizedRational& o) const {
  if (o.value_ == 0) throw Error(Errc::invalid_argument, "division by zero");
  return LocalizedRational(value_ / o.value_, n_);
}

int unit_group_rank_z1n(std::int64_t n, std::uint64_t limit) {
  if (n == 0) throw Error(Errc::invalid_argument, "unit_group_rank_z1n(0)");
  return omega(Int(n), limit);
}

ReduciblePair::ReduciblePair(LocalizedRational a, LocalizedRational b, std::int64_t m_in)
    : first(std::move(a)), second(std::move(b)), m(m_in) {
  if (m < 1) throw Error(Errc::invalid_argument, "ReduciblePair needs m >= 1");
}

bool in_s(const ReduciblePair& p) {
  Rat diff = p.second.value() - p.first.value();
  return denominator_supported(diff / Rat(2 * Int(p.m) + 1), p.n());
}

bool in_t(const Rat& x, std::int64_t m) {
  if (m < 1) throw Error(Errc::invalid_argument, "in_t needs m >= 1");
  if (x == 0) return false;
  Int n = Int(m) * (m + 1);
  if (!is_unit_in_z1n(x, n)) return false;
  Rat diff = x - Rat(1) / x;
  return denominator_supported(diff / Rat(2 * Int(m) + 1), n);
}

}  // namespace zdisk
