#include "zdisk/lambda.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace zdisk {
namespace {

void check_same_context(const LambdaElement& a, const LambdaElement& b) {
  if (a.context().n != b.context().n) {
    throw Error(Errc::invalid_argument, "mixed quotient-ring contexts");
  }
}

Rat xi_norm(const Rat& u, const Rat& v, std::int64_t n) {
  // N(u + v*xi) with xi^2 = n + xi.
  return u * u + u * v - Rat(n) * v * v;
}

// omega-basis coordinates of u + v*xi, where xi = c*omega - (c-1)/2.
std::pair<Rat, Rat> omega_coords(const Rat& u, const Rat& v, const DiscriminantData& ctx) {
  return {u - v * Rat(ctx.c - 1) / 2, v * Rat(ctx.c)};
}

}  // namespace

LambdaElement::LambdaElement(Case c, Rat c0, Rat c1, DiscriminantData ctx)
    : ctx_(std::move(ctx)), case_(c), c0_(std::move(c0)), c1_(std::move(c1)) {}

LambdaElement LambdaElement::from_int(const Int& v, const DiscriminantData& ctx) {
  if (ctx.degenerate) return LambdaElement(Case::trivial, 0, 0, ctx);
  if (ctx.reducible) return LambdaElement(Case::reducible, Rat(v), Rat(v), ctx);
  return LambdaElement(Case::irreducible, Rat(v), 0, ctx);
}

LambdaElement LambdaElement::from_xi_coords(Rat u, Rat v, const DiscriminantData& ctx) {
  if (ctx.degenerate || ctx.reducible) {
    throw Error(Errc::invalid_argument, "xi-coordinates require an irreducible context");
  }
  Int n(ctx.n);
  if (!denominator_supported(u, n) || !denominator_supported(v, n)) {
    throw Error(Errc::denominator_not_supported,
                "coordinates must lie in Z[1/n] for n = " + std::to_string(ctx.n));
  }
  return LambdaElement(Case::irreducible, std::move(u), std::move(v), ctx);
}

LambdaElement LambdaElement::from_pair(Rat a, Rat b, const DiscriminantData& ctx) {
  if (!ctx.reducible || ctx.degenerate) {
    throw Error(Errc::invalid_argument, "pair coordinates require a reducible context");
  }
  Int n(ctx.n);
  ReduciblePair pair(make_localized(a, n), make_localized(b, n), *ctx.m);
  if (!in_s(pair)) {
    throw Error(Errc::bad_shape, "pair lies outside the image subring S");
  }
  return LambdaElement(Case::reducible, std::move(a), std::move(b), ctx);
}

bool LambdaElement::operator==(const LambdaElement& o) const {
  if (ctx_.n != o.ctx_.n) return false;
  if (case_ == Case::trivial) return true;
  return c0_ == o.c0_ && c1_ == o.c1_;
}

std::string LambdaElement::str() const {
  std::ostringstream os;
  switch (case_) {
    case Case::trivial:
      os << "0";
      break;
    case Case::irreducible:
      os << rat_str(c0_) << " + " << rat_str(c1_) << "*xi";
      break;
    case Case::reducible:
      os << "(" << rat_str(c0_) << ", " << rat_str(c1_) << ")";
      break;
  }
  return os.str();
}

LambdaElement embed(const LaurentPoly& p, const DiscriminantData& ctx) {
  if (ctx.degenerate) return LambdaElement::from_int(0, ctx);
  if (ctx.reducible) {
    Rat r1 = Rat(*ctx.m) / Rat(*ctx.m + 1);
    return LambdaElement::from_pair(p.evaluate(r1), p.evaluate(1 / r1), ctx);
  }
  // Horner-style evaluation at f(t) = 1 + xi/n, using f(t)^{-1} = conj(f(t)).
  LambdaElement ft = LambdaElement::from_xi_coords(1, Rat(1) / ctx.n, ctx);
  LambdaElement acc = LambdaElement::zero(ctx);
  for (const auto& [e, coeff] : p.terms()) {
    LambdaElement term = lambda_pow(ft, e);
    acc = lambda_add(acc, lambda_mul(LambdaElement::from_int(coeff, ctx), term));
  }
  return acc;
}

LambdaElement lambda_add(const LambdaElement& a, const LambdaElement& b) {
  check_same_context(a, b);
  if (a.element_case() == LambdaElement::Case::trivial) return a;
  if (a.element_case() == LambdaElement::Case::reducible) {
    return LambdaElement::from_pair(a.first() + b.first(), a.second() + b.second(), a.context());
  }
  return LambdaElement::from_xi_coords(a.first() + b.first(), a.second() + b.second(), a.context());
}

LambdaElement lambda_neg(const LambdaElement& a) {
  if (a.element_case() == LambdaElement::Case::trivial) return a;
  if (a.element_case() == LambdaElement::Case::reducible) {
    return LambdaElement::from_pair(-a.first(), -a.second(), a.context());
  }
  return LambdaElement::from_xi_coords(-a.first(), -a.second(), a.context());
}

LambdaElement lambda_mul(const LambdaElement& a, const LambdaElement& b) {
  check_same_context(a, b);
  switch (a.element_case()) {
    case LambdaElement::Case::trivial:
      return a;
    case LambdaElement::Case::reducible:
      return LambdaElement::from_pair(a.first() * b.first(), a.second() * b.second(), a.context());
    case LambdaElement::Case::irreducible: {
      // (u1 + v1 xi)(u2 + v2 xi) with xi^2 = n + xi.
      const Rat &u1 = a.first(), &v1 = a.second(), &u2 = b.first(), &v2 = b.second();
      Rat cross = v1 * v2;
      return LambdaElement::from_xi_coords(u1 * u2 + Rat(a.context().n) * cross,
                                           u1 * v2 + v1 * u2 + cross, a.context());
    }
  }
  throw Error(Errc::invalid_argument, "unreachable");
}

LambdaElement lambda_conj(const LambdaElement& a) {
  switch (a.element_case()) {
    case LambdaElement::Case::trivial:
      return a;
    case LambdaElement::Case::reducible:
      return LambdaElement::from_pair(a.second(), a.first(), a.context());
    case LambdaElement::Case::irreducible:
      // conj(xi) = 1 - xi
      return LambdaElement::from_xi_coords(a.first() + a.second(), -a.second(), a.context());
  }
  throw Error(Errc::invalid_argument, "unreachable");
}

LambdaElement lambda_norm(const LambdaElement& a) { return lambda_mul(a, lambda_conj(a)); }

bool is_unitary(const LambdaElement& a) {
  return lambda_norm(a) == LambdaElement::one(a.context());
}

LambdaElement lambda_pow(const LambdaElement& a, std::int64_t e) {
  LambdaElement base = a;
  if (e < 0) {
    if (!is_unitary(a)) {
      throw Error(Errc::invalid_argument, "negative power of a non-unitary element");
    }
    base = lambda_conj(a);
  }
  std::uint64_t k = e < 0 ? (std::uint64_t)(-(e + 1)) + 1 : (std::uint64_t)e;
  LambdaElement acc = LambdaElement::one(a.context());
  while (k) {
    if (k & 1) acc = lambda_mul(acc, base);
    base = lambda_mul(base, base);
    k >>= 1;
  }
  return acc;
}

namespace {

struct PrimeValuationContext {
  std::vector<QuadIdeal> primes;     // irreducible: the xi-side prime over each p
  std::vector<Int> rational_primes;  // the p themselves (both cases)
  std::vector<int> t_valuations;     // valuation of the image of t at each prime
};

// Valuation data shared by the shift search and canonicalization.
PrimeValuationContext valuation_context(const DiscriminantData& ctx) {
  PrimeValuationContext out;
  Factorization f = factor(Int(ctx.n));
  if (ctx.reducible) {
    Rat t_image = Rat(*ctx.m) / Rat(*ctx.m + 1);
    for (const auto& [p, mult] : f.primes) {
      out.rational_primes.push_back(p);
      out.t_valuations.push_back((int)p_valuation(p, t_image));
    }
    return out;
  }
  QuadIntElement xi = QuadIntElement::xi(ctx.c, ctx.d);
  for (const auto& [p, mult] : f.primes) {
    out.primes.push_back(QuadIdeal::from_generators({QuadIntElement::from_int(p, ctx.d), xi}));
    out.rational_primes.push_back(p);
    // v(t) = v(xi^2 / n) = 2*mult - mult at the xi-side prime.
    out.t_valuations.push_back(mult);
  }
  return out;
}

// Valuation of a nonzero element at the xi-side prime over p, handling
// rational coordinates by scaling to an integral element.
long lambda_valuation(const LambdaElement& w, const QuadIdeal& prime, const Int& p) {
  auto [x, y] = omega_coords(w.first(), w.second(), w.context());
  Int scale = boost::multiprecision::lcm(den(x), den(y));
  QuadIntElement z(x * Rat(scale), y * Rat(scale), w.context().d);
  return ideal_valuation(prime, z) - p_valuation(p, Rat(scale));
}

std::optional<TShiftWitness> verify_shift(const LambdaElement& w, const LambdaElement& t_img,
                                          std::int64_t j, ShiftMode mode) {
  LambdaElement tj = lambda_pow(t_img, j);
  if (w == tj) return TShiftWitness{j, 1};
  if (mode == ShiftMode::plus_minus_t && w == lambda_neg(tj)) return TShiftWitness{j, -1};
  return std::nullopt;
}

// Bounded orbit scan for the torsion-like contexts n = -1 (t has order 6)
// and n = 1 (coordinates of t^j grow geometrically, so the scan radius is
// logarithmic in the size of w).
std::optional<TShiftWitness> shift_by_scan(const LambdaElement& w, const LambdaElement& t_img,
                                           ShiftMode mode) {
  if (w.context().n == -1) {
    for (std::int64_t j = 0; j < 6; ++j) {
      if (auto witness = verify_shift(w, t_img, j, mode)) return witness;
    }
    return std::nullopt;
  }
  auto bits = [](const Rat& q) {
    Int n = abs_int(num(q)), d = den(q);
    return (long)(n == 0 ? 0 : boost::multiprecision::msb(n) + 1) +
           (long)(boost::multiprecision::msb(d) + 1);
  };
  long radius = bits(w.first()) + bits(w.second()) + 8;
  for (std::int64_t j = 0; j <= radius; ++j) {
    if (auto witness = verify_shift(w, t_img, j, mode)) return witness;
    if (j > 0) {
      if (auto witness = verify_shift(w, t_img, -j, mode)) return witness;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TShiftWitness> t_shift_class(const LambdaElement& u, const LambdaElement& v,
                                           ShiftMode mode) {
  check_same_context(u, v);
  const DiscriminantData& ctx = u.context();
  if (ctx.degenerate) return TShiftWitness{0, 1};
  if (!is_unitary(u) || !is_unitary(v)) {
    throw Error(Errc::invalid_argument, "t_shift_class requires unitary inputs");
  }
  LambdaElement w = lambda_mul(u, lambda_conj(v));  // u / v
  LambdaElement t_img = embed(LaurentPoly::t(), ctx);
  if (ctx.n == 1 || ctx.n == -1) return shift_by_scan(w, t_img, mode);

  PrimeValuationContext pv = valuation_context(ctx);
  long val;
  int tval = pv.t_valuations.front();
  if (ctx.reducible) {
    val = p_valuation(pv.rational_primes.front(), w.first());
  } else {
    val = lambda_valuation(w, pv.primes.front(), pv.rational_primes.front());
  }
  if (val % tval != 0) return std::nullopt;
  return verify_shift(w, t_img, val / tval, mode);
}

LambdaElement canonical_shift_rep(const LambdaElement& u, ShiftMode mode) {
  const DiscriminantData& ctx = u.context();
  if (ctx.degenerate) return u;
  if (!is_unitary(u)) {
    throw Error(Errc::invalid_argument, "canonical_shift_rep requires a unitary element");
  }
  LambdaElement t_img = embed(LaurentPoly::t(), ctx);

  auto coord_less = [](const LambdaElement& a, const LambdaElement& b) {
    if (a.first() != b.first()) return a.first() < b.first();
    return a.second() < b.second();
  };
  auto better_sign = [&](const LambdaElement& e) {
    if (mode == ShiftMode::t_only) return e;
    LambdaElement neg = lambda_neg(e);
    return coord_less(neg, e) ? neg : e;
  };

  if (ctx.n == 1 || ctx.n == -1) {
    // Small orbit: size-first, then coordinate order.
    auto bits = [](const Rat& q) {
      Int n = abs_int(num(q)), d = den(q);
      return (long)(n == 0 ? 0 : boost::multiprecision::msb(n) + 1) +
             (long)(boost::multiprecision::msb(d) + 1);
    };
    auto size_of = [&](const LambdaElement& e) { return bits(e.first()) + bits(e.second()); };
    LambdaElement best = better_sign(u);
    long range = ctx.n == -1 ? 6 : size_of(u) + 8;
    for (std::int64_t j = -range; j <= range; ++j) {
      LambdaElement cand = better_sign(lambda_mul(u, lambda_pow(t_img, j)));
      if (size_of(cand) < size_of(best) ||
          (size_of(cand) == size_of(best) && coord_less(cand, best))) {
        best = cand;
      }
    }
    return best;
  }

  PrimeValuationContext pv = valuation_context(ctx);
  std::vector<long> vals;
  for (size_t i = 0; i < pv.rational_primes.size(); ++i) {
    if (ctx.reducible) {
      vals.push_back(p_valuation(pv.rational_primes[i], u.first()));
    } else {
      vals.push_back(lambda_valuation(u, pv.primes[i], pv.rational_primes[i]));
    }
  }
  // Total imbalance sum_i |v_i + j*tval_i| is convex in j; scan a window that
  // certainly contains the minimum.
  std::int64_t lo = 0, hi = 0;
  for (size_t i = 0; i < vals.size(); ++i) {
    std::int64_t root = -vals[i] / pv.t_valuations[i];
    lo = std::min(lo, root - 2);
    hi = std::max(hi, root + 2);
  }
  auto imbalance = [&](std::int64_t j) {
    long s = 0;
    for (size_t i = 0; i < vals.size(); ++i) s += std::abs(vals[i] + j * pv.t_valuations[i]);
    return s;
  };
  std::int64_t best_j = lo;
  LambdaElement best = better_sign(lambda_mul(u, lambda_pow(t_img, lo)));
  for (std::int64_t j = lo + 1; j <= hi; ++j) {
    LambdaElement cand = better_sign(lambda_mul(u, lambda_pow(t_img, j)));
    if (imbalance(j) < imbalance(best_j) ||
        (imbalance(j) == imbalance(best_j) && coord_less(cand, best))) {
      best_j = j;
      best = cand;
    }
  }
  return best;
}

}  // namespace zdisk
