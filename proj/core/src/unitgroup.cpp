#include "zdisk/unitgroup.hpp"

#include <algorithm>

namespace zdisk {

const char* const kDiskCountCaveat =
    "counts assume the knot bounds a Z-disk in the punctured CP^2; "
    "existence is not decided by this tool";

namespace {

constexpr const char* kBestEffortFlag = "generators_best_effort";
constexpr const char* kSaturationFallbackFlag = "saturation_fallback_to_h";

void add_flag(std::vector<std::string>& flags, const char* flag) {
  if (std::find(flags.begin(), flags.end(), flag) == flags.end()) flags.emplace_back(flag);
}

std::optional<LambdaElement> lambda_from_omega_coords(const QuadIntElement& z,
                                                      const DiscriminantData& ctx) {
  // x + y*omega = u + v*xi with xi = c*omega - (c-1)/2.
  Rat v = z.y() / Rat(ctx.c);
  Rat u = z.x() + v * Rat(ctx.c - 1) / 2;
  Int n(ctx.n);
  if (!denominator_supported(u, n) || !denominator_supported(v, n)) return std::nullopt;
  return LambdaElement::from_xi_coords(u, v, ctx);
}

// Raises a unitary element of Z[1/n, omega] to small powers until its
// coordinates land in Z[1/n, xi].  Some power always does; the bound keeps
// pathological c from stalling the classifier.
std::optional<LambdaElement> descend_to_xi_ring(const QuadIntElement& w,
                                                const DiscriminantData& ctx) {
  QuadIntElement acc = w;
  for (int e = 1; e <= 64; ++e) {
    if (auto el = lambda_from_omega_coords(acc, ctx)) return el;
    acc = acc * w;
  }
  return std::nullopt;
}

struct SaturationGenerator {
  std::int64_t s = 0;
  QuadIntElement element;  // y with prime^s = (y)
};

// Least s with prime^s principal, scanning s = 1..bound.  Inconclusive
// principality tests at individual s are skipped (recorded by the caller as a
// best-effort degradation).
std::optional<SaturationGenerator> least_principal_power(const QuadIdeal& prime,
                                                         std::int64_t bound,
                                                         std::uint64_t cap,
                                                         bool* inconclusive_seen) {
  QuadIdeal acc = prime;
  for (std::int64_t s = 1; s <= bound; ++s) {
    try {
      if (auto gen = is_principal(acc, cap)) return SaturationGenerator{s, *gen};
    } catch (const Error& e) {
      if (e.code() != Errc::search_inconclusive) throw;
      if (inconclusive_seen) *inconclusive_seen = true;
    }
    if (s < bound) acc = ideal_mul(acc, prime);
  }
  return std::nullopt;
}

// Best-effort free generators for the infinite irreducible case, following
// the saturation recipe: factor (n), take the least principal power of the
// xi-side prime over each p, and turn its generator y into the unitary unit
// y/conj(y).  For n > 0 the fundamental unit contributes one more generator;
// the prime over the largest p is dropped so that the list stays independent
// of the image of t.
void irreducible_generators(const DiscriminantData& ctx, const ClassifyOptions& opts,
                            UnitGroupStructure& out) {
  ClassGroupData cg = class_number(ctx.d, opts.search_cap);
  out.class_data = cg;
  if (!cg.h) {
    add_flag(out.flags, kBestEffortFlag);
    return;
  }
  std::int64_t bound = std::min<Int>(*cg.h, Int(1024)).convert_to<std::int64_t>();
  std::vector<LambdaElement> gens;
  bool degraded = false;

  if (ctx.n > 0) {
    try {
      QuadIntElement eps = fundamental_unit(ctx.d, opts.search_cap);
      QuadIntElement unit_gen = eps / eps.conj();
      if (auto el = descend_to_xi_ring(unit_gen, ctx)) {
        gens.push_back(canonical_shift_rep(*el));
      } else {
        degraded = true;
      }
    } catch (const Error&) {
      degraded = true;
    }
  }

  auto primes = factor_n_ideal(ctx, opts.factor_limit);
  // primes come in (xi-side, conj-side) pairs per rational prime, ascending;
  // keep the xi-side ones and drop the largest prime.
  std::vector<QuadIdeal> xi_side;
  for (size_t i = 0; i < primes.size(); i += 2) xi_side.push_back(primes[i].first);
  for (size_t i = 0; i + 1 < xi_side.size(); ++i) {
    bool inconclusive = false;
    auto sat = least_principal_power(xi_side[i], bound, opts.search_cap, &inconclusive);
    if (inconclusive) degraded = true;
    if (!sat) {
      degraded = true;
      continue;
    }
    QuadIntElement w = sat->element / sat->element.conj();
    if (auto el = descend_to_xi_ring(w, ctx)) {
      gens.push_back(canonical_shift_rep(*el));
    } else {
      degraded = true;
    }
  }

  if (degraded || (int)gens.size() != out.by_t.rank) add_flag(out.flags, kBestEffortFlag);
  out.by_t.generators = gens;
  out.by_pm_t.generators = std::move(gens);
}

void reducible_generators(const DiscriminantData& ctx, const ClassifyOptions& opts,
                          UnitGroupStructure& out) {
  std::int64_t m = *ctx.m;
  Int modulus = 2 * Int(m) + 1;
  Factorization f = factor(Int(ctx.n), opts.factor_limit);
  std::vector<LambdaElement> gens;
  bool degraded = false;
  for (size_t i = 0; i + 1 < f.primes.size(); ++i) {
    const Int& p = f.primes[i].first;
    // Least e with p^(2e) = 1 mod (2m+1); then p^e - p^-e lies in (2m+1)Z[1/n].
    Int p2 = (p * p) % modulus;
    Int acc = p2;
    std::int64_t e = 1;
    bool found = true;
    while (acc != 1) {
      acc = acc * p2 % modulus;
      if (++e > 2'000'000) {
        degraded = true;
        found = false;
        break;
      }
    }
    if (!found) continue;
    Rat x = pow_rat(Rat(p), e);
    gens.push_back(canonical_shift_rep(LambdaElement::from_pair(x, 1 / x, ctx)));
  }
  if (degraded || (int)gens.size() != out.by_t.rank) add_flag(out.flags, kBestEffortFlag);
  out.by_t.generators = gens;
  out.by_pm_t.generators = std::move(gens);
}

void finite_structure(QuotientStructure& q, GroupShape shape, std::vector<LambdaElement> reps) {
  q.finite = true;
  q.shape = shape;
  q.cardinality = (int)reps.size();
  q.rank = 0;
  q.coset_reps = std::move(reps);
}

}  // namespace

UnitGroupStructure classify(std::int64_t n, const ClassifyOptions& opts) {
  UnitGroupStructure out;
  out.n = n;
  DiscriminantData ctx = analyze_discriminant(n, opts.factor_limit);
  LambdaElement one = LambdaElement::one(ctx);
  LambdaElement minus_one = lambda_neg(one);

  if (n == 0 || n == -1) {
    finite_structure(out.by_t, GroupShape::trivial, {one});
    finite_structure(out.by_pm_t, GroupShape::trivial, {one});
    return out;
  }
  if (n == 1 || n == 2) {
    finite_structure(out.by_t, GroupShape::z2, {one, minus_one});
    finite_structure(out.by_pm_t, GroupShape::trivial, {one});
    if (n == 1) out.class_data = class_number(ctx.d, opts.search_cap);
    return out;
  }

  Int p;
  int k = 0;
  if (n < 0 && is_prime_power(Int(n), &p, &k, opts.factor_limit)) {
    // Finite case n = -p^k.  The prime over p has least principal power s | k
    // (the k-th power is generated by xi), recovered by exhaustive search.
    QuadIntElement xi = QuadIntElement::xi(ctx.c, ctx.d);
    QuadIdeal p1 = QuadIdeal::from_generators({QuadIntElement::from_int(p, ctx.d), xi});
    if (auto sat = least_principal_power(p1, k, opts.search_cap, nullptr)) {
      out.saturation_s = sat->s;
    }
    if (abs_int(ctx.d) <= Int(1'000'000'000'000)) {
      out.class_data = class_number(ctx.d, opts.search_cap);
    }
    if (k % 2 == 1) {
      finite_structure(out.by_t, GroupShape::z2, {one, minus_one});
      finite_structure(out.by_pm_t, GroupShape::trivial, {one});
    } else {
      // Z/4 generated by xi / p^{k/2}, whose square is in the class of -1.
      LambdaElement g = LambdaElement::from_xi_coords(0, Rat(1) / Rat(pow_int(p, k / 2)), ctx);
      finite_structure(out.by_t, GroupShape::z4, {one, g, minus_one, lambda_neg(g)});
      finite_structure(out.by_pm_t, GroupShape::z2, {one, g});
    }
    return out;
  }

  // Infinite case.
  int rank = (!ctx.reducible && n > 0) ? ctx.omega_n : ctx.omega_n - 1;
  out.by_t.finite = false;
  out.by_t.rank = rank;
  out.by_pm_t.finite = false;
  out.by_pm_t.rank = rank;
  if (opts.compute_generators) {
    if (ctx.reducible) {
      reducible_generators(ctx, opts, out);
    } else {
      irreducible_generators(ctx, opts, out);
    }
  }
  return out;
}

QuotientStructure classify_pm(std::int64_t n, const ClassifyOptions& opts) {
  return classify(n, opts).by_pm_t;
}

DiskCountReport disk_count(const AlexanderPoly& p, const ClassifyOptions& opts) {
  DiskCountReport report{p};
  auto n = recognize_quadratic(p);
  if (!n) {
    report.isotopy.kind = DiskCount::Kind::unsupported;
    report.equivalence.kind = DiskCount::Kind::unsupported;
    report.note =
        "polynomial is outside the trivial/quadratic family; "
        "no count is derived (the existence obstruction is not computed)";
    return report;
  }
  report.n = *n;
  UnitGroupStructure s = classify(*n, opts);
  auto fill = [](DiskCount& dc, const QuotientStructure& q) {
    if (q.finite) {
      dc.kind = DiskCount::Kind::finite;
      dc.count = *q.cardinality;
    } else {
      dc.kind = DiskCount::Kind::infinite;
      dc.rank = q.rank;
    }
  };
  fill(report.isotopy, s.by_t);
  fill(report.equivalence, s.by_pm_t);
  return report;
}

std::vector<LambdaElement> fourdistinct_classes(std::int64_t n) {
  Int k2 = Int(-n);
  Int k;
  if (n >= 0 || !is_perfect_square(k2, &k) || k <= 1) {
    throw Error(Errc::bad_shape, "fourdistinct_classes requires n = -k^2 with k > 1");
  }
  DiscriminantData ctx = analyze_discriminant(n);
  LaurentPoly kt_minus_k = LaurentPoly::monomial(k, 1) + LaurentPoly::constant(-k);
  std::vector<LambdaElement> classes = {
      LambdaElement::one(ctx),
      lambda_neg(LambdaElement::one(ctx)),
      embed(kt_minus_k, ctx),
      embed(-kt_minus_k, ctx),
  };
  for (size_t i = 0; i < classes.size(); ++i) {
    for (size_t j = i + 1; j < classes.size(); ++j) {
      if (t_shift_class(classes[i], classes[j], ShiftMode::t_only)) {
        throw Error(Errc::invalid_argument, "four-class elements failed to be distinct");
      }
    }
  }
  return classes;
}

bool pm_one_same_class(std::int64_t n) {
  DiscriminantData ctx = analyze_discriminant(n);
  LambdaElement one = LambdaElement::one(ctx);
  return t_shift_class(one, lambda_neg(one), ShiftMode::t_only).has_value();
}

}  // namespace zdisk
