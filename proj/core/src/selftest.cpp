#include "zdisk/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "zdisk/knots.hpp"
#include "zdisk/oracle.hpp"
#include "zdisk/unitgroup.hpp"

namespace zdisk {

const char* const kFiveCrossingCsv =
    "name,seifert,alexander\n"
    "unknot,,-1\n"
    "3_1,\"-1,1;0,-1\",\n"
    "4_1,\"-1,1;0,1\",\n"
    "5_1,\"-1,1,0,0;0,-1,1,0;0,0,-1,1;0,0,0,-1\",\n"
    "5_2,\"-1,1;0,-2\",\n";

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << (log.tellp() > 0 ? "; " : "") << what;
    }
  }
};

std::string shape_name(const QuotientStructure& q) {
  if (!q.finite) return "rank " + std::to_string(q.rank);
  switch (*q.shape) {
    case GroupShape::trivial: return "trivial";
    case GroupShape::z2: return "Z2";
    case GroupShape::z4: return "Z4";
  }
  return "?";
}

// --- criterion 1: classification golden table -------------------------------

void criterion_golden_table(Check& c) {
  const std::vector<std::pair<std::int64_t, std::string>> table = {
      {-30, "rank 2"}, {-9, "Z4"},     {-8, "Z2"},     {-6, "rank 1"},
      {-5, "Z2"},      {-4, "Z4"},     {-3, "Z2"},     {-2, "Z2"},
      {-1, "trivial"}, {0, "trivial"}, {1, "Z2"},      {2, "Z2"},
      {3, "rank 1"},   {5, "rank 1"},  {6, "rank 1"},  {12, "rank 1"},
  };
  auto start = Clock::now();
  for (const auto& [n, expected] : table) {
    std::string got = shape_name(classify(n).by_t);
    c.expect(got == expected,
             "n=" + std::to_string(n) + " got " + got + " want " + expected);
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(elapsed < 1.0, "golden table took " + std::to_string(elapsed) + "s (budget 1s)");
}

// --- criterion 2 and 3: oracle agreement ------------------------------------

void criterion_oracle(Check& c, ShiftMode mode, const std::vector<std::int64_t>& ns,
                      unsigned threads) {
  OracleConfig cfg;
  cfg.mode = mode;
  cfg.threads = threads;
  for (std::int64_t n : ns) {
    UnitGroupStructure s = classify(n);
    const QuotientStructure& q = mode == ShiftMode::t_only ? s.by_t : s.by_pm_t;
    if (!q.finite || !q.cardinality) {
      c.expect(false, "n=" + std::to_string(n) + " expected finite classification");
      continue;
    }
    auto units = enumerate_unitary(n, cfg);
    OracleResult r = count_classes(units, n, cfg, q.cardinality);
    c.expect((int)r.classes.size() == *q.cardinality,
             "n=" + std::to_string(n) + " oracle found " + std::to_string(r.classes.size()) +
                 " classes, classifier says " + std::to_string(*q.cardinality));
    c.expect(r.complete_within_bounds, "n=" + std::to_string(n) + " not complete within bounds");
  }
}

// --- criterion 4: the order-6 context ---------------------------------------

void criterion_eisenstein(Check& c) {
  AlexanderPoly d1 = delta_n(-1);
  LaurentPoly t3p1 = LaurentPoly::t(3) + LaurentPoly::one();
  c.expect(divides_exactly(d1, t3p1), "delta_-1 must divide t^3 + 1");

  DiscriminantData ctx = analyze_discriminant(-1);
  auto witness = t_shift_class(LambdaElement::one(ctx), lambda_neg(LambdaElement::one(ctx)),
                               ShiftMode::t_only);
  c.expect(witness.has_value(), "classes of 1 and -1 must coincide for n=-1");
  if (witness) c.expect(witness->j == 3, "witness exponent " + std::to_string(witness->j) + " != 3");
}

// --- criterion 5: prime-power ideal identities ------------------------------

void criterion_ideal_lemma(Check& c) {
  for (Int pk = 2; pk <= 64; ++pk) {
    Int p;
    int k;
    if (!is_prime_power(pk, &p, &k)) continue;
    std::int64_t n = -(std::int64_t)pk.convert_to<std::int64_t>();
    DiscriminantData ctx = analyze_discriminant(n);
    QuadIntElement xi = QuadIntElement::xi(ctx.c, ctx.d);
    QuadIntElement pe = QuadIntElement::from_int(p, ctx.d);
    QuadIdeal p1 = QuadIdeal::from_generators({pe, xi});
    QuadIdeal p2 = QuadIdeal::from_generators({pe, xi.conj()});
    std::string tag = "n=" + std::to_string(n) + ": ";
    c.expect(p1.norm() == p && p2.norm() == p, tag + "prime norms must equal p");
    c.expect(ideal_mul(p1, p2) == QuadIdeal::principal(pe), tag + "p1*p2 != (p)");
    c.expect(ideal_pow(p1, (unsigned)k) == QuadIdeal::principal(xi), tag + "p1^k != (xi)");
    c.expect(ideal_pow(p2, (unsigned)k) == QuadIdeal::principal(xi.conj()), tag + "p2^k != (conj xi)");
  }
}

// --- criterion 6: the four distinct classes ---------------------------------

void criterion_four_classes(Check& c) {
  for (std::int64_t n : {-4, -9, -25}) {
    std::vector<LambdaElement> classes;
    try {
      classes = fourdistinct_classes(n);  // verifies pairwise inequivalence internally
    } catch (const Error& e) {
      c.expect(false, "n=" + std::to_string(n) + ": " + e.what());
      continue;
    }
    UnitGroupStructure s = classify(n);
    c.expect(s.by_t.coset_reps.has_value() && s.by_t.coset_reps->size() == 4,
             "n=" + std::to_string(n) + " classifier must list 4 coset representatives");
    if (!s.by_t.coset_reps) continue;
    // The four elements exhaust the classifier's representatives bijectively.
    std::vector<bool> used(classes.size(), false);
    for (const LambdaElement& rep : *s.by_t.coset_reps) {
      int matches = 0;
      for (size_t i = 0; i < classes.size(); ++i) {
        if (t_shift_class(rep, classes[i], ShiftMode::t_only)) {
          if (!used[i]) used[i] = true;
          ++matches;
        }
      }
      c.expect(matches == 1, "n=" + std::to_string(n) + " a representative matched " +
                                 std::to_string(matches) + " of the four classes");
    }
    c.expect(std::all_of(used.begin(), used.end(), [](bool b) { return b; }),
             "n=" + std::to_string(n) + " four-class list does not exhaust the cosets");
  }
}

// --- criterion 7: knot table -------------------------------------------------

void criterion_knot_table(Check& c) {
  std::istringstream in(kFiveCrossingCsv);
  auto rows = dk_table(parse_knot_csv(in));
  c.expect(rows.size() == 5, "expected 5 rows, got " + std::to_string(rows.size()));
  auto check_row = [&](size_t idx, const std::string& name, std::optional<int> count) {
    if (idx >= rows.size()) return;
    const DkRow& row = rows[idx];
    c.expect(row.name == name, "row " + std::to_string(idx) + " name " + row.name);
    c.expect(!row.error, name + ": " + row.note);
    if (count) {
      c.expect(row.isotopy.kind == DiskCount::Kind::finite && row.isotopy.count == *count,
               name + " expected " + std::to_string(*count) + " disks, got " +
                   (row.isotopy.kind == DiskCount::Kind::finite
                        ? std::to_string(row.isotopy.count)
                        : std::string("non-finite")));
    } else {
      c.expect(row.isotopy.kind == DiskCount::Kind::unsupported, name + " expected unsupported");
    }
  };
  check_row(0, "unknot", 1);
  check_row(1, "3_1", 1);
  check_row(2, "4_1", 2);
  check_row(3, "5_1", std::nullopt);
  check_row(4, "5_2", 2);
}

// --- criterion 8: number-theory spot checks ----------------------------------

int count_omega_minpoly_roots_mod_p(const Int& p, const Int& d) {
  // Roots of x^2 - x - (d-1)/4 mod p.
  Int c0 = (d - 1) / 4;
  int roots = 0;
  for (Int x = 0; x < p; ++x) {
    Int v = (x * x - x - c0) % p;
    if (v % p == 0) ++roots;
  }
  return roots;
}

void criterion_number_theory(Check& c) {
  auto check_h = [&](std::int64_t d, int expected) {
    ClassGroupData cg = class_number(Int(d));
    c.expect(cg.method == ClassGroupData::Method::reduced_forms,
             "class_number(" + std::to_string(d) + ") must use the reduced-forms enumerator");
    c.expect(cg.h && *cg.h == expected,
             "h(" + std::to_string(d) + ") != " + std::to_string(expected));
  };
  check_h(-3, 1);
  check_h(-7, 1);
  check_h(-15, 2);

  QuadIntElement eps = fundamental_unit(5);
  c.expect(eps == QuadIntElement::omega(5) || eps == -QuadIntElement::omega(5),
           "fundamental unit of d=5 must be (1+sqrt5)/2 up to sign, got " + eps.str());

  for (std::int64_t d : {-119, -15, -7, 5, 21}) {
    for (Int p = 2; p < 200; ++p) {
      if (!is_prime_u64(p.convert_to<std::uint64_t>())) continue;
      int roots = count_omega_minpoly_roots_mod_p(p, Int(d));
      SplittingType st = splitting_type(p, Int(d));
      SplittingType want = roots == 2   ? SplittingType::split
                           : roots == 1 ? SplittingType::ramified
                                        : SplittingType::inert;
      c.expect(st == want, "splitting mismatch at p=" + p.str() + ", d=" + std::to_string(d));
    }
  }
}

// --- criterion 9: randomized property suites ----------------------------------

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-4, 4), coeff(-5, 5);
  LaurentPoly::Terms terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) terms[expo(rng)] += coeff(rng);
  return LaurentPoly(std::move(terms));
}

void criterion_properties(Check& c) {
  std::mt19937_64 rng(0x5eed5eed1234ULL);
  for (std::int64_t n = -6; n <= 6; ++n) {
    if (n == 0) continue;
    DiscriminantData ctx = analyze_discriminant(n);
    AlexanderPoly delta = delta_n(n);
    int failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
      LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
      // Ring axioms and the involution as a ring map.
      if ((p + q) * r != p * r + q * r) ++failures;
      if (p * q != q * p) ++failures;
      if ((p * q) * r != p * (q * r)) ++failures;
      if (p.involute().involute() != p) ++failures;
      if ((p * q).involute() != p.involute() * q.involute()) ++failures;
      if ((p + q).involute() != p.involute() + q.involute()) ++failures;
      // Embedding is a ring map with kernel exactly (delta_n).
      LambdaElement ep = embed(p, ctx), eq = embed(q, ctx);
      if (lambda_mul(ep, eq) != embed(p * q, ctx)) ++failures;
      if (lambda_add(ep, eq) != embed(p + q, ctx)) ++failures;
      bool same_image = ep == eq;
      bool divisible = divides_exactly(delta, p - q);
      if (same_image != divisible) ++failures;
      LaurentPoly shifted = p + delta.poly() * r;
      if (embed(shifted, ctx) != ep) ++failures;
      // Norm multiplicativity and conjugation compatibility.
      if (lambda_norm(lambda_mul(ep, eq)) != lambda_mul(lambda_norm(ep), lambda_norm(eq))) ++failures;
      if (lambda_conj(lambda_conj(ep)) != ep) ++failures;
      if (lambda_conj(ep) != embed(p.involute(), ctx)) ++failures;
    }
    c.expect(failures == 0,
             "n=" + std::to_string(n) + ": " + std::to_string(failures) + " property failures");

    // Shift-witness laws on sampled triples: u ~ t^a u ~ ±t^b u.
    std::uniform_int_distribution<int> small(-3, 3);
    LambdaElement t_img = embed(LaurentPoly::t(), ctx);
    for (int trial = 0; trial < 20; ++trial) {
      int a = small(rng), b = small(rng);
      LambdaElement u = lambda_pow(t_img, small(rng));
      LambdaElement v = lambda_mul(u, lambda_pow(t_img, a));
      LambdaElement w = lambda_neg(lambda_mul(u, lambda_pow(t_img, b)));
      auto ref = t_shift_class(u, u, ShiftMode::t_only);
      c.expect(ref && ref->j == 0, "reflexivity failed");
      auto fwd = t_shift_class(v, u, ShiftMode::t_only);
      auto bwd = t_shift_class(u, v, ShiftMode::t_only);
      c.expect(fwd.has_value() && bwd.has_value(), "symmetry failed");
      if (fwd && bwd) c.expect(fwd->j == -bwd->j || ctx.degenerate || n == -1, "witness exponents must negate");
      auto mixed = t_shift_class(w, v, ShiftMode::plus_minus_t);
      auto total = t_shift_class(w, u, ShiftMode::plus_minus_t);
      c.expect(mixed.has_value() && total.has_value(), "pm-mode witnesses missing");
    }
  }
}

CriterionResult run_one(int index, const std::string& name, const std::function<void(Check&)>& fn) {
  CriterionResult res;
  res.index = index;
  res.name = name;
  auto start = Clock::now();
  Check c;
  try {
    fn(c);
    res.passed = c.ok;
    res.detail = c.log.str();
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "classification golden table", criterion_golden_table));
  {
    CriterionResult r = run_one(2, "oracle agreement (t-shift classes)", [&](Check& c) {
      criterion_oracle(c, ShiftMode::t_only, {-9, -8, -4, -3, -2, -1, 1, 2}, opts.threads);
    });
    if (r.passed && r.seconds >= 300.0) {
      r.passed = false;
      r.detail += " (exceeded the 300s budget)";
    }
    out.push_back(std::move(r));
  }
  out.push_back(run_one(3, "oracle agreement (±t-shift classes)", [&](Check& c) {
    const std::vector<std::pair<std::int64_t, int>> expected = {
        {-4, 2}, {-2, 1}, {-1, 1}, {1, 1}, {2, 1}};
    for (const auto& [n, want] : expected) {
      QuotientStructure q = classify_pm(n);
      c.expect(q.finite && q.cardinality == want,
               "classify_pm(" + std::to_string(n) + ") != " + std::to_string(want));
    }
    criterion_oracle(c, ShiftMode::plus_minus_t, {-4, -2, -1, 1, 2}, opts.threads);
  }));
  out.push_back(run_one(4, "order-6 shift identity at n=-1", criterion_eisenstein));
  out.push_back(run_one(5, "prime-power ideal identities (p^k <= 64)", criterion_ideal_lemma));
  out.push_back(run_one(6, "four distinct classes at n=-k^2", criterion_four_classes));
  out.push_back(run_one(7, "five-crossing knot table", criterion_knot_table));
  out.push_back(run_one(8, "number-theory spot checks", criterion_number_theory));
  out.push_back(run_one(9, "randomized property suites", criterion_properties));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace zdisk
