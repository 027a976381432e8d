#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zdisk/laurent.hpp"

using namespace zdisk;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms), expo(-5, 5), coeff(-9, 9);
  LaurentPoly::Terms terms;
  for (int i = 0, k = nterms(rng); i < k; ++i) terms[expo(rng)] += coeff(rng);
  return LaurentPoly(std::move(terms));
}

// Independent normalization oracle: exhaustive scan over ±t^k.
std::optional<LaurentPoly> normalize_by_scan(const LaurentPoly& p) {
  if (p.is_zero()) return std::nullopt;
  std::int64_t deg = std::max(std::abs(p.min_exp()), std::abs(p.max_exp())) + 1;
  std::optional<LaurentPoly> result;
  for (std::int64_t k = -deg; k <= deg; ++k) {
    for (int sign : {1, -1}) {
      LaurentPoly q = p.shifted(k) * LaurentPoly::constant(sign);
      if (q.involute() == q && q.evaluate_at_one() == -1) {
        if (result && !(*result == q)) return std::nullopt;  // ambiguous: not expected
        result = q;
      }
    }
  }
  return result;
}

}  // namespace

TEST_CASE("addition") {
  CHECK(P("t - 3 + t^-1") + LaurentPoly::zero() == P("t - 3 + t^-1"));
  CHECK(P("2*t - 5") + P("-2*t + 5") == LaurentPoly::zero());
  CHECK(P("t") + P("t") == P("2*t"));
}

TEST_CASE("multiplication") {
  CHECK(P("2*t - 1") * P("t - 2") == P("2*t^2 - 5*t + 2"));
  LaurentPoly p = P("3*t^2 - t^-1 + 4");
  CHECK(p * LaurentPoly::one() == p);
  CHECK(LaurentPoly::t(1) * LaurentPoly::t(-1) == LaurentPoly::one());
}

TEST_CASE("involution") {
  CHECK(P("2*t - 5").involute() == P("2*t^-1 - 5"));
  LaurentPoly sym = delta_n(7).poly();
  CHECK(sym.involute() == sym);
  CHECK(LaurentPoly::t(3).involute() == LaurentPoly::t(-3));
}

TEST_CASE("involution is a ring involution") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng);
    CHECK(p.involute().involute() == p);
    CHECK((p * q).involute() == p.involute() * q.involute());
    CHECK((p + q).involute() == p.involute() + q.involute());
  }
}

TEST_CASE("delta_n family") {
  CHECK(delta_n(1).poly() == P("t - 3 + t^-1"));
  CHECK(delta_n(-1).poly() == P("-t + 1 - t^-1"));
  CHECK(delta_n(-2).poly() == P("-2*t + 3 - 2*t^-1"));
  CHECK(delta_n(0).poly() == P("-1"));
  for (std::int64_t n = -100; n <= 100; ++n) {
    CHECK(delta_n(n).poly().evaluate_at_one() == -1);
  }
}

TEST_CASE("normalize_alexander") {
  CHECK(normalize_alexander(P("2*t^2 - 3*t + 2")).poly() == P("-2*t + 3 - 2*t^-1"));
  CHECK(normalize_alexander(LaurentPoly::one()).poly() == P("-1"));
  CHECK(normalize_alexander(P("t^2 - t + 1")).poly() == P("-t + 1 - t^-1"));

  SUBCASE("agrees with the exhaustive unit-multiple scan") {
    std::mt19937_64 rng(7);
    for (std::int64_t n = -20; n <= 20; ++n) {
      std::uniform_int_distribution<std::int64_t> shift(-4, 4);
      std::uniform_int_distribution<int> sgn(0, 1);
      LaurentPoly p = delta_n(n).poly().shifted(shift(rng)) *
                      LaurentPoly::constant(sgn(rng) ? 1 : -1);
      auto expected = normalize_by_scan(p);
      REQUIRE(expected.has_value());
      CHECK(normalize_alexander(p).poly() == *expected);
    }
  }

  SUBCASE("rejects asymmetric and non-unit values") {
    CHECK_THROWS_AS(normalize_alexander(P("t + 1")), Error);         // odd span
    CHECK_THROWS_AS(normalize_alexander(P("t^2 + 1")), Error);       // p(1) = 2
    CHECK_THROWS_AS(normalize_alexander(P("2*t^2 + 3 + t^-2")), Error);
    CHECK_THROWS_AS(normalize_alexander(LaurentPoly::zero()), Error);
  }
}

TEST_CASE("recognize_quadratic") {
  CHECK(recognize_quadratic(normalize_alexander(P("-2*t + 3 - 2*t^-1"))) == -2);
  CHECK(recognize_quadratic(normalize_alexander(P("-1"))) == 0);
  // Degree-4 polynomial (the (2,5) torus knot): outside the family.
  AlexanderPoly quintic = normalize_alexander(P("t^2 - t + 1 - t^-1 + t^-2"));
  CHECK_FALSE(recognize_quadratic(quintic).has_value());
  for (std::int64_t n = -100; n <= 100; ++n) {
    CHECK(recognize_quadratic(delta_n(n)) == n);
  }
}

TEST_CASE("reducible factorization") {
  // For n = m(m+1): ((m+1)t - m)(mt - (m+1)) is delta_n up to normalization.
  for (std::int64_t m = 1; m <= 20; ++m) {
    std::int64_t n = m * (m + 1);
    LaurentPoly f1 = LaurentPoly::monomial(m + 1, 1) + LaurentPoly::constant(-m);
    LaurentPoly f2 = LaurentPoly::monomial(m, 1) + LaurentPoly::constant(-(m + 1));
    CHECK(normalize_alexander(f1 * f2) == delta_n(n));
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly d = random_poly(rng);
    if (d.is_zero()) continue;
    LaurentPoly q = random_poly(rng);
    LaurentPoly prod = d * q;
    auto back = prod.divided_by(d);
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
  CHECK_FALSE(P("t - 1").divided_by(delta_n(1).poly()).has_value());
  CHECK_FALSE(P("2*t - 1").divided_by(P("4*t - 2 + 4*t^-1")).has_value());
}

TEST_CASE("textual syntax round-trips") {
  CHECK(P("-2*t^1 + 3 - 2*t^-1").str() == "-2*t^1 + 3 - 2*t^-1");
  CHECK(P("-2*t+3-2*t^-1") == P("-2*t^1 + 3 - 2*t^-1"));
  CHECK(P("t").str() == "t^1");
  CHECK(LaurentPoly::zero().str() == "0");
  CHECK(P("0") == LaurentPoly::zero());
  CHECK_THROWS_AS(P("t^"), Error);
  CHECK_THROWS_AS(P("3 +"), Error);
  CHECK_THROWS_AS(P("x + 1"), Error);

  std::mt19937_64 rng(1234);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::parse(p.str()) == p);
  }
}

TEST_CASE("evaluation") {
  CHECK(P("2*t - 1").evaluate(Rat(2)) == Rat(3));
  CHECK(P("t + t^-1").evaluate(Rat(1, 2)) == Rat(5, 2));
  CHECK_THROWS_AS(P("t^-1").evaluate(Rat(0)), Error);
}
