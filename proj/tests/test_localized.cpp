#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zdisk/localized.hpp"

using namespace zdisk;

TEST_CASE("make_localized membership") {
  CHECK(make_localized(Rat(3, 2), Int(-4)).value() == Rat(3, 2));
  CHECK_THROWS_AS(make_localized(Rat(1, 3), Int(-4)), Error);
  CHECK(make_localized(Rat(7), Int(5)).value() == Rat(7));
  CHECK(make_localized(Rat(5, 36), Int(6)).value() == Rat(5, 36));
  CHECK_THROWS_AS(make_localized(Rat(1, 10), Int(6)), Error);
}

TEST_CASE("unit group rank of Z[1/n]") {
  CHECK(unit_group_rank_z1n(6) == 2);
  CHECK(unit_group_rank_z1n(-8) == 1);
  CHECK(unit_group_rank_z1n(1) == 0);
  CHECK(unit_group_rank_z1n(-30) == 3);
  CHECK_THROWS_AS(unit_group_rank_z1n(0), Error);
}

TEST_CASE("unit membership in Z[1/n]") {
  CHECK(is_unit_in_z1n(Rat(4), Int(6)));
  CHECK(is_unit_in_z1n(Rat(-9, 8), Int(6)));
  CHECK_FALSE(is_unit_in_z1n(Rat(5), Int(6)));
  CHECK_FALSE(is_unit_in_z1n(Rat(0), Int(6)));
}

TEST_CASE("arithmetic stays in the subring") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> dexp(0, 3);
  Int n(12);
  for (int i = 0; i < 200; ++i) {
    Rat a = Rat(num(rng)) / pow_int(12, dexp(rng));
    Rat b = Rat(num(rng)) / pow_int(12, dexp(rng));
    LocalizedRational la(a, n), lb(b, n);
    CHECK((la + lb).value() == a + b);
    CHECK((la * lb).value() == a * b);
    if (b != 0 && is_unit_in_z1n(b, n)) {
      CHECK((la / lb).value() == a / b);
    }
  }
}

TEST_CASE("membership in the image subring S") {
  // Diagonal pairs are always in S.
  for (std::int64_t m : {1, 2, 3, 5}) {
    Int n = Int(m) * (m + 1);
    LocalizedRational a(Rat(Int(7), n), n);
    CHECK(in_s(ReduciblePair(a, a, m)));
  }
  // f((m+1)t - m) = (0, (2m+1)/m): in S by construction.
  {
    Int n(2);
    ReduciblePair p(make_localized(Rat(0), n), make_localized(Rat(3, 2), n), 1);
    CHECK(in_s(p));
  }
  {
    Int n(2);
    ReduciblePair p(make_localized(Rat(0), n), make_localized(Rat(1), n), 1);
    CHECK_FALSE(in_s(p));  // 1/3 is not in Z[1/2]
  }
}

TEST_CASE("membership in T") {
  CHECK(in_t(Rat(2), 1));
  CHECK(in_t(Rat(1, 2), 1));
  CHECK(in_t(Rat(1), 1));
  CHECK(in_t(Rat(1), 7));
  CHECK_FALSE(in_t(Rat(0), 1));
  CHECK_FALSE(in_t(Rat(3), 1));  // 3 is not a unit of Z[1/2]

  SUBCASE("T is closed under products and inverses") {
    std::mt19937_64 rng(23);
    for (std::int64_t m : {1, 2, 3}) {
      Int n = Int(m) * (m + 1);
      std::vector<Rat> members;
      std::uniform_int_distribution<int> e1(-6, 6);
      while (members.size() < 40) {
        Rat x = pow_rat(Rat(m, m + 1), e1(rng)) * pow_rat(Rat(-1), e1(rng) & 1);
        if (in_t(x, m)) members.push_back(x);
      }
      std::uniform_int_distribution<size_t> pick(0, members.size() - 1);
      for (int i = 0; i < 50; ++i) {
        Rat x = members[pick(rng)], y = members[pick(rng)];
        CHECK(in_t(x * y, m));
        CHECK(in_t(Rat(1) / x, m));
      }
    }
  }
}
