#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "zdisk/knots.hpp"
#include "zdisk/selftest.hpp"

using namespace zdisk;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

// Symbolic 2x2 determinant oracle for det(tV - V^T).
LaurentPoly det2_oracle(const SeifertMatrix& v) {
  auto entry = [&](int i, int j) {
    return LaurentPoly::monomial(v.at(i, j), 1) + LaurentPoly::constant(-v.at(j, i));
  };
  return entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
}

}  // namespace

TEST_CASE("alexander_from_seifert") {
  SUBCASE("twist matrices reproduce the quadratic family") {
    for (std::int64_t n = -50; n <= 50; ++n) {
      SeifertMatrix v({{Int(-1), Int(1)}, {Int(0), Int(n)}});
      CHECK(alexander_from_seifert(v) == delta_n(n));
      CHECK(normalize_alexander(det2_oracle(v)) == delta_n(n));
    }
  }
  SUBCASE("trefoil") {
    SeifertMatrix v({{Int(-1), Int(1)}, {Int(0), Int(-1)}});
    CHECK(alexander_from_seifert(v) == delta_n(-1));
  }
  SUBCASE("unknot: empty matrix") {
    SeifertMatrix v{std::vector<std::vector<Int>>{}};
    CHECK(alexander_from_seifert(v) == delta_n(0));
  }
  SUBCASE("genus-2 example lies outside the quadratic family") {
    SeifertMatrix v = SeifertMatrix::parse("-1,1,0,0;0,-1,1,0;0,0,-1,1;0,0,0,-1");
    AlexanderPoly a = alexander_from_seifert(v);
    CHECK(a.poly() == P("-t^2 + t - 1 + t^-1 - t^-2"));
    CHECK_FALSE(recognize_quadratic(a).has_value());
  }
  SUBCASE("invalid Seifert data is rejected") {
    CHECK_THROWS_AS(SeifertMatrix({{Int(0), Int(0)}, {Int(0), Int(0)}}), Error);
    CHECK_THROWS_AS(SeifertMatrix({{Int(1)}}), Error);  // odd size
    CHECK_THROWS_AS(SeifertMatrix({{Int(1), Int(2)}, {Int(3)}}), Error);
  }
}

TEST_CASE("twist_knot_record") {
  KnotRecord fig8 = twist_knot_record(1);
  CHECK(fig8.name == "K_1");
  CHECK(*fig8.alexander_text == delta_n(1).str());
  KnotRecord trefoil = twist_knot_record(-1);
  CHECK(*trefoil.alexander_text == delta_n(-1).str());
  KnotRecord unknot_like = twist_knot_record(0);
  CHECK(*unknot_like.alexander_text == "-1");
  // The Seifert text stays consistent with the polynomial.
  auto rows = dk_table({fig8, trefoil, unknot_like});
  for (const auto& row : rows) CHECK_FALSE(row.error);
  CHECK(rows[0].n == 1);
  CHECK(rows[1].n == -1);
  CHECK(rows[2].n == 0);
}

TEST_CASE("dk_table on the bundled five-crossing knots") {
  std::istringstream in(kFiveCrossingCsv);
  auto rows = dk_table(parse_knot_csv(in));
  REQUIRE(rows.size() == 5);

  CHECK(rows[0].name == "unknot");
  CHECK(rows[0].isotopy.count == 1);
  CHECK(rows[0].equivalence.count == 1);

  CHECK(rows[1].name == "3_1");
  CHECK(rows[1].n == -1);
  CHECK(rows[1].isotopy.count == 1);

  CHECK(rows[2].name == "4_1");
  CHECK(rows[2].n == 1);
  CHECK(rows[2].isotopy.count == 2);
  CHECK(rows[2].equivalence.count == 1);

  CHECK(rows[3].name == "5_1");
  CHECK(rows[3].isotopy.kind == DiskCount::Kind::unsupported);

  CHECK(rows[4].name == "5_2");
  CHECK(rows[4].n == -2);
  CHECK(rows[4].isotopy.count == 2);
  CHECK(rows[4].equivalence.count == 1);
}

TEST_CASE("dk_table row isolation and consistency checks") {
  std::istringstream in(
      "good1,,-2*t + 3 - 2*t^-1\n"
      "bad,\"1,2;3\",\n"
      "good2,\"-1,1;0,1\",\n"
      "mismatch,\"-1,1;0,1\",-2*t + 3 - 2*t^-1\n"
      "agree,\"-1,1;0,1\",t - 3 + t^-1\n"
      "empty_row,,\n");
  auto rows = dk_table(parse_knot_csv(in));
  REQUIRE(rows.size() == 6);
  CHECK_FALSE(rows[0].error);
  CHECK(rows[0].n == -2);
  CHECK(rows[1].error);
  CHECK_FALSE(rows[2].error);
  CHECK(rows[2].n == 1);
  CHECK(rows[3].error);  // matrix and polynomial disagree
  CHECK_FALSE(rows[4].error);
  CHECK(rows[5].error);  // neither input present
}

TEST_CASE("alexander-only input accepts the unnormalized form") {
  std::istringstream in("5_2_alt,,2*t^2 - 3*t + 2\n");
  auto rows = dk_table(parse_knot_csv(in));
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].error);
  CHECK(rows[0].n == -2);
  CHECK(rows[0].isotopy.count == 2);
}

TEST_CASE("csv output shape") {
  std::istringstream in(kFiveCrossingCsv);
  auto rows = dk_table(parse_knot_csv(in));
  std::string csv = dk_table_csv(rows);
  CHECK(csv.find("name,alexander,n,isotopy_disks,equivalence_disks,note") == 0);
  CHECK(csv.find("unknot,-1,0,1,1,") != std::string::npos);
  CHECK(csv.find("5_1") != std::string::npos);
  CHECK(csv.find("unsupported") != std::string::npos);
}

TEST_CASE("bundled data file matches the embedded table") {
  std::ifstream file(std::string(TEST_DATA_DIR) + "/knots_5crossings.csv");
  REQUIRE(file.good());
  std::stringstream buf;
  buf << file.rdbuf();
  CHECK(buf.str() == kFiveCrossingCsv);
}

TEST_CASE("empty input produces an empty table") {
  std::istringstream in("");
  CHECK(dk_table(parse_knot_csv(in)).empty());
  std::istringstream header_only("name,seifert,alexander\n");
  CHECK(dk_table(parse_knot_csv(header_only)).empty());
}
