#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdisk/lambda.hpp"
#include "zdisk/laurent.hpp"

namespace zdisk {

// Search box for the brute-force unit enumeration: exponents in [-D, D],
// coefficients in [-C, C], t-shift scan range [-J, J].
struct OracleConfig {
  int degree_bound = 3;   // D
  int coeff_bound = 6;    // C
  int shift_bound = 12;   // J
  ShiftMode mode = ShiftMode::t_only;
  unsigned threads = 0;   // 0 = hardware concurrency

  void validate() const;
};

struct OracleResult {
  std::int64_t n = 0;
  OracleConfig config;
  std::vector<LaurentPoly> classes;  // one representative per class, canonical order
  std::size_t unit_count = 0;        // units found in the box
  // True only when the classifier reports a finite group and the counts
  // agree; otherwise the class list is a lower bound.
  bool complete_within_bounds = false;
};

// Exact ideal-membership test: q is a multiple of delta in Z[t^{±1}].
bool divides_exactly(const AlexanderPoly& delta, const LaurentPoly& q);

// All p in the box with p * involute(p) = 1 mod delta_n, by exhaustive search
// over coefficient tuples with exact divisibility checks.  Uses only Laurent
// polynomial arithmetic (independent of the quadratic-field machinery) and is
// deterministic regardless of thread count.
std::vector<LaurentPoly> enumerate_unitary(std::int64_t n, const OracleConfig& cfg);

// Buckets units into {t^k}- or {±t^k}-classes: union-find over the relation
// p ~ q iff delta_n | p - (±)t^j q for some |j| <= J.  Representatives are the
// structurally minimal members.  `expected_finite_count`, when provided by the
// caller from an independent classification, marks completeness.
OracleResult count_classes(const std::vector<LaurentPoly>& units, std::int64_t n,
                           const OracleConfig& cfg,
                           std::optional<int> expected_finite_count = std::nullopt);

}  // namespace zdisk
