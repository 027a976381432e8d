#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdisk/lambda.hpp"
#include "zdisk/laurent.hpp"
#include "zdisk/quadint.hpp"

namespace zdisk {

enum class GroupShape { trivial, z2, z4 };

struct ClassifyOptions {
  std::uint64_t factor_limit = kDefaultFactorLimit;
  std::uint64_t search_cap = 4'000'000;
  // Generator recovery is best-effort and never affects finiteness/rank/count;
  // disable it to classify very large n cheaply.
  bool compute_generators = true;
};

// Structure of one quotient of the unitary-unit group (by {t^k} or {±t^k}).
struct QuotientStructure {
  bool finite = false;
  std::optional<int> cardinality;   // 1, 2 or 4 when finite
  std::optional<GroupShape> shape;  // set when finite
  int rank = 0;                     // free rank when infinite, 0 when finite
  // Best-effort free generators (infinite case), one per rank unit.
  std::vector<LambdaElement> generators;
  // Exhaustive coset representatives (finite case).
  std::optional<std::vector<LambdaElement>> coset_reps;
};

struct UnitGroupStructure {
  std::int64_t n = 0;
  QuotientStructure by_t;     // U(Lambda_n) / {t^k}
  QuotientStructure by_pm_t;  // U(Lambda_n) / {±t^k}
  // Least s >= 1 with the prime over p principal; recorded when |n| is a
  // prime power.
  std::optional<std::int64_t> saturation_s;
  std::optional<ClassGroupData> class_data;
  std::vector<std::string> flags;  // e.g. "generators_best_effort"
};

UnitGroupStructure classify(std::int64_t n, const ClassifyOptions& opts = {});
QuotientStructure classify_pm(std::int64_t n, const ClassifyOptions& opts = {});

// Fixed caveat attached to every disk-count report: the counts are conditional
// on the knot actually bounding such a disk.
extern const char* const kDiskCountCaveat;

struct DiskCount {
  enum class Kind { finite, infinite, unsupported } kind = Kind::unsupported;
  int count = 0;  // finite case
  int rank = 0;   // infinite case
};

struct DiskCountReport {
  AlexanderPoly alexander;
  std::optional<std::int64_t> n;  // set when the polynomial is in the quadratic family
  DiskCount isotopy;              // classes up to isotopy        <-> U / {t^k}
  DiskCount equivalence;          // classes up to equivalence    <-> U / {±t^k}
  std::string caveat = kDiskCountCaveat;
  std::string note;  // explanation for unsupported verdicts
};

DiskCountReport disk_count(const AlexanderPoly& p, const ClassifyOptions& opts = {});

// For n = -k^2 with k > 1: the four pairwise shift-inequivalent unitary
// classes 1, -1, k(t-1), -k(t-1), verified exactly.  Throws Errc::bad_shape
// for other n.
std::vector<LambdaElement> fourdistinct_classes(std::int64_t n);

// Whether +1 and -1 fall in the same {t^k}-class (true exactly for n = 0, -1).
bool pm_one_same_class(std::int64_t n);

}  // namespace zdisk
