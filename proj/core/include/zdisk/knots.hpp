#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zdisk/laurent.hpp"
#include "zdisk/unitgroup.hpp"

namespace zdisk {

// Integer Seifert matrix of even size 2g with det(V - V^T) = ±1.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(std::vector<std::vector<Int>> rows);  // validates

  int size() const { return size_; }
  const Int& at(int i, int j) const { return entries_[(size_t)i * size_ + j]; }

  // "a,b;c,d" with semicolon-separated rows.  An empty string is the 0x0
  // matrix (the unknot).
  static SeifertMatrix parse(const std::string& text);
  std::string str() const;

 private:
  int size_ = 0;
  std::vector<Int> entries_;
};

// det(t V - V^T), normalized to the canonical Alexander representative.
AlexanderPoly alexander_from_seifert(const SeifertMatrix& v);

// Raw per-knot input.  The Seifert field keeps the "a,b;c,d" text so that a
// malformed matrix surfaces as a row-level error in dk_table instead of
// aborting a whole batch.
struct KnotRecord {
  std::string name;
  std::optional<std::string> seifert_text;
  std::optional<std::string> alexander_text;
};

// The twist knot with n full twists: Seifert matrix [[-1, 1], [0, n]].
KnotRecord twist_knot_record(std::int64_t n);

struct DkRow {
  std::string name;
  std::string alexander;  // canonical textual polynomial ("" on row error)
  std::optional<std::int64_t> n;
  DiskCount isotopy;
  DiskCount equivalence;
  std::string note;
  bool error = false;
};

// Batch disk-count table.  Row-level failures are reported inline and never
// abort the batch; row order is preserved.
std::vector<DkRow> dk_table(const std::vector<KnotRecord>& records,
                            const ClassifyOptions& opts = {});

// CSV schema: name,seifert,alexander -- seifert as "rows;semicolon;separated"
// (quoted, since entries are comma-separated), alexander in the textual
// polynomial syntax.  At least one of the two must be present; when both are,
// they must agree.  A leading "name,seifert,alexander" header is skipped.
std::vector<KnotRecord> parse_knot_csv(std::istream& in);

std::string dk_table_csv(const std::vector<DkRow>& rows);

}  // namespace zdisk
