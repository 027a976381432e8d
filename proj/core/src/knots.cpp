#include "zdisk/knots.hpp"

#include <istream>
#include <sstream>

namespace zdisk {
namespace {

// Fraction-free determinant (Bareiss) over Z[t^{±1}]; all divisions are exact.
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one();
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPoly::zero();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = num.divided_by(prev);
        if (!q) throw Error(Errc::invalid_argument, "internal: Bareiss division failed");
        m[i][j] = std::move(*q);
      }
      m[i][k] = LaurentPoly::zero();
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Int int_det(const SeifertMatrix& v, bool transpose_minus) {
  // det(V - V^T) via the Laurent machinery at degree 0 terms only.
  const int n = v.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Int e = transpose_minus ? v.at(i, j) - v.at(j, i) : v.at(i, j);
      m[i][j] = LaurentPoly::constant(e);
    }
  }
  LaurentPoly d = bareiss_det(std::move(m));
  return d.is_zero() ? Int(0) : d.coeff(0);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// One CSV record with double-quote escaping; returns false at end of stream.
bool read_csv_row(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool quoted = false, any = false;
  char ch;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else if (ch == '\n') {
      fields.push_back(field);
      return true;
    } else if (ch != '\r') {
      field.push_back(ch);
    }
  }
  if (!any) return false;
  fields.push_back(field);
  return true;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

std::string count_str(const DiskCount& c) {
  switch (c.kind) {
    case DiskCount::Kind::finite:
      return std::to_string(c.count);
    case DiskCount::Kind::infinite:
      return "infinite(rank " + std::to_string(c.rank) + ")";
    case DiskCount::Kind::unsupported:
      return "unsupported";
  }
  return "unsupported";
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Int>> rows) {
  size_ = (int)rows.size();
  if (size_ % 2 != 0) throw Error(Errc::bad_shape, "Seifert matrix must have even size");
  for (auto& row : rows) {
    if ((int)row.size() != size_) throw Error(Errc::bad_shape, "Seifert matrix must be square");
    for (auto& e : row) entries_.push_back(std::move(e));
  }
  Int pairing = int_det(*this, true);
  if (pairing != 1 && pairing != -1) {
    throw Error(Errc::bad_shape, "det(V - V^T) = " + pairing.str() + ", expected ±1");
  }
}

SeifertMatrix SeifertMatrix::parse(const std::string& text) {
  std::string body = trim(text);
  if (body.empty()) return SeifertMatrix(std::vector<std::vector<Int>>{});
  std::vector<std::vector<Int>> rows;
  for (const std::string& row_text : split(body, ';')) {
    std::vector<Int> row;
    for (const std::string& cell : split(row_text, ',')) {
      std::string v = trim(cell);
      if (v.empty()) throw Error(Errc::parse_error, "empty Seifert matrix entry");
      try {
        row.emplace_back(v);
      } catch (const std::exception&) {
        throw Error(Errc::parse_error, "bad Seifert matrix entry: " + v);
      }
    }
    rows.push_back(std::move(row));
  }
  return SeifertMatrix(std::move(rows));
}

std::string SeifertMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < size_; ++i) {
    if (i) os << ";";
    for (int j = 0; j < size_; ++j) {
      if (j) os << ",";
      os << at(i, j).str();
    }
  }
  return os.str();
}

AlexanderPoly alexander_from_seifert(const SeifertMatrix& v) {
  const int n = v.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = LaurentPoly::monomial(v.at(i, j), 1) + LaurentPoly::constant(-v.at(j, i));
    }
  }
  return normalize_alexander(bareiss_det(std::move(m)));
}

KnotRecord twist_knot_record(std::int64_t n) {
  KnotRecord rec;
  rec.name = "K_" + std::to_string(n);
  rec.seifert_text = SeifertMatrix({{Int(-1), Int(1)}, {Int(0), Int(n)}}).str();
  rec.alexander_text = delta_n(n).str();
  return rec;
}

std::vector<DkRow> dk_table(const std::vector<KnotRecord>& records, const ClassifyOptions& opts) {
  std::vector<DkRow> rows;
  rows.reserve(records.size());
  for (const KnotRecord& rec : records) {
    DkRow row;
    row.name = rec.name;
    try {
      std::optional<AlexanderPoly> from_matrix, from_text;
      if (rec.seifert_text) from_matrix = alexander_from_seifert(SeifertMatrix::parse(*rec.seifert_text));
      if (rec.alexander_text) from_text = normalize_alexander(LaurentPoly::parse(*rec.alexander_text));
      if (!from_matrix && !from_text) {
        throw Error(Errc::invalid_argument, "record carries neither a Seifert matrix nor a polynomial");
      }
      if (from_matrix && from_text && !(*from_matrix == *from_text)) {
        throw Error(Errc::invalid_argument, "Seifert matrix and polynomial disagree");
      }
      AlexanderPoly alex = from_matrix ? *from_matrix : *from_text;
      row.alexander = alex.str();
      DiskCountReport report = disk_count(alex, opts);
      row.n = report.n;
      row.isotopy = report.isotopy;
      row.equivalence = report.equivalence;
      row.note = report.note;
    } catch (const Error& e) {
      row.error = true;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<KnotRecord> parse_knot_csv(std::istream& in) {
  std::vector<KnotRecord> records;
  std::vector<std::string> fields;
  bool first = true;
  while (read_csv_row(in, fields)) {
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank line
    if (first && fields.size() >= 1 && trim(fields[0]) == "name") {
      first = false;
      continue;  // header
    }
    first = false;
    KnotRecord rec;
    rec.name = trim(fields[0]);
    if (fields.size() > 1 && !trim(fields[1]).empty()) rec.seifert_text = trim(fields[1]);
    if (fields.size() > 2 && !trim(fields[2]).empty()) rec.alexander_text = trim(fields[2]);
    records.push_back(std::move(rec));
  }
  return records;
}

std::string dk_table_csv(const std::vector<DkRow>& rows) {
  std::ostringstream os;
  os << "name,alexander,n,isotopy_disks,equivalence_disks,note\n";
  for (const DkRow& row : rows) {
    os << csv_escape(row.name) << "," << csv_escape(row.alexander) << ",";
    if (row.n) os << *row.n;
    os << ",";
    if (row.error) {
      os << "error,error," << csv_escape(row.note);
    } else {
      os << csv_escape(count_str(row.isotopy)) << "," << csv_escape(count_str(row.equivalence))
         << "," << csv_escape(row.note);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace zdisk
