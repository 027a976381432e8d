// zdisk: exact-arithmetic classifier for the unitary units of
// Z[t^{±1}]/(n*t - (2n+1) + n*t^{-1}) and the Z-disk counts they encode.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zdisk/json_io.hpp"
#include "zdisk/selftest.hpp"

namespace {

using namespace zdisk;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResourceLimit = 2;

std::uint64_t factor_limit_from_env() {
  const char* env = std::getenv("ZDISK_FACTOR_LIMIT");
  if (!env || !*env) return kDefaultFactorLimit;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw Error(Errc::invalid_argument, "bad ZDISK_FACTOR_LIMIT value");
  }
  return v;
}

std::string count_text(const DiskCount& c) {
  switch (c.kind) {
    case DiskCount::Kind::finite:
      return std::to_string(c.count);
    case DiskCount::Kind::infinite:
      return "infinitely many (rank " + std::to_string(c.rank) + ")";
    case DiskCount::Kind::unsupported:
      return "unsupported";
  }
  return "unsupported";
}

const char* shape_text(const QuotientStructure& q) {
  if (!q.finite) return "free abelian (infinite)";
  switch (*q.shape) {
    case GroupShape::trivial: return "trivial";
    case GroupShape::z2: return "Z/2";
    case GroupShape::z4: return "Z/4";
  }
  return "?";
}

void print_quotient(std::ostream& os, const QuotientStructure& q, const char* label) {
  os << label << ": ";
  if (q.finite) {
    os << shape_text(q) << ", " << *q.cardinality << " class(es)\n";
    if (q.coset_reps) {
      os << "  representatives:";
      for (const auto& r : *q.coset_reps) os << "  " << r.str();
      os << "\n";
    }
  } else {
    os << "infinite, rank " << q.rank << "\n";
    if (!q.generators.empty()) {
      os << "  free generators (best effort):";
      for (const auto& g : q.generators) os << "  " << g.str();
      os << "\n";
    }
  }
}

void print_structure(std::ostream& os, const UnitGroupStructure& s, bool pm_only) {
  os << "n = " << s.n << "\n";
  if (!pm_only) print_quotient(os, s.by_t, "unitary units / {t^k}");
  print_quotient(os, s.by_pm_t, "unitary units / {±t^k}");
  if (s.saturation_s) os << "least principal prime power s = " << *s.saturation_s << "\n";
  if (s.class_data && s.class_data->h) os << "class number h(" << s.class_data->d.str() << ") = "
                                          << s.class_data->h->str() << "\n";
  for (const auto& f : s.flags) os << "flag: " << f << "\n";
}

int cmd_classify(std::int64_t n, bool pm, bool as_json, const ClassifyOptions& opts) {
  UnitGroupStructure s = classify(n, opts);
  if (as_json) {
    std::cout << json_of(s).dump(2) << "\n";
  } else {
    print_structure(std::cout, s, pm);
  }
  return kExitOk;
}

int cmd_disks(const std::string& poly_text, std::optional<std::int64_t> n, bool as_json,
              const ClassifyOptions& opts) {
  std::optional<AlexanderPoly> alex;
  if (n) {
    alex = delta_n(*n);
  } else {
    LaurentPoly raw = LaurentPoly::parse(poly_text);  // syntax errors exit 1
    try {
      alex = normalize_alexander(raw);
    } catch (const Error& e) {
      if (e.code() != Errc::bad_shape) throw;
      // Parseable but not an Alexander polynomial: an unsupported verdict,
      // not a usage error.
      std::string note = std::string("not an Alexander polynomial: ") + e.what();
      if (as_json) {
        nlohmann::json out;
        out["alexander"] = raw.str();
        out["n"] = nullptr;
        out["isotopy"] = {{"kind", "unsupported"}};
        out["equivalence"] = {{"kind", "unsupported"}};
        out["note"] = note;
        out["caveat"] = kDiskCountCaveat;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "polynomial: " << raw.str() << "\n"
                  << "Z-disks up to isotopy:     unsupported\n"
                  << "Z-disks up to equivalence: unsupported\n"
                  << "note: " << note << "\n";
      }
      return kExitOk;
    }
  }
  DiskCountReport report = disk_count(*alex, opts);
  if (as_json) {
    std::cout << json_of(report).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "Alexander polynomial: " << report.alexander.str() << "\n";
  if (report.n) std::cout << "quadratic family index n = " << *report.n << "\n";
  std::cout << "Z-disks up to isotopy:     " << count_text(report.isotopy) << "\n";
  std::cout << "Z-disks up to equivalence: " << count_text(report.equivalence) << "\n";
  if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
  std::cout << "caveat: " << report.caveat << "\n";
  return kExitOk;
}

int cmd_oracle(std::int64_t n, const OracleConfig& cfg, bool as_json, const ClassifyOptions& opts) {
  auto units = enumerate_unitary(n, cfg);
  std::optional<int> expected;
  try {
    UnitGroupStructure s = classify(n, opts);
    const QuotientStructure& q = cfg.mode == ShiftMode::t_only ? s.by_t : s.by_pm_t;
    if (q.finite) expected = q.cardinality;
  } catch (const Error&) {
    // classification is advisory here; enumeration stands on its own
  }
  OracleResult result = count_classes(units, n, cfg, expected);
  if (as_json) {
    std::cout << json_of(result).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n = " << n << ": " << result.unit_count << " unitary units in the box, "
            << result.classes.size() << " class(es)\n";
  for (const auto& rep : result.classes) std::cout << "  " << rep.str() << "\n";
  std::cout << (result.complete_within_bounds
                    ? "complete within bounds (matches classification)\n"
                    : "lower bound only (box may be too small or the group infinite)\n");
  return kExitOk;
}

int cmd_knot_table(const std::string& input, const std::string& output, const std::string& format,
                   const ClassifyOptions& opts) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitUsage;
  }
  auto rows = dk_table(parse_knot_csv(in), opts);
  std::string text;
  if (format == "json") {
    text = json_of(rows).dump(2) + "\n";
  } else {
    text = dk_table_csv(rows);
  }
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return kExitOk;
}

int cmd_selftest(unsigned threads) {
  SelftestOptions opts;
  opts.threads = threads;
  auto results = run_acceptance(opts);
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.index << "] " << r.name << "  ("
              << r.seconds << "s)";
    if (!r.detail.empty()) std::cout << "  -- " << r.detail;
    std::cout << "\n";
  }
  return all_passed(results) ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of unitary units of Z[t^{±1}]/(delta_n) and Z-disk counts"};
  app.require_subcommand(1);

  ClassifyOptions opts;

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify the unit-group quotients for n");
  std::int64_t classify_n = 0;
  bool classify_pm_only = false, classify_json = false;
  classify_cmd->add_option("--n", classify_n, "family index n")->required();
  classify_cmd->add_flag("--pm", classify_pm_only, "print only the {±t^k} quotient");
  classify_cmd->add_flag("--json", classify_json, "machine-readable output");

  // units (unit-group view of the same classification)
  auto* units_cmd = app.add_subcommand("units", "show unitary-unit generators/representatives for n");
  std::int64_t units_n = 0;
  bool units_json = false;
  units_cmd->add_option("--n", units_n, "family index n")->required();
  units_cmd->add_flag("--json", units_json, "machine-readable output");

  // disks
  auto* disks_cmd = app.add_subcommand("disks", "Z-disk counts for an Alexander polynomial");
  std::string disks_poly;
  std::int64_t disks_n = 0;
  bool disks_have_n = false, disks_json = false;
  disks_cmd->add_option("--poly", disks_poly, "polynomial, e.g. \"-2*t+3-2*t^-1\"");
  disks_cmd->add_option("--n", disks_n, "family index n (alternative to --poly)")
      ->each([&](const std::string&) { disks_have_n = true; });
  disks_cmd->add_flag("--json", disks_json, "machine-readable output");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration of unitary units");
  std::int64_t oracle_n = 0;
  OracleConfig oracle_cfg;
  bool oracle_pm = false, oracle_json = false;
  oracle_cmd->add_option("--n", oracle_n, "family index n")->required();
  oracle_cmd->add_option("--deg", oracle_cfg.degree_bound, "exponent bound D");
  oracle_cmd->add_option("--coeff", oracle_cfg.coeff_bound, "coefficient bound C");
  oracle_cmd->add_option("--shift", oracle_cfg.shift_bound, "t-shift scan bound J");
  oracle_cmd->add_option("--threads", oracle_cfg.threads, "worker threads (0 = all cores)");
  oracle_cmd->add_flag("--pm", oracle_pm, "bucket into {±t^k} classes");
  oracle_cmd->add_flag("--json", oracle_json, "machine-readable output");

  // knot-table
  auto* table_cmd = app.add_subcommand("knot-table", "batch disk counts from a knot CSV");
  std::string table_input, table_output, table_format = "csv";
  table_cmd->add_option("--input", table_input, "input CSV (name,seifert,alexander)")->required();
  table_cmd->add_option("--output", table_output, "output path (default stdout)");
  table_cmd->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "run the embedded verification suite");
  unsigned selftest_threads = 0;
  selftest_cmd->add_option("--threads", selftest_threads, "oracle threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    opts.factor_limit = factor_limit_from_env();
    if (classify_cmd->parsed()) return cmd_classify(classify_n, classify_pm_only, classify_json, opts);
    if (units_cmd->parsed()) return cmd_classify(units_n, false, units_json, opts);
    if (disks_cmd->parsed()) {
      if (disks_poly.empty() && !disks_have_n) {
        std::cerr << "error: disks requires --poly or --n\n";
        return kExitUsage;
      }
      return cmd_disks(disks_poly,
                       disks_have_n ? std::optional<std::int64_t>(disks_n) : std::nullopt,
                       disks_json, opts);
    }
    if (oracle_cmd->parsed()) {
      oracle_cfg.mode = oracle_pm ? ShiftMode::plus_minus_t : ShiftMode::t_only;
      return cmd_oracle(oracle_n, oracle_cfg, oracle_json, opts);
    }
    if (table_cmd->parsed()) return cmd_knot_table(table_input, table_output, table_format, opts);
    if (selftest_cmd->parsed()) return cmd_selftest(selftest_threads);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::factorization_limit ? kExitResourceLimit : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
