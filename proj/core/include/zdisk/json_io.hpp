#pragma once

// JSON views of the report types.  Field names are stable; they are part of
// the tool's machine-readable interface.  Requires nlohmann/json on the
// include path (vendored as json.hpp).

#include <limits>

#include <json.hpp>

#include "zdisk/knots.hpp"
#include "zdisk/oracle.hpp"
#include "zdisk/quadint.hpp"
#include "zdisk/unitgroup.hpp"

namespace zdisk {

inline nlohmann::json int_json(const Int& v) {
  // Numbers that fit in 64 bits stay numeric; anything larger is a string.
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

inline nlohmann::json json_of(const QuadIntElement& e) {
  return {{"x", rat_str(e.x())}, {"y", rat_str(e.y())}, {"d", int_json(e.d())}};
}

inline nlohmann::json json_of(const QuadIdeal& i) {
  return {{"a", int_json(i.a())}, {"b", int_json(i.b())}, {"g", int_json(i.g())},
          {"d", int_json(i.d())}};
}

inline nlohmann::json json_of(const LambdaElement& e) {
  const char* kind = "trivial";
  switch (e.element_case()) {
    case LambdaElement::Case::irreducible: kind = "irreducible"; break;
    case LambdaElement::Case::reducible: kind = "reducible"; break;
    case LambdaElement::Case::trivial: kind = "trivial"; break;
  }
  return {{"n", e.context().n},
          {"case", kind},
          {"coords", {rat_str(e.first()), rat_str(e.second())}}};
}

inline const char* json_shape_name(GroupShape s) {
  switch (s) {
    case GroupShape::trivial: return "trivial";
    case GroupShape::z2: return "Z2";
    case GroupShape::z4: return "Z4";
  }
  return "trivial";
}

inline nlohmann::json json_of_quotient(const QuotientStructure& q) {
  nlohmann::json out;
  out["finite"] = q.finite;
  out["cardinality"] = q.cardinality ? nlohmann::json(*q.cardinality) : nlohmann::json();
  out["shape"] = q.shape ? nlohmann::json(json_shape_name(*q.shape)) : nlohmann::json();
  out["rank"] = q.rank;
  auto gens = nlohmann::json::array();
  for (const auto& g : q.generators) gens.push_back(json_of(g));
  out["generators"] = gens;
  if (q.coset_reps) {
    auto reps = nlohmann::json::array();
    for (const auto& r : *q.coset_reps) reps.push_back(json_of(r));
    out["coset_reps"] = reps;
  } else {
    out["coset_reps"] = nullptr;
  }
  return out;
}

inline nlohmann::json json_of(const UnitGroupStructure& s) {
  nlohmann::json out = json_of_quotient(s.by_t);
  out["n"] = s.n;
  out["pm"] = json_of_quotient(s.by_pm_t);
  out["flags"] = s.flags;
  out["saturation_s"] = s.saturation_s ? nlohmann::json(*s.saturation_s) : nlohmann::json();
  if (s.class_data && s.class_data->h) {
    out["class_number"] = int_json(*s.class_data->h);
  } else {
    out["class_number"] = nullptr;
  }
  out["caveat"] = kDiskCountCaveat;
  return out;
}

inline nlohmann::json json_of(const DiskCount& c) {
  switch (c.kind) {
    case DiskCount::Kind::finite:
      return {{"kind", "finite"}, {"count", c.count}};
    case DiskCount::Kind::infinite:
      return {{"kind", "infinite"}, {"rank", c.rank}};
    case DiskCount::Kind::unsupported:
      return {{"kind", "unsupported"}};
  }
  return {{"kind", "unsupported"}};
}

inline nlohmann::json json_of(const DiskCountReport& r) {
  nlohmann::json out;
  out["alexander"] = r.alexander.str();
  out["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json();
  out["isotopy"] = json_of(r.isotopy);
  out["equivalence"] = json_of(r.equivalence);
  out["caveat"] = r.caveat;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline nlohmann::json json_of(const OracleResult& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& p : r.classes) classes.push_back(p.str());
  return {{"n", r.n},
          {"classes", classes},
          {"count", r.classes.size()},
          {"unit_count", r.unit_count},
          {"complete_within_bounds", r.complete_within_bounds},
          {"config",
           {{"degree_bound", r.config.degree_bound},
            {"coeff_bound", r.config.coeff_bound},
            {"shift_bound", r.config.shift_bound},
            {"mode", r.config.mode == ShiftMode::plus_minus_t ? "plus_minus_t" : "t_only"}}}};
}

inline nlohmann::json json_of(const DkRow& row) {
  nlohmann::json out;
  out["name"] = row.name;
  out["alexander"] = row.alexander;
  out["n"] = row.n ? nlohmann::json(*row.n) : nlohmann::json();
  if (row.error) {
    out["error"] = row.note;
  } else {
    out["isotopy"] = json_of(row.isotopy);
    out["equivalence"] = json_of(row.equivalence);
    if (!row.note.empty()) out["note"] = row.note;
    out["caveat"] = kDiskCountCaveat;
  }
  return out;
}

inline nlohmann::json json_of(const std::vector<DkRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) out.push_back(json_of(row));
  return out;
}

}  // namespace zdisk
