#pragma once
// Append-only JSON-lines persistence for search results.
//
// One record per line. A record stores the size, property mode, best h, the
// canonical witness, whether the search that produced it completed its box
// (`exact`), free-form search parameters, and an ISO-8601 UTC timestamp.
// Lines are never rewritten: store_record appends, and load_records
// re-verifies every line, surfacing stale or invalid entries in a flagged
// list without touching the file. Records that fail verification are
// excluded from the verified list but remain on disk.
//
// Loading deduplicates by (mode, size, witness) — two shards that found the
// same canonical witness merge into one record (first occurrence wins).

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <time.h>

#include "sidonlab/fekete.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/predicates.hpp"
#include "sidonlab/rational.hpp"
#include "sidonlab/solver.hpp"

namespace sidonlab {

inline constexpr int records_schema_version = 1;

struct SearchRecord {
  int size = 0;
  PropertyMode mode = PropertyMode::WeakSidon;
  int best_h = 0;
  PointSet witness;            // canonical form (min 0, integer, gcd 1)
  bool exact = false;          // true iff the producing search completed
  nlohmann::json params = nlohmann::json::object();
  std::string timestamp;       // ISO-8601 UTC; filled on store when empty
};

struct FlaggedRecord {
  std::size_t line = 0;        // 1-based line number in the file
  std::string message;
  std::string raw;
};

struct LoadResult {
  std::vector<SearchRecord> records;  // verified, deduplicated
  std::vector<FlaggedRecord> flagged;
};

namespace detail {

inline std::string iso8601_now_utc() {
  time_t now = time(nullptr);
  struct tm parts;
  gmtime_r(&now, &parts);
  char buf[32];
  strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

inline PropertyMode parse_mode_name(const std::string& name) {
  if (name == mode_name(PropertyMode::WeakSidon))
    return PropertyMode::WeakSidon;
  if (name == mode_name(PropertyMode::FourFive)) return PropertyMode::FourFive;
  throw std::invalid_argument("unknown property mode '" + name + "'");
}

inline nlohmann::json record_to_json(const SearchRecord& r) {
  nlohmann::json witness = nlohmann::json::array();
  for (const Rational& v : r.witness.values()) witness.push_back(to_string(v));
  return nlohmann::json{{"schema_version", records_schema_version},
                        {"n", r.size},
                        {"mode", std::string(mode_name(r.mode))},
                        {"best_h", r.best_h},
                        {"witness", witness},
                        {"exact", r.exact},
                        {"params", r.params},
                        {"timestamp", r.timestamp}};
}

inline SearchRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("record is not an object");
  if (!j.contains("schema_version") ||
      !j.at("schema_version").is_number_integer() ||
      j.at("schema_version").get<int>() != records_schema_version)
    throw std::invalid_argument("unsupported or missing schema_version");
  for (const char* field : {"n", "best_h"})
    if (!j.contains(field) || !j.at(field).is_number_integer())
      throw std::invalid_argument(std::string("missing integer field '") +
                                  field + "'");
  if (!j.contains("mode") || !j.at("mode").is_string())
    throw std::invalid_argument("missing string field 'mode'");
  if (!j.contains("witness") || !j.at("witness").is_array())
    throw std::invalid_argument("missing array field 'witness'");
  if (!j.contains("exact") || !j.at("exact").is_boolean())
    throw std::invalid_argument("missing boolean field 'exact'");
  SearchRecord r;
  r.size = j.at("n").get<int>();
  r.mode = parse_mode_name(j.at("mode").get<std::string>());
  r.best_h = j.at("best_h").get<int>();
  std::vector<Rational> values;
  for (const auto& item : j.at("witness")) {
    if (!item.is_string())
      throw std::invalid_argument("witness entries must be strings");
    values.push_back(parse_rational(item.get<std::string>()));
  }
  r.witness = PointSet(std::move(values));
  r.exact = j.at("exact").get<bool>();
  r.params = j.value("params", nlohmann::json::object());
  r.timestamp = j.value("timestamp", std::string());
  return r;
}

// Shared by store (throws) and load (flags): why is this record not
// self-consistent? Empty result = verified.
inline std::optional<std::string> verification_failure(const SearchRecord& r,
                                                       int solver_cap) {
  if (r.size <= 0) return "size must be positive";
  if (static_cast<int>(r.witness.size()) != r.size)
    return "witness has " + std::to_string(r.witness.size()) +
           " points, record says " + std::to_string(r.size);
  if (normalize(r.witness).first != r.witness)
    return "witness is not in canonical form";
  if (!holds_property(r.mode, r.witness))
    return "witness does not satisfy the " + std::string(mode_name(r.mode)) +
           " property";
  if (r.size > solver_cap)
    return "witness size exceeds the solver cap " + std::to_string(solver_cap);
  const int h = max_sidon_subset(r.witness, solver_cap).h;
  if (h != r.best_h)
    return "stored best_h = " + std::to_string(r.best_h) +
           " but the witness solves to h = " + std::to_string(h);
  return std::nullopt;
}

}  // namespace detail

// Verifies the record and appends it as one JSON line. The witness is
// canonicalized first (h is affine-invariant, so best_h is unaffected); an
// empty timestamp is stamped with the current UTC time.
inline SearchRecord store_record(const std::string& path,
                                 const SearchRecord& record,
                                 int solver_cap = default_solver_cap) {
  SearchRecord canon = record;
  if (canon.witness.size() > 0)
    canon.witness = normalize(canon.witness).first;
  if (canon.timestamp.empty()) canon.timestamp = detail::iso8601_now_utc();
  if (auto why = detail::verification_failure(canon, solver_cap))
    throw std::invalid_argument("refusing to store unverifiable record: " +
                                *why);
  std::ofstream out(path, std::ios::app);
  if (!out)
    throw std::runtime_error("cannot open record store '" + path +
                             "' for append");
  out << detail::record_to_json(canon).dump() << '\n';
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
  return canon;
}

// Reads every line, re-verifies each record, and returns the verified ones
// (deduplicated by mode/size/witness, first wins) plus a flagged list of
// lines that failed parsing or verification. The file is never modified.
inline LoadResult load_records(const std::string& path,
                               int solver_cap = default_solver_cap) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open record store '" + path + "'");
  LoadResult result;
  std::vector<std::pair<std::string, std::string>> seen;  // (mode, witness)
  std::vector<int> seen_sizes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    SearchRecord record;
    try {
      record = detail::record_from_json(
          nlohmann::json::parse(line, nullptr, true));
    } catch (const std::exception& e) {
      result.flagged.push_back({line_no, e.what(), line});
      continue;
    }
    if (auto why = detail::verification_failure(record, solver_cap)) {
      result.flagged.push_back({line_no, *why, line});
      continue;
    }
    bool duplicate = false;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen_sizes[i] == record.size &&
          seen[i].first == mode_name(record.mode) &&
          seen[i].second == record.witness.to_text()) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    seen.emplace_back(std::string(mode_name(record.mode)),
                      record.witness.to_text());
    seen_sizes.push_back(record.size);
    result.records.push_back(std::move(record));
  }
  return result;
}

// Collapses verified records of one mode into a Fekete table: for each size
// the smallest best_h is kept. Record values are certified upper bounds for
// the extremal sequence (the search box is finite), so entries are marked
// non-exact regardless of the records' own `exact` flag, which only says the
// box was exhausted.
inline FeketeTable fekete_table_from_records(
    const std::vector<SearchRecord>& records, PropertyMode mode) {
  std::map<long long, Rational> best;
  for (const SearchRecord& r : records) {
    if (r.mode != mode) continue;
    auto [it, inserted] = best.emplace(r.size, Rational(r.best_h));
    if (!inserted && Rational(r.best_h) < it->second)
      it->second = Rational(r.best_h);
  }
  FeketeTable table;
  for (const auto& [n, v] : best) table.push_back({n, v, false});
  return table;
}

}  // namespace sidonlab
