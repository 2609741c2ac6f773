#pragma once

// Census of prime alternating knots (through nine crossings) and two-component
// links (through eight) with their expected nonorientable genus.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "spanlift/diagram.hpp"
#include "spanlift/error.hpp"
#include "spanlift/genus.hpp"
#include "spanlift/half_int.hpp"
#include "spanlift/census_table1.hpp"

namespace spanlift {

struct CensusEntry {
  std::string name;
  int crossings = 0;
  int components = 0;
  std::string pd;
  HalfInt expected;
  int row = 0;  // 1-based line in the source
};

inline constexpr std::string_view kCensusHeader = "name,crossings,components,pd,expected_nonor_genus";
inline constexpr std::string_view kBuiltinPrefix = "builtin:";

namespace detail {

// Splits one CSV record; double quotes group commas, "" is a literal quote.
inline std::optional<std::vector<std::string>> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) return std::nullopt;
  out.push_back(std::move(cur));
  return out;
}

inline std::optional<int> to_positive_int(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.size() > 6) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v > 0 ? std::optional<int>(v) : std::nullopt;
}

}  // namespace detail

// Throws DiagramInvalid if the entry's diagram does not fit its row.
inline Diagram validate_entry(const CensusEntry& e) {
  const std::string at = "row " + std::to_string(e.row) + " (" + e.name + "): ";
  Diagram d;
  try {
    d = parse_pd(e.pd);
  } catch (const Error& err) {
    throw Error(ErrorKind::DiagramInvalid, at + err.what());
  }
  if (d.crossing_count() != e.crossings)
    throw Error(ErrorKind::DiagramInvalid, at + "pd has " + std::to_string(d.crossing_count()) + " crossings");
  if (d.component_count() != e.components)
    throw Error(ErrorKind::DiagramInvalid, at + "pd has " + std::to_string(d.component_count()) + " components");
  if (!is_connected(d)) throw Error(ErrorKind::DiagramInvalid, at + "diagram is not connected");
  if (!is_alternating(d)) throw Error(ErrorKind::DiagramInvalid, at + "diagram is not alternating");
  if (!is_reduced(d)) throw Error(ErrorKind::DiagramInvalid, at + "diagram is not reduced");
  return d;
}

inline std::vector<CensusEntry> parse_census(std::string_view text) {
  std::vector<CensusEntry> out;
  bool header_seen = false;
  int row = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++row;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::trim(line).empty() || detail::trim(line).front() == '#') continue;
    if (!header_seen) {
      if (detail::trim(line) != kCensusHeader)
        throw Error(ErrorKind::SchemaError, "row " + std::to_string(row) + ": expected header '" +
                                                std::string(kCensusHeader) + "'");
      header_seen = true;
      continue;
    }
    auto fields = detail::split_csv(line);
    const std::string at = "row " + std::to_string(row) + ": ";
    if (!fields) throw Error(ErrorKind::SchemaError, at + "unterminated quote");
    if (fields->size() != 5)
      throw Error(ErrorKind::SchemaError, at + "expected 5 fields, found " + std::to_string(fields->size()));
    CensusEntry e;
    e.row = row;
    e.name = std::string(detail::trim((*fields)[0]));
    if (e.name.empty()) throw Error(ErrorKind::SchemaError, at + "empty name");
    auto n = detail::to_positive_int((*fields)[1]);
    auto c = detail::to_positive_int((*fields)[2]);
    if (!n) throw Error(ErrorKind::SchemaError, at + "bad crossing count '" + (*fields)[1] + "'");
    if (!c) throw Error(ErrorKind::SchemaError, at + "bad component count '" + (*fields)[2] + "'");
    e.crossings = *n;
    e.components = *c;
    e.pd = (*fields)[3];
    auto g = HalfInt::parse(detail::trim((*fields)[4]));
    if (!g || *g < HalfInt{}) throw Error(ErrorKind::SchemaError, at + "bad genus '" + (*fields)[4] + "'");
    e.expected = *g;
    validate_entry(e);
    out.push_back(std::move(e));
  }
  if (!header_seen) throw Error(ErrorKind::SchemaError, "missing header row");
  return out;
}

// `builtin:table1` or a path to a CSV file.
inline std::vector<CensusEntry> load_census(const std::string& source) {
  if (source.rfind(kBuiltinPrefix, 0) == 0) {
    const std::string tag = source.substr(kBuiltinPrefix.size());
    if (tag == "table1") return parse_census(kTable1Csv);
    throw Error(ErrorKind::SchemaError, "unknown built-in census '" + tag + "'");
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open census file '" + source + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_census(ss.str());
}

// Values published for an entry that disagree with the table's own value.
struct AlternateValue {
  HalfInt value;
  std::string source;
};

inline const std::map<std::string, AlternateValue>& alternate_values() {
  static const std::map<std::string, AlternateValue> table = {
      {"6_3^2", {HalfInt::from_twice(3), "crosscap number 3 reported for this link elsewhere"}},
  };
  return table;
}

struct CensusResult {
  CensusEntry entry;
  GenusValue computed;
  bool matched = false;
  bool crosscap_added = false;
  std::optional<AlternateValue> alternate;
  bool alternate_matched = false;
  double runtime_ms = 0.0;
};

struct CensusReport {
  std::vector<CensusResult> entries;
  int total = 0;
  int matched = 0;
  int mismatched = 0;
};

inline CensusResult verify_entry(const CensusEntry& e) {
  const auto start = std::chrono::steady_clock::now();
  CensusResult r;
  r.entry = e;
  const Diagram d = validate_entry(e);
  const auto detail = nonorientable_genus_detail(d);
  r.computed = detail.genus;
  r.crosscap_added = detail.crosscap_added;
  r.matched = r.computed.value == e.expected;
  if (auto it = alternate_values().find(e.name); it != alternate_values().end()) {
    r.alternate = it->second;
    r.alternate_matched = r.computed.value == it->second.value;
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Entries are processed on up to `jobs` threads; results keep input order.
inline CensusReport verify_census(const std::vector<CensusEntry>& entries, int jobs = 1) {
  CensusReport rep;
  rep.entries.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) rep.entries[i] = verify_entry(entries[i]);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(entries.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  rep.total = static_cast<int>(entries.size());
  for (const auto& r : rep.entries) (r.matched ? rep.matched : rep.mismatched)++;
  return rep;
}

inline nlohmann::ordered_json fraction_json(HalfInt h) {
  return {{"num", h.numerator()}, {"den", h.denominator()}};
}

inline nlohmann::ordered_json report_json(const CensusReport& rep, bool timings = false) {
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.entries) {
    nlohmann::ordered_json e;
    e["name"] = r.entry.name;
    e["crossings"] = r.entry.crossings;
    e["components"] = r.entry.components;
    e["computed"] = fraction_json(r.computed.value);
    e["expected"] = fraction_json(r.entry.expected);
    e["matched"] = r.matched;
    e["crosscap_added"] = r.crosscap_added;
    if (r.alternate) {
      e["flagged"] = true;
      e["alternate"] = {{"value", fraction_json(r.alternate->value)},
                        {"matched", r.alternate_matched},
                        {"source", r.alternate->source}};
    }
    if (timings) e["runtime_ms"] = r.runtime_ms;
    j["entries"].push_back(std::move(e));
  }
  j["summary"] = {{"total", rep.total}, {"matched", rep.matched}, {"mismatched", rep.mismatched}};
  return j;
}

inline std::string report_tsv(const CensusReport& rep, bool timings = false) {
  std::ostringstream os;
  os << "name\tcrossings\tcomponents\tcomputed\texpected\tmatch\tnote";
  if (timings) os << "\truntime_ms";
  os << '\n';
  for (const auto& r : rep.entries) {
    os << r.entry.name << '\t' << r.entry.crossings << '\t' << r.entry.components << '\t' << r.computed.value << '\t'
       << r.entry.expected << '\t' << (r.matched ? "match" : "MISMATCH") << '\t';
    std::string note;
    if (r.crosscap_added) note = "crosscap-added";
    if (r.alternate) {
      if (!note.empty()) note += ';';
      note += "flagged:alternate=" + r.alternate->value.str() + (r.alternate_matched ? "(match)" : "(no-match)");
    }
    os << (note.empty() ? "-" : note);
    if (timings) os << '\t' << r.runtime_ms;
    os << '\n';
  }
  os << "# total=" << rep.total << " matched=" << rep.matched << " mismatched=" << rep.mismatched << '\n';
  return os.str();
}

}  // namespace spanlift
