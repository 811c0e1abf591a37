#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"  // vendored nlohmann/json

#include "sqfree/chartab.hpp"
#include "sqfree/error.hpp"

namespace sqfree {

inline constexpr int kChartabFormat = 1;

/// Serializable view of a character table: class data and canonical values.
struct TableDocument {
  std::string group;
  std::uint64_t order = 0;
  std::uint64_t e = 1;
  struct ClassEntry {
    std::uint64_t size = 0;
    std::uint64_t element_order = 0;
    friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
  };
  struct Row {
    std::uint64_t degree = 0;
    std::vector<std::vector<long long>> values;  // canonical coordinates
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<ClassEntry> classes;
  std::vector<Row> rows;
  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

inline TableDocument to_document(const CharacterTable& t) {
  TableDocument d;
  d.group = t.group_spec;
  d.order = t.order;
  d.e = t.e;
  for (std::size_t c = 0; c < t.class_count(); ++c)
    d.classes.push_back({t.classes->sizes[c], t.classes->element_orders[c]});
  for (const auto& r : t.rows) {
    TableDocument::Row row{r.degree, {}};
    for (const auto& v : r.values) row.values.push_back(v.canonical());
    d.rows.push_back(std::move(row));
  }
  return d;
}

/// One key per line, one class or row per line, so diffs stay readable.
inline std::string serialize(const TableDocument& d) {
  using nlohmann::json;
  std::ostringstream out;
  out << "{\n";
  out << "  \"chartab-format\": " << kChartabFormat << ",\n";
  out << "  \"group\": " << json(d.group).dump() << ",\n";
  out << "  \"order\": " << d.order << ",\n";
  out << "  \"e\": " << d.e << ",\n";
  out << "  \"classes\": [";
  for (std::size_t i = 0; i < d.classes.size(); ++i)
    out << (i ? ",\n    " : "\n    ")
        << json{{"repSize", d.classes[i].size}, {"order", d.classes[i].element_order}}.dump();
  out << "\n  ],\n";
  out << "  \"rows\": [";
  for (std::size_t i = 0; i < d.rows.size(); ++i)
    out << (i ? ",\n    " : "\n    ") << json{{"degree", d.rows[i].degree}, {"values", d.rows[i].values}}.dump();
  out << "\n  ]\n}\n";
  return out.str();
}

inline std::string serialize(const CharacterTable& t) { return serialize(to_document(t)); }

inline TableDocument parse_table_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed table: ") + e.what(), e.byte, ParseError::Unit::Column);
  }
  try {
    if (j.at("chartab-format").get<int>() != kChartabFormat) throw InputError("unsupported chartab-format");
    TableDocument d;
    d.group = j.at("group").get<std::string>();
    d.order = j.at("order").get<std::uint64_t>();
    d.e = j.at("e").get<std::uint64_t>();
    for (const auto& c : j.at("classes"))
      d.classes.push_back({c.at("repSize").get<std::uint64_t>(), c.at("order").get<std::uint64_t>()});
    for (const auto& r : j.at("rows"))
      d.rows.push_back({r.at("degree").get<std::uint64_t>(), r.at("values").get<std::vector<std::vector<long long>>>()});
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed table: ") + e.what());
  }
}

/// ATLAS-style class names: element order followed by a letter, "1a", "2a", "3a", "3b", ...
inline std::vector<std::string> class_names(const ConjugacyClasses& cc) {
  std::map<std::uint64_t, int> seen;
  std::vector<std::string> names;
  for (auto o : cc.element_orders) {
    int k = seen[o]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('a' + k % 26));
      k = k / 26 - 1;
    } while (k >= 0);
    names.push_back(std::to_string(o) + suffix);
  }
  return names;
}

/// Human-readable table; irrational values are written in powers of z = exp(2 pi i / e).
inline std::string format_table(const CharacterTable& t) {
  const auto names = class_names(*t.classes);
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"class"});
  cells.push_back({"size"});
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    cells[0].push_back(names[c]);
    cells[1].push_back(std::to_string(t.classes->sizes[c]));
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<std::string> line{"X." + std::to_string(i + 1)};
    for (const auto& v : t.rows[i].values) line.push_back(format_canonical(v.canonical()));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(t.class_count() + 1, 0);
  for (const auto& line : cells)
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());

  std::ostringstream out;
  out << "group " << (t.group_spec.empty() ? "(unnamed)" : t.group_spec) << ", order " << t.order << ", "
      << t.class_count() << " classes, z = exp(2 pi i/" << t.e << ")\n";
  for (const auto& line : cells) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k) out << "  ";
      if (k == 0)
        out << line[k] << std::string(width[k] - line[k].size(), ' ');
      else
        out << std::string(width[k] - line[k].size(), ' ') << line[k];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sqfree
