#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "zslab/invariants.hpp"
#include "zslab/products.hpp"
#include "zslab/sequence.hpp"

namespace zslab {
namespace io {

using json = nlohmann::ordered_json;

// --- Cayley table files ---
// Schema: {"name": string, "order": k, "table": [[int;k];k]}, 0-based entries,
// identity at index 0.

inline FiniteGroup load_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open table file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::parse_error, "table file '" + path + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("order") || !j.contains("table"))
    fail(errc::invalid_table, "table file '" + path + "': need keys name, order, table");
  if (!j["name"].is_string() || !j["order"].is_number_integer() || !j["table"].is_array())
    fail(errc::invalid_table, "table file '" + path + "': key types must be string/int/array");
  const std::string name = j["name"].get<std::string>();
  const long long order = j["order"].get<long long>();
  const auto& t = j["table"];
  if (order < 1 || (long long)t.size() != order)
    fail(errc::invalid_table, "table file '" + path + "': table has " +
                                  std::to_string(t.size()) + " rows, order says " +
                                  std::to_string(order));
  std::vector<std::vector<elem_t>> rows;
  rows.reserve(t.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    const auto& row = t[r];
    if (!row.is_array() || (long long)row.size() != order)
      fail(errc::invalid_table,
           "table file '" + path + "': row " + std::to_string(r) + " is not an array of length " +
               std::to_string(order));
    std::vector<elem_t> out;
    out.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer())
        fail(errc::invalid_table, "table file '" + path + "': entry at row " + std::to_string(r) +
                                      ", col " + std::to_string(c) + " is not an integer");
      out.push_back(row[c].get<elem_t>());
    }
    rows.push_back(std::move(out));
  }
  return FiniteGroup::from_table(name, rows);
}

inline json cayley_table_to_json(const FiniteGroup& g, const std::string& name) {
  json t = json::array();
  for (elem_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (elem_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    t.push_back(std::move(row));
  }
  return json{{"name", name}, {"order", g.order()}, {"table", std::move(t)}};
}

// --- group descriptors: C<n>, D<n>, Q<n>, T:<path> ---

inline FiniteGroup parse_group(const std::string& descriptor) {
  if (descriptor.rfind("T:", 0) == 0) return load_cayley_table(descriptor.substr(2));
  if (descriptor.size() < 2)
    fail(errc::parse_error, "group descriptor '" + descriptor + "' too short");
  char kind = descriptor[0];
  const std::string num = descriptor.substr(1);
  for (char c : num)
    if (!std::isdigit((unsigned char)c))
      fail(errc::parse_error, "group descriptor '" + descriptor + "': bad parameter '" + num + "'");
  long long n = 0;
  try {
    n = std::stoll(num);
  } catch (...) {
    fail(errc::parse_error, "group descriptor '" + descriptor + "': bad parameter '" + num + "'");
  }
  switch (kind) {
    case 'C': return FiniteGroup::cyclic((int)n);
    case 'D': return FiniteGroup::dihedral((int)n);
    case 'Q': return FiniteGroup::dicyclic((int)n);
    default:
      fail(errc::parse_error,
           "group descriptor '" + descriptor + "': kind must be C, D, Q or T:<path>");
  }
}

// --- certificates ---

inline json certificate_to_json(const FiniteGroup& g, const Certificate& c) {
  json w = json::array();
  for (elem_t e : c.witness) w.push_back(g.elem_name(e));
  return json{{"witness", std::move(w)}, {"kind", to_string(c.kind)}, {"cross", c.cross.str()}};
}

inline Certificate certificate_from_json(const FiniteGroup& g, const json& j) {
  if (!j.is_object() || !j.contains("witness") || !j.contains("kind") || !j.contains("cross"))
    fail(errc::parse_error, "certificate needs keys witness, kind, cross");
  Certificate c;
  if (!j["witness"].is_array()) fail(errc::parse_error, "certificate witness must be an array");
  for (const auto& t : j["witness"]) {
    if (!t.is_string()) fail(errc::parse_error, "certificate witness terms must be strings");
    c.witness.push_back(g.parse_elem(t.get<std::string>()));
  }
  c.kind = find_mode_from_string(j["kind"].get<std::string>());
  c.cross = Fraction::parse(j["cross"].get<std::string>());
  return c;
}

// --- invariant results ---

inline json sequences_to_json(const std::vector<Sequence>& seqs) {
  json a = json::array();
  for (const auto& s : seqs) a.push_back(s.str());
  return a;
}

inline json invariant_result_to_json(const InvariantResult& r) {
  json j;
  j["invariant"] = r.invariant;
  if (r.invariant == "k" || r.invariant == "K")
    j["value"] = r.cross.str();
  else
    j["value"] = r.value;
  j["witnesses"] = sequences_to_json(r.witnesses);
  j["exhaustive"] = r.stats.exhaustive;
  j["nodes"] = r.stats.nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

// --- results cache ---
// One JSON object per file: key -> {"value": ..., "witnesses": [...],
// "exhaustive": true}. Only exhaustive results are ever stored.

class ResultsCache {
 public:
  ResultsCache() = default;

  static ResultsCache load(const std::string& path) {
    ResultsCache c;
    c.path_ = path;
    std::ifstream in(path);
    if (in) {
      try {
        in >> c.data_;
      } catch (const json::exception& e) {
        fail(errc::parse_error, "cache file '" + path + "': " + e.what());
      }
      if (!c.data_.is_object())
        fail(errc::parse_error, "cache file '" + path + "': top level must be an object");
    }
    if (!c.data_.is_object()) c.data_ = json::object();
    return c;
  }

  static std::string key(const std::string& descriptor, const std::string& invariant,
                         const std::string& flags) {
    return descriptor + "|" + invariant + "|" + flags;
  }

  std::optional<json> lookup(const std::string& k) const {
    auto it = data_.find(k);
    if (it == data_.end()) return std::nullopt;
    return *it;
  }

  void store(const std::string& k, const InvariantResult& r) {
    if (!r.stats.exhaustive) return;  // partial results are never cached
    data_[k] = invariant_result_to_json(r);
    dirty_ = true;
  }

  void save() const {
    if (!dirty_ || path_.empty()) return;
    std::ofstream out(path_);
    if (!out) fail(errc::parse_error, "cannot write cache file '" + path_ + "'");
    out << data_.dump(2) << "\n";
  }

 private:
  std::string path_;
  json data_ = json::object();
  bool dirty_ = false;
};

}  // namespace io
}  // namespace zslab
