#pragma once

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "covtype/bounds.hpp"
#include "covtype/complex.hpp"
#include "covtype/cover.hpp"
#include "covtype/error.hpp"

namespace covtype::json_io {

using nlohmann::json;

inline json to_json(const Vertex& v) {
  if (v.is_integer()) return v.as_integer();
  return v.as_string();
}

inline Vertex vertex_from_json(const json& j) {
  if (j.is_number_integer()) return Vertex(j.get<std::int64_t>());
  if (j.is_string()) return Vertex(j.get<std::string>());
  throw FormatError("vertex token must be an integer or a string, got " + j.dump());
}

inline json to_json(const Simplex& s) {
  json a = json::array();
  for (const auto& v : s) a.push_back(to_json(v));
  return a;
}

inline Simplex simplex_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("simplex must be an array, got " + j.dump());
  std::vector<Vertex> vs;
  for (const auto& x : j) vs.push_back(vertex_from_json(x));
  return Simplex(std::move(vs));
}

inline json simplices_to_json(const std::vector<Simplex>& simplices) {
  json a = json::array();
  for (const auto& s : simplices) a.push_back(to_json(s));
  return a;
}

/// {"vertices": [...], "maximal_simplices": [[...], ...]}, sorted.
inline json to_json(const SimplicialComplex& k) {
  json j;
  json vs = json::array();
  for (const auto& v : k.vertices()) vs.push_back(to_json(v));
  j["vertices"] = vs;
  j["maximal_simplices"] = simplices_to_json(k.maximal_simplices());
  return j;
}

inline std::vector<Simplex> simplices_from_json(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing \"") + key + "\"");
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw FormatError(std::string("\"") + key + "\" must be an array");
  std::vector<Simplex> out;
  for (const auto& s : arr) out.push_back(simplex_from_json(s));
  return out;
}

/// Listed vertices outside every simplex become isolated points; a simplex
/// vertex missing from a given vertex list is an error.
inline SimplicialComplex complex_from_json(const json& j) {
  auto simplices = simplices_from_json(j, "maximal_simplices");
  if (j.contains("vertices")) {
    if (!j.at("vertices").is_array()) throw FormatError("\"vertices\" must be an array");
    std::set<Vertex> listed;
    for (const auto& v : j.at("vertices")) listed.insert(vertex_from_json(v));
    std::set<Vertex> used;
    for (const auto& s : simplices) {
      for (const auto& v : s) {
        if (!listed.count(v)) throw UnknownVertex("vertex " + v.to_string() + " is not listed in \"vertices\"");
        used.insert(v);
      }
    }
    for (const auto& v : listed) {
      if (!used.count(v)) simplices.push_back(Simplex{v});
    }
  }
  return SimplicialComplex::from_maximal(simplices);
}

/// {"ambient": <complex>, "elements": [{"name", "maximal_simplices"}]}.
inline json to_json(const Cover& c) {
  json j;
  j["ambient"] = to_json(c.ambient());
  json els = json::array();
  for (const auto& e : c.elements()) {
    json x;
    x["name"] = e.name;
    x["maximal_simplices"] = simplices_to_json(e.complex.maximal_simplices());
    els.push_back(x);
  }
  j["elements"] = els;
  return j;
}

inline Cover cover_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("elements")) {
    throw FormatError("cover needs \"ambient\" and \"elements\"");
  }
  auto ambient = complex_from_json(j.at("ambient"));
  if (!j.at("elements").is_array()) throw FormatError("\"elements\" must be an array");
  std::vector<CoverElement> els;
  for (const auto& e : j.at("elements")) {
    if (!e.is_object() || !e.contains("name") || !e.at("name").is_string()) {
      throw FormatError("cover element needs a string \"name\"");
    }
    els.push_back({e.at("name").get<std::string>(),
                   SimplicialComplex::from_maximal(simplices_from_json(e, "maximal_simplices"))});
  }
  return Cover(std::move(ambient), std::move(els));
}

/// A complex document, or the "complex" of a gallery document, or the
/// ambient of a cover.
inline SimplicialComplex extract_complex(const json& j) {
  if (j.is_object() && j.contains("maximal_simplices")) return complex_from_json(j);
  if (j.is_object() && j.contains("complex")) return complex_from_json(j.at("complex"));
  if (j.is_object() && j.contains("ambient")) return complex_from_json(j.at("ambient"));
  throw FormatError("input holds no complex");
}

/// A cover document or the "cover" of a gallery document.
inline Cover extract_cover(const json& j) {
  if (j.is_object() && j.contains("elements")) return cover_from_json(j);
  if (j.is_object() && j.contains("cover") && !j.at("cover").is_null()) return cover_from_json(j.at("cover"));
  throw FormatError("input holds no cover");
}

inline json to_json(const BoundReport& r) {
  json j;
  j["lower"] = r.lower;
  j["upper"] = r.upper ? json(*r.upper) : json(nullptr);
  json cs = json::array();
  for (const auto& c : r.contributions) {
    json x;
    x["rule"] = c.rule;
    x["value"] = c.value;
    if (c.field) x["field"] = c.field->name();
    cs.push_back(x);
  }
  j["contributions"] = cs;
  if (!r.per_component.empty()) {
    json pc = json::array();
    for (const auto& p : r.per_component) pc.push_back(to_json(p));
    j["per_component"] = pc;
  }
  return j;
}

}  // namespace covtype::json_io
