#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "covtype/error.hpp"

namespace covtype {

/// Opaque, totally ordered vertex token. Integers sort before strings; within
/// each kind the natural order applies.
class Vertex {
 public:
  Vertex() : token_(std::int64_t{0}) {}
  Vertex(std::int64_t value) : token_(value) {}  // NOLINT(google-explicit-constructor)
  Vertex(int value) : token_(std::int64_t{value}) {}  // NOLINT(google-explicit-constructor)
  Vertex(std::string name) : token_(std::move(name)) {}  // NOLINT(google-explicit-constructor)
  Vertex(const char* name) : token_(std::string(name)) {}  // NOLINT(google-explicit-constructor)

  bool is_integer() const { return std::holds_alternative<std::int64_t>(token_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(token_); }
  const std::string& as_string() const { return std::get<std::string>(token_); }

  std::string to_string() const {
    return is_integer() ? std::to_string(as_integer()) : as_string();
  }

  friend bool operator==(const Vertex& a, const Vertex& b) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (a.token_.index() != b.token_.index()) {
      return a.token_.index() <=> b.token_.index();
    }
    if (a.is_integer()) return a.as_integer() <=> b.as_integer();
    return a.as_string().compare(b.as_string()) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vertex& v) {
    return os << v.to_string();
  }

 private:
  std::variant<std::int64_t, std::string> token_;
};

/// A nonempty, strictly increasing list of vertices.
class Simplex {
 public:
  Simplex() = default;

  /// Sorts the input; throws MalformedSimplex on an empty list or a repeated
  /// vertex.
  explicit Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw MalformedSimplex("simplex must have at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end()) {
      throw MalformedSimplex("vertex " + dup->to_string() + " repeated inside one simplex");
    }
  }
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  /// Skips validation; the caller guarantees a sorted duplicate-free list.
  static Simplex from_sorted(std::vector<Vertex> sorted) {
    Simplex s;
    s.vertices_ = std::move(sorted);
    return s;
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const Vertex& operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(const Vertex& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
  }

  /// The codimension-one face obtained by dropping the i-th vertex.
  Simplex facet_without(std::size_t i) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (k != i) out.push_back(vertices_[k]);
    }
    return from_sorted(std::move(out));
  }

  /// Adds a vertex not already present.
  Simplex with(const Vertex& v) const {
    std::vector<Vertex> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return Simplex(std::move(out));
  }

  /// All nonempty faces (including this simplex), any order.
  std::vector<Simplex> all_faces() const {
    std::vector<Simplex> out;
    const std::size_t n = vertices_.size();
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Vertex> f;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask >> k & 1U) f.push_back(vertices_[k]);
      }
      out.push_back(from_sorted(std::move(f)));
    }
    return out;
  }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) {
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
  }

  friend std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    os << '[';
    for (std::size_t i = 0; i < s.vertices_.size(); ++i) {
      if (i) os << ',';
      os << s.vertices_[i];
    }
    return os << ']';
  }

 private:
  std::vector<Vertex> vertices_;
};

}  // namespace covtype
