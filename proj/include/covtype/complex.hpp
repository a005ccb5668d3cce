#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "covtype/error.hpp"
#include "covtype/simplex.hpp"

namespace covtype {

/// Finite abstract simplicial complex.
///
/// Stored as its full face set, grouped by dimension and sorted
/// lexicographically, plus the antichain of maximal simplices. The empty
/// complex is a valid value. Instances are immutable once built.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Normalizes an arbitrary list of simplices: closes downward and keeps the
  /// maximal ones.
  static SimplicialComplex from_maximal(const std::vector<Simplex>& simplices) {
    std::vector<Simplex> faces;
    for (const auto& s : simplices) {
      auto fs = s.all_faces();
      faces.insert(faces.end(), std::make_move_iterator(fs.begin()),
                   std::make_move_iterator(fs.end()));
    }
    return from_faces(std::move(faces));
  }

  /// Builds from a face list that is already downward closed (duplicates
  /// allowed). Closure is not re-checked.
  static SimplicialComplex from_faces(std::vector<Simplex> faces) {
    SimplicialComplex k;
    for (auto& f : faces) {
      const auto d = static_cast<std::size_t>(f.dim());
      if (k.faces_.size() <= d) k.faces_.resize(d + 1);
      k.faces_[d].push_back(std::move(f));
    }
    for (auto& layer : k.faces_) {
      std::sort(layer.begin(), layer.end());
      layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    k.finish();
    return k;
  }

  bool empty() const { return faces_.empty(); }
  int dim() const { return static_cast<int>(faces_.size()) - 1; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }

  /// Faces of dimension d in lexicographic order (empty when d is out of range).
  const std::vector<Simplex>& faces(int d) const {
    static const std::vector<Simplex> none;
    if (d < 0 || d > dim()) return none;
    return faces_[static_cast<std::size_t>(d)];
  }

  std::size_t num_faces() const {
    std::size_t n = 0;
    for (const auto& layer : faces_) n += layer.size();
    return n;
  }

  /// f-vector (f_0, f_1, ..., f_dim).
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& layer : faces_) f.push_back(layer.size());
    return f;
  }

  bool contains(const Simplex& s) const {
    const auto& layer = faces(s.dim());
    return std::binary_search(layer.begin(), layer.end(), s);
  }

  bool has_vertex(const Vertex& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  /// Position of s inside faces(s.dim()); s must be a face.
  std::size_t face_index(const Simplex& s) const {
    const auto& layer = faces(s.dim());
    auto it = std::lower_bound(layer.begin(), layer.end(), s);
    if (it == layer.end() || *it != s) {
      throw PreconditionError("simplex is not a face of the complex");
    }
    return static_cast<std::size_t>(it - layer.begin());
  }

  bool is_subcomplex_of(const SimplicialComplex& other) const {
    if (dim() > other.dim()) return false;
    for (int d = 0; d <= dim(); ++d) {
      const auto& mine = faces(d);
      const auto& theirs = other.faces(d);
      if (!std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) return false;
    }
    return true;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.maximal_ == b.maximal_;
  }

 private:
  void finish() {
    while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
    vertices_.clear();
    maximal_.clear();
    if (faces_.empty()) return;
    for (const auto& s : faces_[0]) vertices_.push_back(s[0]);
    for (std::size_t d = 0; d < faces_.size(); ++d) {
      std::vector<bool> covered(faces_[d].size(), false);
      if (d + 1 < faces_.size()) {
        for (const auto& up : faces_[d + 1]) {
          for (std::size_t i = 0; i < up.size(); ++i) {
            auto f = up.facet_without(i);
            auto it = std::lower_bound(faces_[d].begin(), faces_[d].end(), f);
            if (it != faces_[d].end() && *it == f) {
              covered[static_cast<std::size_t>(it - faces_[d].begin())] = true;
            }
          }
        }
      }
      for (std::size_t i = 0; i < faces_[d].size(); ++i) {
        if (!covered[i]) maximal_.push_back(faces_[d][i]);
      }
    }
    std::sort(maximal_.begin(), maximal_.end());
  }

  std::vector<std::vector<Simplex>> faces_;
  std::vector<Vertex> vertices_;
  std::vector<Simplex> maximal_;
};

/// Builds a complex from vertex lists. Throws MalformedSimplex on an empty
/// list or a vertex repeated inside one list.
inline SimplicialComplex make_complex(const std::vector<std::vector<Vertex>>& maximal) {
  std::vector<Simplex> simplices;
  simplices.reserve(maximal.size());
  for (const auto& vs : maximal) simplices.emplace_back(vs);
  return SimplicialComplex::from_maximal(simplices);
}

inline std::vector<Simplex> all_faces(const SimplicialComplex& k, int dim) { return k.faces(dim); }

inline SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> common;
  for (int d = 0; d <= std::min(a.dim(), b.dim()); ++d) {
    std::set_intersection(a.faces(d).begin(), a.faces(d).end(), b.faces(d).begin(),
                          b.faces(d).end(), std::back_inserter(common));
  }
  return SimplicialComplex::from_faces(std::move(common));
}

inline SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> all;
  for (int d = 0; d <= std::max(a.dim(), b.dim()); ++d) {
    std::set_union(a.faces(d).begin(), a.faces(d).end(), b.faces(d).begin(), b.faces(d).end(),
                   std::back_inserter(all));
  }
  return SimplicialComplex::from_faces(std::move(all));
}

/// Union of any number of complexes over a common vertex universe.
inline SimplicialComplex union_of(const std::vector<SimplicialComplex>& parts) {
  std::vector<Simplex> all;
  for (const auto& p : parts) {
    for (int d = 0; d <= p.dim(); ++d) all.insert(all.end(), p.faces(d).begin(), p.faces(d).end());
  }
  return SimplicialComplex::from_faces(std::move(all));
}

inline long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (int d = 0; d <= k.dim(); ++d) {
    const auto n = static_cast<long long>(k.faces(d).size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

/// Full subcomplex spanned by a vertex subset: every face whose vertices all
/// lie in the subset.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k,
                                         const std::vector<Vertex>& subset) {
  std::vector<Vertex> keep = subset;
  std::sort(keep.begin(), keep.end());
  std::vector<Simplex> faces;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& s : k.faces(d)) {
      if (std::includes(keep.begin(), keep.end(), s.begin(), s.end())) faces.push_back(s);
    }
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::size_t vertex_position(const SimplicialComplex& k, const Vertex& v) {
  const auto& vs = k.vertices();
  return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
}

}  // namespace detail

/// Components ordered by their least vertex.
inline std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k) {
  const auto& vs = k.vertices();
  detail::DisjointSets sets(vs.size());
  for (const auto& m : k.maximal_simplices()) {
    const auto first = detail::vertex_position(k, m[0]);
    for (std::size_t i = 1; i < m.size(); ++i) sets.unite(first, detail::vertex_position(k, m[i]));
  }
  std::map<std::size_t, std::vector<Simplex>> groups;
  for (const auto& m : k.maximal_simplices()) {
    groups[sets.find(detail::vertex_position(k, m[0]))].push_back(m);
  }
  std::vector<SimplicialComplex> out;
  out.reserve(groups.size());
  for (auto& [root, simplices] : groups) out.push_back(SimplicialComplex::from_maximal(simplices));
  return out;
}

inline bool is_connected(const SimplicialComplex& k) {
  return !k.empty() && connected_components(k).size() == 1;
}

/// Closed star: every maximal simplex containing v, closed downward.
inline SimplicialComplex closed_star(const SimplicialComplex& k, const Vertex& v) {
  if (!k.has_vertex(v)) throw UnknownVertex("vertex " + v.to_string() + " not in complex");
  std::vector<Simplex> around;
  for (const auto& m : k.maximal_simplices()) {
    if (m.contains(v)) around.push_back(m);
  }
  return SimplicialComplex::from_maximal(around);
}

/// Link: faces of the closed star that avoid v.
inline SimplicialComplex link(const SimplicialComplex& k, const Vertex& v) {
  const auto star = closed_star(k, v);
  std::vector<Simplex> faces;
  for (int d = 0; d <= star.dim(); ++d) {
    for (const auto& s : star.faces(d)) {
      if (!s.contains(v)) faces.push_back(s);
    }
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

/// Least integer token strictly greater than every integer vertex of k
/// (0 when k has none).
inline Vertex fresh_vertex(const SimplicialComplex& k) {
  std::int64_t next = 0;
  for (const auto& v : k.vertices()) {
    if (v.is_integer()) next = std::max(next, v.as_integer() + 1);
  }
  return Vertex(next);
}

inline SimplicialComplex cone(const SimplicialComplex& k, const Vertex& apex) {
  if (k.has_vertex(apex)) {
    throw VertexCollision("cone apex " + apex.to_string() + " already a vertex");
  }
  std::vector<Simplex> simplices{Simplex{apex}};
  for (const auto& m : k.maximal_simplices()) simplices.push_back(m.with(apex));
  return SimplicialComplex::from_maximal(simplices);
}

inline SimplicialComplex suspension(const SimplicialComplex& k, const Vertex& south,
                                    const Vertex& north) {
  if (south == north) throw VertexCollision("suspension apexes must differ");
  return union_of(cone(k, south), cone(k, north));
}

/// Suspension with two fresh integer apexes.
inline SimplicialComplex suspension(const SimplicialComplex& k) {
  const Vertex south = fresh_vertex(k);
  const Vertex north(south.as_integer() + 1);
  return suspension(k, south, north);
}

/// Barycentric subdivision together with the carrier of each new vertex.
struct Subdivision {
  SimplicialComplex complex;
  /// carrier[i] is the face of the original complex whose barycenter is the
  /// new vertex with integer token i.
  std::vector<Simplex> carrier;
  std::map<Simplex, Vertex> barycenter;
};

/// New vertices are integer tokens 0..N-1 numbering the faces of k by
/// dimension, then lexicographically.
inline Subdivision barycentric_subdivision(const SimplicialComplex& k) {
  if (k.empty()) throw PreconditionError("barycentric subdivision of the empty complex");
  Subdivision sd;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& s : k.faces(d)) {
      sd.barycenter.emplace(s, Vertex(static_cast<std::int64_t>(sd.carrier.size())));
      sd.carrier.push_back(s);
    }
  }
  // Maximal chains of a simplex are its complete flags: orderings of its
  // vertices, taking the growing prefixes.
  std::vector<Simplex> chains;
  for (const auto& m : k.maximal_simplices()) {
    std::vector<Vertex> order = m.vertices();
    do {
      std::vector<Vertex> flag;
      std::vector<Vertex> prefix;
      for (const auto& v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(sd.barycenter.at(Simplex::from_sorted(prefix)));
      }
      chains.emplace_back(std::move(flag));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  sd.complex = SimplicialComplex::from_maximal(chains);
  return sd;
}

/// Total vertex assignment between two complexes.
class VertexMap {
 public:
  VertexMap() = default;
  explicit VertexMap(std::map<Vertex, Vertex> assignment) : assignment_(std::move(assignment)) {}

  const std::map<Vertex, Vertex>& assignment() const { return assignment_; }
  const Vertex& operator()(const Vertex& v) const {
    auto it = assignment_.find(v);
    if (it == assignment_.end()) throw UnknownVertex("vertex map undefined at " + v.to_string());
    return it->second;
  }

  /// Image vertex set of s (sorted, duplicates removed).
  std::vector<Vertex> image_vertices(const Simplex& s) const {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (const auto& v : s) out.push_back((*this)(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool collapses(const Simplex& s) const { return image_vertices(s).size() != s.size(); }

  /// Checks totality on source and that every image is a simplex of target.
  bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target,
                     bool allow_degenerate) const {
    for (const auto& v : source.vertices()) {
      if (!assignment_.contains(v)) return false;
    }
    for (const auto& m : source.maximal_simplices()) {
      auto img = image_vertices(m);
      if (!allow_degenerate && img.size() != m.size()) return false;
      if (!target.contains(Simplex::from_sorted(std::move(img)))) return false;
    }
    return true;
  }

  /// Image subcomplex of a source complex.
  SimplicialComplex image(const SimplicialComplex& source) const {
    std::vector<Simplex> out;
    for (const auto& m : source.maximal_simplices()) out.push_back(Simplex::from_sorted(image_vertices(m)));
    return SimplicialComplex::from_maximal(out);
  }

 private:
  std::map<Vertex, Vertex> assignment_;
};

/// Identifies the vertices within each class of a partition. Vertices not
/// listed stay alone. Every class is represented by its least member. Throws
/// NotSimplicial when some simplex would collapse; subdividing first
/// separates such vertices.
inline SimplicialComplex quotient(const SimplicialComplex& k,
                                  const std::vector<std::vector<Vertex>>& partition) {
  std::map<Vertex, Vertex> to_class;
  for (const auto& v : k.vertices()) to_class.emplace(v, v);
  std::set<Vertex> seen;
  for (const auto& cls : partition) {
    if (cls.empty()) continue;
    const Vertex rep = *std::min_element(cls.begin(), cls.end());
    for (const auto& v : cls) {
      if (!k.has_vertex(v)) throw UnknownVertex("partition names unknown vertex " + v.to_string());
      if (!seen.insert(v).second) {
        throw PreconditionError("vertex " + v.to_string() + " listed in two classes");
      }
      to_class[v] = rep;
    }
  }
  const VertexMap map(std::move(to_class));
  std::vector<Simplex> images;
  for (const auto& m : k.maximal_simplices()) {
    auto img = map.image_vertices(m);
    if (img.size() != m.size()) {
      std::ostringstream msg;
      msg << "identification collapses simplex " << m << "; subdivide before taking the quotient";
      throw NotSimplicial(msg.str());
    }
    images.push_back(Simplex::from_sorted(std::move(img)));
  }
  return SimplicialComplex::from_maximal(images);
}

/// Renames vertices through an injective map.
inline SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map) {
  std::vector<Simplex> out;
  for (const auto& m : k.maximal_simplices()) {
    auto img = map.image_vertices(m);
    if (img.size() != m.size()) throw NotSimplicial("relabeling is not injective");
    out.push_back(Simplex::from_sorted(std::move(img)));
  }
  return SimplicialComplex::from_maximal(out);
}

/// Whether `map` sends the faces of a bijectively onto the faces of b.
inline bool is_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                           const VertexMap& map) {
  if (a.vertices().size() != b.vertices().size() || a.f_vector() != b.f_vector()) return false;
  std::set<Vertex> hit;
  for (const auto& v : a.vertices()) {
    if (!map.assignment().contains(v)) return false;
    hit.insert(map(v));
  }
  if (hit.size() != b.vertices().size()) return false;
  for (const auto& m : a.maximal_simplices()) {
    auto img = map.image_vertices(m);
    if (img.size() != m.size()) return false;
    if (!std::binary_search(b.maximal_simplices().begin(), b.maximal_simplices().end(),
                            Simplex::from_sorted(std::move(img)))) {
      return false;
    }
  }
  return a.maximal_simplices().size() == b.maximal_simplices().size();
}

namespace detail {

// Per-vertex signature: how many faces of each dimension contain the vertex.
inline std::vector<std::size_t> vertex_signature(const SimplicialComplex& k, const Vertex& v) {
  std::vector<std::size_t> sig(static_cast<std::size_t>(k.dim() + 1), 0);
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& s : k.faces(d)) {
      if (s.contains(v)) ++sig[static_cast<std::size_t>(d)];
    }
  }
  return sig;
}

}  // namespace detail

/// Backtracking search for a simplicial isomorphism a -> b. Candidates are
/// filtered by per-vertex face counts and edge consistency.
inline std::optional<VertexMap> find_isomorphism(const SimplicialComplex& a,
                                                 const SimplicialComplex& b) {
  if (a.f_vector() != b.f_vector() ||
      a.maximal_simplices().size() != b.maximal_simplices().size()) {
    return std::nullopt;
  }
  const auto& av = a.vertices();
  const auto& bv = b.vertices();
  const std::size_t n = av.size();
  std::vector<std::vector<std::size_t>> sig_a(n), sig_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig_a[i] = detail::vertex_signature(a, av[i]);
    sig_b[i] = detail::vertex_signature(b, bv[i]);
  }
  auto adjacent = [](const SimplicialComplex& k, const Vertex& x, const Vertex& y) {
    return k.contains(Simplex{x, y});
  };
  std::vector<std::size_t> assign(n, n);
  std::vector<bool> used(n, false);
  std::optional<VertexMap> found;

  auto recurse = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      std::map<Vertex, Vertex> m;
      for (std::size_t k = 0; k < n; ++k) m.emplace(av[k], bv[assign[k]]);
      VertexMap candidate(std::move(m));
      if (is_isomorphism(a, b, candidate)) {
        found = std::move(candidate);
        return true;
      }
      return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sig_a[i] != sig_b[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = adjacent(a, av[k], av[i]) == adjacent(b, bv[assign[k]], bv[j]);
      }
      if (!ok) continue;
      assign[i] = j;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  recurse(recurse, 0);
  return found;
}

}  // namespace covtype
