#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/cover.hpp"
#include "covtype/error.hpp"

namespace covtype {

/// Preimage of a subcomplex s of the target under a simplicial map.
inline SimplicialComplex preimage(const SimplicialComplex& source, const VertexMap& f,
                                  const SimplicialComplex& s) {
  std::vector<Simplex> faces;
  for (int d = 0; d <= source.dim(); ++d) {
    for (const auto& face : source.faces(d)) {
      if (s.contains(Simplex::from_sorted(f.image_vertices(face)))) faces.push_back(face);
    }
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

/// Simplicial map certified as an n-sheeted covering.
class CoveringMap {
 public:
  /// Throws NotSimplicial or PreconditionError when the map is not a
  /// covering: it must be simplicial, non-degenerate and surjective, and the
  /// preimage of every closed vertex star must be n disjoint copies of it.
  CoveringMap(SimplicialComplex source, SimplicialComplex target, VertexMap map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!map_.is_simplicial(source_, target_, false)) {
      throw NotSimplicial("covering map must be simplicial and injective on simplices");
    }
    if (!(map_.image(source_) == target_)) throw PreconditionError("covering map is not surjective");
    for (const auto& v : target_.vertices()) {
      const auto star = closed_star(target_, v);
      const auto sheets = connected_components(preimage(source_, map_, star));
      if (sheets_ == 0) sheets_ = sheets.size();
      if (sheets.size() != sheets_) {
        throw PreconditionError("star of " + v.to_string() + " has " +
                                std::to_string(sheets.size()) + " sheets, expected " +
                                std::to_string(sheets_));
      }
      for (const auto& sheet : sheets) {
        if (sheet.vertices().size() != star.vertices().size() ||
            sheet.f_vector() != star.f_vector() || !(map_.image(sheet) == star)) {
          throw PreconditionError("star of " + v.to_string() + " is not evenly covered");
        }
      }
    }
  }

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const VertexMap& map() const { return map_; }
  std::size_t sheets() const { return sheets_; }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  VertexMap map_;
  std::size_t sheets_ = 0;
};

/// Components of the preimage of each element; element "a" lifts to "a.1",
/// "a.2", ... ordered by least vertex.
inline Cover lift_cover(const CoveringMap& f, const Cover& cover_y) {
  if (!(cover_y.ambient() == f.target())) throw PreconditionError("cover is not a cover of the base");
  std::vector<CoverElement> lifted;
  for (const auto& e : cover_y.elements()) {
    const auto parts = connected_components(preimage(f.source(), f.map(), e.complex));
    if (parts.size() != f.sheets()) {
      throw PreconditionError("element '" + e.name + "' does not lift to " +
                              std::to_string(f.sheets()) + " sheets");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      lifted.push_back({e.name + "." + std::to_string(i + 1), parts[i]});
    }
  }
  return Cover(f.source(), std::move(lifted));
}

/// Vertex tags used in mapping cylinders and cones.
inline Vertex source_tag(const Vertex& v) { return Vertex("x:" + v.to_string()); }
inline Vertex target_tag(const Vertex& v) { return Vertex("y:" + v.to_string()); }
inline Vertex cone_apex_tag() { return Vertex("apex"); }

namespace detail {

inline Simplex tagged(const Simplex& s, Vertex (*tag)(const Vertex&)) {
  std::vector<Vertex> vs;
  for (const auto& v : s) vs.push_back(tag(v));
  return Simplex(std::move(vs));
}

// Cylinder of f restricted to the subcomplex `part` of the source.
inline std::vector<Simplex> cylinder_simplices(const SimplicialComplex& part, const VertexMap& f) {
  std::vector<Simplex> out;
  for (const auto& m : part.maximal_simplices()) out.push_back(tagged(m, source_tag));
  for (const auto& v : part.vertices()) out.push_back(Simplex{source_tag(v), target_tag(f(v))});
  // Prism over a < b split by the diagonal a' f(b).
  for (const auto& e : part.faces(1)) {
    const auto& a = e[0];
    const auto& b = e[1];
    out.push_back(Simplex{source_tag(a), source_tag(b), target_tag(f(b))});
    out.push_back(Simplex{source_tag(a), target_tag(f(a)), target_tag(f(b))});
  }
  return out;
}

}  // namespace detail

/// Simplicial mapping cylinder of a covering of graphs. Source vertices are
/// tagged "x:", target vertices "y:".
inline SimplicialComplex mapping_cylinder(const CoveringMap& f) {
  if (f.source().dim() > 1 || f.target().dim() > 1) {
    throw UnsupportedDimension("mapping cylinders are implemented for graphs only");
  }
  auto simplices = detail::cylinder_simplices(f.source(), f.map());
  for (const auto& m : f.target().maximal_simplices()) simplices.push_back(detail::tagged(m, target_tag));
  return SimplicialComplex::from_maximal(simplices);
}

/// Mapping cone of a graph covering with the cover made of the cylinders
/// over each lifted sheet plus the cone on the source end.
inline Cover mapping_cone_cover(const CoveringMap& f, const Cover& cover_y) {
  if (f.source().dim() > 1 || f.target().dim() > 1) {
    throw UnsupportedDimension("mapping cones are implemented for graphs only");
  }
  const auto lifted = lift_cover(f, cover_y);
  const auto cylinder = mapping_cylinder(f);
  std::vector<Simplex> source_end;
  for (const auto& m : f.source().maximal_simplices()) source_end.push_back(detail::tagged(m, source_tag));
  const auto cone_part = cone(SimplicialComplex::from_maximal(source_end), cone_apex_tag());

  std::vector<CoverElement> elements;
  for (const auto& sheet : lifted.elements()) {
    auto simplices = detail::cylinder_simplices(sheet.complex, f.map());
    const auto base = f.map().image(sheet.complex);
    for (const auto& m : base.maximal_simplices()) {
      simplices.push_back(detail::tagged(m, target_tag));
    }
    elements.push_back({sheet.name, SimplicialComplex::from_maximal(simplices)});
  }
  elements.push_back({"cone", cone_part});
  return Cover(union_of(cylinder, cone_part), std::move(elements));
}

}  // namespace covtype
