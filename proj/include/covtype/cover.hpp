#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/contractibility.hpp"
#include "covtype/error.hpp"

namespace covtype {

struct CoverElement {
  std::string name;
  SimplicialComplex complex;
};

/// Named family of subcomplexes of an ambient complex.
class Cover {
 public:
  Cover() = default;

  /// Throws PreconditionError when an element is not a subcomplex of the
  /// ambient complex or a name repeats.
  Cover(SimplicialComplex ambient, std::vector<CoverElement> elements)
      : ambient_(std::move(ambient)), elements_(std::move(elements)) {
    std::set<std::string> names;
    for (const auto& e : elements_) {
      if (!names.insert(e.name).second) {
        throw PreconditionError("cover element name '" + e.name + "' is not unique");
      }
      if (!e.complex.is_subcomplex_of(ambient_)) {
        throw PreconditionError("cover element '" + e.name + "' is not a subcomplex of the ambient");
      }
    }
  }

  const SimplicialComplex& ambient() const { return ambient_; }
  const std::vector<CoverElement>& elements() const { return elements_; }
  const CoverElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& e : elements_) out.push_back(e.name);
    return out;
  }

 private:
  SimplicialComplex ambient_;
  std::vector<CoverElement> elements_;
};

enum class IntersectionStatus { Empty, Contractible, NotContractible, Unknown };
enum class GoodnessVerdict { Good, NotGood, Unknown };

inline const char* to_string(IntersectionStatus s) {
  switch (s) {
    case IntersectionStatus::Empty: return "empty";
    case IntersectionStatus::Contractible: return "contractible";
    case IntersectionStatus::NotContractible: return "not-contractible";
    case IntersectionStatus::Unknown: return "unknown";
  }
  return "unknown";
}

inline const char* to_string(GoodnessVerdict v) {
  switch (v) {
    case GoodnessVerdict::Good: return "Good";
    case GoodnessVerdict::NotGood: return "NotGood";
    case GoodnessVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

struct IntersectionCheck {
  std::vector<std::size_t> indices;
  IntersectionStatus status = IntersectionStatus::Empty;
  std::string detail;
};

struct GoodnessReport {
  bool covers_ambient = false;
  std::vector<IntersectionCheck> checked_intersections;
  GoodnessVerdict verdict = GoodnessVerdict::Unknown;
  /// Offending index set for NotGood or Unknown (empty when coverage fails).
  std::vector<std::size_t> witness;
  std::string reason;

  bool good() const { return verdict == GoodnessVerdict::Good; }
};

struct GoodnessOptions {
  ContractibilityOptions contractibility;
  unsigned jobs = 1;
};

namespace detail {

struct Intersection {
  std::vector<std::size_t> indices;
  SimplicialComplex complex;
};

// Depth-first enumeration of index sets in increasing order. Nonempty
// intersections go to `nonempty`; the minimal empty ones (where pruning
// starts) go to `empty`.
inline void enumerate_intersections(const Cover& cover, std::vector<Intersection>& nonempty,
                                    std::vector<std::vector<std::size_t>>& empty) {
  const std::size_t n = cover.size();
  auto extend = [&](auto&& self, const Intersection& current) -> void {
    const std::size_t start = current.indices.back() + 1;
    for (std::size_t j = start; j < n; ++j) {
      Intersection next{current.indices, intersection(current.complex, cover[j].complex)};
      next.indices.push_back(j);
      if (next.complex.empty()) {
        empty.push_back(std::move(next.indices));
        continue;
      }
      nonempty.push_back(next);
      self(self, next);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    Intersection single{{i}, cover[i].complex};
    if (single.complex.empty()) {
      empty.push_back({i});
      continue;
    }
    nonempty.push_back(single);
    extend(extend, single);
  }
}

}  // namespace detail

/// Index sets with nonempty intersection, in depth-first increasing order.
inline std::vector<std::vector<std::size_t>> nonempty_index_sets(const Cover& cover) {
  std::vector<detail::Intersection> nonempty;
  std::vector<std::vector<std::size_t>> empty;
  detail::enumerate_intersections(cover, nonempty, empty);
  std::vector<std::vector<std::size_t>> out;
  for (auto& x : nonempty) out.push_back(std::move(x.indices));
  return out;
}

/// Checks coverage and contractibility of every nonempty intersection.
///
/// Supersets of empty intersections are skipped. Evaluation stops at the
/// first non-contractible intersection in enumeration order; an Unknown
/// intersection makes the verdict Unknown unless a definite failure exists.
/// With jobs > 1 intersections are evaluated concurrently; the report is
/// identical to the sequential one.
inline GoodnessReport verify_good_cover(const Cover& cover, const GoodnessOptions& opts = {}) {
  GoodnessReport report;
  std::vector<SimplicialComplex> parts;
  for (const auto& e : cover.elements()) parts.push_back(e.complex);
  report.covers_ambient = union_of(parts) == cover.ambient();

  std::vector<detail::Intersection> nonempty;
  std::vector<std::vector<std::size_t>> empty;
  detail::enumerate_intersections(cover, nonempty, empty);

  for (const auto& idx : empty) {
    if (idx.size() == 1) {
      report.checked_intersections.push_back({idx, IntersectionStatus::Empty, "empty element"});
      if (report.verdict != GoodnessVerdict::NotGood) {
        report.verdict = GoodnessVerdict::NotGood;
        report.witness = idx;
        report.reason = "element '" + cover[idx[0]].name + "' is empty";
      }
    }
  }

  const std::size_t total = nonempty.size();
  std::vector<ContractibilityVerdict> results(total, Unknown{"not evaluated"});
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> bound{total};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || i >= bound.load()) return;
      results[i] = contractibility(nonempty[i].complex, opts.contractibility);
      if (is_not_contractible(results[i])) {
        std::size_t b = bound.load();
        while (i < b && !bound.compare_exchange_weak(b, i)) {
        }
      }
    }
  };
  const unsigned jobs = std::max(1U, opts.jobs);
  if (jobs == 1 || total < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const std::size_t stop = bound.load();
  std::optional<std::size_t> first_unknown;
  for (std::size_t i = 0; i < total && i <= stop; ++i) {
    IntersectionCheck check{nonempty[i].indices, IntersectionStatus::Contractible,
                            describe(results[i])};
    if (is_not_contractible(results[i])) {
      check.status = IntersectionStatus::NotContractible;
    } else if (is_unknown(results[i])) {
      check.status = IntersectionStatus::Unknown;
      if (!first_unknown) first_unknown = i;
    }
    report.checked_intersections.push_back(std::move(check));
  }
  for (const auto& idx : empty) {
    if (idx.size() > 1) report.checked_intersections.push_back({idx, IntersectionStatus::Empty, ""});
  }

  if (report.verdict == GoodnessVerdict::NotGood) return report;
  if (stop < total) {
    report.verdict = GoodnessVerdict::NotGood;
    report.witness = nonempty[stop].indices;
    report.reason = describe(results[stop]);
  } else if (!report.covers_ambient) {
    report.verdict = GoodnessVerdict::NotGood;
    report.reason = "elements do not cover the ambient complex";
  } else if (first_unknown) {
    report.verdict = GoodnessVerdict::Unknown;
    report.witness = nonempty[*first_unknown].indices;
    report.reason = describe(results[*first_unknown]);
  } else {
    report.verdict = GoodnessVerdict::Good;
  }
  return report;
}

/// Nerve on the element names: a name set spans a simplex iff the
/// corresponding elements have a common face.
inline SimplicialComplex nerve(const Cover& cover) {
  for (const auto& e : cover.elements()) {
    if (e.complex.empty()) throw PreconditionError("nerve of a cover with an empty element");
  }
  std::vector<Simplex> simplices;
  for (const auto& idx : nonempty_index_sets(cover)) {
    std::vector<Vertex> names;
    for (auto i : idx) names.emplace_back(cover[i].name);
    simplices.emplace_back(std::move(names));
  }
  return SimplicialComplex::from_maximal(simplices);
}

/// Dual blocks: for each vertex v of k, the full subcomplex of Sd(k) on the
/// barycenters of faces containing v. Elements are named after v.
inline Cover dual_vertex_cover(const SimplicialComplex& k) {
  if (k.empty()) throw PreconditionError("dual cover of the empty complex");
  const auto sd = barycentric_subdivision(k);
  std::vector<CoverElement> elements;
  for (const auto& v : k.vertices()) {
    std::vector<Vertex> block;
    for (std::size_t i = 0; i < sd.carrier.size(); ++i) {
      if (sd.carrier[i].contains(v)) block.emplace_back(static_cast<std::int64_t>(i));
    }
    elements.push_back({v.to_string(), full_subcomplex(sd.complex, block)});
  }
  return Cover(sd.complex, std::move(elements));
}

namespace detail {

inline std::string unique_name(const Cover& cover, std::string base) {
  const auto names = cover.names();
  while (std::find(names.begin(), names.end(), base) != names.end()) base += "'";
  return base;
}

}  // namespace detail

/// Cover of Y with the cone on X attached along X: the elements of the
/// given cover plus the cone. The traces X n Y_i must form a good cover of
/// X; empty traces are dropped.
inline Cover cone_cover(const SimplicialComplex& y, const SimplicialComplex& x,
                        const Cover& cover_y, const GoodnessOptions& opts = {}) {
  if (x.empty()) throw PreconditionError("cone_cover needs a nonempty subcomplex");
  if (!x.is_subcomplex_of(y)) throw PreconditionError("X is not a subcomplex of Y");
  if (!(cover_y.ambient() == y)) throw PreconditionError("cover is not a cover of Y");
  std::vector<CoverElement> traces;
  for (const auto& e : cover_y.elements()) {
    auto t = intersection(x, e.complex);
    if (!t.empty()) traces.push_back({e.name, std::move(t)});
  }
  const Cover trace_cover(x, std::move(traces));
  const auto check = verify_good_cover(trace_cover, opts);
  if (!check.good()) {
    std::string where;
    for (auto i : check.witness) where += (where.empty() ? "" : ",") + trace_cover[i].name;
    throw PreconditionError("traces on X do not form a good cover (" + where +
                            "): " + check.reason);
  }
  const Vertex apex = fresh_vertex(y);
  const auto cx = cone(x, apex);
  std::vector<CoverElement> elements = cover_y.elements();
  elements.push_back({detail::unique_name(cover_y, "cone"), cx});
  return Cover(union_of(y, cx), std::move(elements));
}

/// Cover of the suspension: cones from the south apex over each element,
/// plus the cone from the north apex over the whole complex.
inline Cover suspension_cover(const Cover& cover, const GoodnessOptions& opts = {}) {
  const auto check = verify_good_cover(cover, opts);
  if (!check.good()) throw PreconditionError("suspension_cover needs a good cover: " + check.reason);
  const auto& k = cover.ambient();
  const Vertex south = fresh_vertex(k);
  const Vertex north(south.as_integer() + 1);
  std::vector<CoverElement> elements;
  for (const auto& e : cover.elements()) elements.push_back({e.name, cone(e.complex, south)});
  elements.push_back({detail::unique_name(cover, "north"), cone(k, north)});
  return Cover(suspension(k, south, north), std::move(elements));
}

}  // namespace covtype
