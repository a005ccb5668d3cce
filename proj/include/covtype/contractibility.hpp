#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/error.hpp"
#include "covtype/homology.hpp"

namespace covtype {

/// A vertex lying in every maximal simplex.
struct ConeCertificate {
  Vertex apex;
};

/// Removal of a free face together with its unique proper coface.
struct CollapseStep {
  Simplex face;
  Simplex coface;
};

struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  Vertex remaining;
};

struct Contractible {
  std::variant<ConeCertificate, CollapseCertificate> certificate;
};

struct NotContractible {
  int degree = 0;
  FieldTag field = FieldTag::rationals();
  std::size_t reduced_betti = 0;
};

struct Unknown {
  std::string reason;
};

using ContractibilityVerdict = std::variant<Contractible, NotContractible, Unknown>;

struct ContractibilityOptions {
  std::size_t collapse_budget = 100000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

inline bool is_contractible(const ContractibilityVerdict& v) {
  return std::holds_alternative<Contractible>(v);
}
inline bool is_not_contractible(const ContractibilityVerdict& v) {
  return std::holds_alternative<NotContractible>(v);
}
inline bool is_unknown(const ContractibilityVerdict& v) { return std::holds_alternative<Unknown>(v); }

/// Least vertex contained in every maximal simplex, if any.
inline std::optional<Vertex> find_cone_apex(const SimplicialComplex& k) {
  if (k.empty()) return std::nullopt;
  const auto& ms = k.maximal_simplices();
  for (const auto& v : ms.front()) {
    if (std::all_of(ms.begin(), ms.end(), [&](const Simplex& m) { return m.contains(v); })) {
      return v;
    }
  }
  return std::nullopt;
}

namespace detail {

// Face poset with codimension-one incidences, used for collapse search and
// certificate replay.
class FacePoset {
 public:
  explicit FacePoset(const SimplicialComplex& k) : k_(k) {
    for (int d = 0; d <= k.dim(); ++d) {
      offset_.push_back(faces_.size());
      for (const auto& s : k.faces(d)) faces_.push_back(s);
    }
    facets_.resize(faces_.size());
    cofaces_.resize(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      const auto& s = faces_[i];
      if (s.dim() == 0) continue;
      for (std::size_t j = 0; j < s.size(); ++j) {
        const std::size_t f = index_of(s.facet_without(j));
        facets_[i].push_back(f);
        cofaces_[f].push_back(i);
      }
    }
    alive_.assign(faces_.size(), true);
    live_cofaces_.resize(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) live_cofaces_[i] = cofaces_[i].size();
    alive_count_ = faces_.size();
  }

  std::size_t index_of(const Simplex& s) const {
    return offset_[static_cast<std::size_t>(s.dim())] + k_.face_index(s);
  }
  const Simplex& face(std::size_t i) const { return faces_[i]; }
  std::size_t size() const { return faces_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  bool alive(std::size_t i) const { return alive_[i]; }

  // Unique live proper coface of i, if i is free.
  std::optional<std::size_t> free_partner(std::size_t i) const {
    if (!alive_[i] || live_cofaces_[i] != 1) return std::nullopt;
    for (auto c : cofaces_[i]) {
      if (alive_[c]) return c;
    }
    return std::nullopt;
  }

  void remove(std::size_t i) {
    alive_[i] = false;
    --alive_count_;
    for (auto f : facets_[i]) --live_cofaces_[f];
  }
  void restore(std::size_t i) {
    alive_[i] = true;
    ++alive_count_;
    for (auto f : facets_[i]) ++live_cofaces_[f];
  }

  std::optional<std::size_t> last_alive() const {
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (alive_[i]) return i;
    }
    return std::nullopt;
  }

 private:
  const SimplicialComplex& k_;
  std::vector<std::size_t> offset_;
  std::vector<Simplex> faces_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::vector<bool> alive_;
  std::vector<std::size_t> live_cofaces_;
  std::size_t alive_count_ = 0;
};

class CollapseSearch {
 public:
  CollapseSearch(const SimplicialComplex& k, const ContractibilityOptions& opts)
      : poset_(k), opts_(opts) {}

  // true: collapsed to a point; false with exhausted(): budget hit.
  bool run() { return dfs(); }
  bool exhausted() const { return exhausted_; }

  CollapseCertificate certificate() const {
    CollapseCertificate cert;
    for (const auto& [f, c] : path_) cert.steps.push_back({poset_.face(f), poset_.face(c)});
    cert.remaining = poset_.face(*poset_.last_alive())[0];
    return cert;
  }

 private:
  bool dfs() {
    if (poset_.alive_count() == 1) return true;
    if (++steps_ > opts_.collapse_budget ||
        (opts_.deadline && std::chrono::steady_clock::now() > *opts_.deadline)) {
      exhausted_ = true;
      return false;
    }
    // Higher-dimensional pairs first; within a dimension, canonical order.
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (std::size_t i = poset_.size(); i-- > 0;) {
      if (auto c = poset_.free_partner(i)) moves.emplace_back(i, *c);
    }
    for (const auto& [f, c] : moves) {
      poset_.remove(c);
      poset_.remove(f);
      path_.emplace_back(f, c);
      if (dfs()) return true;
      path_.pop_back();
      poset_.restore(f);
      poset_.restore(c);
      if (exhausted_) return false;
    }
    return false;
  }

  FacePoset poset_;
  ContractibilityOptions opts_;
  std::vector<std::pair<std::size_t, std::size_t>> path_;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Three-stage contractibility oracle: cone apex, then reduced homology over
/// Q and Z/2, then a bounded search for a collapse to a point.
inline ContractibilityVerdict contractibility(const SimplicialComplex& k,
                                              const ContractibilityOptions& opts = {}) {
  if (k.empty()) throw PreconditionError("contractibility of the empty complex is undefined");
  if (auto apex = find_cone_apex(k)) return Contractible{ConeCertificate{*apex}};

  for (const auto& field : {FieldTag::rationals(), FieldTag::prime(2)}) {
    const auto reduced = reduced_betti_numbers(k, field);
    for (std::size_t d = 0; d < reduced.size(); ++d) {
      if (reduced[d] != 0) return NotContractible{static_cast<int>(d), field, reduced[d]};
    }
  }

  detail::CollapseSearch search(k, opts);
  if (search.run()) return Contractible{search.certificate()};
  if (search.exhausted()) {
    return Unknown{"collapse budget of " + std::to_string(opts.collapse_budget) +
                   " steps exhausted"};
  }
  return Unknown{"acyclic but no collapse to a point exists"};
}

/// Replays a certificate against k.
inline bool check_certificate(const SimplicialComplex& k, const Contractible& verdict) {
  if (k.empty()) return false;
  if (const auto* cone_cert = std::get_if<ConeCertificate>(&verdict.certificate)) {
    for (const auto& m : k.maximal_simplices()) {
      if (!m.contains(cone_cert->apex)) return false;
    }
    return true;
  }
  const auto& cert = std::get<CollapseCertificate>(verdict.certificate);
  detail::FacePoset poset(k);
  for (const auto& step : cert.steps) {
    if (!k.contains(step.face) || !k.contains(step.coface)) return false;
    if (step.coface.dim() != step.face.dim() + 1 || !step.face.is_face_of(step.coface)) {
      return false;
    }
    const auto f = poset.index_of(step.face);
    const auto partner = poset.free_partner(f);
    if (!partner || *partner != poset.index_of(step.coface)) return false;
    poset.remove(*partner);
    poset.remove(f);
  }
  if (poset.alive_count() != 1) return false;
  return poset.face(*poset.last_alive()) == Simplex{cert.remaining};
}

inline std::string describe(const ContractibilityVerdict& v) {
  if (const auto* c = std::get_if<Contractible>(&v)) {
    if (const auto* cone_cert = std::get_if<ConeCertificate>(&c->certificate)) {
      return "contractible (cone apex " + cone_cert->apex.to_string() + ")";
    }
    return "contractible (" +
           std::to_string(std::get<CollapseCertificate>(c->certificate).steps.size()) +
           " elementary collapses)";
  }
  if (const auto* n = std::get_if<NotContractible>(&v)) {
    return "not contractible (reduced H_" + std::to_string(n->degree) + " over " +
           n->field.name() + " has rank " + std::to_string(n->reduced_betti) + ")";
  }
  return "unknown (" + std::get<Unknown>(v).reason + ")";
}

}  // namespace covtype
