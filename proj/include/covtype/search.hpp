#pragma once

#include <boost/dynamic_bitset.hpp>

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/contractibility.hpp"
#include "covtype/cover.hpp"
#include "covtype/error.hpp"
#include "covtype/homology.hpp"

namespace covtype {

enum class ElementUniverse { AllSubcomplexes, InducedByVertexSets, UnionsOfFacets };

inline const char* to_string(ElementUniverse u) {
  switch (u) {
    case ElementUniverse::AllSubcomplexes: return "all";
    case ElementUniverse::InducedByVertexSets: return "induced";
    case ElementUniverse::UnionsOfFacets: return "facets";
  }
  return "?";
}

inline ElementUniverse parse_universe(const std::string& text) {
  if (text == "all") return ElementUniverse::AllSubcomplexes;
  if (text == "induced") return ElementUniverse::InducedByVertexSets;
  if (text == "facets") return ElementUniverse::UnionsOfFacets;
  throw PreconditionError("unknown element universe '" + text + "' (expected all, induced or facets)");
}

struct SearchConfig {
  std::size_t max_cover_size = 4;
  /// Defaults to all subcomplexes for complexes with at most 12 faces and to
  /// full subcomplexes otherwise.
  std::optional<ElementUniverse> universe;
  std::optional<std::chrono::milliseconds> time_budget;
  std::size_t collapse_budget = 100000;
  /// Candidate elements enumerated before giving up on exhaustiveness.
  std::size_t universe_limit = 200000;
};

struct NoGoodCoverUpTo {
  std::size_t size = 0;
};
struct FoundGoodCover {
  Cover cover;
};
struct Inconclusive {
  std::string reason;
};
using SearchVerdict = std::variant<NoGoodCoverUpTo, FoundGoodCover, Inconclusive>;

struct SearchOutcome {
  SearchVerdict verdict;
  std::size_t explored = 0;
  ElementUniverse universe = ElementUniverse::AllSubcomplexes;
  /// True when the universe contains every contractible subcomplex.
  bool exhaustive = false;
  std::size_t candidates = 0;
};

namespace detail {

class CoverSearch {
 public:
  using Bits = boost::dynamic_bitset<>;

  CoverSearch(const SimplicialComplex& k, const SearchConfig& config) : k_(k), config_(config) {
    if (config_.time_budget) deadline_ = std::chrono::steady_clock::now() + *config_.time_budget;
    contract_opts_.collapse_budget = config_.collapse_budget;
    contract_opts_.deadline = deadline_;
    for (int d = 0; d <= k_.dim(); ++d) {
      for (const auto& f : k_.faces(d)) {
        index_.emplace(f, faces_.size());
        faces_.push_back(f);
      }
    }
    cofaces_.resize(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      const auto& s = faces_[i];
      if (s.size() < 2) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Vertex> sub;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != drop) sub.push_back(s[j]);
        }
        cofaces_[index_.at(Simplex::from_sorted(sub))].push_back(i);
      }
    }
    for (const auto& m : k_.maximal_simplices()) facets_.push_back(index_.at(m));
  }

  SearchOutcome run() {
    SearchOutcome out;
    out.universe = config_.universe.value_or(k_.num_faces() <= 12 ? ElementUniverse::AllSubcomplexes
                                                                 : ElementUniverse::InducedByVertexSets);
    out.exhaustive = out.universe == ElementUniverse::AllSubcomplexes;
    try {
      if (!enumerate(out.universe)) {
        out.exhaustive = false;
        out.verdict = Inconclusive{std::string("universe '") + to_string(out.universe) + "' exceeds " +
                                   std::to_string(config_.universe_limit) + " candidates"};
        return out;
      }
      out.candidates = elements_.size();
      for (std::size_t n = 1; n <= config_.max_cover_size; ++n) {
        limit_ = n;
        seen_.clear();
        if (dfs()) {
          out.explored = explored_;
          out.verdict = FoundGoodCover{certified_cover()};
          return out;
        }
      }
    } catch (const Timeout&) {
      out.explored = explored_;
      out.verdict = Inconclusive{"time budget expired"};
      return out;
    }
    out.explored = explored_;
    if (unknown_seen_) {
      out.verdict = Inconclusive{"contractibility of some candidate intersection is undecided"};
    } else if (!out.exhaustive) {
      out.verdict = Inconclusive{"no good cover of size <= " + std::to_string(config_.max_cover_size) +
                                 " among '" + to_string(out.universe) +
                                 "' candidates, which is not exhaustive"};
    } else {
      out.verdict = NoGoodCoverUpTo{config_.max_cover_size};
    }
    return out;
  }

 private:
  struct Timeout {};

  void tick() {
    ++explored_;
    if (deadline_ && (explored_ & 63) == 0 && std::chrono::steady_clock::now() > *deadline_) throw Timeout{};
  }

  Bits closure(std::vector<std::size_t> seeds) const {
    Bits b(faces_.size());
    while (!seeds.empty()) {
      const auto i = seeds.back();
      seeds.pop_back();
      if (b[i]) continue;
      b[i] = true;
      const auto& s = faces_[i];
      if (s.size() < 2) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Vertex> sub;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != drop) sub.push_back(s[j]);
        }
        seeds.push_back(index_.at(Simplex::from_sorted(sub)));
      }
    }
    return b;
  }

  SimplicialComplex to_complex(const Bits& b) const {
    std::vector<Simplex> fs;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) fs.push_back(faces_[i]);
    return SimplicialComplex::from_faces(std::move(fs));
  }

  // 1 contractible, 0 not contractible, -1 undecided.
  int status(const Bits& b) {
    auto it = memo_.find(b);
    if (it != memo_.end()) return it->second;
    const auto v = contractibility(to_complex(b), contract_opts_);
    int s = is_contractible(v) ? 1 : is_not_contractible(v) ? 0 : -1;
    if (s < 0) {
      if (deadline_ && std::chrono::steady_clock::now() > *deadline_) throw Timeout{};
      unknown_seen_ = true;
    }
    memo_.emplace(b, s);
    return s;
  }

  bool add_candidate(std::set<Bits>& pool, Bits b) {
    if (b.none()) return true;
    pool.insert(std::move(b));
    return pool.size() <= config_.universe_limit;
  }

  // Downsets of the face poset, deciding faces from the top dimension down.
  bool enumerate_downsets(std::set<Bits>& pool) {
    Bits cur(faces_.size());
    bool ok = true;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (!ok) return;
      tick();
      if (pos == 0) {
        ok = add_candidate(pool, cur);
        return;
      }
      const std::size_t i = pos - 1;
      bool forced = false;
      for (auto c : cofaces_[i]) forced = forced || cur[c];
      if (!forced) self(self, i);
      cur[i] = true;
      self(self, i);
      cur[i] = false;
    };
    rec(rec, faces_.size());
    return ok;
  }

  bool enumerate(ElementUniverse u) {
    std::set<Bits> pool;
    if (u == ElementUniverse::AllSubcomplexes) {
      if (!enumerate_downsets(pool)) return false;
    } else {
      const std::size_t n = u == ElementUniverse::InducedByVertexSets ? k_.vertices().size()
                                                                        : k_.maximal_simplices().size();
      if (n >= 63 || (std::size_t{1} << n) - 1 > config_.universe_limit) return false;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        tick();
        if (u == ElementUniverse::InducedByVertexSets) {
          std::vector<Vertex> vs;
          for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1U) vs.push_back(k_.vertices()[j]);
          }
          Bits b(faces_.size());
          for (std::size_t i = 0; i < faces_.size(); ++i) {
            b[i] = std::includes(vs.begin(), vs.end(), faces_[i].begin(), faces_[i].end());
          }
          add_candidate(pool, std::move(b));
        } else {
          std::vector<std::size_t> seeds;
          for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1U) seeds.push_back(facets_[j]);
          }
          add_candidate(pool, closure(std::move(seeds)));
        }
      }
    }
    std::vector<Bits> usable;
    for (const auto& b : pool) {
      tick();
      if (status(b) == 1) usable.push_back(b);
    }
    // Larger elements first; ties by face set.
    std::stable_sort(usable.begin(), usable.end(),
                     [](const Bits& a, const Bits& b) { return a.count() > b.count(); });
    elements_ = std::move(usable);
    containing_.assign(facets_.size(), {});
    for (std::size_t e = 0; e < elements_.size(); ++e) {
      for (std::size_t f = 0; f < facets_.size(); ++f) {
        if (elements_[e][facets_[f]]) containing_[f].push_back(e);
      }
    }
    return true;
  }

  // Chosen elements, the nonempty intersections among them and the faces
  // they cover.
  bool dfs() {
    tick();
    Bits covered(faces_.size());
    for (auto e : chosen_) covered |= elements_[e];
    std::optional<std::size_t> open;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (!covered[facets_[f]]) {
        open = f;
        break;
      }
    }
    if (!open) return true;
    if (chosen_.size() == limit_) return false;
    for (auto e : containing_[*open]) {
      std::vector<std::size_t> family = chosen_;
      family.push_back(e);
      std::sort(family.begin(), family.end());
      if (!seen_.insert(family).second) continue;
      const std::size_t before = intersections_.size();
      bool good = true;
      const Bits& x = elements_[e];
      for (std::size_t i = 0; i < before && good; ++i) {
        Bits j = intersections_[i] & x;
        if (j.none()) continue;
        if (status(j) != 1) good = false;
        intersections_.push_back(std::move(j));
      }
      if (good) {
        intersections_.push_back(x);
        chosen_.push_back(e);
        if (dfs()) return true;
        chosen_.pop_back();
      }
      intersections_.resize(before);
    }
    return false;
  }

  Cover certified_cover() const {
    std::vector<CoverElement> els;
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      els.push_back({"C" + std::to_string(i + 1), to_complex(elements_[chosen_[i]])});
    }
    Cover c(k_, std::move(els));
    GoodnessOptions opts;
    opts.contractibility = contract_opts_;
    if (!verify_good_cover(c, opts).good()) throw std::logic_error("search produced a cover that fails verification");
    return c;
  }

  const SimplicialComplex& k_;
  SearchConfig config_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  ContractibilityOptions contract_opts_;
  std::vector<Simplex> faces_;
  std::map<Simplex, std::size_t> index_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::vector<std::size_t> facets_;
  std::vector<Bits> elements_;
  std::vector<std::vector<std::size_t>> containing_;
  std::map<Bits, int> memo_;
  std::set<std::vector<std::size_t>> seen_;
  std::vector<std::size_t> chosen_;
  std::vector<Bits> intersections_;
  std::size_t limit_ = 0;
  std::size_t explored_ = 0;
  bool unknown_seen_ = false;
};

}  // namespace detail

/// Smallest good closed cover of the fixed complex k by candidate elements,
/// by iterative deepening on the cover size. Each step picks the first
/// facet not yet covered and branches over candidates containing it, pruning
/// as soon as a new intersection is not contractible. Minimal good covers
/// have no redundant element, so this is complete for the universe.
/// NoGoodCoverUpTo is returned only for the all-subcomplexes universe with
/// every contractibility call decided.
inline SearchOutcome strict_ct_search(const SimplicialComplex& k, const SearchConfig& config = {}) {
  if (k.empty()) throw PreconditionError("search on the empty complex");
  if (config.max_cover_size == 0) throw PreconditionError("max cover size must be at least 1");
  return detail::CoverSearch(k, config).run();
}

enum class ThreeCoverClass { CircleLike, Contractible };

inline const char* to_string(ThreeCoverClass c) {
  return c == ThreeCoverClass::CircleLike ? "circle-like" : "contractible";
}

/// A good 3-cover of a connected complex has nerve a hollow triangle (the
/// complex is a homotopy circle) or a cone (contractible).
inline ThreeCoverClass classify_three_covers(const Cover& cover) {
  if (cover.size() != 3) throw PreconditionError("expected a cover with 3 elements");
  if (!is_connected(cover.ambient())) throw PreconditionError("ambient complex is not connected");
  if (!verify_good_cover(cover).good()) throw PreconditionError("cover is not good");
  const auto n = nerve(cover);
  const bool hollow = n.faces(1).size() == 3 && n.faces(2).empty();
  const auto cls = hollow ? ThreeCoverClass::CircleLike : ThreeCoverClass::Contractible;
  const auto b = reduced_betti_numbers(cover.ambient(), FieldTag::rationals());
  const std::size_t b1 = b.size() > 1 ? b[1] : 0;
  if (b1 != (hollow ? 1U : 0U)) throw std::logic_error("nerve class disagrees with first Betti number");
  return cls;
}

}  // namespace covtype
