#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/error.hpp"
#include "covtype/homology.hpp"

namespace covtype {

struct BoundContribution {
  std::string rule;
  std::uint64_t value = 0;
  std::optional<FieldTag> field;
};

struct BoundReport {
  std::uint64_t lower = 1;
  std::optional<std::uint64_t> upper;
  std::vector<BoundContribution> contributions;
  std::vector<BoundReport> per_component;
};

/// Closed surface: orientable of genus g, or non-orientable of genus q.
struct Surface {
  bool orientable = true;
  std::uint64_t genus = 0;

  static Surface oriented(std::uint64_t g) { return {true, g}; }
  static Surface non_oriented(std::uint64_t q) {
    if (q == 0) throw PreconditionError("non-orientable genus must be at least 1");
    return {false, q};
  }
  std::string name() const { return (orientable ? "S" : "N") + std::to_string(genus); }
};

namespace detail {

inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// ceil((a + sqrt(d)) / 2) and floor((a + sqrt(d)) / 2) in exact arithmetic.
inline std::uint64_t ceil_half_root(std::uint64_t a, std::uint64_t d) {
  const std::uint64_t s = isqrt(d);
  return s * s == d ? (a + s + 1) / 2 : (a + s) / 2 + 1;
}
inline std::uint64_t floor_half_root(std::uint64_t a, std::uint64_t d) {
  return (a + isqrt(d)) / 2;
}

// C(n, k) saturated at the largest uint64.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// Smallest n whose bound polynomial ((1+t)^(n-1) - 1)/t + 1 dominates P:
/// h_0 <= n and h_k <= C(n-1, k+1) for k >= 1.
inline std::uint64_t poincare_lower_bound(const PoincarePolynomial& p) {
  if (p.coefficients.empty()) throw PreconditionError("empty Poincare polynomial");
  auto fits = [&](std::uint64_t n) {
    if (p.coefficient(0) > n) return false;
    for (std::size_t k = 1; k < p.coefficients.size(); ++k) {
      if (p.coefficients[k] > detail::binomial(n - 1, k + 1)) return false;
    }
    return true;
  };
  std::uint64_t n = 1;
  while (!fits(n)) ++n;
  return n;
}

/// hd + 2 where hd is the top degree of nonzero homology; 1 for a homology
/// point.
inline std::uint64_t hd_lower_bound(const SimplicialComplex& k, const FieldTag& field) {
  if (k.empty()) throw PreconditionError("bounds of the empty complex");
  const auto reduced = reduced_betti_numbers(k, field);
  if (std::all_of(reduced.begin(), reduced.end(), [](std::size_t b) { return b == 0; })) return 1;
  const auto betti = betti_numbers(k, field);
  std::size_t hd = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (betti[i] != 0) hd = i;
  }
  return hd + 2;
}

/// 6 when some cup product of degree-one classes is nonzero over Q or Z/2.
inline std::optional<std::uint64_t> cup_lower_bound(const SimplicialComplex& k) {
  for (const auto& f : {FieldTag::rationals(), FieldTag::prime(2)}) {
    if (cup_h1_nonzero(k, f)) return 6;
  }
  return std::nullopt;
}

namespace detail {

inline BoundReport connected_lower_bound(const SimplicialComplex& k) {
  BoundReport r;
  for (const auto& f : {FieldTag::rationals(), FieldTag::prime(2)}) {
    r.contributions.push_back({"poincare", poincare_lower_bound(poincare_polynomial(k, f)), f});
    r.contributions.push_back({"homological-dimension", hd_lower_bound(k, f), f});
  }
  if (auto cup = cup_lower_bound(k)) r.contributions.push_back({"cup-product", *cup, std::nullopt});
  for (const auto& c : r.contributions) r.lower = std::max(r.lower, c.value);
  r.upper = k.vertices().size();
  return r;
}

}  // namespace detail

/// Per-component maximum of the homological bounds, summed over
/// components. The upper bound is the vertex count, realized by dual blocks.
inline BoundReport combined_lower_bound(const SimplicialComplex& k) {
  if (k.empty()) throw PreconditionError("bounds of the empty complex");
  const auto components = connected_components(k);
  if (components.size() == 1) return detail::connected_lower_bound(k);
  BoundReport r;
  r.lower = 0;
  std::uint64_t upper = 0;
  for (const auto& c : components) {
    r.per_component.push_back(detail::connected_lower_bound(c));
    r.lower += r.per_component.back().lower;
    upper += *r.per_component.back().upper;
  }
  r.contributions.push_back({"component-sum", r.lower, std::nullopt});
  r.upper = upper;
  return r;
}

/// ceil((3 + sqrt(1 + 8h)) / 2), the unique n with C(n-2,2) < h <= C(n-1,2);
/// 1 for h = 0.
inline std::uint64_t bouquet_ct(std::uint64_t h) {
  if (h == 0) return 1;
  return detail::ceil_half_root(3, 1 + 8 * h);
}

inline BoundReport bouquet_bounds(std::uint64_t h) {
  BoundReport r;
  r.lower = bouquet_ct(h);
  r.upper = r.lower;
  r.contributions.push_back({"bouquet", r.lower, std::nullopt});
  return r;
}

/// Heawood number for orientable surfaces; floor((7 + sqrt(1 + 24q)) / 2)
/// for non-orientable ones, except the projective plane and Klein bottle,
/// both 6.
inline std::uint64_t chromatic_number(const Surface& s) {
  if (s.orientable) return detail::floor_half_root(7, 1 + 48 * s.genus);
  if (s.genus <= 2) return 6;
  return detail::floor_half_root(7, 1 + 24 * s.genus);
}

/// Covering-type bounds for closed surfaces. The lower bound combines the
/// Poincare bound for 1 + h_1 t + t^2 with the cup-product bound and, for
/// q >= 2, the exclusion of 6-element covers; known exact values and the
/// low-genus upper bounds are tabulated.
inline BoundReport surface_ct_bounds(const Surface& s) {
  BoundReport r;
  auto add = [&](std::string rule, std::uint64_t v, std::optional<FieldTag> f = std::nullopt) {
    r.contributions.push_back({std::move(rule), v, f});
    r.lower = std::max(r.lower, v);
  };
  const std::uint64_t g = s.genus;
  if (s.orientable) {
    add("poincare", poincare_lower_bound(PoincarePolynomial({1, 2 * g, 1}, FieldTag::rationals())),
        FieldTag::rationals());
    if (g >= 1) add("cup-product", 6);
    std::uint64_t upper = detail::ceil_half_root(7, 1 + 48 * g);
    if (g == 2) upper = 10;
    r.upper = upper;
    if (g == 0) add("known-exact", 4);
    if (g == 1) add("known-exact", 7);
  } else {
    add("poincare", poincare_lower_bound(PoincarePolynomial({1, g, 1}, FieldTag::prime(2))),
        FieldTag::prime(2));
    add("cup-product", 6);
    if (g >= 2) add("six-cover-exclusion", 7);
    std::uint64_t upper = detail::ceil_half_root(7, 1 + 24 * g);
    if (g == 1) upper = 6;
    if (g == 2) upper = 8;
    if (g == 3) upper = 9;
    r.upper = upper;
    if (g == 1) add("known-exact", 6);
  }
  return r;
}

}  // namespace covtype
