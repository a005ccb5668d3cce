#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/field.hpp"
#include "covtype/linalg.hpp"

namespace covtype {

/// Simplicial boundary d_dim: columns are dim-faces, rows are (dim-1)-faces,
/// both in canonical order. Dropping vertex i contributes (-1)^i.
template <class Field>
linalg::SparseMatrix<typename Field::value_type> boundary_matrix(const SimplicialComplex& k,
                                                                 int dim, const Field& f) {
  if (dim < 1) throw PreconditionError("boundary matrix needs dim >= 1");
  linalg::SparseMatrix<typename Field::value_type> m;
  m.rows = k.faces(dim - 1).size();
  for (const auto& s : k.faces(dim)) {
    linalg::SparseColumn<typename Field::value_type> col;
    for (std::size_t i = 0; i < s.size(); ++i) {
      col.emplace_back(k.face_index(s.facet_without(i)), f.from_int(i % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    m.columns.push_back(std::move(col));
  }
  return m;
}

/// Ranks of d_1 .. d_dim, indexed by dimension (entry 0 is always 0).
inline std::vector<std::size_t> boundary_ranks(const SimplicialComplex& k, const FieldTag& field) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(k.dim() + 2, 1)), 0);
  visit_field(field, [&](const auto& f) {
    for (int d = 1; d <= k.dim(); ++d) {
      ranks[static_cast<std::size_t>(d)] = linalg::rank(f, boundary_matrix(k, d, f));
    }
    return 0;
  });
  return ranks;
}

/// h_i = dim ker d_i - rank d_{i+1} for i = 0..dim. Empty complex gives {}.
inline std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, const FieldTag& field) {
  if (k.empty()) return {};
  const auto ranks = boundary_ranks(k, field);
  std::vector<std::size_t> betti;
  for (int d = 0; d <= k.dim(); ++d) {
    const auto ud = static_cast<std::size_t>(d);
    betti.push_back(k.faces(d).size() - ranks[ud] - ranks[ud + 1]);
  }
  return betti;
}

/// Reduced Betti numbers (h_0 lowered by one).
inline std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& k,
                                                      const FieldTag& field) {
  auto b = betti_numbers(k, field);
  if (!b.empty()) b[0] -= 1;
  return b;
}

/// Generating polynomial of Betti numbers, trimmed of trailing zeros above
/// degree 0.
struct PoincarePolynomial {
  std::vector<std::size_t> coefficients;
  FieldTag field = FieldTag::rationals();

  PoincarePolynomial() = default;
  PoincarePolynomial(std::vector<std::size_t> coeffs, FieldTag f)
      : coefficients(std::move(coeffs)), field(f) {
    while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
  }

  std::size_t coefficient(std::size_t i) const {
    return i < coefficients.size() ? coefficients[i] : 0;
  }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  /// Coefficientwise partial order.
  bool operator<=(const PoincarePolynomial& other) const {
    const auto n = std::max(coefficients.size(), other.coefficients.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (coefficient(i) > other.coefficient(i)) return false;
    }
    return true;
  }
  friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return a.coefficients == b.coefficients;
  }
};

inline PoincarePolynomial poincare_polynomial(const SimplicialComplex& k, const FieldTag& field) {
  return PoincarePolynomial(betti_numbers(k, field), field);
}

/// Cup product H^1 x H^1 -> H^2 expressed in explicit cocycle bases.
struct CupProductResult {
  FieldTag field = FieldTag::rationals();
  /// Cocycles indexed by faces(1) of the complex; their classes form a basis of H^1.
  std::vector<std::vector<Rational>> h1_basis;
  /// Cocycles indexed by faces(2); their classes form a basis of H^2.
  std::vector<std::vector<Rational>> h2_basis;
  /// table[i][j] holds the H^2 coordinates of h1_basis[i] cup h1_basis[j].
  std::vector<std::vector<std::vector<Rational>>> table;
  bool nonzero = false;
};

namespace detail {

// delta^k as a dense (k+1)-faces x k-faces matrix.
template <class Field>
std::vector<std::vector<typename Field::value_type>> coboundary_dense(const SimplicialComplex& k,
                                                                     int degree, const Field& f) {
  const auto& lower = k.faces(degree);
  const auto& upper = k.faces(degree + 1);
  std::vector<std::vector<typename Field::value_type>> m(
      upper.size(), std::vector<typename Field::value_type>(lower.size(), f.zero()));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    for (std::size_t i = 0; i < upper[r].size(); ++i) {
      m[r][k.face_index(upper[r].facet_without(i))] = f.from_int(i % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

template <class V>
std::vector<V> column_of(const std::vector<std::vector<V>>& m, std::size_t c) {
  std::vector<V> out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(row[c]);
  return out;
}

// Echelon basis seeded with coboundaries, then extended by cocycles; the
// cocycles that survive represent a cohomology basis.
template <class Field>
struct CohomologyBasis {
  linalg::EchelonBasis<Field> echelon;
  std::size_t boundary_slots = 0;

  std::size_t rank() const { return echelon.size() - boundary_slots; }
};

template <class Field>
CohomologyBasis<Field> cohomology_basis(const SimplicialComplex& k, int degree, const Field& f) {
  using V = typename Field::value_type;
  const std::size_t n = k.faces(degree).size();
  CohomologyBasis<Field> out{linalg::EchelonBasis<Field>(f, n), 0};
  if (degree > 0) {
    const auto prev = coboundary_dense(k, degree - 1, f);
    for (std::size_t c = 0; c < k.faces(degree - 1).size(); ++c) {
      if (out.echelon.insert(column_of(prev, c))) ++out.boundary_slots;
    }
  }
  std::vector<std::vector<V>> cocycles;
  if (k.faces(degree + 1).empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<V> e(n, f.zero());
      e[i] = f.one();
      cocycles.push_back(std::move(e));
    }
  } else {
    cocycles = linalg::kernel_basis(f, coboundary_dense(k, degree, f), n);
  }
  for (auto& z : cocycles) out.echelon.insert(std::move(z));
  return out;
}

template <class Field>
CupProductResult cup_product_impl(const SimplicialComplex& k, const Field& f) {
  using V = typename Field::value_type;
  CupProductResult result;
  result.field = f.tag();
  if (k.dim() < 1) return result;

  auto h1 = cohomology_basis(k, 1, f);
  for (std::size_t i = h1.boundary_slots; i < h1.echelon.size(); ++i) {
    std::vector<Rational> rep;
    for (const auto& x : h1.echelon.vector(i)) rep.push_back(f.to_rational(x));
    result.h1_basis.push_back(std::move(rep));
  }
  if (k.dim() < 2) return result;

  auto h2 = cohomology_basis(k, 2, f);
  for (std::size_t i = h2.boundary_slots; i < h2.echelon.size(); ++i) {
    std::vector<Rational> rep;
    for (const auto& x : h2.echelon.vector(i)) rep.push_back(f.to_rational(x));
    result.h2_basis.push_back(std::move(rep));
  }

  const auto& triangles = k.faces(2);
  const std::size_t r1 = h1.rank();
  result.table.assign(r1, std::vector<std::vector<Rational>>(r1));
  for (std::size_t i = 0; i < r1; ++i) {
    const auto& x = h1.echelon.vector(h1.boundary_slots + i);
    for (std::size_t j = 0; j < r1; ++j) {
      const auto& y = h1.echelon.vector(h1.boundary_slots + j);
      // Front face [v0,v1] times back face [v1,v2].
      std::vector<V> prod(triangles.size(), f.zero());
      for (std::size_t t = 0; t < triangles.size(); ++t) {
        const auto& s = triangles[t];
        const auto front = k.face_index(Simplex::from_sorted({s[0], s[1]}));
        const auto back = k.face_index(Simplex::from_sorted({s[1], s[2]}));
        prod[t] = f.mul(x[front], y[back]);
      }
      auto coords = h2.echelon.reduce(prod);
      if (!h2.echelon.is_zero_vector(prod)) {
        throw std::logic_error("cup product of cocycles is not a cocycle");
      }
      auto& cell = result.table[i][j];
      for (std::size_t c = h2.boundary_slots; c < coords.size(); ++c) {
        cell.push_back(f.to_rational(coords[c]));
        if (!f.is_zero(coords[c])) result.nonzero = true;
      }
    }
  }
  return result;
}

}  // namespace detail

/// Ordered front-face/back-face cup product on H^1, projected to an H^2
/// basis. Pivots fall on the lexicographically first faces, so bases are
/// deterministic for a given vertex order.
inline CupProductResult cup_product_h1(const SimplicialComplex& k, const FieldTag& field) {
  return visit_field(field, [&](const auto& f) { return detail::cup_product_impl(k, f); });
}

/// Whether some product of H^1 classes is nonzero. Skips the cochain work
/// when H^1 or H^2 vanishes.
inline bool cup_h1_nonzero(const SimplicialComplex& k, const FieldTag& field) {
  if (k.dim() < 2) return false;
  const auto b = betti_numbers(k, field);
  if (b[1] == 0 || b[2] == 0) return false;
  return cup_product_h1(k, field).nonzero;
}

}  // namespace covtype
