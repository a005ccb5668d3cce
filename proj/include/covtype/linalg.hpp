#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace covtype::linalg {

/// Sparse column: (row, value) entries sorted by row, no explicit zeros.
template <class V>
using SparseColumn = std::vector<std::pair<std::size_t, V>>;

template <class V>
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<SparseColumn<V>> columns;

  std::size_t cols() const { return columns.size(); }

  std::vector<std::vector<V>> to_dense(const V& zero) const {
    std::vector<std::vector<V>> dense(rows, std::vector<V>(columns.size(), zero));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (const auto& [r, v] : columns[c]) dense[r][c] = v;
    }
    return dense;
  }
};

/// a += factor * b over the field.
template <class Field>
SparseColumn<typename Field::value_type> axpy(const Field& f,
                                              const SparseColumn<typename Field::value_type>& a,
                                              const typename Field::value_type& factor,
                                              const SparseColumn<typename Field::value_type>& b) {
  SparseColumn<typename Field::value_type> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.mul(factor, b[j].second));
      ++j;
    } else {
      auto v = f.add(a[i].second, f.mul(factor, b[j].second));
      if (!f.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Rank by standard column reduction on the lowest nonzero row.
template <class Field>
std::size_t rank(const Field& f, const SparseMatrix<typename Field::value_type>& m) {
  using V = typename Field::value_type;
  std::map<std::size_t, SparseColumn<V>> by_low;
  std::size_t r = 0;
  for (auto col : m.columns) {
    while (!col.empty()) {
      auto it = by_low.find(col.back().first);
      if (it == by_low.end()) break;
      const auto& other = it->second;
      const V factor = f.neg(f.div(col.back().second, other.back().second));
      col = axpy(f, col, factor, other);
    }
    if (!col.empty()) {
      const std::size_t low = col.back().first;
      by_low.emplace(low, std::move(col));
      ++r;
    }
  }
  return r;
}

/// Basis of the null space of a dense matrix (rows x cols), obtained from
/// the reduced row echelon form. One vector per free column, in column order.
template <class Field>
std::vector<std::vector<typename Field::value_type>> kernel_basis(
    const Field& f, std::vector<std::vector<typename Field::value_type>> a, std::size_t cols) {
  using V = typename Field::value_type;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && f.is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    const V inv_lead = f.div(f.one(), a[row][c]);
    for (auto& x : a[row]) x = f.mul(x, inv_lead);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || f.is_zero(a[r][c])) continue;
      const V factor = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[row][k]));
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<V>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<V> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Incrementally built basis in echelon form.
///
/// Each stored vector is zero at the pivots of all vectors stored before it,
/// and its own pivot is its first nonzero coordinate. Reducing in insertion
/// order therefore yields the unique coordinates of any vector in the span.
template <class Field>
class EchelonBasis {
 public:
  using V = typename Field::value_type;

  EchelonBasis(Field f, std::size_t length) : f_(std::move(f)), length_(length) {}

  std::size_t size() const { return vectors_.size(); }
  const std::vector<V>& vector(std::size_t i) const { return vectors_[i]; }

  /// Reduces v in place; coordinates (one per stored vector) are returned.
  std::vector<V> reduce(std::vector<V>& v) const {
    std::vector<V> coords(vectors_.size(), f_.zero());
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (f_.is_zero(v[p])) continue;
      const V c = f_.div(v[p], vectors_[i][p]);
      coords[i] = c;
      for (std::size_t k = 0; k < length_; ++k) {
        if (!f_.is_zero(vectors_[i][k])) v[k] = f_.sub(v[k], f_.mul(c, vectors_[i][k]));
      }
    }
    return coords;
  }

  /// Stores the reduced form of v when independent; returns its slot.
  std::optional<std::size_t> insert(std::vector<V> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < length_ && f_.is_zero(v[p])) ++p;
    if (p == length_) return std::nullopt;
    vectors_.push_back(std::move(v));
    pivots_.push_back(p);
    return vectors_.size() - 1;
  }

  bool is_zero_vector(const std::vector<V>& v) const {
    for (const auto& x : v) {
      if (!f_.is_zero(x)) return false;
    }
    return true;
  }

 private:
  Field f_;
  std::size_t length_;
  std::vector<std::vector<V>> vectors_;
  std::vector<std::size_t> pivots_;
};

}  // namespace covtype::linalg
