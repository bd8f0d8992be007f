#pragma once

// Sparse exact linear algebra over Q and Q(i): incremental row echelon
// forms used for every rank, span-membership and quotient computation in
// the library. No floating point is involved anywhere in this header.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/scalar.hpp"

namespace orbitkit {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ScalarQ& s) { return s.is_zero(); }

template <class F>
using SparseVec = std::vector<std::pair<int, F>>;  // strictly increasing indices, no zero values

template <class F>
void normalize(SparseVec<F>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  out.reserve(v.size());
  for (auto& [idx, val] : v) {
    if (!out.empty() && out.back().first == idx) {
      out.back().second += val;
    } else {
      out.emplace_back(idx, std::move(val));
    }
  }
  std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
  v = std::move(out);
}

// v <- v - a * w, both sorted.
template <class F>
void axpy_sub(SparseVec<F>& v, const F& a, const SparseVec<F>& w) {
  SparseVec<F> out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || w[j].first < v[i].first) {
      F t = w[j].second;
      t *= a;
      out.emplace_back(w[j].first, -t);
      ++j;
    } else {
      F t = w[j].second;
      t *= a;
      v[i].second -= t;
      if (!is_zero(v[i].second)) out.push_back(std::move(v[i]));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

/// Incremental row echelon form over a field. Rows are stored with their
/// leading coefficient normalised to one.
template <class F>
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols), pivot_of_col_(static_cast<std::size_t>(ncols), -1) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Eliminates leading entries until the lead has no pivot. Result is zero iff v is in the span.
  SparseVec<F> reduce_lead(SparseVec<F> v) const {
    while (!v.empty()) {
      int p = pivot_of_col_[static_cast<std::size_t>(v.front().first)];
      if (p < 0) break;
      F a = v.front().second;
      axpy_sub(v, a, rows_[static_cast<std::size_t>(p)]);
    }
    return v;
  }

  /// Full reduction: every entry in a pivot column is eliminated. Gives a
  /// canonical representative of v modulo the span.
  SparseVec<F> reduce_full(SparseVec<F> v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      int p = pivot_of_col_[static_cast<std::size_t>(v[pos].first)];
      if (p < 0) {
        ++pos;
        continue;
      }
      int col = v[pos].first;
      F a = v[pos].second;
      axpy_sub(v, a, rows_[static_cast<std::size_t>(p)]);
      // Entries before col are untouched by the subtraction.
      pos = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), col,
                                                      [](const auto& e, int c) { return e.first < c; }) -
                                     v.begin());
    }
    return v;
  }

  bool contains(SparseVec<F> v) const { return reduce_lead(std::move(v)).empty(); }

  /// Adds v to the span; returns true iff it increased the rank.
  bool insert(SparseVec<F> v) {
    v = reduce_lead(std::move(v));
    if (v.empty()) return false;
    F lead = v.front().second;
    if (!(lead == F(1))) {
      F inv = F(1) / lead;
      for (auto& e : v) e.second *= inv;
    }
    pivot_of_col_[static_cast<std::size_t>(v.front().first)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  const std::vector<SparseVec<F>>& rows() const { return rows_; }
  bool is_pivot_column(int c) const { return pivot_of_col_[static_cast<std::size_t>(c)] >= 0; }

 private:
  int ncols_;
  std::vector<int> pivot_of_col_;
  std::vector<SparseVec<F>> rows_;
};

/// Rank of the span of the given vectors (sparsest first to limit fill-in).
template <class F>
int exact_rank(std::vector<SparseVec<F>> vectors, int ncols) {
  std::stable_sort(vectors.begin(), vectors.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  Echelon<F> e(ncols);
  for (auto& v : vectors) e.insert(std::move(v));
  return e.rank();
}

/// Dense helper: rank of a row-major dense matrix.
template <class F>
int exact_rank_dense(const std::vector<std::vector<F>>& rows, int ncols) {
  std::vector<SparseVec<F>> vs;
  vs.reserve(rows.size());
  for (const auto& r : rows) {
    SparseVec<F> v;
    for (int c = 0; c < ncols; ++c)
      if (!is_zero(r[static_cast<std::size_t>(c)])) v.emplace_back(c, r[static_cast<std::size_t>(c)]);
    vs.push_back(std::move(v));
  }
  return exact_rank(std::move(vs), ncols);
}

extern template class Echelon<Rational>;
extern template class Echelon<ScalarQ>;

}  // namespace orbitkit
