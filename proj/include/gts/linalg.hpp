#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gts/field.hpp"

namespace gts {

template <CoefficientField F>
using DenseVector = std::vector<typename F::Elem>;

/// Row-major matrix over F.
template <CoefficientField F>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<typename F::Elem> data;

  DenseMatrix() = default;
  DenseMatrix(const F& f, std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, f.zero()) {}

  static DenseMatrix identity(const F& f, std::size_t n) {
    DenseMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  typename F::Elem& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const typename F::Elem& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Incrementally built row space. Each stored row has a pivot at which every other stored row
/// added after it vanishes, so reducing in insertion order yields a canonical residual.
template <CoefficientField F>
class EchelonBasis {
 public:
  EchelonBasis(F field, std::size_t dim) : f_(std::move(field)), dim_(dim), pivot_of_col_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }

  /// v minus its component in the row space; zero at every pivot column.
  DenseVector<F> reduce(DenseVector<F> v) const {
    check(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto c = v[pivots_[k]];
      if (f_.is_zero(c)) continue;
      const auto& row = rows_[k];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!f_.is_zero(row[j])) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
    return v;
  }

  bool contains(const DenseVector<F>& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(DenseVector<F> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && f_.is_zero(v[p])) ++p;
    if (p == dim_) return false;
    auto inv = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, inv);
    pivot_of_col_[p] = static_cast<long>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  bool is_zero(const DenseVector<F>& v) const {
    for (const auto& x : v)
      if (!f_.is_zero(x)) return false;
    return true;
  }

 private:
  void check(const DenseVector<F>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector of the wrong length for this row space");
  }

  F f_;
  std::size_t dim_;
  std::vector<DenseVector<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_of_col_;
};

/// Basis of {x : A x = 0}.
template <CoefficientField F>
std::vector<DenseVector<F>> nullspace(const F& f, const DenseMatrix<F>& A) {
  DenseMatrix<F> M = A;
  std::vector<long> pivot_row_of_col(M.cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
    std::size_t p = r;
    while (p < M.rows && f.is_zero(M(p, c))) ++p;
    if (p == M.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M(p, j), M(r, j));
    auto inv = f.inv(M(r, c));
    for (std::size_t j = 0; j < M.cols; ++j) M(r, j) = f.mul(M(r, j), inv);
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == r || f.is_zero(M(i, c))) continue;
      auto factor = M(i, c);
      for (std::size_t j = 0; j < M.cols; ++j)
        if (!f.is_zero(M(r, j))) M(i, j) = f.sub(M(i, j), f.mul(factor, M(r, j)));
    }
    pivot_row_of_col[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<DenseVector<F>> basis;
  for (std::size_t free = 0; free < M.cols; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    DenseVector<F> x(M.cols, f.zero());
    x[free] = f.one();
    for (std::size_t c = 0; c < M.cols; ++c)
      if (pivot_row_of_col[c] >= 0) x[c] = f.neg(M(static_cast<std::size_t>(pivot_row_of_col[c]), free));
    basis.push_back(std::move(x));
  }
  return basis;
}

template <CoefficientField F>
std::size_t rank_of(const F& f, const std::vector<DenseVector<F>>& vectors, std::size_t dim) {
  EchelonBasis<F> e(f, dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

/// Vectors fixed by every matrix in `action` (a representation given on generators), as the
/// nullspace of the stacked matrices (1 - g).
template <CoefficientField F>
std::vector<DenseVector<F>> brute_fixed_subspace(const F& f, const std::vector<DenseMatrix<F>>& action,
                                                 std::size_t dim) {
  DenseMatrix<F> stacked(f, action.size() * dim, dim);
  for (std::size_t g = 0; g < action.size(); ++g) {
    const auto& A = action[g];
    if (A.rows != dim || A.cols != dim) throw std::invalid_argument("representation matrix of the wrong size");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        auto v = f.neg(A(i, j));
        if (i == j) v = f.add(v, f.one());
        stacked(g * dim + i, j) = v;
      }
  }
  return nullspace(f, stacked);
}

}  // namespace gts
