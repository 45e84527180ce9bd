#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mbs/checked.hpp"
#include "mbs/error.hpp"

namespace mbs {

/// Dense row-major integer matrix. Built-in integer types trap on overflow in
/// every arithmetic helper below; multiprecision types simply grow.
template <class Int = std::int64_t>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw InputError("matrix entry count does not match its dimensions");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Int(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Int>& entries() const { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == Int(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          p(i, j) = checked::add(p(i, j), checked::mul(a(i, k), b(k, j)));
      }
    return p;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] -= q * row[src]
  void sub_row(std::size_t dst, const Int& q, std::size_t src) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) = checked::sub_mul((*this)(dst, c), q, (*this)(src, c));
  }
  /// col[dst] -= q * col[src]
  void sub_col(std::size_t dst, const Int& q, std::size_t src) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) = checked::sub_mul((*this)(r, dst), q, (*this)(r, src));
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked::neg((*this)(r, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

template <class Int = std::int64_t>
struct SmithForm {
  /// Nonzero invariant factors d1 | d2 | ... | d_rank, all positive.
  std::vector<Int> diagonal;
  std::size_t rank = 0;
  /// Present when requested: left * M * right is the diagonal matrix.
  std::optional<Matrix<Int>> left, right;
};

/// Invariant factors of an integer matrix by pivoting on the entry of smallest
/// absolute value. With `with_transforms`, also returns unimodular U and V with
/// U * M * V = diag(d1, ..., d_rank, 0, ...). Transform entries grow much
/// faster than the invariant factors; past about 7 x 7 use a multiprecision
/// Int or expect OverflowError.
template <class Int>
SmithForm<Int> smith_normal_form(Matrix<Int> a, bool with_transforms = false) {
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<Int> u, v;
  if (with_transforms) {
    u = Matrix<Int>::identity(m);
    v = Matrix<Int>::identity(n);
  }
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (with_transforms) u.swap_rows(i, j);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (with_transforms) v.swap_cols(i, j);
  };
  auto sub_row = [&](std::size_t dst, const Int& q, std::size_t src) {
    a.sub_row(dst, q, src);
    if (with_transforms) u.sub_row(dst, q, src);
  };
  auto sub_col = [&](std::size_t dst, const Int& q, std::size_t src) {
    a.sub_col(dst, q, src);
    if (with_transforms) v.sub_col(dst, q, src);
  };

  SmithForm<Int> out;
  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    // Global smallest nonzero pivot in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs(0);
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != Int(0)) {
          Int mag = checked::abs(a(i, j));
          if (!best || mag < best_abs) {
            best = {i, j};
            best_abs = mag;
          }
        }
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (a(i, t) != Int(0)) {
          sub_row(i, checked::div(a(i, t), a(t, t)), t);
          if (a(i, t) != Int(0)) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (a(t, j) != Int(0)) {
          sub_col(j, checked::div(a(t, j), a(t, t)), t);
          if (a(t, j) != Int(0)) clean = false;
        }

      if (!clean) {
        // A remainder smaller than the pivot is left in row t or column t.
        std::size_t bi = t, bj = t;
        Int mag = checked::abs(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != Int(0) && checked::abs(a(i, t)) < mag) {
            mag = checked::abs(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != Int(0) && checked::abs(a(t, j)) < mag) {
            mag = checked::abs(a(t, j));
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }

      // Row and column are clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != Int(0)) {
            offender = i;
            break;
          }
      if (!offender) break;
      sub_row(t, Int(-1), *offender);
    }

    if (a(t, t) < Int(0)) {
      a.negate_row(t);
      if (with_transforms) u.negate_row(t);
    }
    out.diagonal.push_back(a(t, t));
  }
  out.rank = out.diagonal.size();
  if (with_transforms) {
    out.left = std::move(u);
    out.right = std::move(v);
  }
  return out;
}

}  // namespace mbs
