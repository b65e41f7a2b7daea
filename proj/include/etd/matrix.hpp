#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "etd/numeric.hpp"

namespace etd {

// Dense row-major matrix over an exact scalar (Int, Rat or Fp).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T()) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged init");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void append_row(const std::vector<T>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("Matrix: row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (scalar_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!scalar_is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using FpMatrix = Matrix<Fp>;

template <typename T>
std::vector<T> row_times_matrix(const std::vector<T>& x, const Matrix<T>& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("row_times_matrix: shape");
  std::vector<T> out(m.cols(), T());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (scalar_is_zero(x[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

inline FpMatrix reduce_mod_p(const IntMatrix& m, std::int64_t p) {
  FpMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Fp::from_int(m(i, j), p);
  return out;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

// Gauss-Jordan over a field. Returns pivot columns; the matrix is left in
// reduced row echelon form with zero rows moved to the bottom.
template <typename T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && scalar_is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || scalar_is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename T>
std::size_t field_rank(Matrix<T> m) {
  return rref_in_place(m).size();
}

// Basis of {x : x * m = 0} over a field, rows in RREF of the left kernel.
template <typename T>
Matrix<T> left_kernel(const Matrix<T>& m) {
  // transpose so the left kernel becomes a right kernel
  Matrix<T> a = m.transpose();
  std::size_t n = a.cols();
  std::vector<std::size_t> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix<T> ker(0, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<T> v(n, T());
    v[c] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, c);
    ker.append_row(v);
  }
  rref_in_place(ker);
  return ker;
}

// Solve x * a = v over a field; nullopt when the system is inconsistent.
template <typename T>
std::optional<std::vector<T>> solve_row_system(const Matrix<T>& a,
                                               const std::vector<T>& v) {
  if (v.size() != a.cols()) throw std::invalid_argument("solve_row_system: shape");
  Matrix<T> aug = a;
  aug.append_row(v);
  aug = aug.transpose();  // columns: unknowns | rhs appended as last column
  std::vector<std::size_t> pivots = rref_in_place(aug);
  std::size_t nvars = a.rows();
  std::vector<T> x(nvars, T());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == nvars) return std::nullopt;  // pivot in the rhs column
    x[pivots[i]] = aug(i, nvars);
  }
  return x;
}

// Rank of an integer matrix over Q via fraction-free (Bareiss) elimination.
inline std::size_t rank_over_q(IntMatrix m) {
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

// Determinant of a square integer matrix, fraction-free.
inline Int det(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      m.swap_rows(c, sel);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        m(i, j) = (m(c, c) * m(i, j) - m(i, c) * m(c, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(c, c);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

}  // namespace etd
