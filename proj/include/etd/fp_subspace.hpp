#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "etd/matrix.hpp"
#include "etd/numeric.hpp"

namespace etd {

// Subspace of F_p^n, basis kept in reduced row echelon form so that equality
// of subspaces is equality of representations.
class FpSubspace {
 public:
  FpSubspace(std::int64_t p, std::size_t ambient_dim)
      : p_(p), n_(ambient_dim), basis_(0, ambient_dim) {
    if (!is_prime(Int(p))) throw std::invalid_argument("FpSubspace: p not prime");
  }

  static FpSubspace from_rows(std::int64_t p, FpMatrix rows) {
    FpSubspace s(p, rows.cols());
    rref_in_place(rows);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < rows.cols(); ++j)
        if (!rows(i, j).is_zero()) {
          zero = false;
          break;
        }
      if (!zero) s.basis_.append_row(rows.row(i));
    }
    return s;
  }

  static FpSubspace full(std::int64_t p, std::size_t n) {
    FpMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = Fp(1, p);
    return from_rows(p, id);
  }

  std::int64_t prime() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Fp>& v) const {
    FpMatrix m = basis_;
    m.append_row(v);
    return field_rank(m) == dim();
  }

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

  friend FpSubspace intersect(const FpSubspace& a, const FpSubspace& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_)
      throw std::invalid_argument("FpSubspace::intersect: mismatch");
    // rows (x, y) with x*A = y*B; the intersection is spanned by the x*A
    FpMatrix stacked(0, a.n_);
    for (std::size_t i = 0; i < a.basis_.rows(); ++i) stacked.append_row(a.basis_.row(i));
    for (std::size_t i = 0; i < b.basis_.rows(); ++i) {
      std::vector<Fp> r = b.basis_.row(i);
      for (auto& x : r) x = -x;
      stacked.append_row(r);
    }
    FpMatrix ker = left_kernel(stacked);
    FpMatrix rows(0, a.n_);
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      std::vector<Fp> full = ker.row(i);
      std::vector<Fp> x(full.begin(), full.begin() + a.basis_.rows());
      rows.append_row(row_times_matrix(x, a.basis_));
    }
    return from_rows(a.p_, rows);
  }

  // image under the linear map given by an integer matrix acting on rows
  FpSubspace map_rows(const IntMatrix& m) const {
    if (m.rows() != n_) throw std::invalid_argument("FpSubspace::map_rows: shape");
    FpMatrix mp = reduce_mod_p(m, p_);
    FpMatrix rows(0, m.cols());
    for (std::size_t i = 0; i < basis_.rows(); ++i)
      rows.append_row(row_times_matrix(basis_.row(i), mp));
    return from_rows(p_, rows);
  }

 private:
  std::int64_t p_;
  std::size_t n_;
  FpMatrix basis_;
};

}  // namespace etd
