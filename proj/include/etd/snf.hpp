#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "etd/matrix.hpp"
#include "etd/numeric.hpp"

namespace etd {

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division, used to reduce entries above HNF pivots into [0, pivot)
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct HnfResult {
  IntMatrix h;                       // row-style Hermite normal form
  IntMatrix u;                       // unimodular, u * m = h
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
  std::size_t rank = 0;
};

inline HnfResult hermite_normal_form(const IntMatrix& m) {
  HnfResult res;
  res.h = m;
  res.u = IntMatrix::identity(m.rows());
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  auto sub_rows = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < h.cols(); ++k) h(dst, k) -= q * h(src, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(dst, k) -= q * u(src, k);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < h.cols(); ++k) h(i, k) = -h(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
  };
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // gcd-reduce column c below row r
    while (true) {
      std::size_t sel = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (sel == h.rows() || int_abs(h(i, c)) < int_abs(h(sel, c))) sel = i;
      }
      if (sel == h.rows()) break;
      h.swap_rows(r, sel);
      u.swap_rows(r, sel);
      bool clear = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        sub_rows(i, r, h(i, c) / h(r, c));
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) negate_row(r);
    for (std::size_t i = 0; i < r; ++i) sub_rows(i, r, floor_div(h(i, c), h(r, c)));
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

struct SnfResult {
  IntMatrix u;  // unimodular rows x rows
  IntMatrix d;  // diagonal with d1 | d2 | ...
  IntMatrix v;  // unimodular cols x cols, u * m * v = d
  std::vector<Int> divisors() const {
    std::vector<Int> out;
    std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < k; ++i)
      if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
  }
};

inline SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult res;
  res.u = IntMatrix::identity(m.rows());
  res.v = IntMatrix::identity(m.cols());
  res.d = m;
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  auto sub_rows = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.cols(); ++k) d(dst, k) -= q * d(src, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(dst, k) -= q * u(src, k);
  };
  auto sub_cols = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.rows(); ++k) d(k, dst) -= q * d(k, src);
    for (std::size_t k = 0; k < v.rows(); ++k) v(k, dst) -= q * v(k, src);
  };
  auto add_row = [&](std::size_t dst, std::size_t src) { sub_rows(dst, src, Int(-1)); };

  std::size_t t = 0;
  std::size_t limit = std::min(d.rows(), d.cols());
  while (t < limit) {
    // locate minimal nonzero entry in the trailing block
    std::size_t pi = d.rows(), pj = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j) == 0) continue;
        if (pi == d.rows() || int_abs(d(i, j)) < int_abs(d(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == d.rows()) break;  // trailing block is zero
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool clear = true;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t) == 0) continue;
      sub_rows(i, t, d(i, t) / d(t, t));
      if (d(i, t) != 0) clear = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j) == 0) continue;
      sub_cols(j, t, d(t, j) / d(t, t));
      if (d(t, j) != 0) clear = false;
    }
    if (!clear) continue;  // pivot shrank, repeat at the same t

    // enforce the divisibility chain
    bool fixed = false;
    for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
      for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j)
        if (d(i, j) % d(t, t) != 0) {
          add_row(t, i);
          fixed = true;
        }
    if (fixed) continue;

    if (d(t, t) < 0) {
      for (std::size_t k = 0; k < d.cols(); ++k) d(t, k) = -d(t, k);
      for (std::size_t k = 0; k < u.cols(); ++k) u(t, k) = -u(t, k);
    }
    ++t;
  }
  return res;
}

inline bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Int dd = det(m);
  return dd == 1 || dd == -1;
}

inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  HnfResult h = hermite_normal_form(m);
  if (!(h.h == IntMatrix::identity(m.rows())))
    throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return h.u;
}

// Basis (canonical HNF rows) of the left kernel {x : x * m = 0} over Z.
inline IntMatrix kernel_lattice(const IntMatrix& m) {
  HnfResult hnf = hermite_normal_form(m);
  IntMatrix ker(0, m.rows());
  for (std::size_t i = hnf.rank; i < m.rows(); ++i) ker.append_row(hnf.u.row(i));
  HnfResult k = hermite_normal_form(ker);
  IntMatrix out(0, m.rows());
  for (std::size_t i = 0; i < k.rank; ++i) out.append_row(k.h.row(i));
  return out;
}

// Solve x * m = v over Z. Returns nullopt when no integral solution exists.
inline std::optional<IntVec> solve_left(const IntMatrix& m, const IntVec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("solve_left: shape");
  HnfResult hnf = hermite_normal_form(m);
  IntVec rem = v;
  IntVec y(m.rows(), Int(0));
  for (std::size_t i = 0; i < hnf.rank; ++i) {
    std::size_t c = hnf.pivots[i];
    if (rem[c] % hnf.h(i, c) != 0) return std::nullopt;
    Int q = rem[c] / hnf.h(i, c);
    y[i] = q;
    if (q != 0)
      for (std::size_t k = 0; k < m.cols(); ++k) rem[k] -= q * hnf.h(i, k);
  }
  for (const Int& x : rem)
    if (x != 0) return std::nullopt;
  return row_times_matrix(y, hnf.u);
}

}  // namespace etd
