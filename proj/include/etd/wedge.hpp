#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "etd/fp_subspace.hpp"
#include "etd/matrix.hpp"
#include "etd/numeric.hpp"
#include "etd/sublattice.hpp"

namespace etd {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Int b = 1;
  for (std::size_t i = 0; i < k; ++i) b = b * Int(n - i) / Int(i + 1);
  return static_cast<std::size_t>(b);
}

// ordered m-subsets of {0..n-1} in lexicographic order; they index the
// standard basis of the m-th wedge power
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                             std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m > n) return out;
  std::vector<std::size_t> cur(m);
  for (std::size_t i = 0; i < m; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (m == 0) break;
    std::size_t i = m;
    while (i > 0 && cur[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::size_t subset_index(const std::vector<std::size_t>& subset,
                                std::size_t n) {
  // lexicographic rank of the subset among all of its size
  std::size_t m = subset.size(), idx = 0, prev = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t v = prev; v < subset[i]; ++v)
      idx += binomial(n - 1 - v, m - 1 - i);
    prev = subset[i] + 1;
  }
  return idx;
}

template <typename T>
T minor_det(const Matrix<T>& m) {
  // Laplace expansion; wedge degrees are tiny at desk scale
  std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc = T();
  for (std::size_t j = 0; j < n; ++j) {
    if (scalar_is_zero(m(0, j))) continue;
    Matrix<T> sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(i - 1, cc++) = m(i, c);
      }
    }
    T term = m(0, j) * minor_det(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// minor expansion: coordinates of wedge products of the given rows in the
// standard basis of the wedge power
template <typename T>
std::vector<T> wedge_of_rows(const Matrix<T>& rows, std::size_t n) {
  std::size_t m = rows.rows();
  auto idx = subsets_of_size(n, m);
  std::vector<T> out(idx.size(), T());
  for (std::size_t s = 0; s < idx.size(); ++s) {
    Matrix<T> sub(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub(i, j) = rows(i, idx[s][j]);
    out[s] = minor_det(sub);
  }
  return out;
}

// m-th wedge power of a sublattice inside wedge^m(Z^n); the basis wedges of
// an HNF basis generate it
inline Sublattice wedge_power(const Sublattice& lat, std::size_t m) {
  std::size_t n = lat.ambient_rank();
  std::size_t dim = binomial(n, m);
  if (m > lat.rank()) return Sublattice::zero(dim);
  IntMatrix rows(0, dim);
  for (const auto& sel : subsets_of_size(lat.rank(), m)) {
    IntMatrix chosen(0, n);
    for (std::size_t i : sel) chosen.append_row(lat.basis().row(i));
    rows.append_row(wedge_of_rows(chosen, n));
  }
  return Sublattice::from_generators(dim, rows);
}

inline FpSubspace wedge_power(const FpSubspace& sp, std::size_t m) {
  std::size_t n = sp.ambient_dim();
  std::size_t dim = binomial(n, m);
  std::int64_t p = sp.prime();
  if (m > sp.dim()) return FpSubspace(p, dim);
  FpMatrix rows(0, dim);
  for (const auto& sel : subsets_of_size(sp.dim(), m)) {
    FpMatrix chosen(0, n);
    for (std::size_t i : sel) chosen.append_row(sp.basis().row(i));
    rows.append_row(wedge_of_rows(chosen, n));
  }
  return FpSubspace::from_rows(p, rows);
}

// matrix of (v wedge .) : wedge^m(k^n) -> wedge^{m+1}(k^n) acting on rows
template <typename T>
Matrix<T> wedge_multiply_matrix(const std::vector<T>& v, std::size_t m) {
  std::size_t n = v.size();
  auto src = subsets_of_size(n, m);
  auto dst = subsets_of_size(n, m + 1);
  std::map<std::vector<std::size_t>, std::size_t> dst_index;
  for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = i;
  Matrix<T> out(src.size(), dst.size());
  for (std::size_t s = 0; s < src.size(); ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (scalar_is_zero(v[t])) continue;
      // insert t into the subset; sign is the number of entries before it
      const auto& sub = src[s];
      bool dup = false;
      std::vector<std::size_t> merged;
      merged.reserve(m + 1);
      std::size_t before = 0;
      for (std::size_t x : sub) {
        if (x == t) {
          dup = true;
          break;
        }
        if (x < t) ++before;
      }
      if (dup) continue;
      merged = sub;
      merged.insert(merged.begin() + before, t);
      T term = v[t];
      if (before % 2 == 1) term = -term;
      out(s, dst_index[merged]) += term;
    }
  }
  return out;
}

// compound matrix: the induced map wedge^m(row map of a) on standard bases
inline IntMatrix compound_matrix(const IntMatrix& a, std::size_t m) {
  auto src = subsets_of_size(a.rows(), m);
  auto dst = subsets_of_size(a.cols(), m);
  IntMatrix out(src.size(), dst.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < dst.size(); ++j) {
      IntMatrix sub(m, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) sub(r, c) = a(src[i][r], dst[j][c]);
      out(i, j) = minor_det(sub);
    }
  return out;
}

// dim H^m of the Koszul complex (wedge^* k^dim, v wedge .) over F_p
inline std::size_t koszul_cohomology_dim_fp(const std::vector<Fp>& v, std::size_t m) {
  std::size_t dim = v.size();
  std::size_t cm = binomial(dim, m);
  if (cm == 0) return 0;
  FpMatrix d_out = wedge_multiply_matrix(v, m);
  std::size_t rank_out = field_rank(d_out);
  std::size_t rank_in = 0;
  if (m > 0) {
    FpMatrix d_in = wedge_multiply_matrix(v, m - 1);
    rank_in = field_rank(d_in);
  }
  return cm - rank_out - rank_in;
}

// same over Q, with integer input coordinates and fraction-free ranks
inline std::size_t koszul_cohomology_dim_q(const IntVec& v, std::size_t m) {
  std::size_t dim = v.size();
  std::size_t cm = binomial(dim, m);
  if (cm == 0) return 0;
  IntMatrix d_out = wedge_multiply_matrix(v, m);
  std::size_t rank_out = rank_over_q(d_out);
  std::size_t rank_in = 0;
  if (m > 0) rank_in = rank_over_q(wedge_multiply_matrix(v, m - 1));
  return cm - rank_out - rank_in;
}

// dim H^m of (wedge^* V, v wedge .) for a subspace V of F_p^n and v given in
// ambient coordinates
inline std::size_t koszul_cohomology(const FpSubspace& space, const std::vector<Fp>& v,
                                     std::size_t m) {
  auto coords = solve_row_system(space.basis(), v);
  if (!coords) throw std::domain_error("koszul_cohomology: v not in V");
  return koszul_cohomology_dim_fp(*coords, m);
}

// Q-space version: V is the rational span of a sublattice, v an ambient
// integer vector required to lie in it
inline std::size_t koszul_cohomology(const Sublattice& space, const IntVec& v,
                                     std::size_t m) {
  auto coords = solve_row_system(to_rational(space.basis()),
                                 [&] {
                                   std::vector<Rat> r(v.size());
                                   for (std::size_t i = 0; i < v.size(); ++i)
                                     r[i] = Rat(v[i]);
                                   return r;
                                 }());
  if (!coords) throw std::domain_error("koszul_cohomology: v not in V");
  // clear denominators; scaling v does not change the cohomology
  Int lcm = 1;
  for (const Rat& c : *coords)
    lcm = boost::multiprecision::lcm(lcm, Int(denominator(c)));
  IntVec iv(coords->size());
  for (std::size_t i = 0; i < coords->size(); ++i) {
    Rat scaled = (*coords)[i] * Rat(lcm);
    iv[i] = Int(numerator(scaled));
  }
  return koszul_cohomology_dim_q(iv, m);
}

}  // namespace etd
