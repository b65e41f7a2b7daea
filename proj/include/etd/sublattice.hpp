#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "etd/fp_subspace.hpp"
#include "etd/matrix.hpp"
#include "etd/numeric.hpp"
#include "etd/snf.hpp"

namespace etd {

// Finitely generated subgroup of Z^n. The basis is kept as the row-style
// Hermite normal form of the generators, so structural equality of two
// Sublattice values is equality of the subgroups.
class Sublattice {
 public:
  explicit Sublattice(std::size_t ambient_rank)
      : n_(ambient_rank), basis_(0, ambient_rank) {}

  static Sublattice from_generators(std::size_t ambient_rank, const IntMatrix& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient_rank)
      throw std::invalid_argument("Sublattice: generator length mismatch");
    Sublattice s(ambient_rank);
    HnfResult hnf = hermite_normal_form(rows);
    for (std::size_t i = 0; i < hnf.rank; ++i) s.basis_.append_row(hnf.h.row(i));
    return s;
  }

  static Sublattice zero(std::size_t n) { return Sublattice(n); }
  static Sublattice full(std::size_t n) {
    return from_generators(n, IntMatrix::identity(n));
  }
  static Sublattice span_of(const IntVec& v) {
    IntMatrix m(0, v.size());
    m.append_row(v);
    return from_generators(v.size(), m);
  }

  std::size_t ambient_rank() const { return n_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVec& v) const {
    return solve_left(basis_, v).has_value();
  }

  // coordinates of v in the basis; nullopt when v is outside the lattice
  std::optional<IntVec> coordinates(const IntVec& v) const {
    return solve_left(basis_, v);
  }

  IntVec from_coordinates(const IntVec& c) const {
    return row_times_matrix(c, basis_);
  }

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Sublattice& a, const Sublattice& b) {
    return !(a == b);
  }

  friend Sublattice lattice_sum(const Sublattice& a, const Sublattice& b) {
    check_pair(a, b, "lattice_sum");
    IntMatrix rows = a.basis_;
    for (std::size_t i = 0; i < b.basis_.rows(); ++i) rows.append_row(b.basis_.row(i));
    return from_generators(a.n_, rows);
  }

  friend Sublattice intersect(const Sublattice& a, const Sublattice& b) {
    check_pair(a, b, "intersect");
    // kernel of (x, y) -> x*A - y*B; the intersection is spanned by the x*A
    IntMatrix stacked(0, a.n_);
    for (std::size_t i = 0; i < a.basis_.rows(); ++i) stacked.append_row(a.basis_.row(i));
    for (std::size_t i = 0; i < b.basis_.rows(); ++i) {
      IntVec r = b.basis_.row(i);
      for (auto& x : r) x = -x;
      stacked.append_row(r);
    }
    IntMatrix ker = kernel_lattice(stacked);
    IntMatrix rows(0, a.n_);
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      IntVec full = ker.row(i);
      IntVec x(full.begin(), full.begin() + a.basis_.rows());
      rows.append_row(row_times_matrix(x, a.basis_));
    }
    return from_generators(a.n_, rows);
  }

  // saturation {v : k*v in L for some k >= 1} and the elementary divisors of
  // the inclusion L c saturate(L); both read off one Smith normal form
  Sublattice saturation() const {
    SnfResult snf = smith_normal_form(basis_);
    // rows of d * v^{-1} span L; dropping the divisors saturates
    IntMatrix vinv = snf_v_inverse(snf);
    IntMatrix rows(0, n_);
    for (std::size_t i = 0; i < rank(); ++i) rows.append_row(vinv.row(i));
    return from_generators(n_, rows);
  }

  std::vector<Int> saturation_divisors() const {
    return smith_normal_form(basis_).divisors();
  }

  bool is_saturated() const {
    for (const Int& d : saturation_divisors())
      if (d != 1) return false;
    return true;
  }

  FpSubspace mod_p(std::int64_t p) const {
    return FpSubspace::from_rows(p, reduce_mod_p(basis_, p));
  }

  // image under the linear map v -> v * m, re-canonicalized
  Sublattice map_rows(const IntMatrix& m) const {
    if (m.rows() != n_) throw std::invalid_argument("Sublattice::map_rows: shape");
    IntMatrix rows(0, m.cols());
    for (std::size_t i = 0; i < basis_.rows(); ++i)
      rows.append_row(row_times_matrix(basis_.row(i), m));
    return from_generators(m.cols(), rows);
  }

 private:
  static void check_pair(const Sublattice& a, const Sublattice& b, const char* what) {
    if (a.n_ != b.n_)
      throw std::invalid_argument(std::string(what) + ": ambient-rank mismatch");
  }

  // V^{-1} restricted to the first rank rows, via U * M = D * V^{-1}
  IntMatrix snf_v_inverse(const SnfResult& snf) const {
    // (U*M) has rows d_i * w_i where w_i are the first rows of V^{-1}
    IntMatrix um = snf.u * basis_;
    IntMatrix rows(0, n_);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      IntVec r = um.row(i);
      Int d = snf.d(i, i);
      if (d == 0) continue;
      for (auto& x : r) x /= d;
      rows.append_row(r);
    }
    return rows;
  }

  std::size_t n_;
  IntMatrix basis_;
};

inline FpSubspace intersect_mod_p(const Sublattice& a, const Sublattice& b,
                                  std::int64_t p) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("intersect_mod_p: ambient-rank mismatch");
  if (!is_prime(Int(p))) throw std::invalid_argument("intersect_mod_p: p not prime");
  return intersect(a.mod_p(p), b.mod_p(p));
}

// Primes p at which reduction mod p does not commute with the intersection,
// read off the elementary divisors of the sum inside its saturation. For
// saturated inputs these are exactly the p with
// dim (A mod p) cap (B mod p) > rank (A cap B).
inline std::vector<Int> obstruction_primes(const Sublattice& a, const Sublattice& b) {
  Sublattice s = lattice_sum(a, b);
  std::vector<Int> primes;
  for (const Int& d : s.saturation_divisors())
    for (const Int& p : prime_factors(d))
      if (std::find(primes.begin(), primes.end(), p) == primes.end())
        primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace etd
