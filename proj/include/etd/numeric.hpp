#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace etd {

// Exact scalars. All lattice arithmetic uses arbitrary precision; machine
// words appear only in the prime-field layer where the modulus is small.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factors by trial division; inputs are desk-scale lattice indices.
inline std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Element of F_p with runtime modulus. A value constructed from a bare
// integer literal has no modulus yet and adopts the modulus of the first
// attached partner it meets, so generic matrix code can write T(0), T(1).
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  explicit Fp(std::int64_t literal) : v_(literal), p_(0) {}
  Fp(std::int64_t value, std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
      throw std::invalid_argument("Fp: modulus out of range");
    v_ = value % p;
    if (v_ < 0) v_ += p;
  }
  static Fp from_int(const Int& value, std::int64_t p) {
    Int r = value % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::int64_t>(r), p);
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return p_ == 0 ? v_ == 0 : v_ % p_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::int64_t p = join(a, b);
    if (p == 0) return Fp(a.v_ + b.v_);
    return Fp(a.at(p) + b.at(p), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::int64_t p = join(a, b);
    if (p == 0) return Fp(a.v_ - b.v_);
    return Fp(a.at(p) - b.at(p), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::int64_t p = join(a, b);
    if (p == 0) return Fp(a.v_ * b.v_);
    return Fp(a.at(p) * b.at(p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return p_ == 0 ? Fp(-v_) : Fp(p_ - v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("Fp: inverse of unattached scalar");
    }
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::int64_t p = join(a, b);
    if (p == 0) return a.v_ == b.v_;
    return a.at(p) == b.at(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static std::int64_t join(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw std::invalid_argument("Fp: modulus mismatch");
    return a.p_;
  }
  std::int64_t at(std::int64_t p) const {
    std::int64_t r = v_ % p;
    return r < 0 ? r + p : r;
  }

  std::int64_t v_;
  std::int64_t p_;
};

template <typename T>
inline bool scalar_is_zero(const T& x) {
  return x == T(0);
}
template <>
inline bool scalar_is_zero<Fp>(const Fp& x) {
  return x.is_zero();
}

}  // namespace etd
