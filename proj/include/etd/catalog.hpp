#pragma once

#include "etd/etd_core.hpp"

namespace etd {
namespace catalog {

// the base-change counterexample: P = <(1,0),(1,1),(1,2)>, Q = 0, F empty
inline Etd bacha(const EtdConfig& config = EtdConfig()) {
  ToricMonoid p = ToricMonoid::from_generators(
      2, IntMatrix{{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(1), Int(2)}});
  return Etd(std::move(p), IntMatrix(0, 2), FacetSpec::explicit_list({}), config);
}

// smoothing of the A1 singularity xy = t: P = N^2, Q = N(1,1)
inline Etd a1(const EtdConfig& config = EtdConfig()) {
  ToricMonoid p =
      ToricMonoid::from_generators(2, IntMatrix{{Int(1), Int(0)}, {Int(0), Int(1)}});
  IntMatrix q(0, 2);
  q.append_row({Int(1), Int(1)});
  return Etd(std::move(p), q, FacetSpec::min(), config);
}

// the xy = tw family over A^1: Q = N(1,0,1) inside the cone over a square
inline Etd xytw(const EtdConfig& config = EtdConfig()) {
  ToricMonoid p = ToricMonoid::from_generators(
      3, IntMatrix{{Int(1), Int(0), Int(0)},
                   {Int(0), Int(1), Int(1)},
                   {Int(1), Int(0), Int(1)},
                   {Int(0), Int(1), Int(0)}});
  IntMatrix q(0, 3);
  q.append_row({Int(1), Int(0), Int(1)});
  return Etd(std::move(p), q, FacetSpec::min(), config);
}

// toroidal pair: the affine plane with one boundary axis, Q = 0,
// F = { face generated by e1 }
inline Etd danilov_pair(const EtdConfig& config = EtdConfig()) {
  ToricMonoid p =
      ToricMonoid::from_generators(2, IntMatrix{{Int(1), Int(0)}, {Int(0), Int(1)}});
  return Etd(std::move(p), IntMatrix(0, 2), FacetSpec::explicit_list({{0}}), config);
}

inline std::vector<std::string> names() { return {"bacha", "a1", "xytw", "danilov-pair"}; }

inline Etd by_name(const std::string& name, const EtdConfig& config = EtdConfig()) {
  if (name == "bacha") return bacha(config);
  if (name == "a1") return a1(config);
  if (name == "xytw") return xytw(config);
  if (name == "danilov-pair") return danilov_pair(config);
  throw std::invalid_argument("unknown catalog ETD: " + name);
}

}  // namespace catalog
}  // namespace etd
