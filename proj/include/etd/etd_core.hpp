#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "etd/errors.hpp"
#include "etd/snf.hpp"
#include "etd/toric_monoid.hpp"

namespace etd {

// p = e + q with e in the canonical free basis E and q in Q (gp coordinates)
struct EssentialDecomposition {
  IntVec e;
  IntVec q;
};

// how the facet set F is specified: all vertical facets, all facets, or an
// explicit list of facets given by their generator supports
struct FacetSpec {
  enum class Kind { Min, Max, Explicit };
  Kind kind = Kind::Min;
  std::vector<std::vector<std::size_t>> supports;  // for Explicit

  static FacetSpec min() { return FacetSpec{Kind::Min, {}}; }
  static FacetSpec max() { return FacetSpec{Kind::Max, {}}; }
  static FacetSpec explicit_list(std::vector<std::vector<std::size_t>> s) {
    return FacetSpec{Kind::Explicit, std::move(s)};
  }
};

struct EtdConfig {
  Int window = 20;  // h-degree bound for the bounded certification
};

// Elementary toroidal datum (Q c P, F) with its derived structure.
class Etd {
 public:
  Etd(ToricMonoid p, const IntMatrix& q_gens_ambient, const FacetSpec& spec,
      const EtdConfig& config = EtdConfig())
      : p_(std::move(p)), config_(config), q_group_(0) {
    build_q(q_gens_ambient);
    build_splitting();
    resolve_facets(spec);
    certify();
  }

  const ToricMonoid& monoid() const { return p_; }
  const EtdConfig& config() const { return config_; }

  std::size_t gp_rank() const { return p_.gp_rank(); }
  const IntMatrix& q_generators_gp() const { return q_gens_gp_; }
  const Sublattice& q_group() const { return q_group_; }
  std::size_t q_rank() const { return q_group_.rank(); }
  std::size_t fiber_dim() const { return p_.gp_rank() - q_group_.rank(); }

  // facet bookkeeping (indices into monoid().facet_normals())
  const std::vector<std::size_t>& facet_set() const { return f_set_; }
  const std::vector<std::size_t>& vertical_facets() const { return f_min_; }
  std::vector<std::size_t> horizontal_facets() const {
    std::vector<std::size_t> out;
    for (std::size_t j : f_set_)
      if (std::find(f_min_.begin(), f_min_.end(), j) == f_min_.end())
        out.push_back(j);
    return out;
  }
  std::vector<std::size_t> unused_facets() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < p_.num_facets(); ++j)
      if (std::find(f_set_.begin(), f_set_.end(), j) == f_set_.end())
        out.push_back(j);
    return out;
  }

  // chosen splitting P^gp = C + Q^gp; pi kills Q^gp, sigma is the Q-component
  const IntMatrix& projection() const { return projection_; }
  const IntMatrix& section() const { return section_; }
  IntVec project(const IntVec& gp) const { return row_times_matrix(gp, projection_); }
  IntVec sigma_q(const IntVec& gp) const {
    IntVec c = row_times_matrix(gp, v_full_);
    IntVec out(gp_rank(), Int(0));
    for (std::size_t i = 0; i < q_rank(); ++i)
      for (std::size_t k = 0; k < gp_rank(); ++k) out[k] += c[i] * w_rows_(i, k);
    return out;
  }

  bool in_p(const IntVec& gp) const { return p_.contains_gp(gp); }

  bool in_q(const IntVec& gp) const {
    if (!q_monoid_) {
      for (const Int& x : gp)
        if (x != 0) return false;
      return true;
    }
    return q_monoid_->contains_ambient(gp);
  }

  bool in_e(const IntVec& gp) const {
    if (!p_.contains_gp(gp)) return false;
    for (std::size_t i = 0; i < q_gens_gp_.rows(); ++i) {
      IntVec shifted = gp;
      for (std::size_t k = 0; k < gp_rank(); ++k) shifted[k] -= q_gens_gp_(i, k);
      if (p_.contains_gp(shifted)) return false;
    }
    return true;
  }

  bool face_is_essential(const Face& f) const {
    for (std::size_t i = 0; i < q_gens_gp_.rows(); ++i) {
      bool q_on_face = true;
      for (std::size_t j : f.vanishing)
        if (p_.normal_value(j, q_gens_gp_.row(i)) != 0) {
          q_on_face = false;
          break;
        }
      if (q_on_face) return false;
    }
    return true;
  }

  std::vector<const Face*> essential_faces() const {
    std::vector<const Face*> out;
    for (const Face& f : p_.faces())
      if (face_is_essential(f)) out.push_back(&f);
    return out;
  }

  // index set of the U_P cover: essential faces of rank d-1
  std::vector<const Face*> cover_faces() const {
    std::vector<const Face*> out;
    if (fiber_dim() == 0) return out;
    for (const Face* f : essential_faces())
      if (f->rank == fiber_dim() - 1) out.push_back(f);
    return out;
  }

  // faces whose essential part has rank at most d-2; their orbits are the
  // complement of U_P
  std::vector<const Face*> bad_faces() const {
    std::vector<const Face*> out;
    std::size_t d = fiber_dim();
    if (d == 0) return out;
    for (const Face& g : p_.faces()) {
      std::size_t max_rank = 0;
      bool has_essential = false;
      for (const Face* f : essential_faces())
        if (ToricMonoid::face_subset(*f, g)) {
          has_essential = true;
          max_rank = std::max(max_rank, f->rank);
        }
      (void)has_essential;  // the zero face is always essential
      if (max_rank + 2 <= d) out.push_back(&g);
    }
    return out;
  }

  EssentialDecomposition decompose(const IntVec& gp) const {
    if (!p_.contains_gp(gp))
      throw EtdError(EtdErrorCode::NotAnElement, "decompose: element not in P");
    auto sols = decompositions(gp);
    if (sols.size() != 1)
      throw EtdError(EtdErrorCode::NotFreeBasis,
                     "decompose: decomposition not unique (invalid ETD data)");
    return sols[0];
  }

  // the Q^gp-part of the essential component of p; this evaluates the section
  // phi of the projection P -> Pbar at the class of p
  IntVec phi(const IntVec& gp) const { return sigma_q(decompose(gp).e); }

  std::vector<IntVec> enumerate_p(const Int& bound) const {
    return p_.enumerate_up_to(bound);
  }
  std::vector<IntVec> enumerate_e(const Int& bound) const {
    std::vector<IntVec> out;
    for (const IntVec& p : p_.enumerate_up_to(bound))
      if (in_e(p)) out.push_back(p);
    return out;
  }
  std::vector<IntVec> enumerate_q_monoid(const Int& bound) const {
    std::set<IntVec> seen;
    const LocalGrading& h = p_.default_grading();
    std::vector<IntVec> frontier{IntVec(gp_rank(), Int(0))};
    if (bound >= 0) seen.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<IntVec> next;
      for (const IntVec& p : frontier)
        for (std::size_t i = 0; i < q_gens_gp_.rows(); ++i) {
          IntVec q = p;
          for (std::size_t k = 0; k < gp_rank(); ++k) q[k] += q_gens_gp_(i, k);
          if (h(q) > bound || seen.count(q)) continue;
          seen.insert(q);
          next.push_back(q);
        }
      frontier = std::move(next);
    }
    return std::vector<IntVec>(seen.begin(), seen.end());
  }

  // interior point of a face: sum of its generators, optionally scaled
  IntVec interior_point(const Face& f, const Int& scale = 1) const {
    IntVec out = f.interior_point;
    for (auto& x : out) x *= scale;
    return out;
  }

  // the product ETD (Q x 0 c P x N^r, {F x N^r}); constructor convenience
  Etd product_with_nn(std::size_t extra) const;

 private:
  void build_q(const IntMatrix& q_gens_ambient) {
    q_gens_gp_ = IntMatrix(0, gp_rank());
    for (std::size_t i = 0; i < q_gens_ambient.rows(); ++i) {
      auto gp = p_.to_gp(q_gens_ambient.row(i));
      if (!gp || !p_.contains_gp(*gp))
        throw EtdError(EtdErrorCode::NotInjective,
                       "Q generator is not an element of P");
      bool zero = true;
      for (const Int& x : *gp)
        if (x != 0) zero = false;
      if (zero) continue;
      q_gens_gp_.append_row(*gp);
    }
    q_group_ = Sublattice::from_generators(gp_rank(), q_gens_gp_);
    // abstract validity of Q: sharp is inherited from P; saturation certified
    if (q_gens_gp_.rows() > 0)
      ToricMonoid::from_generators(gp_rank(), q_gens_gp_,
                                   MonoidOptions{config_.window});
  }

  void build_splitting() {
    std::size_t r = gp_rank(), k = q_group_.rank();
    SnfResult snf = smith_normal_form(q_group_.basis());
    for (const Int& d : snf.divisors())
      if (d != 1)
        throw EtdError(EtdErrorCode::NotFreeBasis,
                       "Q^gp is not saturated in P^gp (torsion quotient)");
    v_full_ = snf.v;
    IntMatrix w = unimodular_inverse(snf.v);
    w_rows_ = w;
    projection_ = IntMatrix(r, r - k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j + k < r; ++j) projection_(i, j) = snf.v(i, k + j);
    section_ = IntMatrix(r - k, r);
    for (std::size_t i = 0; i + k < r; ++i)
      for (std::size_t j = 0; j < r; ++j) section_(i, j) = w(k + i, j);
  }

  void resolve_facets(const FacetSpec& spec) {
    // vertical facets: those not containing Q
    for (std::size_t j = 0; j < p_.num_facets(); ++j) {
      bool contains_q = true;
      for (std::size_t i = 0; i < q_gens_gp_.rows(); ++i)
        if (p_.normal_value(j, q_gens_gp_.row(i)) != 0) {
          contains_q = false;
          break;
        }
      if (!contains_q) f_min_.push_back(j);
    }
    switch (spec.kind) {
      case FacetSpec::Kind::Min:
        f_set_ = f_min_;
        break;
      case FacetSpec::Kind::Max:
        for (std::size_t j = 0; j < p_.num_facets(); ++j) f_set_.push_back(j);
        break;
      case FacetSpec::Kind::Explicit: {
        std::set<std::size_t> chosen;
        for (auto support : spec.supports) {
          std::sort(support.begin(), support.end());
          bool found = false;
          for (std::size_t j = 0; j < p_.num_facets(); ++j)
            if (p_.facet(j).gen_support == support) {
              chosen.insert(j);
              found = true;
              break;
            }
          if (!found)
            throw EtdError(EtdErrorCode::FacetSetTooSmall,
                           "facet descriptor does not match any facet");
        }
        f_set_.assign(chosen.begin(), chosen.end());
        break;
      }
    }
    for (std::size_t j : f_min_)
      if (std::find(f_set_.begin(), f_set_.end(), j) == f_set_.end())
        throw EtdError(EtdErrorCode::FacetSetTooSmall,
                       "facet set omits a vertical facet");
  }

  std::vector<EssentialDecomposition> decompositions(const IntVec& gp) const {
    std::vector<EssentialDecomposition> out;
    const LocalGrading& h = p_.default_grading();
    for (const IntVec& q : enumerate_q_monoid(h(gp))) {
      IntVec e = gp;
      for (std::size_t k = 0; k < gp_rank(); ++k) e[k] -= q[k];
      if (p_.contains_gp(e) && in_e(e)) out.push_back({e, q});
    }
    return out;
  }

  void certify() {
    for (const IntVec& p : p_.enumerate_up_to(config_.window)) {
      bool in = in_e(p);
      bool essential = face_is_essential(p_.face_generated_by(p));
      if (in && !essential)
        throw EtdError(EtdErrorCode::BasisNotFaceUnion,
                       "free basis E is not a union of faces");
      if (!in && essential)
        throw EtdError(EtdErrorCode::BasisNotFaceUnion,
                       "essential face contains a non-basis element");
      auto sols = decompositions(p);
      if (sols.size() != 1)
        throw EtdError(EtdErrorCode::NotFreeBasis,
                       sols.empty() ? "element admits no decomposition e + q"
                                    : "decomposition e + q is not unique");
    }
  }

  ToricMonoid p_;
  EtdConfig config_;
  IntMatrix q_gens_gp_;
  Sublattice q_group_;
  std::vector<std::size_t> f_set_;
  std::vector<std::size_t> f_min_;
  IntMatrix v_full_;      // V from the Smith normal form of the Q basis
  IntMatrix w_rows_;      // V^{-1}; first q_rank rows span Q^gp
  IntMatrix projection_;  // r x d
  IntMatrix section_;     // d x r
};

inline Etd Etd::product_with_nn(std::size_t extra) const {
  std::size_t n = p_.ambient_rank();
  IntMatrix gens(0, n + extra);
  for (std::size_t i = 0; i < p_.generators_ambient().rows(); ++i) {
    IntVec g = p_.generators_ambient().row(i);
    g.resize(n + extra, Int(0));
    gens.append_row(g);
  }
  for (std::size_t k = 0; k < extra; ++k) {
    IntVec g(n + extra, Int(0));
    g[n + k] = 1;
    gens.append_row(g);
  }
  ToricMonoid product = ToricMonoid::from_generators(n + extra, gens);
  IntMatrix q(0, n + extra);
  for (std::size_t i = 0; i < q_gens_gp_.rows(); ++i) {
    IntVec amb = p_.from_gp(q_gens_gp_.row(i));
    amb.resize(n + extra, Int(0));
    q.append_row(amb);
  }
  // facets F x N^r keep their old generator support plus all new generators
  std::vector<std::vector<std::size_t>> supports;
  std::size_t old_gens = p_.generators_ambient().rows();
  for (std::size_t j : f_set_) {
    std::vector<std::size_t> s = p_.facet(j).gen_support;
    for (std::size_t k = 0; k < extra; ++k) s.push_back(old_gens + k);
    supports.push_back(std::move(s));
  }
  return Etd(std::move(product), q, FacetSpec::explicit_list(supports), config_);
}

}  // namespace etd
