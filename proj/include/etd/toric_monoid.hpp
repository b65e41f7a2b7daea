#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "etd/errors.hpp"
#include "etd/matrix.hpp"
#include "etd/numeric.hpp"
#include "etd/snf.hpp"
#include "etd/sublattice.hpp"
#include "etd/wedge.hpp"

namespace etd {

class ToricMonoid;

// Face of a sharp toric monoid, determined by the set of generators lying on
// it. Coordinates are those of P^gp.
struct Face {
  std::vector<std::size_t> gen_support;  // indices of generators on the face
  std::vector<std::size_t> vanishing;    // facet normals vanishing on the face
  std::size_t rank = 0;
  Sublattice group;      // F^gp inside Z^r
  IntVec interior_point; // sum of the supporting generators

  Face() : group(0) {}

  friend bool operator==(const Face& a, const Face& b) {
    return a.gen_support == b.gen_support;
  }
};

// Strictly positive grading h : P -> N with h^{-1}(0) = {0}; the finite
// truncation device for all windowed computations.
class LocalGrading {
 public:
  LocalGrading() = default;
  explicit LocalGrading(IntVec dual) : dual_(std::move(dual)) {}

  Int operator()(const IntVec& gp_coords) const {
    Int acc = 0;
    for (std::size_t i = 0; i < dual_.size(); ++i) acc += dual_[i] * gp_coords[i];
    return acc;
  }
  const IntVec& dual() const { return dual_; }

 private:
  IntVec dual_;
};

// Sharp toric monoid P in Z^n presented by generators. All derived data
// (facet normals, faces, gradings) lives in coordinates of P^gp = Z^r.
struct MonoidOptions {
  Int saturation_check_bound = 20;  // h-degree window for certification
};

class ToricMonoid {
 public:
  using Options = MonoidOptions;

  static ToricMonoid from_generators(std::size_t ambient_rank,
                                     const IntMatrix& gens,
                                     const Options& opts = Options()) {
    return ToricMonoid(ambient_rank, gens, opts);
  }

  std::size_t ambient_rank() const { return n_; }
  std::size_t gp_rank() const { return r_; }
  const IntMatrix& gp_basis() const { return gp_basis_; }
  const IntMatrix& generators_gp() const { return gens_gp_; }
  const IntMatrix& generators_ambient() const { return gens_ambient_; }
  const IntMatrix& facet_normals() const { return normals_; }
  std::size_t num_facets() const { return normals_.rows(); }

  std::optional<IntVec> to_gp(const IntVec& ambient) const {
    return solve_left(gp_basis_, ambient);
  }
  IntVec from_gp(const IntVec& coords) const {
    return row_times_matrix(coords, gp_basis_);
  }

  Int normal_value(std::size_t j, const IntVec& gp) const {
    Int acc = 0;
    for (std::size_t k = 0; k < r_; ++k) acc += normals_(j, k) * gp[k];
    return acc;
  }

  // cone membership in gp coordinates; equals monoid membership because the
  // monoid is certified saturated
  bool contains_gp(const IntVec& gp) const {
    for (std::size_t j = 0; j < normals_.rows(); ++j)
      if (normal_value(j, gp) < 0) return false;
    return true;
  }
  bool contains_ambient(const IntVec& v) const {
    auto gp = to_gp(v);
    return gp && contains_gp(*gp);
  }

  const LocalGrading& default_grading() const { return grading_; }

  // grading from a dual vector in gp coordinates, checked strictly positive
  LocalGrading grading_from_dual(const IntVec& dual) const {
    LocalGrading h(dual);
    for (std::size_t i = 0; i < gens_gp_.rows(); ++i)
      if (h(gens_gp_.row(i)) < 1)
        throw MonoidError(MonoidErrorCode::DegenerateInput,
                          "grading not strictly positive on the monoid");
    return h;
  }
  // grading from an ambient linear form
  LocalGrading grading_from_ambient_form(const IntVec& form) const {
    IntVec dual(r_, Int(0));
    for (std::size_t k = 0; k < r_; ++k)
      for (std::size_t j = 0; j < n_; ++j) dual[k] += form[j] * gp_basis_(k, j);
    return grading_from_dual(dual);
  }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& full_face() const { return faces_[full_face_index_]; }
  const Face& zero_face() const { return faces_[zero_face_index_]; }
  // face of rank r-1 cut out by normal j
  const Face& facet(std::size_t j) const { return faces_[facet_face_index_[j]]; }
  std::size_t facet_face_id(std::size_t j) const { return facet_face_index_[j]; }

  bool face_contains(const Face& f, const IntVec& gp) const {
    if (!contains_gp(gp)) return false;
    for (std::size_t j : f.vanishing)
      if (normal_value(j, gp) != 0) return false;
    return true;
  }
  static bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.gen_support.begin(), b.gen_support.end(),
                         a.gen_support.begin(), a.gen_support.end());
  }

  // smallest face containing p
  const Face& face_generated_by(const IntVec& gp) const {
    if (!contains_gp(gp))
      throw MonoidError(MonoidErrorCode::DegenerateInput,
                        "face_generated_by: element not in monoid");
    std::vector<std::size_t> vanish;
    for (std::size_t j = 0; j < normals_.rows(); ++j)
      if (normal_value(j, gp) == 0) vanish.push_back(j);
    auto it = face_by_vanishing_.find(vanish);
    if (it == face_by_vanishing_.end())
      throw MonoidError(MonoidErrorCode::DegenerateInput,
                        "face_generated_by: no face for vanishing set");
    return faces_[it->second];
  }

  // intersection of two faces, always a face
  const Face& meet(const Face& a, const Face& b) const {
    std::set<std::size_t> vanish(a.vanishing.begin(), a.vanishing.end());
    vanish.insert(b.vanishing.begin(), b.vanishing.end());
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < gens_gp_.rows(); ++i) {
      bool on = true;
      for (std::size_t j : vanish)
        if (normal_value(j, gens_gp_.row(i)) != 0) {
          on = false;
          break;
        }
      if (on) support.push_back(i);
    }
    auto it = face_by_support_.find(support);
    return faces_[it->second];
  }

  // all monoid elements with h(p) <= bound, sorted by (h, lex)
  std::vector<IntVec> enumerate_up_to(const LocalGrading& h, const Int& bound) const {
    std::set<IntVec> seen;
    std::vector<IntVec> frontier{IntVec(r_, Int(0))};
    if (bound >= 0) seen.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<IntVec> next;
      for (const IntVec& p : frontier)
        for (std::size_t i = 0; i < gens_gp_.rows(); ++i) {
          IntVec q = p;
          for (std::size_t k = 0; k < r_; ++k) q[k] += gens_gp_(i, k);
          if (h(q) > bound || seen.count(q)) continue;
          seen.insert(q);
          next.push_back(q);
        }
      frontier = std::move(next);
    }
    std::vector<IntVec> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const IntVec& a, const IntVec& b) {
      Int ha = h(a), hb = h(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    return out;
  }
  std::vector<IntVec> enumerate_up_to(const Int& bound) const {
    return enumerate_up_to(grading_, bound);
  }

  // localization P_F = P + (-F) together with the splitting P_F = F^gp x PbarF
  struct Localization;
  Localization localize(const Face& f) const;

  // projection Z^r -> Z^{r-k} with kernel the (saturated) given subgroup
  IntMatrix quotient_projection(const Sublattice& subgroup) const {
    SnfResult snf = smith_normal_form(subgroup.basis());
    std::size_t k = subgroup.rank();
    IntMatrix proj(r_, r_ - k);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_ - k; ++j) proj(i, j) = snf.v(i, k + j);
    return proj;
  }

 private:
  ToricMonoid(std::size_t ambient_rank, const IntMatrix& raw_gens, const Options& opts)
      : n_(ambient_rank), opts_(opts), gens_ambient_(0, ambient_rank),
        gens_gp_(0, 0), gp_basis_(0, ambient_rank), normals_(0, 0) {
    // deduplicate and drop zero generators
    std::set<IntVec> seen;
    IntMatrix gens(0, ambient_rank);
    for (std::size_t i = 0; i < raw_gens.rows(); ++i) {
      IntVec g = raw_gens.row(i);
      if (g.size() != ambient_rank)
        throw MonoidError(MonoidErrorCode::DegenerateInput,
                          "generator length mismatch");
      bool zero = true;
      for (const Int& x : g)
        if (x != 0) zero = false;
      if (zero || seen.count(g)) continue;
      seen.insert(g);
      gens.append_row(g);
    }
    gens_ambient_ = gens;

    Sublattice span = Sublattice::from_generators(n_, gens_ambient_);
    gp_basis_ = span.basis();
    r_ = span.rank();
    gens_gp_ = IntMatrix(0, r_);
    for (std::size_t i = 0; i < gens_ambient_.rows(); ++i) {
      auto c = span.coordinates(gens_ambient_.row(i));
      gens_gp_.append_row(*c);
    }

    compute_normals();
    if (rank_over_q(normals_) != r_)
      throw MonoidError(MonoidErrorCode::NotSharp,
                        "monoid has a nonzero unit (cone not strongly convex)");
    grading_ = LocalGrading([&] {
      IntVec h(r_, Int(0));
      for (std::size_t j = 0; j < normals_.rows(); ++j)
        for (std::size_t k = 0; k < r_; ++k) h[k] += normals_(j, k);
      return h;
    }());
    compute_faces();
    check_saturation();
  }

  void compute_normals() {
    normals_ = IntMatrix(0, r_);
    if (r_ == 0) return;
    std::set<IntVec> found;
    auto consider = [&](const IntVec& u) {
      bool nonneg = true, nonpos = true;
      for (std::size_t i = 0; i < gens_gp_.rows(); ++i) {
        Int v = 0;
        for (std::size_t k = 0; k < r_; ++k) v += u[k] * gens_gp_(i, k);
        if (v < 0) nonneg = false;
        if (v > 0) nonpos = false;
      }
      if (!nonneg && !nonpos) return;
      IntVec oriented = u;
      if (!nonneg)
        for (auto& x : oriented) x = -x;
      if (found.count(oriented)) return;
      found.insert(oriented);
      normals_.append_row(oriented);
    };
    for (const auto& sel : subsets_of_size(gens_gp_.rows(), r_ - 1)) {
      IntMatrix sub(0, r_);
      for (std::size_t i : sel) sub.append_row(gens_gp_.row(i));
      IntMatrix ker = kernel_lattice(sub.transpose());
      if (ker.rows() != 1) continue;
      consider(ker.row(0));
    }
    // canonical order, independent of the generator presentation
    std::vector<IntVec> rows;
    for (std::size_t j = 0; j < normals_.rows(); ++j) rows.push_back(normals_.row(j));
    std::sort(rows.begin(), rows.end());
    normals_ = IntMatrix(0, r_);
    for (const IntVec& u : rows) normals_.append_row(u);
  }

  void compute_faces() {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> support_to_vanish;
    std::size_t f = normals_.rows();
    for (std::size_t mask = 0; mask < (std::size_t(1) << f); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t j = 0; j < f; ++j)
        if (mask & (std::size_t(1) << j)) subset.push_back(j);
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < gens_gp_.rows(); ++i) {
        bool on = true;
        for (std::size_t j : subset)
          if (normal_value(j, gens_gp_.row(i)) != 0) {
            on = false;
            break;
          }
        if (on) support.push_back(i);
      }
      // record the maximal vanishing set per support
      std::vector<std::size_t> vanish;
      for (std::size_t j = 0; j < f; ++j) {
        bool all = true;
        for (std::size_t i : support)
          if (normal_value(j, gens_gp_.row(i)) != 0) {
            all = false;
            break;
          }
        if (all) vanish.push_back(j);
      }
      support_to_vanish[support] = vanish;
    }
    for (auto& [support, vanish] : support_to_vanish) {
      Face face;
      face.gen_support = support;
      face.vanishing = vanish;
      IntMatrix rows(0, r_);
      face.interior_point = IntVec(r_, Int(0));
      for (std::size_t i : support) {
        rows.append_row(gens_gp_.row(i));
        for (std::size_t k = 0; k < r_; ++k)
          face.interior_point[k] += gens_gp_(i, k);
      }
      face.group = Sublattice::from_generators(r_, rows);
      face.rank = face.group.rank();
      faces_.push_back(std::move(face));
    }
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
      if (a.rank != b.rank) return a.rank < b.rank;
      return a.gen_support < b.gen_support;
    });
    facet_face_index_.assign(normals_.rows(), 0);
    for (std::size_t id = 0; id < faces_.size(); ++id) {
      const Face& face = faces_[id];
      face_by_support_[face.gen_support] = id;
      face_by_vanishing_[face.vanishing] = id;
      if (face.rank == r_) full_face_index_ = id;
      if (face.rank == 0) zero_face_index_ = id;
      if (r_ >= 1 && face.vanishing.size() == 1 && face.rank == r_ - 1)
        facet_face_index_[face.vanishing[0]] = id;
    }
  }

  void check_saturation() {
    if (r_ == 0) return;
    const Int& bound = opts_.saturation_check_bound;
    // box scan over {x in cone : h(x) <= bound} via the extreme rays
    std::vector<IntVec> rays;
    for (const Face& f : faces_)
      if (f.rank == 1) {
        // primitive direction of the ray
        rays.push_back(f.group.basis().row(0));
        // orient into the cone
        if (!contains_gp(rays.back()))
          for (auto& x : rays.back()) x = -x;
      }
    std::vector<Rat> lo(r_, Rat(0)), hi(r_, Rat(0));
    for (const IntVec& w : rays) {
      Int hw = grading_(w);
      for (std::size_t k = 0; k < r_; ++k) {
        Rat coord = Rat(bound * w[k]) / Rat(hw);
        lo[k] = std::min(lo[k], coord);
        hi[k] = std::max(hi[k], coord);
      }
    }
    IntVec lo_i(r_), hi_i(r_);
    for (std::size_t k = 0; k < r_; ++k) {
      lo_i[k] = Int(numerator(lo[k])) / Int(denominator(lo[k])) - 1;
      hi_i[k] = Int(numerator(hi[k])) / Int(denominator(hi[k])) + 1;
    }
    std::vector<IntVec> cone_points;
    IntVec cur = lo_i;
    while (true) {
      if (contains_gp(cur)) {
        Int h = grading_(cur);
        if (h >= 0 && h <= bound) cone_points.push_back(cur);
      }
      std::size_t k = 0;
      while (k < r_ && cur[k] == hi_i[k]) {
        cur[k] = lo_i[k];
        ++k;
      }
      if (k == r_) break;
      ++cur[k];
    }
    std::sort(cone_points.begin(), cone_points.end(),
              [&](const IntVec& a, const IntVec& b) {
                Int ha = grading_(a), hb = grading_(b);
                if (ha != hb) return ha < hb;
                return a < b;
              });
    std::set<IntVec> generated;
    for (const IntVec& x : cone_points) {
      bool ok = grading_(x) == 0;
      for (std::size_t i = 0; i < gens_gp_.rows() && !ok; ++i) {
        IntVec y = x;
        for (std::size_t k = 0; k < r_; ++k) y[k] -= gens_gp_(i, k);
        ok = generated.count(y) > 0;
      }
      if (!ok)
        throw MonoidError(
            MonoidErrorCode::NotSaturatedMonoid,
            "cone lattice point below the check bound is not generated");
      generated.insert(x);
    }
  }

  std::size_t n_ = 0;
  std::size_t r_ = 0;
  Options opts_;
  IntMatrix gens_ambient_;
  IntMatrix gens_gp_;
  IntMatrix gp_basis_;
  IntMatrix normals_;
  LocalGrading grading_;
  std::vector<Face> faces_;
  std::map<std::vector<std::size_t>, std::size_t> face_by_support_;
  std::map<std::vector<std::size_t>, std::size_t> face_by_vanishing_;
  std::size_t full_face_index_ = 0;
  std::size_t zero_face_index_ = 0;
  std::vector<std::size_t> facet_face_index_;
};

struct ToricMonoid::Localization {
  IntMatrix generators;   // generators of P_F in gp coordinates of P
  Sublattice face_group;  // F^gp
  IntMatrix projection;   // r x (r - rank F), quotient by F^gp
  ToricMonoid quotient;   // sharp part PbarF, ambient rank r - rank F
};

inline ToricMonoid::Localization ToricMonoid::localize(const Face& f) const {
  IntMatrix gens(0, r_);
  for (std::size_t i = 0; i < gens_gp_.rows(); ++i) gens.append_row(gens_gp_.row(i));
  for (std::size_t i : f.gen_support) {
    IntVec neg = gens_gp_.row(i);
    for (auto& x : neg) x = -x;
    gens.append_row(neg);
  }
  IntMatrix proj = quotient_projection(f.group);
  IntMatrix qgens(0, proj.cols());
  for (std::size_t i = 0; i < gens_gp_.rows(); ++i)
    qgens.append_row(row_times_matrix(gens_gp_.row(i), proj));
  ToricMonoid quotient = ToricMonoid::from_generators(
      proj.cols(), qgens, Options{opts_.saturation_check_bound});
  return Localization{gens, f.group, proj, std::move(quotient)};
}

}  // namespace etd
