#include <catch2/catch_amalgamated.hpp>

#include "etd/catalog.hpp"
#include "etd/etd_core.hpp"

using namespace etd;

namespace {

bool is_zero_vec(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("validate accepts the catalog data") {
  SECTION("N^2 over the diagonal: d = 1, E = union of the two axes") {
    Etd etd = catalog::a1();
    REQUIRE(etd.fiber_dim() == 1);
    auto essential = etd.essential_faces();
    REQUIRE(essential.size() == 3);  // {0} and the two axes
    for (const IntVec& e : etd.enumerate_e(Int(8))) {
      REQUIRE((e[0] == 0 || e[1] == 0));
    }
    // d = 1 makes the family log smooth: F = F_max here
    REQUIRE(etd.unused_facets().empty());
  }
  SECTION("counterexample ETD: Q = 0 and every facet contains Q") {
    Etd etd = catalog::bacha();
    REQUIRE(etd.fiber_dim() == 2);
    REQUIRE(etd.vertical_facets().empty());
    REQUIRE(etd.facet_set().empty());
    REQUIRE(etd.unused_facets().size() == 2);
  }
  SECTION("free-basis violation: Q = N(1,2) in N^2") {
    ToricMonoid p = ToricMonoid::from_generators(
        2, IntMatrix{{Int(1), Int(0)}, {Int(0), Int(1)}});
    IntMatrix q(0, 2);
    q.append_row({Int(1), Int(2)});
    EtdConfig cfg;
    cfg.window = 6;
    try {
      Etd etd(std::move(p), q, FacetSpec::min(), cfg);
      FAIL("expected validation to reject Q = N(1,2)");
    } catch (const EtdError& e) {
      bool expected = e.code() == EtdErrorCode::NotFreeBasis ||
                      e.code() == EtdErrorCode::BasisNotFaceUnion;
      REQUIRE(expected);
    }
  }
  SECTION("facet set must contain the vertical facets") {
    ToricMonoid p = ToricMonoid::from_generators(
        2, IntMatrix{{Int(1), Int(0)}, {Int(0), Int(1)}});
    IntMatrix q(0, 2);
    q.append_row({Int(1), Int(1)});
    REQUIRE_THROWS_MATCHES(
        Etd(std::move(p), q, FacetSpec::explicit_list({{0}})), EtdError,
        Catch::Matchers::Predicate<EtdError>([](const EtdError& e) {
          return e.code() == EtdErrorCode::FacetSetTooSmall;
        }));
  }
  SECTION("Q generators must lie in P") {
    ToricMonoid p = ToricMonoid::from_generators(
        2, IntMatrix{{Int(1), Int(0)}, {Int(0), Int(1)}});
    IntMatrix q(0, 2);
    q.append_row({Int(-1), Int(0)});
    REQUIRE_THROWS_MATCHES(
        Etd(std::move(p), q, FacetSpec::min()), EtdError,
        Catch::Matchers::Predicate<EtdError>([](const EtdError& e) {
          return e.code() == EtdErrorCode::NotInjective;
        }));
  }
}

TEST_CASE("decomposition p = e + q") {
  SECTION("diagonal ETD") {
    Etd etd = catalog::a1();
    auto d = etd.decompose({Int(3), Int(1)});
    REQUIRE(d.e == IntVec{Int(2), Int(0)});
    REQUIRE(d.q == IntVec{Int(1), Int(1)});
    auto z = etd.decompose({Int(0), Int(0)});
    REQUIRE(is_zero_vec(z.e));
    REQUIRE(is_zero_vec(z.q));
  }
  SECTION("xy=tw ETD") {
    Etd etd = catalog::xytw();
    auto d = etd.decompose({Int(2), Int(1), Int(1)});
    REQUIRE(d.e == IntVec{Int(1), Int(1), Int(0)});
    REQUIRE(d.q == IntVec{Int(1), Int(0), Int(1)});
  }
  SECTION("non-elements are rejected") {
    Etd etd = catalog::a1();
    REQUIRE_THROWS_AS(etd.decompose({Int(-1), Int(0)}), EtdError);
  }
  SECTION("uniqueness and recomposition on the window") {
    for (const Etd& etd : {catalog::a1(), catalog::xytw(), catalog::bacha()}) {
      for (const IntVec& p : etd.enumerate_p(Int(8))) {
        auto d = etd.decompose(p);
        REQUIRE(etd.in_e(d.e));
        IntVec sum = d.e;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += d.q[k];
        REQUIRE(sum == p);
      }
      // exhaustive search over enumerated pairs finds each window element once
      auto es = etd.enumerate_e(Int(8));
      auto qs = etd.enumerate_q_monoid(Int(8));
      std::map<IntVec, std::size_t> hits;
      for (const IntVec& e : es)
        for (const IntVec& q : qs) {
          IntVec s = e;
          for (std::size_t k = 0; k < s.size(); ++k) s[k] += q[k];
          ++hits[s];
        }
      for (const IntVec& p : etd.enumerate_p(Int(8))) REQUIRE(hits[p] == 1);
    }
  }
}

TEST_CASE("essential faces") {
  SECTION("diagonal ETD: ranks 0,1,1") {
    Etd etd = catalog::a1();
    auto ess = etd.essential_faces();
    std::vector<std::size_t> ranks;
    for (const Face* f : ess) ranks.push_back(f->rank);
    std::sort(ranks.begin(), ranks.end());
    REQUIRE(ranks == std::vector<std::size_t>{0, 1, 1});
    // rank d-1 = 0: only the origin indexes the cover
    auto cover = etd.cover_faces();
    REQUIRE(cover.size() == 1);
    REQUIRE(cover[0]->rank == 0);
  }
  SECTION("Q = 0 makes every face essential") {
    Etd etd = catalog::bacha();
    REQUIRE(etd.essential_faces().size() == etd.monoid().faces().size());
  }
  SECTION("xy=tw: E is the union of the facets a=0 and c=0") {
    Etd etd = catalog::xytw();
    auto ess = etd.essential_faces();
    REQUIRE(ess.size() == 6);  // {0}, three rays, two facets
    std::size_t rays = 0, facets = 0;
    for (const Face* f : ess) {
      if (f->rank == 1) ++rays;
      if (f->rank == 2) ++facets;
    }
    REQUIRE(rays == 3);
    REQUIRE(facets == 2);
    REQUIRE(etd.cover_faces().size() == 3);
    // E-membership matches the union of the reported essential faces
    for (const IntVec& p : etd.enumerate_p(Int(8))) {
      bool in_union = false;
      for (const Face* f : ess)
        if (etd.monoid().face_contains(*f, p)) in_union = true;
      REQUIRE(in_union == etd.in_e(p));
    }
  }
}

TEST_CASE("bad faces and the cover of U_P") {
  SECTION("counterexample ETD: B = {0}, cover by the two facet charts") {
    Etd etd = catalog::bacha();
    auto bad = etd.bad_faces();
    REQUIRE(bad.size() == 1);
    REQUIRE(bad[0]->rank == 0);
    REQUIRE(etd.cover_faces().size() == 2);
  }
  SECTION("xy=tw: B = {0} and the ray through Q") {
    Etd etd = catalog::xytw();
    auto bad = etd.bad_faces();
    REQUIRE(bad.size() == 2);
    std::vector<std::size_t> ranks;
    for (const Face* f : bad) ranks.push_back(f->rank);
    std::sort(ranks.begin(), ranks.end());
    REQUIRE(ranks == std::vector<std::size_t>{0, 1});
    // the rank-1 bad face is the ray generated by the Q generator
    for (const Face* f : bad)
      if (f->rank == 1)
        REQUIRE(f->group == Sublattice::span_of({Int(1), Int(0), Int(1)}));
  }
  SECTION("d = 1 has no bad faces") {
    REQUIRE(catalog::a1().bad_faces().empty());
  }
  SECTION("orbit dichotomy: every face is bad-covered or chart-covered") {
    for (const Etd& etd : {catalog::a1(), catalog::xytw(), catalog::bacha(),
                           catalog::danilov_pair()}) {
      auto bad = etd.bad_faces();
      auto cover = etd.cover_faces();
      for (const Face& g : etd.monoid().faces()) {
        bool in_bad = false;
        for (const Face* b : bad)
          if (ToricMonoid::face_subset(g, *b)) in_bad = true;
        bool in_chart = false;
        for (const Face* f : cover)
          if (ToricMonoid::face_subset(*f, g)) in_chart = true;
        REQUIRE(in_bad != in_chart);
      }
      // no cover face is contained in a bad face
      for (const Face* f : cover)
        for (const Face* b : bad) REQUIRE_FALSE(ToricMonoid::face_subset(*f, *b));
    }
  }
}

TEST_CASE("facet classification") {
  SECTION("xy=tw with F = min") {
    Etd etd = catalog::xytw();
    REQUIRE(etd.vertical_facets().size() == 2);
    REQUIRE(etd.horizontal_facets().empty());
    REQUIRE(etd.unused_facets().size() == 2);
    // vertical facets are {a=0} and {c=0}: neither contains (1,0,1)
    for (std::size_t j : etd.vertical_facets())
      REQUIRE(etd.monoid().normal_value(j, {Int(1), Int(0), Int(1)}) > 0);
    for (std::size_t j : etd.unused_facets())
      REQUIRE(etd.monoid().normal_value(j, {Int(1), Int(0), Int(1)}) == 0);
  }
  SECTION("F = max leaves nothing unused") {
    ToricMonoid p = ToricMonoid::from_generators(
        2, IntMatrix{{Int(1), Int(0)}, {Int(0), Int(1)}});
    Etd etd(std::move(p), IntMatrix(0, 2), FacetSpec::max());
    REQUIRE(etd.unused_facets().empty());
  }
  SECTION("counterexample ETD: everything unused") {
    Etd etd = catalog::bacha();
    REQUIRE(etd.vertical_facets().empty());
    REQUIRE(etd.horizontal_facets().empty());
    REQUIRE(etd.unused_facets().size() == 2);
  }
}

TEST_CASE("splitting and phi") {
  for (const Etd& etd : {catalog::a1(), catalog::xytw()}) {
    std::size_t r = etd.gp_rank();
    for (const IntVec& p : etd.enumerate_p(Int(6))) {
      IntVec proj = etd.project(p);
      IntVec sig = etd.sigma_q(p);
      // p - sigma(p) is in the chosen complement, where pi has a section
      IntVec diff = p;
      for (std::size_t k = 0; k < r; ++k) diff[k] -= sig[k];
      IntVec back = row_times_matrix(etd.project(diff), etd.section());
      REQUIRE(back == diff);
      REQUIRE(etd.project(sig) == IntVec(proj.size(), Int(0)));
      // representation via phi: sigma(p) - phi(p) lies in Q
      IntVec qt = sig;
      IntVec ph = etd.phi(p);
      for (std::size_t k = 0; k < r; ++k) qt[k] -= ph[k];
      bool in_q = false;
      for (const IntVec& q : etd.enumerate_q_monoid(Int(12)))
        if (q == qt) in_q = true;
      REQUIRE(in_q);
    }
  }
}

TEST_CASE("product with N^r is again an ETD") {
  Etd etd = catalog::a1();
  Etd prod = etd.product_with_nn(1);
  REQUIRE(prod.fiber_dim() == etd.fiber_dim() + 1);
  REQUIRE(prod.monoid().num_facets() == 3);
  // vertical facets stay vertical; the new coordinate facet contains Q
  REQUIRE(prod.vertical_facets().size() == 2);
}
