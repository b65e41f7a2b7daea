#include <catch2/catch_amalgamated.hpp>

#include "etd/toric_monoid.hpp"

using namespace etd;

namespace {

ToricMonoid nn2() {
  return ToricMonoid::from_generators(2, IntMatrix{{Int(1), Int(0)}, {Int(0), Int(1)}});
}

ToricMonoid bacha_monoid() {
  return ToricMonoid::from_generators(
      2, IntMatrix{{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(1), Int(2)}});
}

ToricMonoid xytw_monoid() {
  return ToricMonoid::from_generators(
      3, IntMatrix{{Int(1), Int(0), Int(0)},
                   {Int(0), Int(1), Int(1)},
                   {Int(1), Int(0), Int(1)},
                   {Int(0), Int(1), Int(0)}});
}

}  // namespace

TEST_CASE("from_generators computes facet normals") {
  SECTION("N^2") {
    ToricMonoid p = nn2();
    REQUIRE(p.gp_rank() == 2);
    REQUIRE(p.num_facets() == 2);
    REQUIRE(p.facet_normals() == IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}});
  }
  SECTION("the two-facet monoid of the base-change counterexample") {
    ToricMonoid p = bacha_monoid();
    REQUIRE(p.num_facets() == 2);
    // facets are the rays through (1,0) and (1,2)
    const Face& f0 = p.facet(0);
    const Face& f1 = p.facet(1);
    std::vector<std::vector<std::size_t>> supports{f0.gen_support, f1.gen_support};
    std::sort(supports.begin(), supports.end());
    REQUIRE(supports ==
            std::vector<std::vector<std::size_t>>{{0}, {2}});
  }
  SECTION("a line is not sharp") {
    REQUIRE_THROWS_MATCHES(
        ToricMonoid::from_generators(2, IntMatrix{{Int(1), Int(0)}, {Int(-1), Int(0)}}),
        MonoidError, Catch::Matchers::Predicate<MonoidError>([](const MonoidError& e) {
          return e.code() == MonoidErrorCode::NotSharp;
        }));
  }
  SECTION("a non-saturated presentation is rejected") {
    // 2N + 3N inside N misses the point 1
    REQUIRE_THROWS_MATCHES(
        ToricMonoid::from_generators(1, IntMatrix{{Int(2)}, {Int(3)}}),
        MonoidError, Catch::Matchers::Predicate<MonoidError>([](const MonoidError& e) {
          return e.code() == MonoidErrorCode::NotSaturatedMonoid;
        }));
  }
}

TEST_CASE("face lattice enumeration") {
  SECTION("N^2 has 4 faces") {
    REQUIRE(nn2().faces().size() == 4);
  }
  SECTION("counterexample monoid has 4 faces") {
    REQUIRE(bacha_monoid().faces().size() == 4);
  }
  SECTION("xy=tw cone has 10 faces") {
    ToricMonoid p = xytw_monoid();
    REQUIRE(p.faces().size() == 10);
    std::size_t by_rank[4] = {0, 0, 0, 0};
    for (const Face& f : p.faces()) ++by_rank[f.rank];
    REQUIRE(by_rank[0] == 1);
    REQUIRE(by_rank[1] == 4);
    REQUIRE(by_rank[2] == 4);
    REQUIRE(by_rank[3] == 1);
  }
}

TEST_CASE("face generated by an element") {
  SECTION("N^2") {
    ToricMonoid p = nn2();
    const Face& f = p.face_generated_by({Int(2), Int(0)});
    REQUIRE(f.rank == 1);
    REQUIRE(f.gen_support == std::vector<std::size_t>{0});
    REQUIRE(p.face_generated_by({Int(1), Int(1)}) == p.full_face());
  }
  SECTION("xy=tw, p=(1,0,1) generates the ray through it") {
    ToricMonoid p = xytw_monoid();
    const Face& f = p.face_generated_by({Int(1), Int(0), Int(1)});
    REQUIRE(f.rank == 1);
    REQUIRE(f.group == Sublattice::span_of({Int(1), Int(0), Int(1)}));
  }
  SECTION("scaling invariance <k p> = <p>") {
    ToricMonoid p = xytw_monoid();
    for (const IntVec& e : p.enumerate_up_to(Int(6))) {
      IntVec e3 = e;
      for (auto& x : e3) x *= 3;
      REQUIRE(p.face_generated_by(e) == p.face_generated_by(e3));
    }
  }
  SECTION("non-elements are rejected") {
    REQUIRE_THROWS_AS(nn2().face_generated_by({Int(-1), Int(0)}), MonoidError);
  }
}

TEST_CASE("enumeration up to a grading bound") {
  SECTION("N^2, coordinate sum") {
    ToricMonoid p = nn2();
    REQUIRE(p.enumerate_up_to(Int(2)).size() == 6);
    auto only_zero = p.enumerate_up_to(Int(0));
    REQUIRE(only_zero.size() == 1);
    REQUIRE(only_zero[0] == IntVec{Int(0), Int(0)});
  }
  SECTION("counterexample monoid, h = first coordinate, N = 2") {
    ToricMonoid p = bacha_monoid();
    LocalGrading h = p.grading_from_ambient_form({Int(1), Int(0)});
    auto pts = p.enumerate_up_to(h, Int(2));
    REQUIRE(pts.size() == 9);
  }
}

TEST_CASE("localization at a face") {
  SECTION("N^2 at the first axis gives Z x N") {
    ToricMonoid p = nn2();
    const Face& axis = p.face_generated_by({Int(1), Int(0)});
    auto loc = p.localize(axis);
    REQUIRE(loc.face_group.rank() == 1);
    REQUIRE(loc.quotient.gp_rank() == 1);
    REQUIRE(loc.quotient.num_facets() == 1);  // the sharp part is N
  }
  SECTION("localizing at the full monoid leaves only the group") {
    ToricMonoid p = nn2();
    auto loc = p.localize(p.full_face());
    REQUIRE(loc.quotient.gp_rank() == 0);
    // generators of P_F span the group: both axis directions are present
    Sublattice span = Sublattice::from_generators(2, loc.generators);
    REQUIRE(span == Sublattice::full(2));
  }
  SECTION("xy=tw at the ray <(1,0,0)> has a 2-dim sharp part") {
    ToricMonoid p = xytw_monoid();
    const Face& ray = p.face_generated_by({Int(1), Int(0), Int(0)});
    auto loc = p.localize(ray);
    REQUIRE(loc.quotient.gp_rank() == 2);
  }
}

TEST_CASE("face lattice invariants on the catalog monoids") {
  for (const ToricMonoid& p : {nn2(), bacha_monoid(), xytw_monoid()}) {
    auto window = p.enumerate_up_to(Int(6));

    SECTION("meet closure and the span characterization") {
      for (const Face& a : p.faces())
        for (const Face& b : p.faces()) {
          const Face& m = p.meet(a, b);
          REQUIRE(ToricMonoid::face_subset(m, a));
          REQUIRE(ToricMonoid::face_subset(m, b));
        }
      for (const Face& f : p.faces()) {
        Sublattice sat = f.group.saturation();
        for (const IntVec& q : window)
          REQUIRE(p.face_contains(f, q) == sat.contains(q));
      }
    }

    SECTION("membership agrees with facet normals on the window") {
      for (const IntVec& q : window) REQUIRE(p.contains_gp(q));
    }

    SECTION("face of a sum is the join of the faces") {
      for (std::size_t i = 0; i < window.size(); i += 3)
        for (std::size_t j = 0; j < window.size(); j += 4) {
          IntVec sum = window[i];
          for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += window[j][k];
          const Face& fs = p.face_generated_by(sum);
          // smallest face containing both factors
          const Face* join = nullptr;
          for (const Face& f : p.faces()) {
            if (!p.face_contains(f, window[i]) || !p.face_contains(f, window[j]))
              continue;
            if (!join || ToricMonoid::face_subset(f, *join)) join = &f;
          }
          REQUIRE(join != nullptr);
          REQUIRE(fs == *join);
        }
    }

    SECTION("default grading is strictly positive away from zero") {
      const LocalGrading& h = p.default_grading();
      for (const IntVec& q : window) {
        bool zero = true;
        for (const Int& x : q)
          if (x != 0) zero = false;
        if (!zero) REQUIRE(h(q) >= 1);
      }
    }
  }
}

TEST_CASE("interior points generate their faces") {
  ToricMonoid p = xytw_monoid();
  for (const Face& f : p.faces()) {
    if (f.rank == 0) continue;
    REQUIRE(p.face_generated_by(f.interior_point) == f);
  }
}
