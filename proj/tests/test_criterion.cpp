#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cohiggs/criterion.hpp"
#include "test_support.hpp"

using namespace cohiggs;
using namespace cohiggs::testing;

namespace {

ReductiveGroup simple_group(Family f, int n) { return ReductiveGroup({CartanType(f, n)}, 0); }

}  // namespace

TEST_CASE("admits_stable_cohiggs threshold") {
  auto a1 = simple_group(Family::A, 1);
  CHECK(admits_stable_cohiggs(a1, single_factor_hn({2})));
  CHECK_FALSE(admits_stable_cohiggs(a1, single_factor_hn({3})));
  CHECK(admits_stable_cohiggs(simple_group(Family::A, 2), single_factor_hn({2, 2})));
  CHECK_FALSE(admits_stable_cohiggs(simple_group(Family::C, 2), single_factor_hn({0, 4})));
  for (const auto& t : simple_types_up_to(8)) {
    ReductiveGroup g({t}, 1);
    CHECK(admits_stable_cohiggs(g, HNType::zero(g)));
  }
  CHECK_THROWS_AS(admits_stable_cohiggs(a1, single_factor_hn({-1})), std::domain_error);
}

TEST_CASE("central degrees do not affect the criterion") {
  ReductiveGroup g = ReductiveGroup::parse("A2+z1");
  for (int c : {-7, 0, 3, 11}) {
    CHECK(admits_stable_cohiggs(g, HNType{{{1, 2}}, {c}}));
    CHECK_FALSE(admits_stable_cohiggs(g, HNType{{{3, 2}}, {c}}));
  }
}

TEST_CASE("semistable_obstruction") {
  auto v = semistable_obstruction(simple_group(Family::A, 2), single_factor_hn({1, 5}));
  REQUIRE(v.size() == 1);
  CHECK(v[0] == SimpleRootViolation{0, 1, 5});

  CHECK(semistable_obstruction(simple_group(Family::A, 2), single_factor_hn({0, 0})).empty());
  CHECK(semistable_obstruction(simple_group(Family::B, 2), single_factor_hn({3, 3})).size() == 2);

  ReductiveGroup g = ReductiveGroup::parse("A1xG2");
  auto w = semistable_obstruction(g, HNType{{{4}, {0, 3}}, {}});
  REQUIRE(w.size() == 2);
  CHECK(w[0] == SimpleRootViolation{0, 0, 4});
  CHECK(w[1] == SimpleRootViolation{1, 1, 3});
}

TEST_CASE("hom_vanishing_certificate examples") {
  auto a1 = simple_group(Family::A, 1);
  auto c = hom_vanishing_certificate(a1, single_factor_hn({3}), 0, 0);
  REQUIRE(c.size() == 1);
  CHECK(c[0].root == IntVector{-1});
  CHECK(c[0].degree == -3);
  CHECK(c[0].twisted_sections == 0);

  auto a2 = simple_group(Family::A, 2);
  auto d = hom_vanishing_certificate(a2, single_factor_hn({3, 0}), 0, 0);
  REQUIRE(d.size() == 2);
  CHECK(d[0].root == IntVector{-1, 0});
  CHECK(d[1].root == IntVector{-1, -1});
  CHECK(d[0].degree == -3);
  CHECK(d[1].degree == -3);

  auto c2 = simple_group(Family::C, 2);
  auto e = hom_vanishing_certificate(c2, single_factor_hn({0, 3}), 0, 1);
  // negative roots with alpha_2-coefficient <= -1: -a2, -(a1+a2), -(2a1+a2)
  REQUIRE(e.size() == 3);
  for (const auto& s : e) CHECK(s.degree <= -3);

  CHECK_THROWS_AS(hom_vanishing_certificate(a2, single_factor_hn({2, 0}), 0, 0), std::domain_error);
  CHECK_THROWS_AS(hom_vanishing_certificate(a2, single_factor_hn({3, 0}), 0, 2), std::out_of_range);
}

TEST_CASE("hom_vanishing_certificate bound is exhaustive for rank <= 4") {
  for (const auto& t : simple_types_up_to(4)) {
    CAPTURE(t.to_string());
    ReductiveGroup g({t}, 0);
    const auto& pos = g.root_systems()[0].positive_roots();
    for_each_box_vector(t.rank(), 5, [&](const IntVector& a) {
      const HNType m = single_factor_hn(a);
      for (int i = 0; i < t.rank(); ++i) {
        if (a[i] < 3) continue;
        const auto cert = hom_vanishing_certificate(g, m, 0, i);
        const auto expected = std::count_if(pos.begin(), pos.end(), [&](const IntVector& r) { return r[i] >= 1; });
        CHECK(static_cast<long>(cert.size()) == expected);
        for (const auto& s : cert) {
          CHECK(s.degree <= -3);
          CHECK(s.twisted_sections == 0);
        }
      }
    });
  }
}

TEST_CASE("adjoint_splitting") {
  CHECK(adjoint_splitting(simple_group(Family::A, 1), single_factor_hn({2})).degrees() == IntVector{2, 0, -2});
  CHECK(adjoint_splitting(simple_group(Family::A, 2), single_factor_hn({1, 1})).degrees() ==
        IntVector{2, 1, 1, 0, 0, -1, -1, -2});
  for (const auto& t : simple_types_up_to(4)) {
    ReductiveGroup g({t}, 2);
    const auto ad = adjoint_splitting(g, HNType::zero(g));
    CHECK(ad.rank() == g.dimension());
    CHECK(std::all_of(ad.degrees().begin(), ad.degrees().end(), [](int v) { return v == 0; }));
  }
}

TEST_CASE("criterion dichotomy, monotonicity and adjoint consistency") {
  for (const auto& t : simple_types_up_to(4)) {
    CAPTURE(t.to_string());
    ReductiveGroup g({t}, 1);
    for_each_box_vector(t.rank(), 5, [&](const IntVector& a) {
      const HNType m{{a}, {2}};
      const bool stable = admits_stable_cohiggs(g, m);
      CHECK(stable != !semistable_obstruction(g, m).empty());

      const auto ad = adjoint_splitting(g, m);
      CHECK(ad.total_degree() == 0);
      if (stable) CHECK(glr_admits_semistable(ad));

      if (stable)
        for (int i = 0; i < t.rank(); ++i)
          if (a[i] > 0) {
            HNType lower = m;
            --lower.simple_values[0][i];
            CHECK(admits_stable_cohiggs(g, lower));
          }

      const auto report = evaluate_criterion(g, m);
      CHECK(report.admits_stable == stable);
      CHECK(report.obstructed_semistable == !stable);
    });
  }
}
