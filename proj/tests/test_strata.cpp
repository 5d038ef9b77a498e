#include <doctest.h>

#include <set>
#include <stdexcept>

#include "cohiggs/glr.hpp"
#include "cohiggs/p1.hpp"
#include "cohiggs/strata.hpp"
#include "test_support.hpp"

using namespace cohiggs;
using namespace cohiggs::testing;

namespace {

ReductiveGroup a1() { return ReductiveGroup({CartanType(Family::A, 1)}, 0); }

}  // namespace

TEST_CASE("dim_cohiggs_space examples") {
  CHECK(dim_cohiggs_space(a1(), single_factor_hn({0})) == 9);
  CHECK(dim_cohiggs_space(a1(), single_factor_hn({2})) == 9);
  CHECK(dim_cohiggs_space(a1(), single_factor_hn({4})) == 10);
  CHECK_THROWS_AS(dim_cohiggs_space(a1(), single_factor_hn({-2})), std::domain_error);
}

TEST_CASE("dim_automorphisms examples") {
  CHECK(dim_automorphisms(a1(), single_factor_hn({0})) == 3);
  CHECK(dim_automorphisms(a1(), single_factor_hn({2})) == 4);
  ReductiveGroup a2({CartanType(Family::A, 2)}, 0);
  CHECK(dim_automorphisms(a2, single_factor_hn({1, 1})) == 9);
}

TEST_CASE("dim_stratum examples") {
  CHECK(dim_stratum(a1(), single_factor_hn({0})) == 6);
  CHECK(dim_stratum(a1(), single_factor_hn({2})) == 5);
  CHECK(dim_stratum(a1(), single_factor_hn({1})) == 6);
  CHECK(dim_stratum_closed_form(a1(), single_factor_hn({2})) == 5);
}

TEST_CASE("generic stratum dimensions") {
  for (const auto& t : simple_types_up_to(8)) {
    for (int z : {0, 1, 3}) {
      ReductiveGroup g({t}, z);
      const HNType zero = HNType::zero(g);
      CHECK(dim_cohiggs_space(g, zero) == 3 * g.dimension());
      CHECK(dim_automorphisms(g, zero) == g.dimension());
      CHECK(dim_stratum(g, zero) == 2 * g.dimension());
    }
  }
}

TEST_CASE("closed forms agree with direct summation for rank <= 4, entries <= 5") {
  for (const auto& t : simple_types_up_to(4)) {
    CAPTURE(t.to_string());
    ReductiveGroup g({t}, 1);
    for_each_box_vector(t.rank(), 5, [&](const IntVector& a) {
      const HNType m{{a}, {0}};
      CHECK(dim_cohiggs_space(g, m) == dim_cohiggs_space_closed_form(g, m));
      CHECK_NOTHROW(dim_automorphisms(g, m));
      CHECK(dim_stratum(g, m) == dim_stratum_closed_form(g, m));
    });
  }
}

// For GL(r) the sections can be counted entry by entry of End(E): an independent route.
TEST_CASE("GL(r) dimensions from End(E) entries") {
  for (const IntVector& degrees : {IntVector{1, -1}, IntVector{4, 0}, IntVector{2, 1, 0}, IntVector{5, 2, 2, -3}}) {
    const SplittingType st(degrees);
    const auto [g, m] = splitting_to_hn(st);
    int sections = 0, automorphisms = 0;
    for (int i = 0; i < st.rank(); ++i)
      for (int j = 0; j < st.rank(); ++j) {
        sections += h0_on_p1(st[i] - st[j] + 2);
        automorphisms += h0_on_p1(st[i] - st[j]);
      }
    CHECK(dim_cohiggs_space(g, m) == sections);
    CHECK(dim_automorphisms(g, m) == automorphisms);
  }
}

TEST_CASE("enumerate_strata") {
  CHECK(enumerate_strata(a1(), {}).size() == 3);
  CHECK(enumerate_strata(ReductiveGroup::parse("A1xA1"), {}).size() == 9);
  CHECK_THROWS_AS(enumerate_strata(ReductiveGroup::parse("A1+z1"), {}), std::invalid_argument);

  ReductiveGroup torus({}, 1);
  const auto t = enumerate_strata(torus, {4});
  REQUIRE(t.size() == 1);
  CHECK(t[0].dim_stratum == 2);
  CHECK(t[0].is_generic);
  CHECK(t[0].hn.central_degrees == IntVector{4});

  const auto recs = enumerate_strata(ReductiveGroup::parse("A1xA2+z1"), {7});
  CHECK(recs.size() == 27);
  std::set<std::vector<IntVector>> seen;
  for (std::size_t k = 0; k < recs.size(); ++k) {
    const auto& r = recs[k];
    CHECK(seen.insert(r.hn.simple_values).second);
    CHECK(r.hn.central_degrees == IntVector{7});
    CHECK(r.dim_stratum == r.dim_cohiggs_space - r.dim_automorphisms);
    if (k > 0) CHECK(recs[k - 1].hn.simple_values < r.hn.simple_values);
  }
  CHECK(recs.front().is_generic);
  CHECK(recs.front().dim_stratum == 2 * 12);
}

TEST_CASE("stratum deficit vanishes exactly when no root value exceeds 1") {
  for (const auto& t : simple_types_up_to(4)) {
    ReductiveGroup g({t}, 0);
    for (const auto& rec : enumerate_strata(g, {})) {
      const auto values = all_root_values(g, rec.hn);
      const bool small = std::all_of(values.begin(), values.end(), [](int v) { return v <= 1; });
      CHECK(rec.dim_stratum <= 2 * g.dimension());
      CHECK((rec.dim_stratum == 2 * g.dimension()) == small);
      if (rec.is_generic) CHECK(rec.dim_stratum == 2 * g.dimension());
    }
  }
}
