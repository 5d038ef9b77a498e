#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cohiggs/criterion.hpp"
#include "cohiggs/glr.hpp"
#include "cohiggs/strata.hpp"

using namespace cohiggs;

namespace {

// Weakly decreasing sequences of length r with entries in [-bound, bound].
void for_each_splitting(int r, int bound, const std::function<void(const SplittingType&)>& f) {
  IntVector m(r);
  std::function<void(int, int)> rec = [&](int pos, int max) {
    if (pos == r) {
      f(SplittingType(m));
      return;
    }
    for (int v = max; v >= -bound; --v) {
      m[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, bound);
}

}  // namespace

TEST_CASE("SplittingType construction") {
  CHECK_THROWS_AS(SplittingType(IntVector{}), std::invalid_argument);
  CHECK_THROWS_AS(SplittingType(IntVector{0, 3}), std::invalid_argument);

  auto st = SplittingType::sorted({0, 3, -1, 3});
  CHECK(st.degrees() == IntVector{3, 3, 0, -1});
  CHECK(st.permutation() == std::vector<std::size_t>{1, 3, 0, 2});
  CHECK(st.was_reordered());
  CHECK_FALSE(SplittingType::sorted({2, 1}).was_reordered());
  CHECK(SplittingType({3, 1, -2}).dual().degrees() == IntVector{2, -1, -3});
}

TEST_CASE("parse_int_list") {
  CHECK(parse_int_list("3,1,0") == IntVector{3, 1, 0});
  CHECK(parse_int_list("-1") == IntVector{-1});
  for (const char* bad : {"", "1,", ",1", "1,,2", "x", "1.5", "1 ,2"})
    CHECK_THROWS_AS(parse_int_list(bad), std::invalid_argument);
}

TEST_CASE("glr_admits_semistable") {
  CHECK(glr_admits_semistable(SplittingType({1, -1})));
  CHECK_FALSE(glr_admits_semistable(SplittingType({3, 0})));
  CHECK(glr_admits_semistable(SplittingType({0, 0, 0})));
  CHECK(glr_admits_semistable(SplittingType({7})));
}

TEST_CASE("splitting_to_hn") {
  {
    auto [g, m] = splitting_to_hn(SplittingType({1, -1}));
    CHECK(g.to_string() == "A1+z1");
    CHECK(m.simple_values == std::vector<IntVector>{{2}});
    CHECK(m.central_degrees == IntVector{0});
  }
  {
    auto [g, m] = splitting_to_hn(SplittingType({2, 1, 0}));
    CHECK(g.to_string() == "A2+z1");
    CHECK(m.simple_values == std::vector<IntVector>{{1, 1}});
    CHECK(m.central_degrees == IntVector{3});
  }
  {
    auto [g, m] = splitting_to_hn(SplittingType({3, 0, 0}));
    CHECK(m.simple_values == std::vector<IntVector>{{3, 0}});
    CHECK(m.central_degrees == IntVector{3});
  }
  {
    auto [g, m] = splitting_to_hn(SplittingType({-4}));
    CHECK(g.factors().empty());
    CHECK(g.central_rank() == 1);
    CHECK(hn_to_splitting(g, m).degrees() == IntVector{-4});
  }
}

TEST_CASE("hn_to_splitting errors") {
  ReductiveGroup g = ReductiveGroup::parse("A1+z1");
  CHECK_THROWS_AS(hn_to_splitting(g, HNType{{{2}}, {1}}), std::invalid_argument);  // odd total, even gap
  CHECK_THROWS_AS(hn_to_splitting(ReductiveGroup::parse("C2+z1"), HNType{{{0, 0}}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(hn_to_splitting(ReductiveGroup::parse("A1"), HNType{{{0}}, {}}), std::invalid_argument);
}

TEST_CASE("hom_degree") {
  const SplittingType a({1, -1});
  CHECK(hom_degree(a, 1, 0) == 0);
  CHECK(hom_dimension(a, 1, 0) == 1);
  const SplittingType b({3, 0});
  CHECK(hom_degree(b, 1, 0) == -1);
  CHECK(hom_dimension(b, 1, 0) == 0);
  CHECK(hom_degree(b, 1, 1) == 2);
  CHECK(hom_dimension(b, 1, 1) == 3);
  CHECK_THROWS_AS(hom_degree(b, 2, 0), std::out_of_range);
}

TEST_CASE("GL(r) criteria agree for r <= 6, |m_i| <= 6") {
  int cases = 0;
  for (int r = 1; r <= 6; ++r)
    for_each_splitting(r, 6, [&](const SplittingType& st) {
      ++cases;
      const auto [g, m] = splitting_to_hn(st);
      CHECK(glr_admits_semistable(st) == admits_stable_cohiggs(g, m));
      CHECK(hn_to_splitting(g, m) == st);
    });
  CHECK(cases > 20000);
}

TEST_CASE("End(E) bookkeeping matches the HN route") {
  for (int r = 1; r <= 4; ++r)
    for_each_splitting(r, 3, [&](const SplittingType& st) {
      const auto [g, m] = splitting_to_hn(st);
      int entries = 0;
      IntVector differences;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          entries += hom_dimension(st, i, j);
          differences.push_back(st[i] - st[j]);
        }
      CHECK(entries == dim_cohiggs_space(g, m));
      std::sort(differences.begin(), differences.end(), std::greater<>());
      CHECK(adjoint_splitting(g, m).degrees() == differences);
    });
}
