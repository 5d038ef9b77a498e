#include "cohiggs/strata.hpp"

#include <stdexcept>
#include <string>

#include "cohiggs/p1.hpp"

namespace cohiggs {

int dim_cohiggs_space(const ReductiveGroup& g, const HNType& m) {
  require_dominant(g, m);
  int total = 3 * g.rank();  // torus part: rank(G) copies of H^0(O(2))
  for (int v : all_root_values(g, m)) total += h0_on_p1(v + kTangentDegree);
  return total;
}

int dim_cohiggs_space_closed_form(const ReductiveGroup& g, const HNType& m) {
  require_dominant(g, m);
  int total = 3 * g.dimension();
  for (int v : all_root_values(g, m))
    if (v > 3) total += v - 3;
  return total;
}

int dim_automorphisms(const ReductiveGroup& g, const HNType& m) {
  require_dominant(g, m);
  const IntVector values = all_root_values(g, m);
  int first = g.rank();
  int second = g.dimension();
  for (int v : values) {
    if (v >= 0) first += v + 1;
    if (v > 1) second += v - 1;
  }
  if (first != second)
    throw std::logic_error("automorphism dimension forms disagree: " + std::to_string(first) + " vs " +
                           std::to_string(second));
  return first;
}

int dim_stratum_closed_form(const ReductiveGroup& g, const HNType& m) {
  require_dominant(g, m);
  int total = 2 * g.dimension();
  for (int v : all_root_values(g, m)) {
    if (v > 3)
      total -= 2;
    else if (v > 1)
      total -= v - 1;
  }
  return total;
}

int dim_stratum(const ReductiveGroup& g, const HNType& m) {
  const int by_difference = dim_cohiggs_space(g, m) - dim_automorphisms(g, m);
  const int closed = dim_stratum_closed_form(g, m);
  if (by_difference != closed)
    throw std::logic_error("stratum dimension " + std::to_string(by_difference) +
                           " disagrees with closed form " + std::to_string(closed));
  return by_difference;
}

StratumRecord make_stratum_record(const ReductiveGroup& g, const HNType& m) {
  StratumRecord rec{m, dim_cohiggs_space(g, m), dim_automorphisms(g, m), 0, true};
  rec.dim_stratum = dim_stratum(g, m);
  for (const auto& a : m.simple_values)
    for (int v : a)
      if (v != 0) rec.is_generic = false;
  return rec;
}

std::vector<StratumRecord> enumerate_strata(const ReductiveGroup& g, const IntVector& central_degrees) {
  if (central_degrees.size() != static_cast<std::size_t>(g.central_rank()))
    throw std::invalid_argument("expected " + std::to_string(g.central_rank()) + " central degrees");

  HNType m = HNType::zero(g);
  m.central_degrees = central_degrees;
  std::vector<StratumRecord> out;
  // Odometer over the concatenated a-vector, last coordinate fastest.
  while (true) {
    out.push_back(make_stratum_record(g, m));
    int k = static_cast<int>(m.simple_values.size()) - 1;
    int i = k >= 0 ? static_cast<int>(m.simple_values[k].size()) - 1 : -1;
    while (k >= 0) {
      if (i < 0) {
        if (--k < 0) break;
        i = static_cast<int>(m.simple_values[k].size()) - 1;
        continue;
      }
      if (m.simple_values[k][i] < kMaxStratumSimpleValue) {
        ++m.simple_values[k][i];
        break;
      }
      m.simple_values[k][i] = 0;
      --i;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace cohiggs
