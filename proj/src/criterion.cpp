#include "cohiggs/criterion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cohiggs/p1.hpp"

namespace cohiggs {

namespace {

// Simple-root values at or above this bound forbid even semistable co-Higgs fields;
// values below it always admit stable ones.
constexpr int kObstructionThreshold = 3;

}  // namespace

std::vector<SimpleRootViolation> semistable_obstruction(const ReductiveGroup& g, const HNType& m) {
  require_dominant(g, m);
  std::vector<SimpleRootViolation> out;
  for (std::size_t k = 0; k < m.simple_values.size(); ++k)
    for (std::size_t i = 0; i < m.simple_values[k].size(); ++i)
      if (m.simple_values[k][i] >= kObstructionThreshold) out.push_back({k, i, m.simple_values[k][i]});
  return out;
}

bool admits_stable_cohiggs(const ReductiveGroup& g, const HNType& m) { return semistable_obstruction(g, m).empty(); }

std::vector<QuotientSummand> hom_vanishing_certificate(const ReductiveGroup& g, const HNType& m,
                                                       std::size_t factor, std::size_t simple_root) {
  require_dominant(g, m);
  if (factor >= g.factors().size() || simple_root >= static_cast<std::size_t>(g.factors()[factor].rank()))
    throw std::out_of_range("simple root index out of range");
  const IntVector& a = m.simple_values[factor];
  if (a[simple_root] < kObstructionThreshold)
    throw std::domain_error("certificate requires chi(M) >= 3, got " + std::to_string(a[simple_root]));

  std::vector<QuotientSummand> out;
  // Lie(P_chi) misses exactly the negative roots with a nonzero chi-coefficient.
  for (const auto& pos : g.root_systems()[factor].positive_roots()) {
    if (pos[simple_root] < 1) continue;
    IntVector root(pos.size());
    std::transform(pos.begin(), pos.end(), root.begin(), std::negate<>());
    const int degree = std::inner_product(root.begin(), root.end(), a.begin(), 0);
    if (degree > -kObstructionThreshold)
      throw std::logic_error("quotient summand of degree " + std::to_string(degree) + " exceeds -3");
    out.push_back({std::move(root), degree, h0_on_p1(degree + kTangentDegree)});
  }
  return out;
}

SplittingType adjoint_splitting(const ReductiveGroup& g, const HNType& m) {
  require_dominant(g, m);
  IntVector degrees = all_root_values(g, m);
  degrees.insert(degrees.end(), g.rank(), 0);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return SplittingType(std::move(degrees));
}

CriterionReport evaluate_criterion(const ReductiveGroup& g, const HNType& m) {
  auto violations = semistable_obstruction(g, m);
  const bool admits = violations.empty();
  return CriterionReport{admits, !admits, std::move(violations), adjoint_splitting(g, m)};
}

}  // namespace cohiggs
