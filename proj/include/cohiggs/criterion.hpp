#pragma once

#include <cstddef>
#include <vector>

#include "cohiggs/glr.hpp"
#include "cohiggs/lie_core.hpp"

namespace cohiggs {

struct SimpleRootViolation {
  std::size_t factor;
  std::size_t simple_root;
  int value;

  friend bool operator==(const SimpleRootViolation&, const SimpleRootViolation&) = default;
};

/// One line-bundle summand L^mu of ad(E_G)/ad(E_{P_chi}).
struct QuotientSummand {
  IntVector root;  // a negative root, simple-root coordinates
  int degree;      // mu(M)
  int twisted_sections;  // h^0(L^mu (x) TX)
};

struct CriterionReport {
  bool admits_stable;
  bool obstructed_semistable;
  std::vector<SimpleRootViolation> violating_roots;
  SplittingType adjoint_degrees;
};

/// True iff alpha(M) <= 2 for every simple root of every simple factor.
/// Central degrees play no role.  Throws std::domain_error on non-dominant M.
bool admits_stable_cohiggs(const ReductiveGroup& g, const HNType& m);

/// Simple roots with alpha(M) >= 3, in factor/root order.
std::vector<SimpleRootViolation> semistable_obstruction(const ReductiveGroup& g, const HNType& m);

/// For a simple root chi of factor `factor` with chi(M) >= 3: the summands of
/// ad(E_G)/ad(E_{P_chi}), i.e. negative roots with chi-coefficient <= -1, each with its
/// degree.  Every degree is <= -3, so none of them has a section after twisting by TX.
/// Throws std::domain_error when chi(M) < 3, std::logic_error if the bound fails.
std::vector<QuotientSummand> hom_vanishing_certificate(const ReductiveGroup& g, const HNType& m,
                                                       std::size_t factor, std::size_t simple_root);

/// Splitting type of ad(E_G): all root values plus rank(G) zeros.
SplittingType adjoint_splitting(const ReductiveGroup& g, const HNType& m);

CriterionReport evaluate_criterion(const ReductiveGroup& g, const HNType& m);

}  // namespace cohiggs
