#pragma once

#include <utility>

#include "cohiggs/glr.hpp"
#include "cohiggs/lie_core.hpp"

namespace cohiggs {

/// Splitting of a rank-2r symplectic bundle, given by e_1 >= ... >= e_r >= 0; the
/// full degree list is (e_1, ..., e_r, -e_r, ..., -e_1).
class SymplecticSplitting {
public:
  explicit SymplecticSplitting(IntVector half_degrees);

  const IntVector& half_degrees() const { return half_; }
  int half_rank() const { return static_cast<int>(half_.size()); }

  /// Degrees of L_1, ..., L_{2r}; L_{2r-i+1} is dual to L_i.
  SplittingType full_splitting() const;

private:
  IntVector half_;
};

/// deg L_i - deg L_{i+1} <= 2 for 1 <= i <= r; the i = r gap is 2 e_r.
bool sp_admits_stable(const SymplecticSplitting& ss);

/// C_r with the long simple root last (a_r = 2 e_r); r = 1 gives A_1 with a = (2 e_1).
std::pair<ReductiveGroup, HNType> sp_to_hn(const SymplecticSplitting& ss);

/// Consecutive gaps of the full degree list read the same backwards.
bool has_palindromic_gaps(const SymplecticSplitting& ss);

}  // namespace cohiggs
