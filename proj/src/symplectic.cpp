#include "cohiggs/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohiggs {

SymplecticSplitting::SymplecticSplitting(IntVector half_degrees) : half_(std::move(half_degrees)) {
  if (half_.empty()) throw std::invalid_argument("symplectic splitting needs r >= 1");
  if (!std::is_sorted(half_.begin(), half_.end(), std::greater<>()))
    throw std::invalid_argument("half degrees must be weakly decreasing");
  if (half_.back() < 0) throw std::invalid_argument("half degrees must be nonnegative");
}

SplittingType SymplecticSplitting::full_splitting() const {
  IntVector full = half_;
  for (auto it = half_.rbegin(); it != half_.rend(); ++it) full.push_back(-*it);
  return SplittingType(std::move(full));
}

bool sp_admits_stable(const SymplecticSplitting& ss) {
  const auto& e = ss.half_degrees();
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] - e[i + 1] > 2) return false;
  return 2 * e.back() <= 2;
}

std::pair<ReductiveGroup, HNType> sp_to_hn(const SymplecticSplitting& ss) {
  const auto& e = ss.half_degrees();
  const int r = ss.half_rank();
  HNType hn;
  if (r == 1) {
    hn.simple_values = {{2 * e[0]}};
    return {ReductiveGroup({CartanType(Family::A, 1)}, 0), std::move(hn)};
  }
  IntVector a;
  for (int i = 0; i + 1 < r; ++i) a.push_back(e[i] - e[i + 1]);
  a.push_back(2 * e[r - 1]);
  hn.simple_values = {std::move(a)};
  return {ReductiveGroup({CartanType(Family::C, r)}, 0), std::move(hn)};
}

bool has_palindromic_gaps(const SymplecticSplitting& ss) {
  const SplittingType st = ss.full_splitting();
  const auto& full = st.degrees();
  IntVector gaps;
  for (std::size_t i = 0; i + 1 < full.size(); ++i) gaps.push_back(full[i] - full[i + 1]);
  return std::equal(gaps.begin(), gaps.end(), gaps.rbegin());
}

}  // namespace cohiggs
