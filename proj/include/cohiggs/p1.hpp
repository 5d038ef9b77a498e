#pragma once

#include <algorithm>

namespace cohiggs {

/// h^0(P^1, O(d)).
constexpr int h0_on_p1(int d) { return std::max(0, d + 1); }

/// The tangent bundle of P^1 is O(2).
inline constexpr int kTangentDegree = 2;

}  // namespace cohiggs
