#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "cohiggs/lie_core.hpp"

namespace cohiggs {

/// Degrees m_1 >= ... >= m_r of E = O(m_1) + ... + O(m_r) on P^1.
class SplittingType {
public:
  /// Throws std::invalid_argument if `degrees` is empty or not weakly decreasing.
  explicit SplittingType(IntVector degrees);

  /// Sorts into weakly decreasing order.  permutation()[k] is the input position
  /// of the k-th sorted degree.
  static SplittingType sorted(IntVector degrees);

  const IntVector& degrees() const { return degrees_; }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  int total_degree() const;

  const std::vector<std::size_t>& permutation() const { return permutation_; }
  bool was_reordered() const;

  /// The dual bundle's splitting (-m_r, ..., -m_1).
  SplittingType dual() const;

  friend bool operator==(const SplittingType& x, const SplittingType& y) { return x.degrees_ == y.degrees_; }

private:
  IntVector degrees_;
  std::vector<std::size_t> permutation_;
};

/// Comma-separated integers, e.g. "3,1,-2".
IntVector parse_int_list(std::string_view text);

/// Every consecutive gap m_i - m_{i+1} is at most 2.
bool glr_admits_semistable(const SplittingType& st);

/// GL(r) as A_{r-1} plus a rank-1 center: a_i = m_i - m_{i+1}, central degree sum(m).
/// For r = 1 the group is the pure torus.
std::pair<ReductiveGroup, HNType> splitting_to_hn(const SplittingType& st);

/// Inverse of splitting_to_hn.  Throws std::invalid_argument if the group is not of the
/// form A_{r-1}+z1 (or z1 alone) or if the central degree is incompatible with `m`.
SplittingType hn_to_splitting(const ReductiveGroup& g, const HNType& m);

/// Degree of the line bundle Hom(O(m_j), O(m_i)) (x) TX that houses entry (i,j) of a
/// co-Higgs field; indices are 0-based.
int hom_degree(const SplittingType& st, std::size_t i, std::size_t j);

/// Dimension of the entry space, h^0(O(hom_degree)).
int hom_dimension(const SplittingType& st, std::size_t i, std::size_t j);

}  // namespace cohiggs
