#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cohiggs {

using IntVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Cartan type X_n.  Construction validates the rank against the family.
class CartanType {
public:
  CartanType(Family family, int rank);

  /// Parses a single factor such as "A2" or "E8".
  static CartanType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// Dimension of the simple Lie algebra of this type.
  int dimension() const;

  /// D3 is accepted but is the same root system as A3.
  bool is_a3_isomorphic() const { return family_ == Family::D && rank_ == 3; }

  std::string to_string() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

private:
  Family family_;
  int rank_;
};

/// Cartan matrix with entries A(i,j) = <alpha_i^vee, alpha_j> (Bourbaki numbering).
IntMatrix cartan_matrix(const CartanType& type);

/// Positive roots of a simple type, in simple-root coordinates.
class RootSystem {
public:
  explicit RootSystem(const CartanType& type);

  const CartanType& type() const { return type_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  int rank() const { return type_.rank(); }

  /// Sorted by height, then lexicographically.  Simple roots come first.
  const std::vector<IntVector>& positive_roots() const { return positive_; }

  /// Positive roots followed by their negatives.
  std::vector<IntVector> all_roots() const;

  const IntVector& highest_root() const { return positive_.back(); }

  bool is_root(std::span<const int> v) const;

private:
  CartanType type_;
  IntMatrix cartan_;
  std::vector<IntVector> positive_;
};

/// Reflection of `root` through simple root `i`, computed from the Cartan matrix.
IntVector simple_reflection(const IntMatrix& cartan, std::span<const int> root, int i);

/// chi(M) = sum_i c_i a_i for root chi = sum_i c_i alpha_i.  Throws if `root` is not a root.
int root_value(const RootSystem& rs, std::span<const int> root, std::span<const int> simple_values);

/// A reductive group as a product of simple factors and a central torus of rank z.
class ReductiveGroup {
public:
  ReductiveGroup(std::vector<CartanType> factors, int central_rank);

  /// Grammar: FACTOR ("x" FACTOR)* ("+z" UINT)?, FACTOR := [ABCDEFG] UINT.
  static ReductiveGroup parse(std::string_view text);

  const std::vector<CartanType>& factors() const { return factors_; }
  const std::vector<RootSystem>& root_systems() const { return systems_; }
  int central_rank() const { return central_rank_; }

  int rank() const;
  int semisimple_rank() const;
  int dimension() const;
  int root_count() const { return dimension() - rank(); }

  std::string to_string() const;

private:
  std::vector<CartanType> factors_;
  std::vector<RootSystem> systems_;
  int central_rank_;
};

/// Harder-Narasimhan type: simple-root values of the cocharacter per factor,
/// plus the degrees along the central torus.
struct HNType {
  std::vector<IntVector> simple_values;
  IntVector central_degrees;

  /// The zero cocharacter shaped for `g`.
  static HNType zero(const ReductiveGroup& g);

  friend bool operator==(const HNType&, const HNType&) = default;
};

/// Throws std::invalid_argument unless `m` has one vector per factor of the right length
/// and `central_rank` central degrees.
void check_shape(const ReductiveGroup& g, const HNType& m);

bool is_dominant(const ReductiveGroup& g, const HNType& m);

/// Throws std::domain_error if `m` is not dominant (after the shape check).
void require_dominant(const ReductiveGroup& g, const HNType& m);

/// Values chi(M) over every root of g, both signs; size dim(G) - rank(G).
/// Order: factor by factor, positive roots then negatives.
IntVector all_root_values(const ReductiveGroup& g, const HNType& m);

}  // namespace cohiggs
