#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohiggs {

/// Coefficient generator shared by every seeded construction.  std::mt19937_64 is fully
/// specified by the standard, so seeded output is identical across platforms.
using Rng = std::mt19937_64;

/// The prime field F_p.  Elements are residues in [0, p).
class PrimeField {
public:
  using Element = std::uint32_t;
  static constexpr bool is_finite = true;

  /// Throws std::invalid_argument unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// The k-th element in the order 0, 1, ..., p-1.
  Element element_at(std::uint64_t k) const { return static_cast<Element>(k); }

  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  Element add(Element a, Element b) const { return static_cast<Element>((a + b) % p_); }
  Element sub(Element a, Element b) const { return static_cast<Element>((a + p_ - b) % p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element random(Rng& rng) const { return static_cast<Element>(rng() % p_); }

  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

/// The rational numbers, exact.
class RationalField {
public:
  using Element = boost::multiprecision::cpp_rational;
  static constexpr bool is_finite = false;

  std::string name() const { return "Q"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const { return Element(v); }

  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  /// Uniform integer in [-9, 9].
  Element random(Rng& rng) const { return Element(static_cast<long long>(rng() % 19) - 9); }

  std::string to_string(const Element& a) const { return a.str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace cohiggs
