#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohiggs/field.hpp"
#include "cohiggs/glr.hpp"
#include "cohiggs/homog_poly.hpp"
#include "cohiggs/p1.hpp"

namespace cohiggs {

/// A co-Higgs field phi in H^0(End(E) (x) O(2)) on E = O(m_1) + ... + O(m_r).
/// Entry (i,j) maps summand j into summand i and has degree m_i - m_j + 2.
template <class F>
class CoHiggsMatrix {
public:
  /// The zero field.
  CoHiggsMatrix(SplittingType st, F field) : st_(std::move(st)), field_(std::move(field)) {
    const auto r = static_cast<std::size_t>(st_.rank());
    entries_.reserve(r * r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) entries_.emplace_back(field_, hom_degree(st_, i, j));
  }

  const SplittingType& splitting() const { return st_; }
  const F& field() const { return field_; }
  std::size_t rank() const { return static_cast<std::size_t>(st_.rank()); }

  const HomogPoly<F>& entry(std::size_t i, std::size_t j) const { return entries_.at(i * rank() + j); }

  /// Throws std::invalid_argument unless `p` has degree hom_degree(i, j).
  void set_entry(std::size_t i, std::size_t j, HomogPoly<F> p) {
    if (p.degree() != hom_degree(st_, i, j))
      throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must have degree " +
                                  std::to_string(hom_degree(st_, i, j)));
    entries_.at(i * rank() + j) = std::move(p);
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const HomogPoly<F>& p) { return p.is_zero(); });
  }

  /// The transpose acting on E* = O(-m_r) + ... + O(-m_1).  A line subbundle of E* is
  /// invariant under it iff its annihilator in E is invariant under this field.
  CoHiggsMatrix dual() const {
    CoHiggsMatrix out(st_.dual(), field_);
    const std::size_t r = rank();
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = 0; l < r; ++l) out.set_entry(k, l, entry(r - 1 - l, r - 1 - k));
    return out;
  }

private:
  SplittingType st_;
  F field_;
  std::vector<HomogPoly<F>> entries_;
};

/// A saturated line subbundle O(d) -> E, given by sections of O(m_i - d).
template <class F>
class LineSubbundle {
public:
  /// Throws std::invalid_argument on a degree mismatch or if the sections share a zero.
  LineSubbundle(const SplittingType& st, int degree, std::vector<HomogPoly<F>> sections)
      : degree_(degree), sections_(std::move(sections)) {
    if (sections_.size() != static_cast<std::size_t>(st.rank()))
      throw std::invalid_argument("line subbundle needs one section per summand");
    for (std::size_t i = 0; i < sections_.size(); ++i)
      if (sections_[i].degree() != st[i] - degree)
        throw std::invalid_argument("section " + std::to_string(i) + " must have degree " +
                                    std::to_string(st[i] - degree));
    if (!has_no_common_zero<F>(sections_)) throw std::invalid_argument("line subbundle is not saturated");
  }

  int degree() const { return degree_; }
  const std::vector<HomogPoly<F>>& sections() const { return sections_; }

  LineSubbundle scaled(const typename F::Element& c) const {
    LineSubbundle out = *this;
    for (auto& s : out.sections_) s = s.scaled(c);
    return out;
  }

private:
  int degree_;
  std::vector<HomogPoly<F>> sections_;
};

/// (phi p)_i = sum_j phi_ij p_j, of degree m_i - d + 2.
template <class F>
std::vector<HomogPoly<F>> apply_field(const CoHiggsMatrix<F>& phi, const LineSubbundle<F>& line) {
  const auto& st = phi.splitting();
  const std::size_t r = phi.rank();
  if (line.sections().size() != r) throw std::invalid_argument("line subbundle rank mismatch");
  std::vector<HomogPoly<F>> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const int target = st[i] - line.degree() + kTangentDegree;
    HomogPoly<F> acc(phi.field(), target);
    for (std::size_t j = 0; j < r; ++j) {
      const auto& pij = phi.entry(i, j);
      if (pij.degree() < 0) continue;
      HomogPoly<F> term = pij * line.sections()[j];
      if (term.degree() != target) throw std::logic_error("apply_field degree bookkeeping failed");
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// phi(L) is contained in L (x) O(2): every wedge p_i (phi p)_j - p_j (phi p)_i vanishes.
template <class F>
bool is_invariant(const CoHiggsMatrix<F>& phi, const LineSubbundle<F>& line) {
  const auto image = apply_field(phi, line);
  const auto& p = line.sections();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!(p[i] * image[j] - p[j] * image[i]).is_zero()) return false;
  return true;
}

/// Number of coefficient slots in a line subbundle of degree d.
std::size_t line_subbundle_dimension(const SplittingType& st, int degree);

/// Calls `visit` on every saturated line subbundle O(d) -> E over F_p, up to scalars
/// (first nonzero coefficient is 1).  Stops early when `visit` returns false.
/// Returns the number of subbundles visited.
std::uint64_t for_each_line_subbundle(const SplittingType& st, int degree, const PrimeField& field,
                                      const std::function<bool(const LineSubbundle<PrimeField>&)>& visit);

std::vector<LineSubbundle<PrimeField>> enumerate_line_subbundles(const SplittingType& st, int degree,
                                                                 const PrimeField& field);

/// The field with one nonzero form s_i on each subdiagonal entry (i+1, i) and zeros
/// elsewhere.  Throws std::domain_error if some subdiagonal degree is negative.
template <class F>
CoHiggsMatrix<F> build_model_field(const SplittingType& st, const F& field, std::uint64_t seed) {
  if (!glr_admits_semistable(st)) throw std::domain_error("some subdiagonal entry space is zero");
  Rng rng(seed);
  CoHiggsMatrix<F> phi(st, field);
  for (std::size_t i = 0; i + 1 < phi.rank(); ++i)
    phi.set_entry(i + 1, i, HomogPoly<F>::random_nonzero(field, hom_degree(st, i + 1, i), rng));
  return phi;
}

/// Every entry of nonnegative degree filled with seeded coefficients, row-major.
template <class F>
CoHiggsMatrix<F> random_field(const SplittingType& st, const F& field, std::uint64_t seed) {
  Rng rng(seed);
  CoHiggsMatrix<F> phi(st, field);
  for (std::size_t i = 0; i < phi.rank(); ++i)
    for (std::size_t j = 0; j < phi.rank(); ++j)
      phi.set_entry(i, j, HomogPoly<F>::random(field, hom_degree(st, i, j), rng));
  return phi;
}

enum class StabilityMode { stable, semistable };

struct OracleWitness {
  /// Rank of the destabilizing invariant subbundle W of E.
  int rank;
  /// Degree of W.
  int degree;
  /// rank 1: the sections of W itself.  rank r-1: the sections of the invariant line
  /// W^perp in E*, on the dual splitting.
  bool via_dual;
  int line_degree;
  std::vector<HomogPoly<PrimeField>> sections;
};

struct OracleVerdict {
  /// No F_p-rational destabilizing invariant subbundle exists.
  bool passes;
  StabilityMode mode;
  std::uint32_t characteristic;
  std::optional<OracleWitness> witness;
  std::uint64_t subbundles_checked;
};

/// Whether a line subbundle of degree d in a bundle of rank r and degree `total`
/// violates the mode's slope inequality, in exact integer arithmetic.
bool violates_slope(StabilityMode mode, int line_degree, int rank, int total_degree);

/// Exhaustive search over F_p for invariant subbundles violating (semi)stability.  Checks
/// line subbundles of E and, for r = 3, rank-2 subbundles via invariant lines of the dual.
/// Requires r <= 3.
OracleVerdict semistability_oracle(const CoHiggsMatrix<PrimeField>& phi, StabilityMode mode);

/// Infinite coefficient fields cannot be searched exhaustively.
template <class F>
OracleVerdict semistability_oracle(const CoHiggsMatrix<F>&, StabilityMode) requires(!F::is_finite) {
  throw std::invalid_argument("the oracle needs a finite coefficient field");
}

std::string to_string(StabilityMode mode);
StabilityMode parse_stability_mode(const std::string& text);

}  // namespace cohiggs
