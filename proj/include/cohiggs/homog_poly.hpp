#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cohiggs/field.hpp"

namespace cohiggs {

/// A homogeneous form of fixed degree d in x, y, i.e. a section of O(d) on P^1.
/// Coefficients are stored in the basis x^d, x^{d-1} y, ..., y^d.  A negative degree
/// denotes the zero-only space: no coefficients, always zero.
template <class F>
class HomogPoly {
public:
  using Element = typename F::Element;

  HomogPoly(F field, int degree) : field_(std::move(field)), degree_(degree) {
    coeffs_.assign(slot_count(degree), field_.zero());
  }

  HomogPoly(F field, int degree, std::vector<Element> coeffs)
      : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != slot_count(degree))
      throw std::invalid_argument("degree " + std::to_string(degree) + " form needs " +
                                  std::to_string(slot_count(degree)) + " coefficients");
  }

  static HomogPoly constant(F field, Element c) { return HomogPoly(field, 0, {std::move(c)}); }

  static HomogPoly random(F field, int degree, Rng& rng) {
    HomogPoly p(field, degree);
    for (auto& c : p.coeffs_) c = field.random(rng);
    return p;
  }

  /// Redraws until nonzero.  Throws if degree < 0.
  static HomogPoly random_nonzero(F field, int degree, Rng& rng) {
    if (degree < 0) throw std::domain_error("no nonzero form of negative degree");
    while (true) {
      HomogPoly p = random(field, degree, rng);
      if (!p.is_zero()) return p;
    }
  }

  static std::size_t slot_count(int degree) { return degree < 0 ? 0 : static_cast<std::size_t>(degree) + 1; }

  const F& field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  /// Coefficient of x^{d-k} y^k.
  const Element& operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Element& c) { return field_.is_zero(c); });
  }

  HomogPoly operator+(const HomogPoly& other) const { return combine(other, false); }
  HomogPoly operator-(const HomogPoly& other) const { return combine(other, true); }

  HomogPoly operator*(const HomogPoly& other) const {
    HomogPoly out(field_, degree_ + other.degree_);
    if (out.coeffs_.empty()) return out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (field_.is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
        out.coeffs_[i + j] = field_.add(out.coeffs_[i + j], field_.mul(coeffs_[i], other.coeffs_[j]));
    }
    return out;
  }

  HomogPoly scaled(const Element& c) const {
    HomogPoly out = *this;
    for (auto& x : out.coeffs_) x = field_.mul(x, c);
    return out;
  }

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    if (a.degree_ != b.degree_) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!a.field_.equal(a.coeffs_[k], b.coeffs_[k])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (field_.is_zero(coeffs_[k])) continue;
      if (!out.empty()) out += " + ";
      const int xe = degree_ - static_cast<int>(k), ye = static_cast<int>(k);
      std::string mono;
      if (xe > 0) mono += xe == 1 ? "x" : "x^" + std::to_string(xe);
      if (ye > 0) mono += (mono.empty() ? "" : "*") + (ye == 1 ? std::string("y") : "y^" + std::to_string(ye));
      const std::string c = field_.to_string(coeffs_[k]);
      if (mono.empty())
        out += c;
      else if (field_.equal(coeffs_[k], field_.one()))
        out += mono;
      else
        out += c + "*" + mono;
    }
    return out.empty() ? "0" : out;
  }

private:
  HomogPoly combine(const HomogPoly& other, bool subtract) const {
    if (degree_ != other.degree_)
      throw std::invalid_argument("adding forms of degrees " + std::to_string(degree_) + " and " +
                                  std::to_string(other.degree_));
    HomogPoly out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      out.coeffs_[k] = subtract ? field_.sub(coeffs_[k], other.coeffs_[k]) : field_.add(coeffs_[k], other.coeffs_[k]);
    return out;
  }

  F field_;
  int degree_;
  std::vector<Element> coeffs_;
};

namespace detail {

/// Univariate polynomial, ascending coefficients, no trailing zeros (empty = 0).
template <class F>
using Univariate = std::vector<typename F::Element>;

template <class F>
void trim(const F& field, Univariate<F>& u) {
  while (!u.empty() && field.is_zero(u.back())) u.pop_back();
}

template <class F>
Univariate<F> remainder(const F& field, Univariate<F> a, const Univariate<F>& b) {
  const auto lead_inv = field.inv(b.back());
  while (a.size() >= b.size()) {
    const auto q = field.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = field.sub(a[shift + k], field.mul(q, b[k]));
    trim(field, a);
  }
  return a;
}

template <class F>
Univariate<F> gcd(const F& field, Univariate<F> a, Univariate<F> b) {
  while (!b.empty()) {
    Univariate<F> r = remainder(field, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const auto lead_inv = field.inv(a.back());
    for (auto& c : a) c = field.mul(c, lead_inv);
  }
  return a;
}

/// Power of y dividing a nonzero form.
template <class F>
int y_valuation(const HomogPoly<F>& f) {
  int v = 0;
  while (f.field().is_zero(f[v])) ++v;
  return v;
}

/// f(x, 1) after removing the y-power, as an ascending univariate polynomial.
template <class F>
Univariate<F> dehomogenize(const HomogPoly<F>& f) {
  Univariate<F> u;
  for (int k = f.degree(); k >= 0; --k) u.push_back(f[static_cast<std::size_t>(k)]);
  trim(f.field(), u);
  return u;
}

}  // namespace detail

/// Monic gcd of nonzero forms (leading x-coefficient after removing y-powers is 1).
/// Zero forms are skipped; throws if all are zero.
template <class F>
HomogPoly<F> gcd(std::span<const HomogPoly<F>> forms) {
  const HomogPoly<F>* first = nullptr;
  int y_power = 0;
  detail::Univariate<F> g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    const int v = detail::y_valuation(f);
    if (!first) {
      first = &f;
      y_power = v;
      g = detail::dehomogenize(f);
    } else {
      y_power = std::min(y_power, v);
      g = detail::gcd(f.field(), std::move(g), detail::dehomogenize(f));
    }
  }
  if (!first) throw std::invalid_argument("gcd of zero forms");
  const F& field = first->field();
  g = detail::gcd(field, std::move(g), detail::Univariate<F>{});  // monic
  const int ud = static_cast<int>(g.size()) - 1;
  const int degree = ud + y_power;
  std::vector<typename F::Element> coeffs(static_cast<std::size_t>(degree) + 1, field.zero());
  for (int j = 0; j <= ud; ++j) coeffs[static_cast<std::size_t>(degree - j)] = g[static_cast<std::size_t>(j)];
  return HomogPoly<F>(field, degree, std::move(coeffs));
}

template <class F>
HomogPoly<F> gcd(const HomogPoly<F>& a, const HomogPoly<F>& b) {
  const HomogPoly<F> pair[] = {a, b};
  return gcd(std::span<const HomogPoly<F>>(pair));
}

/// The forms are not all zero and have no common zero on P^1 over the algebraic closure.
template <class F>
bool has_no_common_zero(std::span<const HomogPoly<F>> forms) {
  if (std::all_of(forms.begin(), forms.end(), [](const HomogPoly<F>& f) { return f.is_zero(); })) return false;
  return gcd(forms).degree() == 0;
}

}  // namespace cohiggs
