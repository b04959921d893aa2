#pragma once

#include <array>
#include <map>

#include "qrep/algebra_data.hpp"

namespace qrep {

/// Exact Laurent polynomial in (e^{tau_1}, e^{tau_2}) with integer coefficients.
/// A term n -> C stands for C * exp(tau_1 n_1 + tau_2 n_2). Zero coefficients
/// are never stored.
class WeightPolynomial {
 public:
  using Terms = std::map<Weight, long long>;

  WeightPolynomial() = default;
  explicit WeightPolynomial(Terms terms);

  void add(const Weight& exponent, long long coefficient);
  long long coefficient(const Weight& exponent) const;
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Sum of all coefficients; the dimension when this is a character.
  long long total_mass() const;
  double evaluate(std::array<double, 2> tau) const;
  WeightPolynomial transformed(const IntMatrix2& w) const;

  friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);
  friend bool operator==(const WeightPolynomial& a, const WeightPolynomial& b) = default;

 private:
  Terms terms_;
};

/// Sum over the Weyl group of det(W) * e^{W(weight)}.
WeightPolynomial weyl_alternant(const RootSystem& rs, const Weight& weight);

/// Exact quotient; throws InternalError on a nonzero remainder.
WeightPolynomial divide_exact(const WeightPolynomial& numerator, const WeightPolynomial& denominator);

/// Throws InvalidParameter unless hw is dominant and fits the rank.
void require_dominant(const RootSystem& rs, const Weight& hw);

/// Weyl character of the irreducible module with highest weight hw, as the
/// quotient of alternants at hw + rho and rho.
WeightPolynomial character(const RootSystem& rs, const Weight& hw);

/// Weyl dimension formula: prod over positive roots of (hw+rho, a^v)/(rho, a^v).
long long dimension(const RootSystem& rs, const Weight& hw);

/// Histogram of exponents after substituting tau = s * direction.
std::map<int, long long> reduce_to_a1(const WeightPolynomial& ch, std::array<int, 2> direction);

}  // namespace qrep
