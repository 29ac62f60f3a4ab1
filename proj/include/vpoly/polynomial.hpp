#pragma once

#include "vpoly/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace vpoly {

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
class MultiPolynomial {
 public:
  using Exponents = std::vector<int>;

  MultiPolynomial() = default;
  explicit MultiPolynomial(std::size_t vars) : vars_(vars) {}

  static MultiPolynomial constant(std::size_t vars, const Rational& c);
  static MultiPolynomial variable(std::size_t vars, std::size_t i);

  std::size_t vars() const noexcept { return vars_; }
  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous(int deg) const;
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  Rational evaluate(const RationalVector& x) const;

  MultiPolynomial derivative(std::size_t var) const;
  /// The antiderivative in `var` with no terms free of `var`.
  MultiPolynomial antiderivative(std::size_t var) const;

  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  MultiPolynomial& operator*=(const Rational& s);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(MultiPolynomial a, const Rational& s) { return a *= s; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

 private:
  std::size_t vars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// Coefficients (ascending) of t -> p(a + t d).
std::vector<Rational> restrict_to_line(const MultiPolynomial& p, const RationalVector& a, const RationalVector& d);

/// Integral over [0, 1] of the univariate polynomial with ascending coefficients.
Rational integrate_unit_interval(const std::vector<Rational>& coeffs);

/// All exponent vectors in `vars` variables with total degree <= deg, in a
/// fixed graded order.
std::vector<MultiPolynomial::Exponents> monomials_up_to(std::size_t vars, int deg);

}  // namespace vpoly
