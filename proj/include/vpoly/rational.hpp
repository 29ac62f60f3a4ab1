#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace vpoly {

// Expression templates off: values are always materialized, so `auto`,
// ternaries and lambdas behave like with builtin types.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", "-p/q" and plain decimal integers. Throws Error on
/// anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline int sgn(const Rational& q) { return q.sign(); }

bool is_integer(const Rational& q);
Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Point of Q^n (or covector, under the fixed Euclidean identification).
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t n) : coords_(n) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(RationalVector a, const Rational& s) { return a *= s; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic order; vectors of different length order by length first.
  friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b);

 private:
  std::vector<Rational> coords_;
};

Rational dot(const RationalVector& a, const RationalVector& b);

/// Scales a nonzero rational vector to the primitive integer vector pointing
/// the same way (gcd of entries 1).
RationalVector primitive_integer(const RationalVector& v);

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

}  // namespace vpoly
