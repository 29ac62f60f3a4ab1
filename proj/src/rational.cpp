#include "vpoly/rational.hpp"

#include "vpoly/error.hpp"

#include <cctype>

namespace vpoly {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::EmptyInput: return "empty_input";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::DimensionBound: return "dimension_bound";
    case ErrorKind::NotFullDimensional: return "not_full_dimensional";
    case ErrorKind::NonIntegral: return "non_integral";
    case ErrorKind::PointOnCurve: return "point_on_curve";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::NotCompatible: return "not_compatible";
    case ErrorKind::SizeBound: return "size_bound";
    case ErrorKind::Numeric: return "numeric";
  }
  return "unknown";
}

std::string to_string(const Rational& q) {
  return q.str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  Integer p(std::string{num});
  Integer q(std::string{den});
  if (q == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

bool is_integer(const Rational& q) {
  return denominator(q) == 1;
}

Integer floor_int(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer r = n / d;  // truncates toward zero
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

Integer ceil_int(const Rational& q) {
  return -floor_int(-q);
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

bool RationalVector::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool RationalVector::is_integral() const {
  for (const auto& c : coords_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "vector size mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "vector size mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = a[i].compare(b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector primitive_integer(const RationalVector& v) {
  if (v.is_zero()) throw Error(ErrorKind::InvalidInput, "primitive vector of zero");
  Integer l = 1;
  for (const auto& c : v) l = lcm(l, denominator(c));
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& c : v) {
    ints.push_back(numerator(c) * (l / denominator(c)));
    g = gcd(g, boost::multiprecision::abs(ints.back()));
  }
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

}  // namespace vpoly
