#include "vpoly/polynomial.hpp"

#include "vpoly/error.hpp"

#include <algorithm>

namespace vpoly {

MultiPolynomial MultiPolynomial::constant(std::size_t vars, const Rational& c) {
  MultiPolynomial p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

MultiPolynomial MultiPolynomial::variable(std::size_t vars, std::size_t i) {
  if (i >= vars) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  MultiPolynomial p(vars);
  Exponents e(vars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

int MultiPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPolynomial::is_homogeneous(int deg) const {
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (s != deg) return false;
  }
  return true;
}

Rational MultiPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_) throw Error(ErrorKind::DimensionMismatch, "monomial has wrong number of exponents");
  for (int k : e) {
    if (k < 0) throw Error(ErrorKind::InvalidInput, "negative exponent in polynomial");
  }
  if (vpoly::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (vpoly::is_zero(it->second)) terms_.erase(it);
  }
}

Rational MultiPolynomial::evaluate(const RationalVector& x) const {
  if (x.size() != vars_) throw Error(ErrorKind::DimensionMismatch, "polynomial evaluated at wrong dimension");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < vars_; ++i) {
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    }
    s += m;
  }
  return s;
}

MultiPolynomial MultiPolynomial::derivative(std::size_t var) const {
  MultiPolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    out.add_term(f, c * e[var]);
  }
  return out;
}

MultiPolynomial MultiPolynomial::antiderivative(std::size_t var) const {
  MultiPolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    ++f[var];
    out.add_term(f, c / f[var]);
  }
  return out;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  if (o.vars_ != vars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  if (o.vars_ != vars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const Rational& s) {
  if (vpoly::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  if (a.vars_ != b.vars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count mismatch");
  MultiPolynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPolynomial::Exponents e(a.vars_);
      for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

namespace {

std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<Rational> restrict_to_line(const MultiPolynomial& p, const RationalVector& a, const RationalVector& d) {
  if (a.size() != p.vars() || d.size() != p.vars())
    throw Error(ErrorKind::DimensionMismatch, "restrict_to_line: dimension mismatch");
  std::vector<Rational> out{Rational(0)};
  for (const auto& [e, c] : p.terms()) {
    std::vector<Rational> m{c};
    for (std::size_t i = 0; i < p.vars(); ++i) {
      std::vector<Rational> lin{a[i], d[i]};
      for (int k = 0; k < e[i]; ++k) m = mul(m, lin);
    }
    if (m.size() > out.size()) out.resize(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) out[k] += m[k];
  }
  return out;
}

Rational integrate_unit_interval(const std::vector<Rational>& coeffs) {
  Rational s = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] / static_cast<long>(k + 1);
  return s;
}

std::vector<MultiPolynomial::Exponents> monomials_up_to(std::size_t vars, int deg) {
  std::vector<MultiPolynomial::Exponents> out;
  MultiPolynomial::Exponents e(vars, 0);
  // Enumerate by total degree, then lexicographically descending in the first variable.
  for (int total = 0; total <= deg; ++total) {
    std::vector<MultiPolynomial::Exponents> level;
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == vars) {
        e[i] = left;
        level.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
    };
    if (vars == 0) {
      if (total == 0) out.push_back({});
      continue;
    }
    rec(rec, 0, total);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace vpoly
