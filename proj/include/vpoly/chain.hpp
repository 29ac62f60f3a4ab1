#pragma once

#include "vpoly/geometry.hpp"
#include "vpoly/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace vpoly {

struct ChainTerm {
  Rational coeff;
  ConvexPolytope polytope;
};

/// Finite rational combination of characteristic functions of closed convex
/// polytopes. Always normalized: terms sorted by polytope, like polytopes
/// merged, zero coefficients dropped. The empty chain is the zero function.
class ConvexChain {
 public:
  explicit ConvexChain(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  ConvexChain(std::size_t ambient_dim, std::vector<ChainTerm> terms);

  /// The unit of the Minkowski product: characteristic function of the origin.
  static ConvexChain identity(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<ChainTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Representation equality (same normalized term list). Use chains_equal
  /// to compare the functions the chains represent.
  friend bool operator==(const ConvexChain& a, const ConvexChain& b);

 private:
  std::size_t ambient_;
  std::vector<ChainTerm> terms_;
};

ConvexChain chain_of(const ConvexPolytope& p);
ConvexChain add(const ConvexChain& f, const ConvexChain& g);
ConvexChain scale(const ConvexChain& f, const Rational& c);
/// Bilinear extension of chi_A * chi_B = chi_{A+B}.
ConvexChain product(const ConvexChain& f, const ConvexChain& g);

/// Euler expansion of the relative interior: sum over nonempty faces F of
/// (-1)^{dim P - dim F} chi_F.
ConvexChain open_polytope_chain(const ConvexPolytope& p);

/// (-1)^{dim P} times the open chain of -P; the Minkowski-product inverse of chi_P.
ConvexChain inverse(const ConvexPolytope& p);

/// A chain together with the integer powers of characteristic functions it
/// is the product of.
class VirtualPolytope {
 public:
  using Power = std::pair<ConvexPolytope, long>;

  /// Multiplies out the powers.
  static VirtualPolytope from_powers(std::size_t ambient_dim, std::vector<Power> powers);
  /// Checks (with chains_equal) that `chain` is the product of `powers`;
  /// throws Error(Inconsistent) otherwise.
  VirtualPolytope(ConvexChain chain, std::vector<Power> powers);

  const ConvexChain& chain() const noexcept { return chain_; }
  const std::vector<Power>& powers() const noexcept { return powers_; }

 private:
  VirtualPolytope(ConvexChain chain, std::vector<Power> powers, bool /*trusted*/)
      : chain_(std::move(chain)), powers_(std::move(powers)) {}
  ConvexChain chain_;
  std::vector<Power> powers_;
};

/// chi_P^k: k-fold product for k >= 0 (identity for k = 0), |k|-fold product
/// of inverse(P) for k < 0.
VirtualPolytope power(const ConvexPolytope& p, long k);

Rational evaluate(const ConvexChain& f, const RationalVector& x);
/// Integral against the Euler characteristic: each closed convex polytope counts 1.
Rational euler_integral(const ConvexChain& f);

struct ChainEquality {
  bool equal = false;
  /// False when the verdict came from finite sampling (ambient dimension >= 3)
  /// rather than from a complete arrangement refinement.
  bool exact = true;
  std::size_t samples = 0;
  explicit operator bool() const noexcept { return equal; }
};

/// Decides whether two chains define the same function on R^n. Exact for
/// n <= 2 (evaluation at a sample point of every cell of the refinement
/// induced by all polytopes); for n >= 3 a flagged semi-decision.
ChainEquality chains_equal(const ConvexChain& f, const ConvexChain& g);

/// Points at which a chain in R^n (n <= 2) must be evaluated to determine it:
/// one point in every cell of every dimension of the refinement.
std::vector<RationalVector> refinement_samples(const ConvexChain& f);

/// Drops every term whose polytope is not full-dimensional.
ConvexChain truncate_lower_dim(const ConvexChain& f);

}  // namespace vpoly
