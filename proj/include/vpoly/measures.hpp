#pragma once

#include "vpoly/chain.hpp"
#include "vpoly/geometry.hpp"
#include "vpoly/polynomial.hpp"

#include <map>
#include <span>
#include <vector>

namespace vpoly {

/// Exact Lebesgue volume in the ambient space (0 for lower-dimensional
/// polytopes). Ambient dimension at most 3.
Rational volume(const ConvexPolytope& p);

/// sum_i a_i * sum_{x in Z^n cap P_i} P(x). Every polytope of the chain must
/// have integer vertices.
Rational lattice_measure(const MultiPolynomial& weight, const ConvexChain& f);

/// chi_{B_1}^{e_1} * ... * chi_{B_k}^{e_k}.
ConvexChain dilate_chain(const std::vector<ConvexPolytope>& bases, const std::vector<long>& exponents);

using SampleMap = std::map<std::vector<long>, Rational>;

/// Exact interpolating polynomial of total degree <= max_degree through all
/// samples. Requires the full box [0, max_degree]^k among the sample keys;
/// throws Error(Inconsistent) when no such polynomial exists.
MultiPolynomial fit_polynomial(const SampleMap& samples, int max_degree);

/// Same solve without the box requirement; throws Error(Inconsistent) when
/// the samples admit no interpolant and Error(InvalidInput) when they do not
/// determine it uniquely.
MultiPolynomial interpolate(const SampleMap& samples, int max_degree);

/// Polarization of the volume by inclusion-exclusion over subset sums. Needs
/// exactly n bodies in R^n, n <= 3.
Rational mixed_volume(std::span<const ConvexPolytope> bodies);

/// Formal difference positive - negative of convex bodies. Each part is
/// full-dimensional or a single point.
class VirtualBody {
 public:
  VirtualBody(ConvexPolytope positive, ConvexPolytope negative);
  explicit VirtualBody(ConvexPolytope positive);

  /// lambda * body through the polynomial extension: for lambda < 0 this is
  /// the formal difference {0} - |lambda| body.
  static VirtualBody multiple(const ConvexPolytope& body, const Rational& lambda);

  const ConvexPolytope& positive() const noexcept { return positive_; }
  const ConvexPolytope& negative() const noexcept { return negative_; }

  /// Cancellation law: A - B == C - D iff A + D == C + B.
  friend bool operator==(const VirtualBody& x, const VirtualBody& y);

 private:
  ConvexPolytope positive_;
  ConvexPolytope negative_;
};

/// Multilinear expansion over the 2^n choices of parts.
Rational virtual_mixed_volume(std::span<const VirtualBody> bodies);
Rational virtual_volume(const VirtualBody& body);

struct PolynomialityReport {
  MultiPolynomial volume_polynomial;  // in (lambda, mu)
  bool homogeneous = false;
  Rational mixed_coefficient;         // coefficient of lambda^{n-1} mu
  Rational mixed_volume;              // MV(A, ..., A, B) from polarization
  bool ok = false;
};

/// Fits Vol(lambda A + mu B) on the grid [0, grid-1]^2 and checks it is a
/// homogeneous degree-n polynomial whose lambda^{n-1} mu coefficient is
/// n * MV(A, ..., A, B).
PolynomialityReport minkowski_polynomiality_check(const ConvexPolytope& a, const ConvexPolytope& b, int grid);

struct LatticeMeasureMismatch {
  std::vector<long> exponents;
  Rational fitted;
  Rational chain_value;
};

struct LatticeMeasureReport {
  MultiPolynomial fitted;
  int fitted_degree = -1;
  int degree_bound = 0;
  std::size_t checked = 0;
  std::vector<LatticeMeasureMismatch> mismatches;
  bool ok = false;
};

/// Fits the lattice measure of dilate_chain over [0, grid_max]^k with total
/// degree <= n + deg(weight), then compares the fit against the chain-algebra
/// value at every exponent tuple in [-range, range]^k.
LatticeMeasureReport lattice_polynomiality_check(const std::vector<ConvexPolytope>& bases,
                                                 const MultiPolynomial& weight, int grid_max = 4,
                                                 int range = 2);

}  // namespace vpoly
