#pragma once

#include "vpoly/geometry.hpp"
#include "vpoly/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vpoly {

using Complex = std::complex<double>;

/// Finite sum of c_a x^a over integer exponent vectors a (negative entries allowed).
class LaurentPolynomial {
 public:
  using Exponent = std::vector<long>;

  /// Zero coefficients are dropped. Throws Error(EmptyInput) when nothing is
  /// left and Error(DimensionMismatch) on an exponent of the wrong length.
  LaurentPolynomial(std::size_t vars, std::map<Exponent, Complex> terms);

  std::size_t vars() const noexcept { return vars_; }
  const std::map<Exponent, Complex>& terms() const noexcept { return terms_; }
  std::vector<RationalVector> support() const;
  Complex evaluate(std::span<const Complex> point) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::size_t vars_;
  std::map<Exponent, Complex> terms_;
};

ConvexPolytope newton_polytope(const LaurentPolynomial& p);

/// n! * MV(polytopes). Throws Error(NonIntegral) if lattice inputs give a
/// non-integer value (an internal consistency failure).
Rational bkk_number(std::span<const ConvexPolytope> polytopes);

/// n! * virtual MV of the formal differences numerator - denominator.
Rational virtual_bkk(std::span<const std::pair<ConvexPolytope, ConvexPolytope>> pairs);

/// One polynomial per polygon, supported on all of its lattice points, with
/// coefficients uniform in [0,1] + [0,1]i. Deterministic per seed.
std::vector<LaurentPolynomial> sample_system(std::span<const ConvexPolytope> polytopes, std::uint64_t seed);

struct RootTolerances {
  double residual = 1e-10;  // relative residual of resultant roots
  double torus = 1e-8;      // |z| at or below this is treated as zero
  double cluster = 1e-6;    // roots closer than this (relative) form a cluster
  double common = 1e-6;     // relative residual accepted for a common y root
};

/// Roots of sum c[k] z^k by Aberth iteration with Newton polishing.
/// `converged` is cleared when some root misses the residual tolerance.
std::vector<Complex> polynomial_roots(std::vector<Complex> c, double tol_residual, bool& converged);

struct TorusRoot {
  Complex x, y;
  double residual = 0;   // max relative residual of the two equations
  int multiplicity = 1;  // size of the resultant-root cluster containing x
};

struct RootCertificate {
  bool swapped = false;  // y was eliminated after swapping the variables
  int resultant_degree = 0;
  double max_resultant_residual = 0;
  double max_system_residual = 0;
  std::size_t excluded_off_torus = 0;
  std::vector<TorusRoot> roots;
  std::vector<std::string> flags;
  bool reliable() const noexcept { return flags.empty(); }
};

struct TorusRootCount {
  long count = 0;
  RootCertificate certificate;
};

/// Number of common roots in (C*)^2, by eliminating one variable with the
/// Sylvester resultant. Throws Error(InvalidInput) unless both have 2 variables.
TorusRootCount count_torus_roots_2d(const LaurentPolynomial& p1, const LaurentPolynomial& p2,
                                    const RootTolerances& tol = {});

struct HarnessCase {
  std::string name;
  ConvexPolytope first, second;
};

/// triangle/triangle, square/square, square/triangle, big-triangle-2x/square.
std::vector<HarnessCase> bkk_catalog();

struct HarnessRun {
  std::string case_name;
  std::uint64_t seed = 0;       // requested
  std::uint64_t used_seed = 0;  // after resampling
  int resamples = 0;
  Rational bkk;
  long counted = 0;
  std::vector<std::string> flags;  // every flag seen, including resampled attempts
  RootCertificate certificate;
  bool agree = false;
};

inline constexpr int kMaxResamples = 3;
inline constexpr double kMaxFlaggedFraction = 0.05;

struct HarnessReport {
  std::vector<HarnessRun> runs;
  std::size_t flagged_runs = 0;
  bool ok = false;
};

/// Compares count_torus_roots_2d with bkk_number for every case and seed. A
/// flagged certificate is resampled with a derived seed at most kMaxResamples
/// times. ok requires agreement everywhere and at most kMaxFlaggedFraction
/// of the runs flagged.
HarnessReport bkk_harness(std::span<const HarnessCase> cases, std::span<const std::uint64_t> seeds,
                          const RootTolerances& tol = {});

}  // namespace vpoly
