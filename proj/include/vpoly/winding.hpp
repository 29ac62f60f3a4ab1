#pragma once

#include "vpoly/chain.hpp"
#include "vpoly/geometry.hpp"
#include "vpoly/polynomial.hpp"

#include <array>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace vpoly {

struct Segment2 {
  RationalVector a, b;
};

/// Closed oriented polyline in R^2; the last point connects back to the
/// first. Counterclockwise is the positive orientation. The empty cycle is
/// allowed and bounds nothing.
class PLCycle {
 public:
  PLCycle() = default;
  /// Consecutive points (cyclically) must differ; a single point is not a cycle.
  explicit PLCycle(std::vector<RationalVector> points);

  const std::vector<RationalVector>& points() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }
  std::vector<Segment2> segments() const;

  PLCycle reversed() const;
  PLCycle translate(const RationalVector& v) const;

  friend bool operator==(const PLCycle&, const PLCycle&) = default;

 private:
  std::vector<RationalVector> points_;
};

/// Bounded connected component of the complement of a segment set. The
/// first loop is the outer boundary (counterclockwise); the rest are holes
/// (clockwise, possibly of zero area when a hole is a tree of segments).
struct Region {
  std::vector<std::vector<RationalVector>> loops;
  RationalVector sample;  // a point strictly inside the region
  Rational area;

  friend bool operator==(const Region&, const Region&) = default;
};

/// Bounded faces of the planar arrangement of `segments`. Throws
/// Error(InvalidInput) on zero-length segments.
std::vector<Region> complement_regions(std::span<const Segment2> segments);

/// Signed crossing count of the horizontal ray from `a` to +infinity, with
/// half-open treatment of vertices. Throws Error(PointOnCurve) when `a` lies
/// on the cycle.
long winding_number(const PLCycle& cycle, const RationalVector& a);

struct WeightedRegion {
  long weight;
  Region region;

  friend bool operator==(const WeightedRegion&, const WeightedRegion&) = default;
};

/// Bounded complement regions of a cycle with their winding numbers.
/// Regions of weight zero are omitted.
struct WindingChain {
  std::vector<WeightedRegion> regions;

  friend bool operator==(const WindingChain&, const WindingChain&) = default;
};

WindingChain winding_chain(const PLCycle& cycle);

/// sum over regions of weight * integral_U P dx dy, by Green's theorem on
/// the region loops.
Rational integrate_form_over_chain(const WindingChain& chain, const MultiPolynomial& p);

/// Line integral of Q dy along the oriented cycle.
Rational integrate_pullback(const PLCycle& cycle, const MultiPolynomial& q);

/// Piecewise-linear function on the normal fan of a polygon, given by its
/// values on the primitive facet normals.
class SupportFunctionPL {
 public:
  /// `values` must have exactly one entry per facet normal of `delta0`.
  SupportFunctionPL(ConvexPolytope delta0, std::map<RationalVector, Rational> values);

  /// Values h_delta(e) for every facet normal e of delta0.
  static SupportFunctionPL of(const ConvexPolytope& delta0, const ConvexPolytope& delta);

  const ConvexPolytope& delta0() const noexcept { return delta0_; }
  const std::map<RationalVector, Rational>& values() const noexcept { return values_; }
  const Rational& value(const RationalVector& normal) const;

  /// lambda * this + mu * other (same delta0).
  SupportFunctionPL combine(const Rational& lambda, const SupportFunctionPL& other, const Rational& mu) const;

 private:
  ConvexPolytope delta0_;
  std::map<RationalVector, Rational> values_;
};

/// Image of every vertex of delta0, in counterclockwise boundary order: the
/// intersection of the two lines <x, e> = H(e) of its adjacent facets.
std::vector<RationalVector> gauss_vertex_images(const SupportFunctionPL& h);

/// The cycle through the vertex images, with repeated consecutive points
/// merged; empty when every vertex maps to the same point.
PLCycle gauss_type_map(const SupportFunctionPL& h);

Rational virtual_volume_from_support(const SupportFunctionPL& h);

struct VirtualWindingReport {
  bool equal = false;
  std::size_t samples = 0;
  ConvexChain truncated{2};     // full-dimensional part of chi_{D1} * chi_{D2}^{-1}
  WindingChain winding;          // winding chain of the Gauss-type map of H
  bool negative_region = false;  // some winding weight is negative
};

/// Compares the full-dimensional part of chi_{D1} * chi_{D2}^{-1} with the
/// winding chain of the Gauss-type map of H = h_{D1} - h_{D2}, as functions
/// outside a measure-zero set: both are evaluated at one interior point of
/// every open cell of the line arrangement supporting either side.
/// Throws Error(NotCompatible) when a witness is not analogous to delta0 and
/// Error(InvalidInput) when the witnesses do not realize H.
VirtualWindingReport virtual_winding_check(const SupportFunctionPL& h, const ConvexPolytope& d1, const ConvexPolytope& d2);

/// Numeric volume of the body with support function H: the cycle through
/// grad H at n equally spaced unit directions, snapped exactly to rationals,
/// integrated with P = 1. `gradient` maps a unit direction to grad H there and
/// returns non-finite values where H is not differentiable.
double smooth_support_demo(const std::function<std::array<double, 2>(double, double)>& gradient, int n);

}  // namespace vpoly
