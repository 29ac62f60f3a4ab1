#pragma once

#include "vpoly/rational.hpp"

#include <compare>
#include <vector>

namespace vpoly {

/// a x + b y = c, scaled so that the first nonzero of (a, b) is 1.
struct Line2 {
  Rational a, b, c;
  friend bool operator==(const Line2&, const Line2&) = default;
  friend std::strong_ordering operator<=>(const Line2& l, const Line2& r);
};

Line2 line_through(const RationalVector& p, const RationalVector& q);
Line2 canonical_line(const Rational& a, const Rational& b, const Rational& c);

/// Sample points of the plane refinement induced by `lines` and `points`,
/// computed by vertical slabs between consecutive critical abscissae
/// (point abscissae and pairwise line crossings).
///
/// With `interiors_only == false`, returns one point of every cell of every
/// dimension; any function that is constant on the open cells of the
/// arrangement of `lines` (with `points` as extra vertices) is determined by
/// its values there. With `interiors_only == true`, only points interior to
/// 2-cells, none lying on any line.
std::vector<RationalVector> slab_samples(const std::vector<Line2>& lines,
                                         const std::vector<RationalVector>& points,
                                         bool interiors_only);

}  // namespace vpoly
