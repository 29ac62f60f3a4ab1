#pragma once

#include "vpoly/rational.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace vpoly {

/// Largest intrinsic dimension for which hulls, faces and fans are built.
inline constexpr int kMaxHullDim = 3;

/// normal . x <= offset, tight exactly on the listed vertices.
struct Halfspace {
  RationalVector normal;
  Rational offset;
  std::vector<std::size_t> vertex_ids;
};

/// normal . x == offset
struct Hyperplane {
  RationalVector normal;
  Rational offset;
};

struct Face {
  std::vector<std::size_t> vertex_ids;   // sorted indices into vertices()
  int dim = 0;
  std::vector<std::size_t> facet_ids;    // facets containing the face
};

/// Closed convex polytope with exact rational vertices, in canonical
/// V-representation: extreme points only, sorted lexicographically.
/// Immutable; copies share storage.
class ConvexPolytope {
 public:
  std::size_t ambient_dim() const noexcept;
  int dim() const noexcept;
  const std::vector<RationalVector>& vertices() const noexcept;

  /// Facets relative to the affine hull (for a segment: its two endpoints).
  /// Normals are primitive integer vectors. Membership is the conjunction of
  /// affine_hull() equalities and facets() inequalities.
  const std::vector<Halfspace>& facets() const noexcept;
  const std::vector<Hyperplane>& affine_hull() const noexcept;

  /// Boundary vertices in counterclockwise order (chart orientation) when
  /// dim() == 2, empty otherwise.
  const std::vector<std::size_t>& boundary_cycle() const noexcept;

  bool contains(const RationalVector& x) const;
  bool is_full_dimensional() const noexcept { return dim() == static_cast<int>(ambient_dim()); }
  bool has_integer_vertices() const;

  /// All nonempty faces including the polytope itself, sorted by dimension.
  std::vector<Face> faces() const;
  ConvexPolytope face_polytope(const Face& f) const;

  ConvexPolytope translate(const RationalVector& v) const;
  /// Set dilation {s x : x in P}; negative factors reflect through the origin.
  ConvexPolytope scale(const Rational& s) const;

  friend bool operator==(const ConvexPolytope& a, const ConvexPolytope& b);
  friend std::strong_ordering operator<=>(const ConvexPolytope& a, const ConvexPolytope& b);

  struct Data;  // opaque storage

 private:
  explicit ConvexPolytope(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  friend ConvexPolytope hull(std::span<const RationalVector> points);
};

/// Convex hull. Any ambient dimension is accepted as long as the affine
/// hull of the points has dimension <= kMaxHullDim.
ConvexPolytope hull(std::span<const RationalVector> points);
ConvexPolytope hull(std::initializer_list<RationalVector> points);

ConvexPolytope minkowski_sum(const ConvexPolytope& a, const ConvexPolytope& b);
Rational support_value(const ConvexPolytope& p, const RationalVector& xi);

/// Polyhedral cone spanned by primitive integer rays (sorted); the zero cone
/// has no rays.
struct Cone {
  std::vector<RationalVector> rays;
  int dim = 0;
  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone& a, const Cone& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.rays <=> b.rays;
  }
};

struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<Cone> cones;  // closed under faces, sorted
  std::vector<Cone> maximal_cones() const;
  std::vector<RationalVector> rays() const;
  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Normal (dual) fan of a full-dimensional polytope: one cone per face F,
/// spanned by the outward facet normals of the facets containing F.
Fan normal_fan(const ConvexPolytope& p);
bool analogous(const ConvexPolytope& a, const ConvexPolytope& b);

/// Integer points of P in lexicographic order.
std::vector<RationalVector> lattice_points(const ConvexPolytope& p);

}  // namespace vpoly
