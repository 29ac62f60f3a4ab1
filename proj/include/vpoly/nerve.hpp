#pragma once

#include "vpoly/linalg.hpp"
#include "vpoly/polynomial.hpp"
#include "vpoly/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace vpoly {

/// point + span(directions), kept canonical: directions in reduced row
/// echelon form, point zero in every pivot coordinate.
class AffineSubspace {
 public:
  /// Throws Error(InvalidInput) when the directions are linearly dependent
  /// and Error(DimensionMismatch) on inconsistent lengths.
  AffineSubspace(RationalVector point, std::vector<RationalVector> directions);

  /// {x : normal . x = offset}
  static AffineSubspace hyperplane(const RationalVector& normal, const Rational& offset);

  std::size_t ambient_dim() const noexcept { return point_.size(); }
  int dim() const noexcept { return static_cast<int>(directions_.size()); }
  const RationalVector& point() const noexcept { return point_; }
  const std::vector<RationalVector>& directions() const noexcept { return directions_; }

  /// Rows spanning the orthogonal complement of the directions (canonical),
  /// so the subspace is {x : equations() x = equations() point()}.
  const std::vector<RationalVector>& equations() const noexcept { return equations_; }

  bool contains(const RationalVector& x) const;
  AffineSubspace translate(const RationalVector& v) const;
  /// Coordinates of v in the quotient by the direction space: equations() v.
  RationalVector quotient_coordinates(const RationalVector& v) const;

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.point_ == b.point_ && a.directions_ == b.directions_;
  }

 private:
  RationalVector point_;
  std::vector<RationalVector> directions_;
  std::vector<RationalVector> equations_;
};

/// Exact intersection (in canonical form), or nullopt when empty.
std::optional<AffineSubspace> intersect(std::span<const AffineSubspace> subspaces);

/// Least-norm point of the intersection, or nullopt when empty. For fixed
/// direction spaces it is linear in the translation parts of the inputs.
std::optional<RationalVector> least_norm_point(std::span<const AffineSubspace> subspaces);

/// Indexed family {L_i} in a common ambient space.
class SubspaceArrangement {
 public:
  explicit SubspaceArrangement(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  SubspaceArrangement(std::size_t ambient_dim, std::vector<AffineSubspace> subspaces);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return subspaces_.size(); }
  const std::vector<AffineSubspace>& subspaces() const noexcept { return subspaces_; }
  const AffineSubspace& operator[](std::size_t i) const { return subspaces_[i]; }

  /// L_i + y_i for every i.
  SubspaceArrangement translate(const std::vector<RationalVector>& y) const;

 private:
  std::size_t ambient_;
  std::vector<AffineSubspace> subspaces_;
};

using Simplex = std::vector<std::size_t>;  // sorted vertex indices

class SimplicialComplex {
 public:
  explicit SimplicialComplex(std::size_t vertices = 0);
  /// Closes the given faces downward; every vertex 0..vertices-1 is a face.
  SimplicialComplex(std::size_t vertices, const std::vector<Simplex>& faces);

  std::size_t vertex_count() const noexcept { return vertices_; }
  const std::set<Simplex>& faces() const noexcept { return faces_; }
  bool contains(const Simplex& s) const { return faces_.count(s) > 0; }
  int dimension() const;
  std::vector<Simplex> faces_of_dim(int k) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertices_;
  std::set<Simplex> faces_;
};

inline constexpr std::size_t kMaxNerveVertices = 20;
inline constexpr std::size_t kMaxHomologyFaces = 100000;

/// Faces are the index sets with nonempty common intersection.
SimplicialComplex nerve(const SubspaceArrangement& x);

/// nerve(x1) is a subcomplex of nerve(x2); index sets must agree.
bool dominates(const SubspaceArrangement& x1, const SubspaceArrangement& x2);
bool equivalent(const SubspaceArrangement& x1, const SubspaceArrangement& x2);

/// Piecewise-affine map from the barycentric subdivision of a complex into a
/// union of subspaces: the barycenter of face J goes to a point of the
/// intersection of the subspaces indexed by J.
struct CompatibleMap {
  SimplicialComplex domain;
  std::map<Simplex, RationalVector> barycenter_images;

  /// Image of sum_k weights[k] * barycenter(flag[k]) for a flag
  /// J_0 < J_1 < ... of faces (a simplex of the subdivision).
  RationalVector map_point(const std::vector<Simplex>& flag, const std::vector<Rational>& weights) const;
};

/// Builds the map face by face, using the least-norm point of each
/// intersection. Throws Error(NotCompatible) when some face of k has empty
/// intersection in x2, i.e. exactly when k is not a subcomplex of nerve(x2).
CompatibleMap compatible_map(const SimplicialComplex& k, const SubspaceArrangement& x2);

/// The covering condition: every barycenter image of a face J lies in M_i for all i in J.
bool verify_compatible(const CompatibleMap& g, const SubspaceArrangement& x2);

/// Betti numbers b_0..b_dim over Q. Throws Error(SizeBound) above kMaxHomologyFaces.
std::vector<long> homology_ranks(const SimplicialComplex& k);

/// Intersection of the direction spaces of a family of hyperplanes, as a
/// linear subspace. Throws Error(InvalidInput) on a non-hyperplane member.
AffineSubspace parallel_core(const SubspaceArrangement& x);

struct WedgeReport {
  std::vector<long> betti;
  std::size_t bounded_regions = 0;
  int core_dim = 0;
  /// Dimension n - 1 - core_dim of the spheres in the wedge.
  int sphere_dim = 1;
  /// Expected number of spheres (bounded regions for core 0, distinct lines minus 1 for core 1).
  long expected_spheres = 0;
  bool ok = false;
};

/// Lines in R^2: compares the nerve's Betti numbers with the bounded regions
/// of the complement (clipped to a box containing every crossing with margin 1).
WedgeReport wedge_check(const SubspaceArrangement& x);

using TranslationTuple = std::vector<RationalVector>;

/// For every face of nerve(x), the translated subspaces still meet.
bool is_compatible(const SubspaceArrangement& x, const TranslationTuple& y);

/// compatible_map(nerve(x), x + y); throws Error(NotCompatible) when y is not compatible.
CompatibleMap translate_map(const SubspaceArrangement& x, const TranslationTuple& y);

struct OrientedEdge {
  std::size_t from, to;
  long coeff;
};
/// Integer combination of oriented 1-simplices.
using SimplicialCycle = std::vector<OrientedEdge>;

/// p dx + q dy in R^2.
struct OneForm {
  MultiPolynomial p, q;
};

/// Integral of alpha along g_y(gamma): each oriented edge i -> j runs through
/// the images of the barycenters of {i}, {i, j}, {j}. Throws
/// Error(InvalidInput) when gamma has nonzero boundary or uses an edge
/// outside nerve(x), Error(NotCompatible) for an incompatible y.
Rational integral_F_value(const SubspaceArrangement& x, const SimplicialCycle& gamma, const OneForm& alpha,
                          const TranslationTuple& y);

struct IntegralFReport {
  MultiPolynomial fitted;   // in the family parameters s_1..s_p
  int degree_bound = 0;
  std::size_t fit_samples = 0;
  std::size_t excluded = 0;        // samples where the nerve jumps
  std::size_t holdout_checked = 0;
  std::size_t holdout_mismatches = 0;
  bool ok = false;
};

/// F along the linear family y(s) = sum_j s_j basis[j] of compatible
/// translations: exact fit of degree <= deg(alpha) + 1 over the grid
/// [0, bound + 2]^p (non-generic samples excluded), then verification at
/// `holdout` random rational parameters.
IntegralFReport integral_F(const SubspaceArrangement& x, const SimplicialCycle& gamma, const OneForm& alpha,
                           const std::vector<TranslationTuple>& basis, int holdout, std::uint64_t seed);

}  // namespace vpoly
