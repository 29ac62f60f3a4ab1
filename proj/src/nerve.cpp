#include "vpoly/nerve.hpp"

#include "vpoly/error.hpp"
#include "vpoly/measures.hpp"
#include "vpoly/winding.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace vpoly {

namespace {

RationalMatrix rows_matrix(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

RationalVector apply(const std::vector<RationalVector>& rows, const RationalVector& v) {
  RationalVector out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out[r] = dot(rows[r], v);
  return out;
}

// Stacked equations A x = b of all subspaces.
std::pair<RationalMatrix, RationalVector> stack(std::span<const AffineSubspace> subspaces) {
  if (subspaces.empty()) throw Error(ErrorKind::EmptyInput, "intersect: no subspaces");
  const std::size_t n = subspaces.front().ambient_dim();
  std::vector<RationalVector> rows;
  std::vector<Rational> rhs;
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "intersect: ambient dimensions differ");
    for (const auto& e : s.equations()) {
      rows.push_back(e);
      rhs.push_back(dot(e, s.point()));
    }
  }
  RationalVector b(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = rhs[i];
  return {rows_matrix(rows, n), b};
}

std::vector<AffineSubspace> select(const SubspaceArrangement& x, const Simplex& face) {
  std::vector<AffineSubspace> out;
  for (auto i : face) out.push_back(x[i]);
  return out;
}

// Rank over Q of a sparse matrix given as rows of (column, value).
std::size_t sparse_rank(std::vector<std::map<std::size_t, Rational>> rows) {
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots;  // leading column -> normalized row
  for (auto& row : rows) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto p = pivots.find(lead->first);
      if (p == pivots.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead->first, std::move(row));
        break;
      }
      Rational f = lead->second;
      for (const auto& [c, v] : p->second) {
        Rational nv = row[c] - f * v;
        if (vpoly::is_zero(nv)) {
          row.erase(c);
        } else {
          row[c] = nv;
        }
      }
    }
  }
  return pivots.size();
}

void require_lines_in_plane(const SubspaceArrangement& x, const char* op) {
  if (x.ambient_dim() != 2) throw Error(ErrorKind::InvalidInput, std::string(op) + ": lines in R^2 required");
  for (const auto& s : x.subspaces()) {
    if (s.dim() != 1) throw Error(ErrorKind::InvalidInput, std::string(op) + ": every member must be a line");
  }
}

void require_tuple(const SubspaceArrangement& x, const TranslationTuple& y) {
  if (y.size() != x.size()) throw Error(ErrorKind::InvalidInput, "translation tuple has the wrong length");
  for (const auto& v : y) {
    if (v.size() != x.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "translation has the wrong dimension");
  }
}

}  // namespace

AffineSubspace::AffineSubspace(RationalVector point, std::vector<RationalVector> directions) : point_(std::move(point)) {
  const std::size_t n = point_.size();
  for (const auto& d : directions) {
    if (d.size() != n) throw Error(ErrorKind::DimensionMismatch, "affine subspace: direction has the wrong length");
  }
  RowEchelon e = reduce(rows_matrix(directions, n));
  if (e.rank() != directions.size())
    throw Error(ErrorKind::InvalidInput, "affine subspace: directions are linearly dependent");
  for (std::size_t r = 0; r < e.rank(); ++r) {
    directions_.push_back(e.reduced.row(r));
    point_ -= directions_.back() * Rational(point_[e.pivots[r]]);
  }
  equations_ = nullspace(rows_matrix(directions_, n));
}

AffineSubspace AffineSubspace::hyperplane(const RationalVector& normal, const Rational& offset) {
  if (normal.is_zero()) throw Error(ErrorKind::InvalidInput, "hyperplane: zero normal");
  RationalMatrix m = rows_matrix({normal}, normal.size());
  return AffineSubspace(normal * (offset / dot(normal, normal)), nullspace(m));
}

bool AffineSubspace::contains(const RationalVector& x) const {
  if (x.size() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "contains: dimension mismatch");
  return apply(equations_, x) == apply(equations_, point_);
}

AffineSubspace AffineSubspace::translate(const RationalVector& v) const {
  return AffineSubspace(point_ + v, directions_);
}

RationalVector AffineSubspace::quotient_coordinates(const RationalVector& v) const { return apply(equations_, v); }

std::optional<RationalVector> least_norm_point(std::span<const AffineSubspace> subspaces) {
  auto [a, b] = stack(subspaces);
  return solve_least_norm(a, b);
}

std::optional<AffineSubspace> intersect(std::span<const AffineSubspace> subspaces) {
  auto [a, b] = stack(subspaces);
  std::optional<RationalVector> p = solve_least_norm(a, b);
  if (!p) return std::nullopt;
  return AffineSubspace(*p, nullspace(a));
}

SubspaceArrangement::SubspaceArrangement(std::size_t ambient_dim, std::vector<AffineSubspace> subspaces)
    : ambient_(ambient_dim), subspaces_(std::move(subspaces)) {
  for (const auto& s : subspaces_) {
    if (s.ambient_dim() != ambient_) throw Error(ErrorKind::DimensionMismatch, "arrangement: ambient dimensions differ");
  }
}

SubspaceArrangement SubspaceArrangement::translate(const std::vector<RationalVector>& y) const {
  require_tuple(*this, y);
  std::vector<AffineSubspace> moved;
  for (std::size_t i = 0; i < size(); ++i) moved.push_back(subspaces_[i].translate(y[i]));
  return SubspaceArrangement(ambient_, std::move(moved));
}

SimplicialComplex::SimplicialComplex(std::size_t vertices) : vertices_(vertices) {
  for (std::size_t v = 0; v < vertices; ++v) faces_.insert({v});
}

SimplicialComplex::SimplicialComplex(std::size_t vertices, const std::vector<Simplex>& faces)
    : SimplicialComplex(vertices) {
  for (Simplex s : faces) {
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= vertices)
      throw Error(ErrorKind::InvalidInput, "simplicial complex: invalid face");
    if (s.size() > 20) throw Error(ErrorKind::SizeBound, "simplicial complex: face too large to close");
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      Simplex sub;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      faces_.insert(std::move(sub));
    }
  }
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<Simplex> SimplicialComplex::faces_of_dim(int k) const {
  std::vector<Simplex> out;
  for (const auto& f : faces_)
    if (static_cast<int>(f.size()) == k + 1) out.push_back(f);
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  if (vertices_ != other.vertices_) return false;
  return std::includes(other.faces_.begin(), other.faces_.end(), faces_.begin(), faces_.end());
}

SimplicialComplex nerve(const SubspaceArrangement& x) {
  if (x.size() > kMaxNerveVertices)
    throw Error(ErrorKind::SizeBound, "nerve: at most " + std::to_string(kMaxNerveVertices) + " subspaces");
  std::vector<Simplex> faces;
  // Supersets of a face with empty intersection are never visited.
  std::function<void(Simplex&)> extend = [&](Simplex& face) {
    for (std::size_t j = face.empty() ? 0 : face.back() + 1; j < x.size(); ++j) {
      face.push_back(j);
      if (least_norm_point(select(x, face))) {
        faces.push_back(face);
        extend(face);
      }
      face.pop_back();
    }
  };
  Simplex start;
  extend(start);
  return SimplicialComplex(x.size(), faces);
}

bool dominates(const SubspaceArrangement& x1, const SubspaceArrangement& x2) {
  if (x1.size() != x2.size()) throw Error(ErrorKind::InvalidInput, "dominates: index sets differ");
  return nerve(x1).is_subcomplex_of(nerve(x2));
}

bool equivalent(const SubspaceArrangement& x1, const SubspaceArrangement& x2) {
  if (x1.size() != x2.size()) throw Error(ErrorKind::InvalidInput, "equivalent: index sets differ");
  return nerve(x1) == nerve(x2);
}

RationalVector CompatibleMap::map_point(const std::vector<Simplex>& flag, const std::vector<Rational>& weights) const {
  if (flag.empty() || flag.size() != weights.size())
    throw Error(ErrorKind::InvalidInput, "map_point: flag and weights differ in length");
  RationalVector out;
  for (std::size_t k = 0; k < flag.size(); ++k) {
    if (k > 0 && !std::includes(flag[k].begin(), flag[k].end(), flag[k - 1].begin(), flag[k - 1].end()))
      throw Error(ErrorKind::InvalidInput, "map_point: faces do not form a flag");
    auto it = barycenter_images.find(flag[k]);
    if (it == barycenter_images.end()) throw Error(ErrorKind::InvalidInput, "map_point: face not in the domain");
    RationalVector term = it->second * weights[k];
    out = k == 0 ? term : out + term;
  }
  return out;
}

CompatibleMap compatible_map(const SimplicialComplex& k, const SubspaceArrangement& x2) {
  if (k.vertex_count() != x2.size()) throw Error(ErrorKind::InvalidInput, "compatible_map: index sets differ");
  CompatibleMap g{k, {}};
  for (const auto& face : k.faces()) {
    std::optional<RationalVector> p = least_norm_point(select(x2, face));
    if (!p) throw Error(ErrorKind::NotCompatible, "compatible_map: a face of the complex has empty intersection");
    g.barycenter_images.emplace(face, std::move(*p));
  }
  return g;
}

bool verify_compatible(const CompatibleMap& g, const SubspaceArrangement& x2) {
  for (const auto& [face, image] : g.barycenter_images) {
    for (auto i : face) {
      if (!x2[i].contains(image)) return false;
    }
  }
  return true;
}

std::vector<long> homology_ranks(const SimplicialComplex& k) {
  if (k.faces().size() > kMaxHomologyFaces)
    throw Error(ErrorKind::SizeBound, "homology_ranks: more than " + std::to_string(kMaxHomologyFaces) + " faces");
  const int top = k.dimension();
  if (top < 0) return {};
  std::vector<std::vector<Simplex>> by_dim(top + 1);
  for (const auto& f : k.faces()) by_dim[f.size() - 1].push_back(f);
  // rank of the boundary map C_d -> C_{d-1}
  std::vector<std::size_t> boundary_rank(top + 2, 0);
  for (int d = 1; d <= top; ++d) {
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) index.emplace(by_dim[d - 1][i], i);
    std::vector<std::map<std::size_t, Rational>> rows;
    for (const auto& s : by_dim[d]) {
      std::map<std::size_t, Rational> row;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(drop));
        row[index.at(f)] = (drop % 2 == 0) ? 1 : -1;
      }
      rows.push_back(std::move(row));
    }
    boundary_rank[d] = sparse_rank(std::move(rows));
  }
  std::vector<long> betti(top + 1);
  for (int d = 0; d <= top; ++d) {
    betti[d] = static_cast<long>(by_dim[d].size()) - static_cast<long>(boundary_rank[d]) -
               static_cast<long>(boundary_rank[d + 1]);
  }
  return betti;
}

AffineSubspace parallel_core(const SubspaceArrangement& x) {
  if (x.size() == 0) throw Error(ErrorKind::EmptyInput, "parallel_core: empty family");
  std::vector<RationalVector> normals;
  for (const auto& s : x.subspaces()) {
    if (s.dim() != static_cast<int>(x.ambient_dim()) - 1)
      throw Error(ErrorKind::InvalidInput, "parallel_core: every member must be a hyperplane");
    normals.push_back(s.equations().front());
  }
  return AffineSubspace(RationalVector(x.ambient_dim()), nullspace(rows_matrix(normals, x.ambient_dim())));
}

WedgeReport wedge_check(const SubspaceArrangement& x) {
  require_lines_in_plane(x, "wedge_check");
  WedgeReport r;
  r.core_dim = parallel_core(x).dim();
  r.sphere_dim = 1 - r.core_dim;
  SimplicialComplex k = nerve(x);
  r.betti = homology_ranks(k);

  std::vector<RationalVector> crossings;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      std::vector<AffineSubspace> pair{x[i], x[j]};
      auto meet = intersect(pair);
      if (meet && meet->dim() == 0) crossings.push_back(meet->point());
    }
  }
  if (crossings.empty())
    for (const auto& s : x.subspaces()) crossings.push_back(s.point());
  RationalVector lo = crossings.front(), hi = lo;
  for (const auto& p : crossings) {
    for (std::size_t c = 0; c < 2; ++c) {
      lo[c] = std::min(lo[c], p[c]);
      hi[c] = std::max(hi[c], p[c]);
    }
  }
  for (std::size_t c = 0; c < 2; ++c) {
    lo[c] -= 1;
    hi[c] += 1;
  }
  std::vector<Segment2> segments;
  for (const auto& s : x.subspaces()) {
    const RationalVector& p = s.point();
    const RationalVector& d = s.directions().front();
    std::optional<Rational> tmin, tmax;
    for (std::size_t c = 0; c < 2; ++c) {
      if (vpoly::is_zero(d[c])) continue;
      Rational t1 = (lo[c] - p[c]) / d[c], t2 = (hi[c] - p[c]) / d[c];
      if (t2 < t1) std::swap(t1, t2);
      if (!tmin || t1 > *tmin) tmin = t1;
      if (!tmax || t2 < *tmax) tmax = t2;
    }
    segments.push_back({p + d * *tmin, p + d * *tmax});
  }
  r.bounded_regions = complement_regions(segments).size();

  auto higher_zero = [&](std::size_t from) {
    for (std::size_t d = from; d < r.betti.size(); ++d)
      if (r.betti[d] != 0) return false;
    return true;
  };
  if (r.core_dim == 0) {
    long b1 = r.betti.size() > 1 ? r.betti[1] : 0;
    r.expected_spheres = static_cast<long>(r.bounded_regions);
    r.ok = r.betti[0] == 1 && b1 == r.expected_spheres && higher_zero(2);
  } else {
    std::vector<AffineSubspace> distinct;
    for (const auto& s : x.subspaces())
      if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
    r.expected_spheres = static_cast<long>(distinct.size()) - 1;
    r.ok = r.betti[0] == r.expected_spheres + 1 && higher_zero(1) && r.bounded_regions == 0;
  }
  return r;
}

bool is_compatible(const SubspaceArrangement& x, const TranslationTuple& y) {
  SubspaceArrangement moved = x.translate(y);
  SimplicialComplex k = nerve(x);
  for (const auto& face : k.faces()) {
    if (!least_norm_point(select(moved, face))) return false;
  }
  return true;
}

CompatibleMap translate_map(const SubspaceArrangement& x, const TranslationTuple& y) {
  if (!is_compatible(x, y)) throw Error(ErrorKind::NotCompatible, "translate_map: translation tuple is not compatible");
  return compatible_map(nerve(x), x.translate(y));
}

namespace {

Rational segment_integral(const OneForm& alpha, const RationalVector& a, const RationalVector& b) {
  RationalVector d = b - a;
  Rational s = 0;
  if (!vpoly::is_zero(d[0])) s += integrate_unit_interval(restrict_to_line(alpha.p, a, d)) * d[0];
  if (!vpoly::is_zero(d[1])) s += integrate_unit_interval(restrict_to_line(alpha.q, a, d)) * d[1];
  return s;
}

void check_cycle(const SimplicialComplex& k, const SimplicialCycle& gamma) {
  std::map<std::size_t, long> boundary;
  for (const auto& e : gamma) {
    Simplex s{std::min(e.from, e.to), std::max(e.from, e.to)};
    if (e.from == e.to || !k.contains(s)) throw Error(ErrorKind::InvalidInput, "cycle uses an edge outside the nerve");
    boundary[e.to] += e.coeff;
    boundary[e.from] -= e.coeff;
  }
  for (const auto& [v, c] : boundary) {
    if (c != 0) throw Error(ErrorKind::InvalidInput, "chain has nonzero boundary");
  }
}

Rational integrate_cycle(const CompatibleMap& g, const SimplicialCycle& gamma, const OneForm& alpha) {
  Rational total = 0;
  for (const auto& e : gamma) {
    const RationalVector& a = g.barycenter_images.at({e.from});
    const RationalVector& m = g.barycenter_images.at({std::min(e.from, e.to), std::max(e.from, e.to)});
    const RationalVector& b = g.barycenter_images.at({e.to});
    total += (segment_integral(alpha, a, m) + segment_integral(alpha, m, b)) * e.coeff;
  }
  return total;
}

void require_form(const SubspaceArrangement& x, const OneForm& alpha) {
  if (x.ambient_dim() != 2 || alpha.p.vars() != 2 || alpha.q.vars() != 2)
    throw Error(ErrorKind::DimensionMismatch, "integral_F: ambient R^2 and a form in 2 variables required");
}

}  // namespace

Rational integral_F_value(const SubspaceArrangement& x, const SimplicialCycle& gamma, const OneForm& alpha,
                          const TranslationTuple& y) {
  require_form(x, alpha);
  check_cycle(nerve(x), gamma);
  return integrate_cycle(translate_map(x, y), gamma, alpha);
}

IntegralFReport integral_F(const SubspaceArrangement& x, const SimplicialCycle& gamma, const OneForm& alpha,
                           const std::vector<TranslationTuple>& basis, int holdout, std::uint64_t seed) {
  require_form(x, alpha);
  const SimplicialComplex k = nerve(x);
  check_cycle(k, gamma);
  for (const auto& b : basis) {
    require_tuple(x, b);
    if (!is_compatible(x, b)) throw Error(ErrorKind::NotCompatible, "integral_F: basis translation is not compatible");
  }
  const std::size_t p = basis.size();
  IntegralFReport r;
  r.degree_bound = std::max(alpha.p.degree(), alpha.q.degree()) + 1;
  if (r.degree_bound < 0) r.degree_bound = 0;

  auto tuple_at = [&](const std::vector<Rational>& s) {
    TranslationTuple y(x.size(), RationalVector(x.ambient_dim()));
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t i = 0; i < x.size(); ++i) y[i] += basis[j][i] * s[j];
    return y;
  };
  // Value of F at s, or nullopt where the nerve jumps.
  auto value_at = [&](const std::vector<Rational>& s) -> std::optional<Rational> {
    TranslationTuple y = tuple_at(s);
    SubspaceArrangement moved = x.translate(y);
    if (!(nerve(moved) == k)) return std::nullopt;
    return integrate_cycle(compatible_map(k, moved), gamma, alpha);
  };

  std::map<std::vector<long>, Rational> samples;
  const long side = r.degree_bound + 2;
  std::vector<long> t(p, 0);
  while (true) {
    std::vector<Rational> s(t.begin(), t.end());
    if (auto v = value_at(s)) {
      samples[t] = *v;
    } else {
      ++r.excluded;
    }
    std::size_t i = p;
    while (i > 0 && t[i - 1] == side) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  r.fit_samples = samples.size();
  try {
    if (p == 0) {
      if (samples.empty()) throw Error(ErrorKind::Inconsistent, "integral_F: no generic sample");
      r.fitted = MultiPolynomial::constant(0, samples.begin()->second);
    } else {
      r.fitted = interpolate(samples, r.degree_bound);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inconsistent) throw;
    return r;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-40, 40), den(2, 9);
  int attempts = 0;
  while (static_cast<int>(r.holdout_checked) < holdout && attempts < 50 * (holdout + 1)) {
    ++attempts;
    std::vector<Rational> s(p);
    for (auto& v : s) v = Rational(num(rng), den(rng));
    auto v = value_at(s);
    if (!v) continue;
    RationalVector sv(p);
    for (std::size_t j = 0; j < p; ++j) sv[j] = s[j];
    ++r.holdout_checked;
    if (r.fitted.evaluate(sv) != *v) ++r.holdout_mismatches;
  }
  r.ok = r.holdout_mismatches == 0 && static_cast<int>(r.holdout_checked) == holdout &&
         r.fitted.degree() <= r.degree_bound;
  return r;
}

}  // namespace vpoly
