#include "vpoly/geometry.hpp"

#include "vpoly/error.hpp"
#include "vpoly/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vpoly {

struct ConvexPolytope::Data {
  std::size_t ambient = 0;
  int dim = 0;
  std::vector<RationalVector> vertices;
  std::vector<Halfspace> facets;
  std::vector<Hyperplane> equations;
  std::vector<std::size_t> cycle;
};

namespace {

// Coordinates of the affine hull: projecting onto the pivot columns of the
// reduced direction matrix is a bijection from the affine hull onto Q^k.
struct Chart {
  RationalVector origin;
  std::vector<std::size_t> pivots;
  RowEchelon directions;

  std::size_t dim() const { return pivots.size(); }

  RationalVector project(const RationalVector& x) const {
    RationalVector y(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) y[r] = x[pivots[r]];
    return y;
  }

  RationalVector lift_normal(const RationalVector& chart_normal, std::size_t ambient) const {
    RationalVector a(ambient);
    for (std::size_t r = 0; r < pivots.size(); ++r) a[pivots[r]] = chart_normal[r];
    return a;
  }

  std::vector<Hyperplane> equations() const {
    const std::size_t n = origin.size();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Hyperplane> eqs;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_pivot[j]) continue;
      RationalVector a(n);
      a[j] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) a[pivots[r]] = -directions.reduced(r, j);
      eqs.push_back({a, dot(a, origin)});
    }
    return eqs;
  }
};

Chart make_chart(const std::vector<RationalVector>& pts) {
  const std::size_t n = pts.front().size();
  RationalMatrix d(pts.size() - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) d(i - 1, c) = pts[i][c] - pts[0][c];
  Chart chart;
  chart.origin = pts.front();
  chart.directions = reduce(std::move(d));
  chart.pivots = chart.directions.pivots;
  return chart;
}

Rational cross2(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain on distinct points sorted lexicographically.
// Returns indices of hull vertices in counterclockwise order.
std::vector<std::size_t> monotone_chain(const std::vector<RationalVector>& y) {
  const std::size_t m = y.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y[a] < y[b]; });
  std::vector<std::size_t> h(2 * m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    while (k >= 2 && sgn(cross2(y[h[k - 2]], y[h[k - 1]], y[order[i]])) <= 0) --k;
    h[k++] = order[i];
  }
  for (std::size_t i = m - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross2(y[h[k - 2]], y[h[k - 1]], y[order[i]])) <= 0) --k;
    h[k++] = order[i];
  }
  h.resize(k - 1);
  return h;
}

RationalVector cross3(const RationalVector& a, const RationalVector& b) {
  return RationalVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::size_t index_of(const std::vector<RationalVector>& sorted, const RationalVector& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  return static_cast<std::size_t>(it - sorted.begin());
}

std::shared_ptr<ConvexPolytope::Data> build(std::vector<RationalVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto data = std::make_shared<ConvexPolytope::Data>();
  const std::size_t n = pts.front().size();
  data->ambient = n;
  Chart chart = make_chart(pts);
  const std::size_t k = chart.dim();
  if (k > static_cast<std::size_t>(kMaxHullDim)) {
    throw Error(ErrorKind::DimensionBound, "hull: point set has affine dimension " + std::to_string(k) +
                                               " > " + std::to_string(kMaxHullDim));
  }
  data->dim = static_cast<int>(k);
  data->equations = chart.equations();

  std::vector<RationalVector> y;
  y.reserve(pts.size());
  for (const auto& p : pts) y.push_back(chart.project(p));

  if (k == 0) {
    data->vertices = {pts.front()};
    return data;
  }
  if (k == 1) {
    data->vertices = {pts.front(), pts.back()};
    RationalVector lo(1), hi(1);
    lo[0] = -1;
    hi[0] = 1;
    RationalVector a_lo = chart.lift_normal(lo, n), a_hi = chart.lift_normal(hi, n);
    data->facets.push_back({a_lo, dot(a_lo, pts.front()), {0}});
    data->facets.push_back({a_hi, dot(a_hi, pts.back()), {1}});
    return data;
  }
  if (k == 2) {
    std::vector<std::size_t> ring = monotone_chain(y);
    std::vector<RationalVector> verts;
    for (auto i : ring) verts.push_back(pts[i]);
    std::sort(verts.begin(), verts.end());
    data->vertices = verts;
    for (std::size_t e = 0; e < ring.size(); ++e) {
      const auto& u = y[ring[e]];
      const auto& v = y[ring[(e + 1) % ring.size()]];
      RationalVector chart_normal{v[1] - u[1], u[0] - v[0]};
      RationalVector a = chart.lift_normal(primitive_integer(chart_normal), n);
      std::size_t iu = index_of(verts, pts[ring[e]]);
      std::size_t iv = index_of(verts, pts[ring[(e + 1) % ring.size()]]);
      data->facets.push_back({a, dot(a, pts[ring[e]]), {std::min(iu, iv), std::max(iu, iv)}});
      data->cycle.push_back(iu);
    }
    return data;
  }

  // k == 3: every supporting plane through three affinely independent points.
  std::map<std::pair<RationalVector, Rational>, std::vector<std::size_t>> planes;
  const std::size_t m = y.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      RationalVector dj = y[j] - y[i];
      for (std::size_t l = j + 1; l < m; ++l) {
        RationalVector nrm = cross3(dj, y[l] - y[i]);
        if (nrm.is_zero()) continue;
        nrm = primitive_integer(nrm);
        Rational off = dot(nrm, y[i]);
        bool le = true, ge = true;
        std::vector<std::size_t> on;
        for (std::size_t t = 0; t < m && (le || ge); ++t) {
          int s = (dot(nrm, y[t]) - off).compare(0);
          if (s > 0) le = false;
          if (s < 0) ge = false;
          if (s == 0) on.push_back(t);
        }
        if (!le && !ge) continue;
        if (!le) {
          nrm = -nrm;
          off = -off;
        }
        planes.emplace(std::make_pair(nrm, off), std::move(on));
      }
    }
  }
  std::set<RationalVector> vset;
  std::vector<std::pair<RationalVector, std::vector<RationalVector>>> facet_verts;
  for (const auto& [key, on] : planes) {
    std::vector<RationalVector> face_pts;
    for (auto t : on) face_pts.push_back(pts[t]);
    ConvexPolytope f = hull(face_pts);
    for (const auto& v : f.vertices()) vset.insert(v);
    facet_verts.emplace_back(chart.lift_normal(key.first, n), f.vertices());
  }
  data->vertices.assign(vset.begin(), vset.end());
  for (auto& [a, fv] : facet_verts) {
    std::vector<std::size_t> ids;
    for (const auto& v : fv) ids.push_back(index_of(data->vertices, v));
    std::sort(ids.begin(), ids.end());
    Rational off = dot(a, fv.front());
    data->facets.push_back({std::move(a), std::move(off), std::move(ids)});
  }
  return data;
}

int affine_rank(const std::vector<RationalVector>& pts) {
  if (pts.size() <= 1) return 0;
  const std::size_t n = pts.front().size();
  RationalMatrix d(pts.size() - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) d(i - 1, c) = pts[i][c] - pts[0][c];
  return static_cast<int>(rank(d));
}

}  // namespace

ConvexPolytope hull(std::span<const RationalVector> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "hull: empty point list");
  const std::size_t n = points.front().size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "hull: zero-dimensional ambient space");
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorKind::DimensionMismatch, "hull: mixed point dimensions");
  }
  return ConvexPolytope(build(std::vector<RationalVector>(points.begin(), points.end())));
}

ConvexPolytope hull(std::initializer_list<RationalVector> points) {
  return hull(std::span<const RationalVector>(points.begin(), points.size()));
}

std::size_t ConvexPolytope::ambient_dim() const noexcept { return data_->ambient; }
int ConvexPolytope::dim() const noexcept { return data_->dim; }
const std::vector<RationalVector>& ConvexPolytope::vertices() const noexcept { return data_->vertices; }
const std::vector<Halfspace>& ConvexPolytope::facets() const noexcept { return data_->facets; }
const std::vector<Hyperplane>& ConvexPolytope::affine_hull() const noexcept { return data_->equations; }
const std::vector<std::size_t>& ConvexPolytope::boundary_cycle() const noexcept { return data_->cycle; }

bool ConvexPolytope::contains(const RationalVector& x) const {
  if (x.size() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "contains: dimension mismatch");
  for (const auto& e : data_->equations) {
    if (dot(e.normal, x) != e.offset) return false;
  }
  for (const auto& f : data_->facets) {
    if (dot(f.normal, x) > f.offset) return false;
  }
  return true;
}

bool ConvexPolytope::has_integer_vertices() const {
  for (const auto& v : vertices()) {
    if (!v.is_integral()) return false;
  }
  return true;
}

std::vector<Face> ConvexPolytope::faces() const {
  const auto& fs = facets();
  std::set<std::vector<std::size_t>> sets;
  for (const auto& f : fs) sets.insert(f.vertex_ids);
  std::vector<std::vector<std::size_t>> frontier(sets.begin(), sets.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& a : frontier) {
      for (const auto& f : fs) {
        std::vector<std::size_t> c;
        std::set_intersection(a.begin(), a.end(), f.vertex_ids.begin(), f.vertex_ids.end(), std::back_inserter(c));
        if (!c.empty() && sets.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::size_t> all(vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  sets.insert(all);

  std::vector<Face> out;
  for (const auto& s : sets) {
    Face face;
    face.vertex_ids = s;
    std::vector<RationalVector> pts;
    for (auto i : s) pts.push_back(vertices()[i]);
    face.dim = affine_rank(pts);
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      if (std::includes(fs[fi].vertex_ids.begin(), fs[fi].vertex_ids.end(), s.begin(), s.end()))
        face.facet_ids.push_back(fi);
    }
    out.push_back(std::move(face));
  }
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return a.dim < b.dim; });
  return out;
}

ConvexPolytope ConvexPolytope::face_polytope(const Face& f) const {
  std::vector<RationalVector> pts;
  for (auto i : f.vertex_ids) pts.push_back(vertices()[i]);
  return hull(pts);
}

ConvexPolytope ConvexPolytope::translate(const RationalVector& v) const {
  std::vector<RationalVector> pts = vertices();
  for (auto& p : pts) p += v;
  return hull(pts);
}

ConvexPolytope ConvexPolytope::scale(const Rational& s) const {
  std::vector<RationalVector> pts = vertices();
  for (auto& p : pts) p *= s;
  return hull(pts);
}

bool operator==(const ConvexPolytope& a, const ConvexPolytope& b) {
  return a.data_ == b.data_ || (a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices());
}

std::strong_ordering operator<=>(const ConvexPolytope& a, const ConvexPolytope& b) {
  if (a.data_ == b.data_) return std::strong_ordering::equal;
  if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
  return a.vertices() <=> b.vertices();
}

ConvexPolytope minkowski_sum(const ConvexPolytope& a, const ConvexPolytope& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "minkowski_sum: ambient dimensions differ");
  std::vector<RationalVector> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) sums.push_back(u + v);
  return hull(sums);
}

Rational support_value(const ConvexPolytope& p, const RationalVector& xi) {
  if (xi.size() != p.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "support_value: dimension mismatch");
  Rational best = dot(xi, p.vertices().front());
  for (const auto& v : p.vertices()) {
    Rational s = dot(xi, v);
    if (s > best) best = s;
  }
  return best;
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones) {
    if (c.dim == static_cast<int>(ambient_dim)) out.push_back(c);
  }
  return out;
}

std::vector<RationalVector> Fan::rays() const {
  std::vector<RationalVector> out;
  for (const auto& c : cones) {
    if (c.dim == 1) out.push_back(c.rays.front());
  }
  return out;
}

Fan normal_fan(const ConvexPolytope& p) {
  if (!p.is_full_dimensional())
    throw Error(ErrorKind::NotFullDimensional, "normal_fan: polytope is not full-dimensional");
  if (p.ambient_dim() > static_cast<std::size_t>(kMaxHullDim))
    throw Error(ErrorKind::DimensionBound, "normal_fan: ambient dimension above bound");
  Fan fan;
  fan.ambient_dim = p.ambient_dim();
  for (const Face& f : p.faces()) {
    Cone c;
    for (auto fi : f.facet_ids) c.rays.push_back(p.facets()[fi].normal);
    std::sort(c.rays.begin(), c.rays.end());
    c.dim = static_cast<int>(p.ambient_dim()) - f.dim;
    fan.cones.push_back(std::move(c));
  }
  std::sort(fan.cones.begin(), fan.cones.end());
  return fan;
}

bool analogous(const ConvexPolytope& a, const ConvexPolytope& b) {
  return normal_fan(a) == normal_fan(b);
}

std::vector<RationalVector> lattice_points(const ConvexPolytope& p) {
  const std::size_t n = p.ambient_dim();
  if (n > static_cast<std::size_t>(kMaxHullDim))
    throw Error(ErrorKind::DimensionBound, "lattice_points: ambient dimension above bound");
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational mn = p.vertices().front()[c], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[c] < mn) mn = v[c];
      if (v[c] > mx) mx = v[c];
    }
    lo[c] = ceil_int(mn);
    hi[c] = floor_int(mx);
    if (lo[c] > hi[c]) return {};
  }
  std::vector<RationalVector> out;
  std::vector<Integer> cur = lo;
  while (true) {
    RationalVector x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = Rational(cur[c]);
    if (p.contains(x)) out.push_back(std::move(x));
    std::size_t c = n;
    while (c > 0) {
      --c;
      if (cur[c] < hi[c]) {
        ++cur[c];
        break;
      }
      cur[c] = lo[c];
      if (c == 0) return out;
    }
  }
}

}  // namespace vpoly
