#include "vpoly/winding.hpp"

#include "vpoly/error.hpp"
#include "vpoly/refinement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>

namespace vpoly {

namespace {

Rational cross(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const RationalVector& p, const RationalVector& a, const RationalVector& b) {
  if (!is_zero(cross(a, b, p))) return false;
  return dot(p - a, p - b) <= 0;
}

void require_plane(const RationalVector& p, const char* op) {
  if (p.size() != 2) throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": points must lie in R^2");
}

// Twice the signed area of a closed loop.
Rational twice_area(const std::vector<RationalVector>& loop) {
  Rational s = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto& a = loop[i];
    const auto& b = loop[(i + 1) % loop.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s;
}

// Crossing-number winding of a closed loop around a point not on it.
long loop_winding(const std::vector<RationalVector>& loop, const RationalVector& a) {
  long w = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto& p = loop[i];
    const auto& q = loop[(i + 1) % loop.size()];
    if (p[1] <= a[1]) {
      if (q[1] > a[1] && cross(p, q, a) > 0) ++w;
    } else if (q[1] <= a[1] && cross(p, q, a) < 0) {
      --w;
    }
  }
  return w;
}

// Counterclockwise angular order of direction vectors, starting at angle 0.
bool angle_less(const RationalVector& u, const RationalVector& v) {
  auto half = [](const RationalVector& d) { return (d[1] > 0 || (is_zero(d[1]) && d[0] > 0)) ? 0 : 1; };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return u[0] * v[1] - u[1] * v[0] > 0;
}

bool boxes_overlap(const Segment2& s, const Segment2& t) {
  for (std::size_t c = 0; c < 2; ++c) {
    const Rational& slo = std::min(s.a[c], s.b[c]);
    const Rational& shi = std::max(s.a[c], s.b[c]);
    const Rational& tlo = std::min(t.a[c], t.b[c]);
    const Rational& thi = std::max(t.a[c], t.b[c]);
    if (shi < tlo || thi < slo) return false;
  }
  return true;
}

// Points of t lying on s (the crossing point, or overlap endpoints when collinear).
void split_points(const Segment2& s, const Segment2& t, std::vector<RationalVector>& out) {
  RationalVector d = s.b - s.a, e = t.b - t.a;
  Rational den = d[0] * e[1] - d[1] * e[0];
  if (is_zero(den)) {
    if (!is_zero(cross(s.a, s.b, t.a))) return;
    for (const auto* p : {&t.a, &t.b}) {
      if (on_segment(*p, s.a, s.b)) out.push_back(*p);
    }
    return;
  }
  RationalVector w = t.a - s.a;
  Rational u = (w[0] * e[1] - w[1] * e[0]) / den;
  Rational v = (w[0] * d[1] - w[1] * d[0]) / den;
  if (u < 0 || u > 1 || v < 0 || v > 1) return;
  out.push_back(s.a + d * u);
}

struct PlanarGraph {
  std::vector<RationalVector> vertices;
  std::vector<std::vector<std::size_t>> out;  // neighbours in counterclockwise order
};

PlanarGraph build_arrangement(std::span<const Segment2> segments) {
  for (const auto& s : segments) {
    require_plane(s.a, "complement_regions");
    require_plane(s.b, "complement_regions");
    if (s.a == s.b) throw Error(ErrorKind::InvalidInput, "complement_regions: zero-length segment");
  }
  std::set<std::pair<RationalVector, RationalVector>> edges;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment2& s = segments[i];
    std::vector<RationalVector> pts{s.a, s.b};
    for (std::size_t j = 0; j < segments.size(); ++j) {
      if (j != i && boxes_overlap(s, segments[j])) split_points(s, segments[j], pts);
    }
    RationalVector d = s.b - s.a;
    std::size_t axis = is_zero(d[0]) ? 1 : 0;
    std::vector<std::pair<Rational, RationalVector>> along;
    for (auto& p : pts) along.emplace_back((p[axis] - s.a[axis]) / d[axis], std::move(p));
    std::sort(along.begin(), along.end());
    along.erase(std::unique(along.begin(), along.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
                along.end());
    for (std::size_t k = 0; k + 1 < along.size(); ++k) {
      const auto& p = along[k].second;
      const auto& q = along[k + 1].second;
      edges.insert(p < q ? std::pair{p, q} : std::pair{q, p});
    }
  }
  PlanarGraph arr;
  std::map<RationalVector, std::size_t> id;
  auto vertex = [&](const RationalVector& p) {
    auto [it, inserted] = id.emplace(p, arr.vertices.size());
    if (inserted) {
      arr.vertices.push_back(p);
      arr.out.emplace_back();
    }
    return it->second;
  };
  for (const auto& [p, q] : edges) {
    std::size_t a = vertex(p), b = vertex(q);
    arr.out[a].push_back(b);
    arr.out[b].push_back(a);
  }
  for (std::size_t v = 0; v < arr.out.size(); ++v) {
    const RationalVector& o = arr.vertices[v];
    std::sort(arr.out[v].begin(), arr.out[v].end(), [&](std::size_t x, std::size_t y) {
      return angle_less(arr.vertices[x] - o, arr.vertices[y] - o);
    });
  }
  return arr;
}

struct Loop {
  std::vector<std::size_t> ids;
  Rational twice_area;
  std::size_t component;
};

std::vector<Loop> trace_loops(const PlanarGraph& arr) {
  const std::size_t nv = arr.vertices.size();
  std::vector<std::size_t> comp(nv);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w : arr.out[v]) comp[find(v)] = find(w);

  std::vector<std::vector<bool>> used(nv);
  for (std::size_t v = 0; v < nv; ++v) used[v].assign(arr.out[v].size(), false);
  std::vector<Loop> loops;
  for (std::size_t v0 = 0; v0 < nv; ++v0) {
    for (std::size_t k0 = 0; k0 < arr.out[v0].size(); ++k0) {
      if (used[v0][k0]) continue;
      Loop loop;
      std::size_t v = v0, k = k0;
      while (!used[v][k]) {
        used[v][k] = true;
        loop.ids.push_back(v);
        std::size_t w = arr.out[v][k];
        const auto& around = arr.out[w];
        std::size_t back = std::find(around.begin(), around.end(), v) - around.begin();
        k = (back + around.size() - 1) % around.size();
        v = w;
      }
      std::vector<RationalVector> pts;
      for (auto i : loop.ids) pts.push_back(arr.vertices[i]);
      loop.twice_area = twice_area(pts);
      loop.component = find(v0);
      loops.push_back(std::move(loop));
    }
  }
  return loops;
}

std::vector<RationalVector> loop_points(const PlanarGraph& arr, const Loop& l) {
  std::vector<RationalVector> pts;
  for (auto i : l.ids) pts.push_back(arr.vertices[i]);
  return pts;
}

// A point strictly inside the face bounded by `outer`: on a vertical line just
// right of the leftmost boundary vertex, no hole reaches, so one of the gaps
// between consecutive boundary crossings lies in the face.
RationalVector interior_point(const std::vector<RationalVector>& outer, const std::vector<RationalVector>& all) {
  Rational xmin = outer.front()[0];
  for (const auto& p : outer) xmin = std::min(xmin, p[0]);
  std::optional<Rational> xnext;
  for (const auto& p : all) {
    if (p[0] > xmin && (!xnext || p[0] < *xnext)) xnext = p[0];
  }
  Rational x0 = (xmin + *xnext) / 2;
  std::vector<Rational> ys;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const auto& p = outer[i];
    const auto& q = outer[(i + 1) % outer.size()];
    if ((p[0] < x0) != (q[0] < x0)) ys.push_back(p[1] + (q[1] - p[1]) * (x0 - p[0]) / (q[0] - p[0]));
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    RationalVector c{x0, (ys[i] + ys[i + 1]) / 2};
    if (loop_winding(outer, c) == 1) return c;
  }
  throw Error(ErrorKind::Numeric, "complement_regions: no interior point found");
}

// Line integral of Q dy along the segment a -> b.
Rational edge_integral(const MultiPolynomial& q, const RationalVector& a, const RationalVector& b) {
  RationalVector d = b - a;
  if (is_zero(d[1])) return 0;
  return integrate_unit_interval(restrict_to_line(q, a, d)) * d[1];
}

Rational loop_integral(const MultiPolynomial& q, const std::vector<RationalVector>& loop) {
  Rational s = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) s += edge_integral(q, loop[i], loop[(i + 1) % loop.size()]);
  return s;
}

void require_two_vars(const MultiPolynomial& p, const char* op) {
  if (p.vars() != 2) throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": polynomial must have 2 variables");
}

}  // namespace

PLCycle::PLCycle(std::vector<RationalVector> points) : points_(std::move(points)) {
  if (points_.size() == 1) throw Error(ErrorKind::InvalidInput, "cycle: a single point is not a cycle");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    require_plane(points_[i], "cycle");
    if (points_[i] == points_[(i + 1) % points_.size()])
      throw Error(ErrorKind::InvalidInput, "cycle: consecutive points coincide");
  }
}

std::vector<Segment2> PLCycle::segments() const {
  std::vector<Segment2> s;
  for (std::size_t i = 0; i < points_.size(); ++i) s.push_back({points_[i], points_[(i + 1) % points_.size()]});
  return s;
}

PLCycle PLCycle::reversed() const {
  std::vector<RationalVector> p(points_.rbegin(), points_.rend());
  return PLCycle(std::move(p));
}

PLCycle PLCycle::translate(const RationalVector& v) const {
  std::vector<RationalVector> p = points_;
  for (auto& x : p) x += v;
  return PLCycle(std::move(p));
}

std::vector<Region> complement_regions(std::span<const Segment2> segments) {
  PlanarGraph arr = build_arrangement(segments);
  std::vector<Loop> loops = trace_loops(arr);
  std::vector<std::size_t> faces, holes;
  for (std::size_t i = 0; i < loops.size(); ++i) (loops[i].twice_area > 0 ? faces : holes).push_back(i);

  std::vector<Region> regions(faces.size());
  std::vector<std::vector<RationalVector>> outer(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    outer[f] = loop_points(arr, loops[faces[f]]);
    regions[f].loops.push_back(outer[f]);
    regions[f].area = loops[faces[f]].twice_area / 2;
  }
  // Each component's outer boundary is a hole of the smallest face of
  // another component that surrounds it.
  for (std::size_t h : holes) {
    const RationalVector& probe = arr.vertices[loops[h].ids.front()];
    std::optional<std::size_t> best;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (loops[faces[f]].component == loops[h].component) continue;
      if (loop_winding(outer[f], probe) == 0) continue;
      if (!best || regions[f].area < regions[*best].area) best = f;
    }
    if (!best) continue;
    regions[*best].loops.push_back(loop_points(arr, loops[h]));
    regions[*best].area += loops[h].twice_area / 2;
  }
  for (auto& r : regions) {
    std::vector<RationalVector> all;
    for (const auto& l : r.loops) all.insert(all.end(), l.begin(), l.end());
    r.sample = interior_point(r.loops.front(), all);
  }
  return regions;
}

long winding_number(const PLCycle& cycle, const RationalVector& a) {
  require_plane(a, "winding_number");
  for (const auto& s : cycle.segments()) {
    if (on_segment(a, s.a, s.b)) throw Error(ErrorKind::PointOnCurve, "winding_number: point lies on the cycle");
  }
  if (cycle.empty()) return 0;
  return loop_winding(cycle.points(), a);
}

WindingChain winding_chain(const PLCycle& cycle) {
  std::vector<Segment2> segs = cycle.segments();
  WindingChain out;
  for (auto& r : complement_regions(segs)) {
    long w = loop_winding(cycle.points(), r.sample);
    if (w != 0) out.regions.push_back({w, std::move(r)});
  }
  return out;
}

Rational integrate_form_over_chain(const WindingChain& chain, const MultiPolynomial& p) {
  require_two_vars(p, "integrate_form_over_chain");
  MultiPolynomial q = p.antiderivative(0);
  Rational total = 0;
  for (const auto& wr : chain.regions) {
    Rational s = 0;
    for (const auto& loop : wr.region.loops) s += loop_integral(q, loop);
    total += s * wr.weight;
  }
  return total;
}

Rational integrate_pullback(const PLCycle& cycle, const MultiPolynomial& q) {
  require_two_vars(q, "integrate_pullback");
  return loop_integral(q, cycle.points());
}

SupportFunctionPL::SupportFunctionPL(ConvexPolytope delta0, std::map<RationalVector, Rational> values)
    : delta0_(std::move(delta0)), values_(std::move(values)) {
  if (delta0_.ambient_dim() != 2 || !delta0_.is_full_dimensional())
    throw Error(ErrorKind::NotFullDimensional, "support function: delta0 must be a polygon in R^2");
  std::set<RationalVector> normals;
  for (const auto& f : delta0_.facets()) normals.insert(f.normal);
  if (normals.size() != values_.size())
    throw Error(ErrorKind::InvalidInput, "support function: need one value per facet normal of delta0");
  for (const auto& [e, v] : values_) {
    if (!normals.count(e)) throw Error(ErrorKind::InvalidInput, "support function: value given on a non-facet normal");
  }
}

SupportFunctionPL SupportFunctionPL::of(const ConvexPolytope& delta0, const ConvexPolytope& delta) {
  std::map<RationalVector, Rational> values;
  for (const auto& f : delta0.facets()) values[f.normal] = support_value(delta, f.normal);
  return SupportFunctionPL(delta0, std::move(values));
}

const Rational& SupportFunctionPL::value(const RationalVector& normal) const {
  auto it = values_.find(normal);
  if (it == values_.end()) throw Error(ErrorKind::InvalidInput, "support function: not a facet normal of delta0");
  return it->second;
}

SupportFunctionPL SupportFunctionPL::combine(const Rational& lambda, const SupportFunctionPL& other,
                                             const Rational& mu) const {
  if (!(other.delta0_ == delta0_)) throw Error(ErrorKind::InvalidInput, "support function: different reference polygons");
  std::map<RationalVector, Rational> values;
  for (const auto& [e, v] : values_) values[e] = lambda * v + mu * other.value(e);
  return SupportFunctionPL(delta0_, std::move(values));
}

std::vector<RationalVector> gauss_vertex_images(const SupportFunctionPL& h) {
  const ConvexPolytope& d0 = h.delta0();
  const auto& cyc = d0.boundary_cycle();
  const std::size_t m = cyc.size();
  // edge_facet[i]: facet through boundary vertices cyc[i] and cyc[i+1]
  std::vector<const Halfspace*> edge_facet(m, nullptr);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t a = cyc[i], b = cyc[(i + 1) % m];
    for (const auto& f : d0.facets()) {
      const auto& ids = f.vertex_ids;
      if (std::count(ids.begin(), ids.end(), a) && std::count(ids.begin(), ids.end(), b)) edge_facet[i] = &f;
    }
  }
  std::vector<RationalVector> images;
  for (std::size_t i = 0; i < m; ++i) {
    const RationalVector& e1 = edge_facet[(i + m - 1) % m]->normal;
    const RationalVector& e2 = edge_facet[i]->normal;
    const Rational& h1 = h.value(e1);
    const Rational& h2 = h.value(e2);
    Rational det = e1[0] * e2[1] - e1[1] * e2[0];
    if (is_zero(det)) throw Error(ErrorKind::InvalidInput, "gauss_type_map: adjacent facet normals are parallel");
    images.push_back(RationalVector{(h1 * e2[1] - h2 * e1[1]) / det, (e1[0] * h2 - e2[0] * h1) / det});
  }
  return images;
}

PLCycle gauss_type_map(const SupportFunctionPL& h) {
  std::vector<RationalVector> pts;
  for (auto& p : gauss_vertex_images(h)) {
    if (pts.empty() || !(pts.back() == p)) pts.push_back(std::move(p));
  }
  while (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();
  if (pts.size() <= 1) return PLCycle();
  return PLCycle(std::move(pts));
}

Rational virtual_volume_from_support(const SupportFunctionPL& h) {
  return integrate_form_over_chain(winding_chain(gauss_type_map(h)), MultiPolynomial::constant(2, 1));
}

VirtualWindingReport virtual_winding_check(const SupportFunctionPL& h, const ConvexPolytope& d1, const ConvexPolytope& d2) {
  for (const auto* d : {&d1, &d2}) {
    if (d->ambient_dim() != 2 || !d->is_full_dimensional() || !analogous(*d, h.delta0()))
      throw Error(ErrorKind::NotCompatible, "virtual_winding_check: witness is not analogous to delta0");
  }
  for (const auto& [e, v] : h.values()) {
    if (support_value(d1, e) - support_value(d2, e) != v)
      throw Error(ErrorKind::InvalidInput, "virtual_winding_check: witnesses do not realize H");
  }
  VirtualWindingReport r;
  r.truncated = truncate_lower_dim(product(chain_of(d1), inverse(d2)));
  PLCycle gamma = gauss_type_map(h);
  r.winding = winding_chain(gamma);
  for (const auto& wr : r.winding.regions) r.negative_region = r.negative_region || wr.weight < 0;

  std::vector<Line2> lines;
  std::vector<RationalVector> points;
  for (const auto& t : r.truncated.terms()) {
    for (const auto& f : t.polytope.facets()) lines.push_back(canonical_line(f.normal[0], f.normal[1], f.offset));
    points.insert(points.end(), t.polytope.vertices().begin(), t.polytope.vertices().end());
  }
  for (const auto& s : gamma.segments()) {
    lines.push_back(line_through(s.a, s.b));
    points.push_back(s.a);
  }
  r.equal = true;
  for (const auto& x : slab_samples(lines, points, true)) {
    ++r.samples;
    if (evaluate(r.truncated, x) != Rational(winding_number(gamma, x))) {
      r.equal = false;
      break;
    }
  }
  return r;
}

double smooth_support_demo(const std::function<std::array<double, 2>(double, double)>& gradient, int n) {
  if (n < 16) throw Error(ErrorKind::InvalidInput, "smooth_support_demo: need at least 16 samples");
  std::vector<RationalVector> pts;
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    double t = 2 * pi * i / n;
    std::array<double, 2> g = gradient(std::cos(t), std::sin(t));
    if (!std::isfinite(g[0]) || !std::isfinite(g[1]))
      throw Error(ErrorKind::Numeric, "smooth_support_demo: gradient undefined at a sample direction");
    RationalVector p{Rational(g[0]), Rational(g[1])};
    if (pts.empty() || !(pts.back() == p)) pts.push_back(std::move(p));
  }
  while (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();
  if (pts.size() <= 1) return 0;
  Rational v = integrate_form_over_chain(winding_chain(PLCycle(std::move(pts))), MultiPolynomial::constant(2, 1));
  return v.convert_to<double>();
}

}  // namespace vpoly
