#include "vpoly/svg.hpp"

#include "vpoly/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vpoly::svg {

namespace {

struct P {
  double x, y;
};

P to_point(const RationalVector& v) { return {v[0].convert_to<double>(), v[1].convert_to<double>()}; }

// Collects shapes in model coordinates, then writes them with y pointing up.
class Canvas {
 public:
  void path(std::vector<std::vector<P>> loops, const std::string& fill, const std::string& stroke) {
    for (const auto& l : loops) grow(l);
    items_.push_back({std::move(loops), fill, stroke, true});
  }
  void polyline(std::vector<P> pts, const std::string& stroke, bool closed) {
    grow(pts);
    items_.push_back({{std::move(pts)}, "none", stroke, closed});
  }
  void dot(P p, const std::string& color) {
    grow({p});
    dots_.push_back({p, color});
  }

  std::string render() const {
    double lo_x = min_x_, lo_y = min_y_, hi_x = max_x_, hi_y = max_y_;
    if (!(lo_x <= hi_x)) lo_x = lo_y = -1, hi_x = hi_y = 1;
    double pad = 0.05 * std::max({hi_x - lo_x, hi_y - lo_y, 1e-9}) + 1e-9;
    lo_x -= pad, lo_y -= pad, hi_x += pad, hi_y += pad;
    double w = hi_x - lo_x, h = hi_y - lo_y;
    double stroke = 0.004 * std::max(w, h);
    std::ostringstream out;
    out.precision(10);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_x << ' ' << -hi_y << ' ' << w << ' ' << h
        << "\" width=\"480\" height=\"" << std::max(1.0, 480 * h / w) << "\">\n";
    out << "<g transform=\"scale(1,-1)\" stroke-width=\"" << stroke << "\">\n";
    for (const auto& it : items_) {
      out << "<path d=\"";
      for (const auto& loop : it.loops) {
        for (std::size_t k = 0; k < loop.size(); ++k) out << (k == 0 ? 'M' : 'L') << loop[k].x << ' ' << loop[k].y << ' ';
        if (it.closed) out << "Z ";
      }
      out << "\" fill=\"" << it.fill << "\" fill-rule=\"evenodd\" stroke=\"" << it.stroke << "\"/>\n";
    }
    for (const auto& [p, color] : dots_) {
      out << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << 2.5 * stroke << "\" fill=\"" << color << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
  }

 private:
  struct Item {
    std::vector<std::vector<P>> loops;
    std::string fill, stroke;
    bool closed;
  };
  void grow(const std::vector<P>& pts) {
    for (const auto& p : pts) {
      min_x_ = std::min(min_x_, p.x), max_x_ = std::max(max_x_, p.x);
      min_y_ = std::min(min_y_, p.y), max_y_ = std::max(max_y_, p.y);
    }
  }
  double min_x_ = std::numeric_limits<double>::infinity(), min_y_ = min_x_;
  double max_x_ = -min_x_, max_y_ = -min_x_;
  std::vector<Item> items_;
  std::vector<std::pair<P, std::string>> dots_;
};

std::string weight_color(long w) {
  static const char* warm[] = {"#fdd49e", "#fc8d59", "#d7301f", "#7f0000"};
  static const char* cool[] = {"#c6dbef", "#6baed6", "#2171b5", "#08306b"};
  std::size_t k = static_cast<std::size_t>(std::min<long>(std::labs(w), 4) - 1);
  return w > 0 ? warm[k] : cool[k];
}

}  // namespace

std::string winding_chain(const WindingChain& chain, const PLCycle* cycle) {
  Canvas c;
  for (const auto& r : chain.regions) {
    std::vector<std::vector<P>> loops;
    for (const auto& loop : r.region.loops) {
      std::vector<P> l;
      for (const auto& v : loop) l.push_back(to_point(v));
      loops.push_back(std::move(l));
    }
    c.path(std::move(loops), weight_color(r.weight), "none");
  }
  if (cycle && !cycle->empty()) {
    std::vector<P> pts;
    for (const auto& v : cycle->points()) pts.push_back(to_point(v));
    c.polyline(std::move(pts), "black", true);
  }
  return c.render();
}

std::string arrangement(const SubspaceArrangement& x) {
  if (x.ambient_dim() != 2) throw Error(ErrorKind::InvalidInput, "svg arrangement: lines in the plane expected");
  for (const auto& s : x.subspaces()) {
    if (s.dim() != 1) throw Error(ErrorKind::InvalidInput, "svg arrangement: every member must be a line");
  }
  // box around every crossing
  double lo_x = -1, lo_y = -1, hi_x = 1, hi_y = 1;
  std::vector<P> crossings;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      std::vector<AffineSubspace> pair{x[i], x[j]};
      auto meet = intersect(pair);
      if (meet && meet->dim() == 0) crossings.push_back(to_point(meet->point()));
    }
  }
  for (std::size_t i = 0; i < x.size(); ++i) crossings.push_back(to_point(x[i].point()));
  for (const auto& p : crossings) {
    lo_x = std::min(lo_x, p.x - 1), hi_x = std::max(hi_x, p.x + 1);
    lo_y = std::min(lo_y, p.y - 1), hi_y = std::max(hi_y, p.y + 1);
  }
  Canvas c;
  for (const auto& s : x.subspaces()) {
    P o = to_point(s.point()), d = to_point(s.directions().front());
    double t0 = -std::numeric_limits<double>::infinity(), t1 = -t0;
    auto clip = [&](double origin, double dir, double lo, double hi) {
      if (dir == 0) return;
      double a = (lo - origin) / dir, b = (hi - origin) / dir;
      t0 = std::max(t0, std::min(a, b));
      t1 = std::min(t1, std::max(a, b));
    };
    clip(o.x, d.x, lo_x, hi_x);
    clip(o.y, d.y, lo_y, hi_y);
    c.polyline({{o.x + t0 * d.x, o.y + t0 * d.y}, {o.x + t1 * d.x, o.y + t1 * d.y}}, "#2171b5", false);
  }
  for (std::size_t k = 0; k + x.size() < crossings.size(); ++k) c.dot(crossings[k], "#d7301f");
  return c.render();
}

std::string polygons(std::span<const ConvexPolytope> polys) {
  Canvas c;
  for (const auto& p : polys) {
    if (p.ambient_dim() != 2) throw Error(ErrorKind::InvalidInput, "svg polygons: planar polytopes expected");
    std::vector<P> pts;
    if (p.dim() == 2) {
      for (auto id : p.boundary_cycle()) pts.push_back(to_point(p.vertices()[id]));
      c.path({pts}, "#fdd49e", "black");
    } else if (p.dim() == 1) {
      for (const auto& v : p.vertices()) pts.push_back(to_point(v));
      c.polyline(pts, "black", false);
    } else {
      c.dot(to_point(p.vertices().front()), "black");
    }
  }
  return c.render();
}

}  // namespace vpoly::svg
