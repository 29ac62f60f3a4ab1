#include "vpoly/refinement.hpp"

#include "vpoly/error.hpp"

#include <algorithm>
#include <set>

namespace vpoly {

std::strong_ordering operator<=>(const Line2& l, const Line2& r) {
  for (auto [x, y] : {std::pair{&l.a, &r.a}, std::pair{&l.b, &r.b}, std::pair{&l.c, &r.c}}) {
    int c = x->compare(*y);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Line2 canonical_line(const Rational& a, const Rational& b, const Rational& c) {
  if (is_zero(a) && is_zero(b)) throw Error(ErrorKind::InvalidInput, "degenerate line");
  const Rational& lead = is_zero(a) ? b : a;
  return Line2{a / lead, b / lead, c / lead};
}

Line2 line_through(const RationalVector& p, const RationalVector& q) {
  Rational a = q[1] - p[1];
  Rational b = p[0] - q[0];
  return canonical_line(a, b, a * p[0] + b * p[1]);
}

namespace {

void samples_on_vertical(const Rational& x, const std::vector<const Line2*>& sloped,
                         const std::vector<Rational>& extra_y, bool interiors_only,
                         std::vector<RationalVector>& out) {
  std::vector<Rational> ys = extra_y;
  for (const Line2* l : sloped) ys.push_back((l->c - l->a * x) / l->b);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.empty()) {
    out.push_back(RationalVector{x, Rational(0)});
    return;
  }
  out.push_back(RationalVector{x, ys.front() - 1});
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (!interiors_only) out.push_back(RationalVector{x, ys[i]});
    if (i + 1 < ys.size()) out.push_back(RationalVector{x, (ys[i] + ys[i + 1]) / 2});
  }
  out.push_back(RationalVector{x, ys.back() + 1});
}

}  // namespace

std::vector<RationalVector> slab_samples(const std::vector<Line2>& lines_in,
                                         const std::vector<RationalVector>& points,
                                         bool interiors_only) {
  std::set<Line2> uniq(lines_in.begin(), lines_in.end());
  std::vector<Line2> lines(uniq.begin(), uniq.end());
  std::vector<const Line2*> sloped;
  std::set<Rational> critical;
  for (const auto& p : points) critical.insert(p[0]);
  for (const auto& l : lines) {
    if (is_zero(l.b)) {
      critical.insert(l.c / l.a);
    } else {
      sloped.push_back(&l);
    }
  }
  for (std::size_t i = 0; i < sloped.size(); ++i) {
    for (std::size_t j = i + 1; j < sloped.size(); ++j) {
      const Line2& p = *sloped[i];
      const Line2& q = *sloped[j];
      Rational det = p.a * q.b - q.a * p.b;
      if (is_zero(det)) continue;
      critical.insert((p.c * q.b - q.c * p.b) / det);
    }
  }
  std::vector<Rational> xs(critical.begin(), critical.end());
  std::vector<RationalVector> out;
  if (xs.empty()) {
    samples_on_vertical(Rational(0), sloped, {}, interiors_only, out);
    return out;
  }
  samples_on_vertical(xs.front() - 1, sloped, {}, interiors_only, out);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!interiors_only) {
      std::vector<Rational> extra;
      for (const auto& p : points) {
        if (p[0] == xs[i]) extra.push_back(p[1]);
      }
      samples_on_vertical(xs[i], sloped, extra, false, out);
    }
    Rational next = i + 1 < xs.size() ? (xs[i] + xs[i + 1]) / 2 : xs[i] + 1;
    samples_on_vertical(next, sloped, {}, interiors_only, out);
  }
  return out;
}

}  // namespace vpoly
