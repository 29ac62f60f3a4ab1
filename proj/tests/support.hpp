#pragma once

#include "vpoly/geometry.hpp"
#include "vpoly/rational.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace vpoly::testing {

inline Rational q(const char* s) { return parse_rational(s); }

inline RationalVector pt(std::initializer_list<long> xs) {
  RationalVector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

inline ConvexPolytope poly(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<RationalVector> v;
  for (auto p : pts) v.push_back(pt(p));
  return hull(v);
}

inline ConvexPolytope unit_square() { return poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
inline ConvexPolytope unit_triangle() { return poly({{0, 0}, {1, 0}, {0, 1}}); }

/// Random lattice polygon: hull of `k` points in [-r, r]^2, retried until
/// it is full-dimensional.
inline ConvexPolytope random_polygon(std::mt19937_64& rng, int k = 5, long r = 3) {
  std::uniform_int_distribution<long> d(-r, r);
  while (true) {
    std::vector<RationalVector> v;
    for (int i = 0; i < k; ++i) v.push_back(pt({d(rng), d(rng)}));
    ConvexPolytope p = hull(v);
    if (p.dim() == 2) return p;
  }
}

/// Random rational polygon (denominators up to 3).
inline ConvexPolytope random_rational_polygon(std::mt19937_64& rng, int k = 5) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  while (true) {
    std::vector<RationalVector> v;
    for (int i = 0; i < k; ++i) v.push_back(RationalVector{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    ConvexPolytope p = hull(v);
    if (p.dim() == 2) return p;
  }
}

}  // namespace vpoly::testing
