#include "doctest.h"
#include "support.hpp"

#include "vpoly/chain.hpp"
#include "vpoly/error.hpp"
#include "vpoly/measures.hpp"

#include <algorithm>
#include <random>

using namespace vpoly;
using namespace vpoly::testing;

namespace {

MultiPolynomial one(std::size_t n) { return MultiPolynomial::constant(n, 1); }

long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pick's theorem: area = I + B/2 - 1 for a lattice polygon, with B counted
// from edge gcds and I from the lattice point count.
Rational pick_area(const ConvexPolytope& p) {
  const auto& v = p.vertices();
  const auto& cyc = p.boundary_cycle();
  long boundary = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto& a = v[cyc[i]];
    const auto& b = v[cyc[(i + 1) % cyc.size()]];
    boundary += gcd_long(Rational(a[0] - b[0]).convert_to<long>(), Rational(a[1] - b[1]).convert_to<long>());
  }
  long total = static_cast<long>(lattice_points(p).size());
  long interior = total - boundary;
  return Rational(interior) + Rational(boundary, 2) - 1;
}

ConvexPolytope box3(long a, long b, long c) {
  std::vector<RationalVector> pts;
  for (long x : {0L, a})
    for (long y : {0L, b})
      for (long z : {0L, c}) pts.push_back(pt({x, y, z}));
  return hull(pts);
}

}  // namespace

TEST_CASE("volume examples") {
  CHECK(volume(unit_square()) == 1);
  CHECK(volume(poly({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}})) == q("7/2"));
  CHECK(volume(poly({{0, 0}, {3, 5}})) == 0);
  CHECK(volume(poly({{-2}, {5}})) == 7);
  CHECK(volume(box3(2, 3, 5)) == 30);
  CHECK(volume(poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == q("1/6"));
  // square pyramid of height 3 over [0,2]^2: base * height / 3
  CHECK(volume(poly({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 3}})) == 4);
  CHECK(volume(poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})) == 0);
  CHECK_THROWS_AS(volume(poly({{0, 0, 0, 0}, {1, 0, 0, 0}})), Error);
}

TEST_CASE("volume agrees with Pick's theorem on random lattice polygons") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    ConvexPolytope p = random_polygon(rng, 6, 4);
    CHECK(volume(p) == pick_area(p));
  }
}

TEST_CASE("volume is homogeneous and translation invariant in 3D") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RationalVector> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(pt({d(rng), d(rng), d(rng)}));
    ConvexPolytope p = hull(pts);
    if (p.dim() < 3) continue;
    Rational v = volume(p);
    CHECK(v > 0);
    CHECK(volume(p.scale(2)) == 8 * v);
    CHECK(volume(p.scale(-1)) == v);
    CHECK(volume(p.translate(RationalVector{q("1/2"), q("-2/3"), q("5")})) == v);
  }
}

TEST_CASE("lattice measure examples") {
  ConvexPolytope sq = unit_square();
  for (long n = 0; n <= 4; ++n) {
    CHECK(lattice_measure(one(2), chain_of(sq.scale(n))) == (n + 1) * (n + 1));
  }
  CHECK(lattice_measure(one(2), power(sq, -1).chain()) == 0);
  CHECK(lattice_measure(one(2), power(sq, -2).chain()) == 1);
  // weight x over [0,2]^2: 3 * (0 + 1 + 2)
  CHECK(lattice_measure(MultiPolynomial::variable(2, 0), chain_of(sq.scale(2))) == 9);
  CHECK_THROWS_AS(lattice_measure(one(2), chain_of(hull({RationalVector{q("1/2"), q("0")}, pt({1, 1})}))), Error);
  CHECK_THROWS_AS(lattice_measure(one(1), chain_of(sq)), Error);
}

TEST_CASE("dilate_chain examples") {
  ConvexPolytope sq = unit_square(), tri = unit_triangle();
  CHECK(dilate_chain({sq, tri}, {0, 0}) == ConvexChain::identity(2));
  CHECK(dilate_chain({poly({{0}, {1}})}, {3}) == chain_of(poly({{0}, {3}})));
  CHECK(dilate_chain({sq, tri}, {1, 1}) == chain_of(poly({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}})));
  CHECK_THROWS_AS(dilate_chain({sq}, {1, 2}), Error);
  CHECK_THROWS_AS(dilate_chain({sq.scale(q("1/2"))}, {1}), Error);
}

TEST_CASE("fit_polynomial examples") {
  SampleMap s;
  for (long n = 0; n <= 4; ++n) s[{n}] = (n + 1) * (n + 1);
  MultiPolynomial p = fit_polynomial(s, 2);
  MultiPolynomial expect(1);
  expect.add_term({2}, 1);
  expect.add_term({1}, 2);
  expect.add_term({0}, 1);
  CHECK(p == expect);

  SampleMap c;
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b) c[{a, b}] = q("5/7");
  MultiPolynomial pc = fit_polynomial(c, 2);
  CHECK(pc.degree() == 0);
  CHECK(pc == MultiPolynomial::constant(2, q("5/7")));

  SampleMap e;
  for (long n = 0; n <= 5; ++n) e[{n}] = 1L << n;
  try {
    fit_polynomial(e, 4);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Inconsistent);
  }

  SampleMap partial;
  partial[{0}] = 1;
  partial[{2}] = 3;
  CHECK_THROWS_AS(fit_polynomial(partial, 1), Error);
  CHECK(interpolate(partial, 1).evaluate(RationalVector{Rational(1)}) == 2);
}

TEST_CASE("fit recovers random polynomials exactly") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPolynomial p(2);
    for (const auto& m : monomials_up_to(2, 3)) p.add_term(m, Rational(d(rng), 1 + (trial % 4)));
    SampleMap s;
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b) s[{a, b}] = p.evaluate(pt({a, b}));
    CHECK(fit_polynomial(s, 3) == p);
  }
}

TEST_CASE("mixed volume examples") {
  ConvexPolytope sq = unit_square(), tri = unit_triangle();
  ConvexPolytope pent = poly({{0, 0}, {2, 0}, {3, 1}, {1, 3}, {-1, 1}});
  std::vector<ConvexPolytope> diag{pent, pent};
  CHECK(mixed_volume(diag) == volume(pent));
  std::vector<ConvexPolytope> st{sq, tri};
  CHECK(mixed_volume(st) == 1);
  std::vector<ConvexPolytope> pointed{pent, poly({{4, -1}})};
  CHECK(mixed_volume(pointed) == 0);
  std::vector<ConvexPolytope> three{sq, sq, tri};
  CHECK_THROWS_AS(mixed_volume(three), Error);
  // boxes in R^3: MV of three coordinate-aligned boxes is the permanent / 3!
  std::vector<ConvexPolytope> boxes{box3(1, 2, 3), box3(1, 2, 3), box3(1, 2, 3)};
  CHECK(mixed_volume(boxes) == 6);
  std::vector<ConvexPolytope> axes{poly({{0, 0, 0}, {1, 0, 0}}), poly({{0, 0, 0}, {0, 1, 0}}), poly({{0, 0, 0}, {0, 0, 1}})};
  CHECK(mixed_volume(axes) == q("1/6"));
}

TEST_CASE("mixed volume is symmetric and Minkowski-linear") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    ConvexPolytope a = random_rational_polygon(rng, 4), a2 = random_rational_polygon(rng, 4),
                   b = random_rational_polygon(rng, 4);
    std::vector<ConvexPolytope> ab{a, b}, ba{b, a}, a2b{a2, b};
    std::vector<ConvexPolytope> sum{minkowski_sum(a, a2), b};
    CHECK(mixed_volume(ab) == mixed_volume(ba));
    CHECK(mixed_volume(sum) == mixed_volume(ab) + mixed_volume(a2b));
    CHECK(mixed_volume(ab) >= 0);
    RationalVector shift{q("3/5"), q("-4")};
    std::vector<ConvexPolytope> moved{a.translate(shift), b};
    CHECK(mixed_volume(moved) == mixed_volume(ab));
  }
  std::uniform_int_distribution<long> d(0, 2);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<ConvexPolytope> bodies;
    for (int i = 0; i < 3; ++i) {
      std::vector<RationalVector> pts;
      for (int j = 0; j < 5; ++j) pts.push_back(pt({d(rng), d(rng), d(rng)}));
      bodies.push_back(hull(pts));
    }
    Rational base = mixed_volume(bodies);
    std::vector<int> perm{0, 1, 2};
    do {
      std::vector<ConvexPolytope> permuted{bodies[perm[0]], bodies[perm[1]], bodies[perm[2]]};
      CHECK(mixed_volume(permuted) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("virtual bodies") {
  ConvexPolytope sq = unit_square(), tri = unit_triangle();
  ConvexPolytope origin = poly({{0, 0}});
  CHECK(virtual_volume(VirtualBody(sq, origin)) == 1);
  CHECK(virtual_volume(VirtualBody(sq, sq)) == 0);
  CHECK(virtual_volume(VirtualBody(sq, sq.scale(2))) == 1);

  std::vector<VirtualBody> plain{VirtualBody(sq), VirtualBody(tri)};
  CHECK(virtual_mixed_volume(plain) == 1);
  std::vector<VirtualBody> cancel{VirtualBody(tri, tri), VirtualBody(sq)};
  CHECK(virtual_mixed_volume(cancel) == 0);

  // cancellation law: (2 sq) - sq == sq - origin
  CHECK(VirtualBody(sq.scale(2), sq) == VirtualBody(sq));
  CHECK_FALSE(VirtualBody(sq.scale(2), tri) == VirtualBody(sq));
  CHECK_THROWS_AS(VirtualBody(poly({{0, 0}, {1, 1}})), Error);
}

TEST_CASE("virtual mixed volume expands multilinearly") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexPolytope a = random_polygon(rng), a2 = random_polygon(rng), b = random_polygon(rng),
                   b2 = random_polygon(rng);
    auto mv = [](const ConvexPolytope& x, const ConvexPolytope& y) {
      std::vector<ConvexPolytope> v{x, y};
      return mixed_volume(v);
    };
    std::vector<VirtualBody> vb{VirtualBody(a, a2), VirtualBody(b, b2)};
    CHECK(virtual_mixed_volume(vb) == mv(a, b) - mv(a, b2) - mv(a2, b) + mv(a2, b2));
  }
}

TEST_CASE("virtual volume is homogeneous of degree n for negative multiples") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    ConvexPolytope p = random_polygon(rng);
    for (long lambda = -3; lambda <= 3; ++lambda) {
      CHECK(virtual_volume(VirtualBody::multiple(p, lambda)) == lambda * lambda * volume(p));
    }
  }
  ConvexPolytope cube = box3(1, 1, 1);
  for (long lambda = -2; lambda <= 2; ++lambda) {
    CHECK(virtual_volume(VirtualBody::multiple(cube, lambda)) == lambda * lambda * lambda);
  }
}

TEST_CASE("Minkowski polynomiality examples") {
  ConvexPolytope sq = unit_square(), tri = unit_triangle();
  PolynomialityReport r = minkowski_polynomiality_check(sq, sq, 3);
  MultiPolynomial expect(2);
  expect.add_term({2, 0}, 1);
  expect.add_term({1, 1}, 2);
  expect.add_term({0, 2}, 1);
  CHECK(r.volume_polynomial == expect);
  CHECK(r.ok);

  r = minkowski_polynomiality_check(sq, tri, 4);
  MultiPolynomial expect2(2);
  expect2.add_term({2, 0}, 1);
  expect2.add_term({1, 1}, 2);
  expect2.add_term({0, 2}, q("1/2"));
  CHECK(r.volume_polynomial == expect2);
  CHECK(r.mixed_coefficient == 2);
  CHECK(r.mixed_volume == 1);
  CHECK(r.ok);

  ConvexPolytope pent = poly({{0, 0}, {2, 0}, {3, 1}, {1, 3}, {-1, 1}});
  r = minkowski_polynomiality_check(pent, poly({{1, 1}}), 3);
  MultiPolynomial expect3(2);
  expect3.add_term({2, 0}, volume(pent));
  CHECK(r.volume_polynomial == expect3);
  CHECK(r.ok);

  r = minkowski_polynomiality_check(box3(1, 1, 1), poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 4);
  CHECK(r.homogeneous);
  CHECK(r.ok);
  CHECK_THROWS_AS(minkowski_polynomiality_check(sq, tri, 2), Error);
}

TEST_CASE("lattice measure of dilations extends to negative exponents") {
  ConvexPolytope sq = unit_square();
  LatticeMeasureReport r = lattice_polynomiality_check({sq}, one(2));
  CHECK(r.ok);
  CHECK(r.degree_bound == 2);
  CHECK(r.fitted_degree == 2);
  // (n+1)^2 counted directly, including the open squares at n < 0
  for (long n = -2; n <= 2; ++n) CHECK(r.fitted.evaluate(RationalVector{Rational(n)}) == (n + 1) * (n + 1));

  LatticeMeasureReport r2 = lattice_polynomiality_check({unit_triangle()}, MultiPolynomial::variable(2, 0), 4, 3);
  CHECK(r2.ok);
  CHECK(r2.checked == 7);
  CHECK(r2.fitted_degree <= 3);
}
