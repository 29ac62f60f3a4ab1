#include "doctest.h"
#include "support.hpp"

#include "vpoly/bkk.hpp"
#include "vpoly/error.hpp"
#include "vpoly/measures.hpp"

#include <algorithm>
#include <chrono>
#include <random>

using namespace vpoly;
using namespace vpoly::testing;

namespace {

using Terms = std::map<LaurentPolynomial::Exponent, Complex>;

LaurentPolynomial lp(Terms t) { return LaurentPolynomial(2, std::move(t)); }

// Both equations hold at the reported root, checked through LaurentPolynomial::evaluate.
void check_roots(const TorusRootCount& r, const LaurentPolynomial& p1, const LaurentPolynomial& p2) {
  for (const auto& root : r.certificate.roots) {
    std::vector<Complex> z{root.x, root.y};
    CHECK(std::abs(p1.evaluate(z)) < 1e-8);
    CHECK(std::abs(p2.evaluate(z)) < 1e-8);
    CHECK(std::abs(root.x) > 1e-8);
    CHECK(std::abs(root.y) > 1e-8);
  }
}

Rational bkk2(const ConvexPolytope& a, const ConvexPolytope& b) {
  std::vector<ConvexPolytope> v{a, b};
  return bkk_number(v);
}

}  // namespace

TEST_CASE("newton polytope examples") {
  Complex a(1, 2), b(0.5, 0), c(0, 1), d(3, 0);
  CHECK(newton_polytope(lp({{{0, 0}, a}, {{1, 0}, b}, {{0, 1}, c}})) == unit_triangle());
  CHECK(newton_polytope(lp({{{0, 0}, a}, {{1, 0}, b}, {{0, 1}, c}, {{1, 1}, d}})) == unit_square());
  LaurentPolynomial x(1, {{{-1}, 1.0}, {{1}, 1.0}});
  CHECK(newton_polytope(x) == hull({pt({-1}), pt({1})}));
  CHECK(newton_polytope(lp({{{0, 0}, 1.0}, {{2, 0}, 0.0}})).dim() == 0);
  CHECK_THROWS_AS(lp({{{0, 0}, 0.0}}), Error);
  CHECK_THROWS_AS(lp({{{0, 0, 1}, 1.0}}), Error);
}

TEST_CASE("bkk number examples") {
  CHECK(bkk2(unit_triangle(), unit_triangle()) == 1);
  CHECK(bkk2(unit_square(), unit_square()) == 2);
  CHECK(bkk2(unit_square(), unit_triangle()) == 2);
  CHECK(bkk2(poly({{0, 0}, {2, 0}, {0, 2}}), unit_square()) == 4);
  // degree-d generic plane curves meet in d e points
  CHECK(bkk2(unit_triangle().scale(3), unit_triangle().scale(4)) == 12);
  std::vector<ConvexPolytope> three{poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                    poly({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
                                    poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  CHECK(bkk_number(three) == 2);
}

TEST_CASE("bkk number is symmetric, multilinear and monotone") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 15; ++trial) {
    ConvexPolytope a = random_polygon(rng), b = random_polygon(rng), c = random_polygon(rng);
    CHECK(bkk2(a, b) == bkk2(b, a));
    CHECK(bkk2(minkowski_sum(a, c), b) == bkk2(a, b) + bkk2(c, b));
    CHECK(bkk2(a.scale(3), b) == 3 * bkk2(a, b));
    // a is contained in a + c - (point of c), so enlarging never lowers the count
    ConvexPolytope bigger = hull([&] {
      std::vector<RationalVector> v = a.vertices();
      for (const auto& p : b.vertices()) v.push_back(p);
      return v;
    }());
    CHECK(bkk2(bigger, c) >= bkk2(a, c));
    CHECK(bkk2(bigger, c) >= bkk2(b, c));
  }
}

TEST_CASE("sample system examples") {
  std::vector<ConvexPolytope> polys{unit_triangle(), unit_square()};
  auto sys = sample_system(polys, 1);
  REQUIRE(sys.size() == 2);
  CHECK(sys[0].terms().size() == 3);
  CHECK(sys[1].terms().size() == 4);
  CHECK(newton_polytope(sys[0]) == unit_triangle());
  CHECK(newton_polytope(sys[1]) == unit_square());
  for (const auto& p : sys) {
    for (const auto& [e, c] : p.terms()) {
      CHECK(c.real() >= 0);
      CHECK(c.real() <= 1);
      CHECK(c.imag() >= 0);
      CHECK(c.imag() <= 1);
    }
  }
  CHECK(sample_system(polys, 1) == sys);
  CHECK_FALSE(sample_system(polys, 2) == sys);
  std::vector<ConvexPolytope> big{poly({{0, 0}, {3, 0}, {0, 3}})};
  CHECK(sample_system(big, 5)[0].terms().size() == 10);
}

TEST_CASE("polynomial roots recover planted roots") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 1 + trial % 8;
    std::vector<Complex> planted;
    for (int k = 0; k < d; ++k) planted.emplace_back(u(rng), u(rng));
    std::vector<Complex> c{Complex(u(rng), 1.0)};
    for (const auto& r : planted) {
      std::vector<Complex> next(c.size() + 1);
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= r * c[k];
      }
      c = next;
    }
    bool converged = false;
    auto roots = polynomial_roots(c, 1e-10, converged);
    CHECK(converged);
    REQUIRE(roots.size() == planted.size());
    for (const auto& r : planted) {
      double nearest = 1e9;
      for (const auto& z : roots) nearest = std::min(nearest, std::abs(z - r));
      CHECK(nearest < 1e-6);
    }
  }
  bool converged = false;
  CHECK(polynomial_roots({Complex(3)}, 1e-10, converged).empty());
}

TEST_CASE("torus root counting examples") {
  // x = 2, y = 3
  LaurentPolynomial l1 = lp({{{1, 0}, 1.0}, {{0, 0}, -2.0}}), l2 = lp({{{0, 1}, 1.0}, {{0, 0}, -3.0}});
  TorusRootCount r = count_torus_roots_2d(l1, l2);
  CHECK(r.count == 1);
  CHECK(r.certificate.reliable());
  check_roots(r, l1, l2);
  CHECK(std::abs(r.certificate.roots[0].x - Complex(2)) < 1e-9);
  CHECK(std::abs(r.certificate.roots[0].y - Complex(3)) < 1e-9);

  // x y = 1, x = y: (1, 1) and (-1, -1)
  LaurentPolynomial h1 = lp({{{1, 1}, 1.0}, {{0, 0}, -1.0}}), h2 = lp({{{1, 0}, 1.0}, {{0, 1}, -1.0}});
  r = count_torus_roots_2d(h1, h2);
  CHECK(r.count == 2);
  check_roots(r, h1, h2);

  // only root is the origin
  LaurentPolynomial o1 = lp({{{1, 0}, 1.0}, {{0, 1}, 1.0}}), o2 = lp({{{1, 0}, 1.0}, {{0, 1}, 2.0}});
  CHECK(count_torus_roots_2d(o1, o2).count == 0);

  // Laurent: x + 1/x = 3, y = x
  LaurentPolynomial n1 = lp({{{1, 0}, 1.0}, {{-1, 0}, 1.0}, {{0, 0}, -3.0}});
  r = count_torus_roots_2d(n1, h2);
  CHECK(r.count == 2);
  CHECK(r.certificate.reliable());
  check_roots(r, n1, h2);
  CHECK(bkk2(newton_polytope(n1), newton_polytope(h2)) == 2);

  // tangency: y = x^2 and y = 2x - 1 meet doubly at (1, 1)
  LaurentPolynomial t1 = lp({{{0, 1}, 1.0}, {{2, 0}, -1.0}});
  LaurentPolynomial t2 = lp({{{0, 1}, 1.0}, {{1, 0}, -2.0}, {{0, 0}, 1.0}});
  r = count_torus_roots_2d(t1, t2);
  CHECK_FALSE(r.certificate.reliable());
  CHECK(r.count == 2);
  for (const auto& root : r.certificate.roots) CHECK(root.multiplicity == 2);

  LaurentPolynomial one(1, {{{1}, 1.0}});
  CHECK_THROWS_AS(count_torus_roots_2d(one, one), Error);
}

TEST_CASE("generic systems match the bkk number") {
  std::vector<std::pair<ConvexPolytope, ConvexPolytope>> cases{{unit_triangle(), unit_triangle()},
                                                               {unit_square(), unit_square()},
                                                               {unit_square(), unit_triangle()}};
  std::mt19937_64 rng(107);
  for (int k = 0; k < 6; ++k) cases.emplace_back(random_polygon(rng, 4, 2), random_polygon(rng, 4, 2));
  for (const auto& [a, b] : cases) {
    std::vector<ConvexPolytope> pair{a, b};
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto sys = sample_system(pair, seed);
      TorusRootCount r = count_torus_roots_2d(sys[0], sys[1]);
      CHECK(r.certificate.reliable());
      CHECK(Rational(r.count) == bkk_number(pair));
      check_roots(r, sys[0], sys[1]);
    }
  }
}

TEST_CASE("virtual bkk") {
  ConvexPolytope s = unit_square(), t = unit_triangle(), origin = poly({{0, 0}});
  std::vector<std::pair<ConvexPolytope, ConvexPolytope>> plain{{s, origin}, {t, poly({{2, 1}})}};
  CHECK(virtual_bkk(plain) == 2);
  std::vector<std::pair<ConvexPolytope, ConvexPolytope>> same{{s, s}, {t, origin}};
  CHECK(virtual_bkk(same) == 0);
  std::vector<std::pair<ConvexPolytope, ConvexPolytope>> diff{{s, t}, {s, t}};
  CHECK(virtual_bkk(diff) == -1);

  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexPolytope a = random_polygon(rng), b = random_polygon(rng), c = random_polygon(rng), d = random_polygon(rng);
    std::vector<std::pair<ConvexPolytope, ConvexPolytope>> pairs{{a, b}, {c, d}};
    CHECK(virtual_bkk(pairs) == bkk2(a, c) - bkk2(a, d) - bkk2(b, c) + bkk2(b, d));
  }
}

TEST_CASE("bkk harness") {
  auto catalog = bkk_catalog();
  REQUIRE(catalog.size() == 4);
  std::vector<std::uint64_t> seeds(10);
  std::iota(seeds.begin(), seeds.end(), 1);
  auto start = std::chrono::steady_clock::now();
  HarnessReport report = bkk_harness(catalog, seeds);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(report.ok);
  CHECK(report.runs.size() == 40);
  CHECK(report.flagged_runs <= 2);
  CHECK(seconds < 60);
  std::vector<long> expected{1, 2, 2, 4};
  for (std::size_t i = 0; i < report.runs.size(); ++i) CHECK(report.runs[i].counted == expected[i / 10]);

  RootTolerances broken;
  broken.cluster = 10;
  HarnessReport bad = bkk_harness(catalog, seeds, broken);
  CHECK_FALSE(bad.ok);
  CHECK(bad.flagged_runs > 0);
  CHECK(bkk_harness(catalog, seeds).runs.front().certificate.max_resultant_residual ==
        report.runs.front().certificate.max_resultant_residual);
}
