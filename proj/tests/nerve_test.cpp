#include "doctest.h"
#include "support.hpp"

#include "vpoly/error.hpp"
#include "vpoly/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace vpoly;
using namespace vpoly::testing;

namespace {

// a x + b y = c
AffineSubspace line(long a, long b, long c) { return AffineSubspace::hyperplane(pt({a, b}), Rational(c)); }

SubspaceArrangement lines(std::initializer_list<std::array<long, 3>> ls) {
  std::vector<AffineSubspace> v;
  for (auto [a, b, c] : ls) v.push_back(line(a, b, c));
  return SubspaceArrangement(2, v);
}

SubspaceArrangement four_lines() { return lines({{0, 1, 0}, {1, 0, 0}, {1, 1, 3}, {1, -2, -2}}); }

// x = 1, y = 1, x + y = 2 all pass through (1, 1)
SubspaceArrangement concurrent_triple() { return lines({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}); }

Rational det2(long a, long b, long c, long d) { return Rational(a * d - b * c); }

// Components of a graph by union-find.
long components(std::size_t n, const std::vector<Simplex>& edges) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (const auto& e : edges) p[find(e[0])] = find(e[1]);
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < n; ++v) roots.insert(find(v));
  return static_cast<long>(roots.size());
}

struct RawLine {
  long a, b, c;
};

// Random distinct lines, several forced through shared points.
std::vector<RawLine> random_lines(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<long> d(-3, 3), pick(0, 2);
  std::vector<std::array<long, 2>> hubs{{d(rng), d(rng)}, {d(rng), d(rng)}};
  std::vector<RawLine> out;
  std::vector<AffineSubspace> seen;
  while (static_cast<int>(out.size()) < k) {
    long a = d(rng), b = d(rng);
    if (a == 0 && b == 0) continue;
    long c;
    long choice = pick(rng);
    if (choice < 2) {
      c = a * hubs[choice][0] + b * hubs[choice][1];
    } else {
      c = d(rng);
    }
    AffineSubspace l = line(a, b, c);
    if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
    seen.push_back(l);
    out.push_back({a, b, c});
  }
  return out;
}

// bounded regions of k distinct, not all parallel lines: 1 - k + sum over crossing points of (m_p - 1)
long bounded_region_oracle(const std::vector<RawLine>& ls) {
  std::map<RationalVector, std::set<std::size_t>> through;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      Rational det = det2(ls[i].a, ls[i].b, ls[j].a, ls[j].b);
      if (det == 0) continue;
      RationalVector p{(Rational(ls[i].c * ls[j].b - ls[j].c * ls[i].b)) / det,
                       (Rational(ls[i].a * ls[j].c - ls[j].a * ls[i].c)) / det};
      through[p].insert(i);
      through[p].insert(j);
    }
  }
  long s = 1 - static_cast<long>(ls.size());
  for (const auto& [p, set] : through) s += static_cast<long>(set.size()) - 1;
  return s;
}

Rational integral_x_dy(const RationalVector& a, const RationalVector& b) { return (a[0] + b[0]) / 2 * (b[1] - a[1]); }

OneForm x_dy() { return {MultiPolynomial(2), MultiPolynomial::variable(2, 0)}; }

}  // namespace

TEST_CASE("affine subspaces are canonical") {
  AffineSubspace a(pt({1, 2, 3}), {pt({1, 1, 0}), pt({0, 1, 1})});
  AffineSubspace b(pt({2, 4, 4}), {pt({1, 2, 1}), pt({2, 2, 0})});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(pt({1, 3, 4})));
  CHECK_FALSE(a.contains(pt({0, 0, 0})));
  CHECK_THROWS_AS(AffineSubspace(pt({0, 0}), {pt({1, 1}), pt({2, 2})}), Error);
  CHECK(line(1, 1, 2) == AffineSubspace(pt({2, 0}), {pt({-3, 3})}));
}

TEST_CASE("intersection examples") {
  std::vector<AffineSubspace> cross{line(1, 0, 1), line(0, 1, 2)};
  auto p = intersect(cross);
  REQUIRE(p);
  CHECK(p->dim() == 0);
  CHECK(p->point() == pt({1, 2}));

  std::vector<AffineSubspace> parallel{line(1, 1, 0), line(1, 1, 1)};
  CHECK_FALSE(intersect(parallel));

  std::vector<AffineSubspace> planes{AffineSubspace::hyperplane(pt({1, 0, 0}), 1),
                                     AffineSubspace::hyperplane(pt({1, 1, 0}), 3),
                                     AffineSubspace::hyperplane(pt({1, 1, 1}), 6)};
  p = intersect(planes);
  REQUIRE(p);
  CHECK(p->dim() == 0);
  CHECK(p->point() == pt({1, 2, 3}));

  // least-norm point of the line x + y = 2 is (1, 1)
  std::vector<AffineSubspace> one{line(1, 1, 2)};
  CHECK(*least_norm_point(one) == pt({1, 1}));
}

TEST_CASE("nerve examples") {
  SimplicialComplex k = nerve(four_lines());
  CHECK(k.faces_of_dim(0).size() == 4);
  CHECK(k.faces_of_dim(1).size() == 6);
  CHECK(k.faces_of_dim(2).empty());

  SimplicialComplex t = nerve(concurrent_triple());
  CHECK(t.contains({0, 1, 2}));
  CHECK(t.faces().size() == 7);

  SimplicialComplex par = nerve(lines({{1, 1, 0}, {1, 1, 1}}));
  CHECK(par.faces().size() == 2);

  std::vector<AffineSubspace> many(21, line(1, 0, 0));
  CHECK_THROWS_AS(nerve(SubspaceArrangement(2, many)), Error);
}

TEST_CASE("nerve edges agree with a determinant oracle") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    auto raw = random_lines(rng, 6);
    std::vector<AffineSubspace> v;
    for (auto& l : raw) v.push_back(line(l.a, l.b, l.c));
    SimplicialComplex k = nerve(SubspaceArrangement(2, v));
    for (std::size_t i = 0; i < raw.size(); ++i) {
      for (std::size_t j = i + 1; j < raw.size(); ++j) {
        // distinct lines meet iff their normals are independent
        bool meet = det2(raw[i].a, raw[i].b, raw[j].a, raw[j].b) != 0;
        CHECK(k.contains({i, j}) == meet);
      }
    }
  }
}

TEST_CASE("domination and equivalence") {
  SubspaceArrangement x = concurrent_triple();
  CHECK(equivalent(x, x));
  // moving one line off the common point loses the triple intersection
  SubspaceArrangement generic = x.translate({pt({0, 0}), pt({0, 0}), pt({1, 0})});
  CHECK(dominates(generic, x));
  CHECK_FALSE(dominates(x, generic));
  SubspaceArrangement disjoint = lines({{1, 0, 0}, {1, 0, 1}, {1, 0, 2}});
  SubspaceArrangement through = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(dominates(disjoint, through));
  CHECK_FALSE(equivalent(disjoint, through));
  CHECK_THROWS_AS(dominates(x, four_lines()), Error);
}

TEST_CASE("homology examples") {
  SimplicialComplex simplex(4, {{0, 1, 2, 3}});
  CHECK(homology_ranks(simplex) == std::vector<long>{1, 0, 0, 0});
  SimplicialComplex triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(homology_ranks(triangle) == std::vector<long>{1, 1});
  SimplicialComplex k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(homology_ranks(k4) == std::vector<long>{1, 3});
  // boundary of a tetrahedron: a 2-sphere
  SimplicialComplex sphere(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(homology_ranks(sphere) == std::vector<long>{1, 0, 1});
  CHECK(homology_ranks(SimplicialComplex(3)) == std::vector<long>{3});
}

TEST_CASE("homology of random complexes matches Euler characteristic and graph oracles") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<std::size_t> v(0, 6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Simplex> faces;
    for (int f = 0; f < 6; ++f) {
      std::set<std::size_t> s;
      int size = 1 + trial % 3 + f % 2;
      while (static_cast<int>(s.size()) < size) s.insert(v(rng));
      faces.emplace_back(s.begin(), s.end());
    }
    SimplicialComplex k(7, faces);
    std::vector<long> b = homology_ranks(k);
    long euler = 0, alt = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
      long sign = d % 2 == 0 ? 1 : -1;
      euler += sign * static_cast<long>(k.faces_of_dim(d).size());
      alt += sign * b[d];
    }
    CHECK(euler == alt);
    CHECK(b[0] == components(7, k.faces_of_dim(1)));
    if (k.dimension() == 1) {
      CHECK(b[1] == static_cast<long>(k.faces_of_dim(1).size()) - 7 + b[0]);
    }
  }
}

TEST_CASE("parallel core examples") {
  CHECK(parallel_core(lines({{1, 0, 0}, {0, 1, 3}})).dim() == 0);
  AffineSubspace c = parallel_core(lines({{1, 1, 0}, {2, 2, 5}, {1, 1, -1}}));
  CHECK(c.dim() == 1);
  CHECK(c.contains(pt({1, -1})));
  std::vector<AffineSubspace> planes{AffineSubspace::hyperplane(pt({1, 0, 0}), 1),
                                     AffineSubspace::hyperplane(pt({1, 1, 0}), 3),
                                     AffineSubspace::hyperplane(pt({0, 1, 0}), -2)};
  AffineSubspace z = parallel_core(SubspaceArrangement(3, planes));
  CHECK(z.dim() == 1);
  CHECK(z.directions().front() == pt({0, 0, 1}));
  std::vector<AffineSubspace> mixed{line(1, 0, 0), AffineSubspace(pt({0, 0}), {})};
  CHECK_THROWS_AS(parallel_core(SubspaceArrangement(2, mixed)), Error);
}

TEST_CASE("wedge check examples") {
  WedgeReport r = wedge_check(four_lines());
  CHECK(r.ok);
  CHECK(r.bounded_regions == 3);
  CHECK(r.betti == std::vector<long>{1, 3});

  r = wedge_check(lines({{0, 1, 0}, {1, 0, 0}, {1, 1, 3}}));
  CHECK(r.ok);
  CHECK(r.bounded_regions == 1);

  r = wedge_check(lines({{0, 1, 0}, {1, 0, 0}}));
  CHECK(r.ok);
  CHECK(r.bounded_regions == 0);
  CHECK(r.betti == std::vector<long>{1, 0});

  r = wedge_check(concurrent_triple());
  CHECK(r.ok);
  CHECK(r.bounded_regions == 0);

  // parallel family: three points up to homotopy, a wedge of two 0-spheres
  r = wedge_check(lines({{1, 1, 0}, {1, 1, 2}, {2, 2, 7}}));
  CHECK(r.core_dim == 1);
  CHECK(r.sphere_dim == 0);
  CHECK(r.expected_spheres == 2);
  CHECK(r.betti == std::vector<long>{3});
  CHECK(r.ok);
}

TEST_CASE("wedge of circles on random line arrangements") {
  std::mt19937_64 rng(79);
  int concurrent = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto raw = random_lines(rng, 3 + trial % 5);
    std::vector<AffineSubspace> v;
    for (auto& l : raw) v.push_back(line(l.a, l.b, l.c));
    SubspaceArrangement x(2, v);
    WedgeReport r = wedge_check(x);
    CHECK(r.ok);
    if (r.core_dim == 0) {
      CHECK(static_cast<long>(r.bounded_regions) == bounded_region_oracle(raw));
    }
    concurrent += nerve(x).dimension() >= 2;
  }
  CHECK(concurrent >= 10);
}

TEST_CASE("compatible maps exist exactly under inclusion") {
  std::mt19937_64 rng(83);
  int included = 0, excluded = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int k = 3 + trial % 4;
    std::vector<AffineSubspace> a, b;
    for (auto& l : random_lines(rng, k)) a.push_back(line(l.a, l.b, l.c));
    for (auto& l : random_lines(rng, k)) b.push_back(line(l.a, l.b, l.c));
    SubspaceArrangement x1(2, a), x2(2, b);
    bool inclusion = dominates(x1, x2);
    bool built = true;
    try {
      CompatibleMap g = compatible_map(nerve(x1), x2);
      CHECK(verify_compatible(g, x2));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotCompatible);
      built = false;
    }
    CHECK(built == inclusion);
    (inclusion ? included : excluded)++;
  }
  CHECK(included > 0);
  CHECK(excluded > 0);
}

TEST_CASE("compatible map examples") {
  SubspaceArrangement x = four_lines();
  CompatibleMap g = compatible_map(nerve(x), x);
  CHECK(verify_compatible(g, x));
  CHECK(g.barycenter_images.size() == 10);
  // a point of the subdivided edge {0,1}: halfway between the barycenters of {0} and {0,1}
  RationalVector mid = g.map_point({{0}, {0, 1}}, {q("1/2"), q("1/2")});
  CHECK(x[0].contains(mid));

  SimplicialComplex extra(4, {{0, 1, 2}});
  CHECK_THROWS_AS(compatible_map(extra, x), Error);

  TranslationTuple y{pt({0, 1}), pt({2, 0}), pt({1, 1}), pt({-1, 3})};
  CompatibleMap gy = translate_map(x, y);
  CHECK(verify_compatible(gy, x.translate(y)));
}

TEST_CASE("compatible translations") {
  SubspaceArrangement x = concurrent_triple();
  TranslationTuple zero(3, pt({0, 0}));
  CHECK(is_compatible(x, zero));
  TranslationTuple apart{pt({1, 0}), pt({0, 2}), pt({0, 0})};
  CHECK_FALSE(is_compatible(x, apart));
  TranslationTuple common(3, RationalVector{q("5/3"), q("-2")});
  CHECK(is_compatible(x, common));
  CHECK_THROWS_AS(translate_map(x, apart), Error);
}

TEST_CASE("translate_map is affine-linear in y") {
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<long> d(-5, 5);
  SubspaceArrangement x = four_lines();
  auto random_tuple = [&] {
    TranslationTuple y;
    for (std::size_t i = 0; i < x.size(); ++i) y.push_back(RationalVector{Rational(d(rng), 2), Rational(d(rng), 3)});
    return y;
  };
  CompatibleMap g0 = translate_map(x, TranslationTuple(4, pt({0, 0})));
  for (int trial = 0; trial < 10; ++trial) {
    TranslationTuple y1 = random_tuple(), y2 = random_tuple(), sum(4);
    for (std::size_t i = 0; i < 4; ++i) sum[i] = y1[i] + y2[i];
    CompatibleMap g1 = translate_map(x, y1), g2 = translate_map(x, y2), gs = translate_map(x, sum);
    for (const auto& [face, image] : gs.barycenter_images) {
      CHECK(image == g1.barycenter_images.at(face) + g2.barycenter_images.at(face) - g0.barycenter_images.at(face));
    }
    // three collinear samples y0 + t y1 predict the fourth
    TranslationTuple y3(4), y4(4);
    for (std::size_t i = 0; i < 4; ++i) {
      y3[i] = y1[i] * Rational(3);
      y4[i] = y1[i] * Rational(-2);
    }
    CompatibleMap g3 = translate_map(x, y3), g4 = translate_map(x, y4);
    for (const auto& [face, image] : g4.barycenter_images) {
      // affine in t: g(-2) = g(0) + (-2) (g(1) - g(0)); g(3) consistent too
      RationalVector slope = g1.barycenter_images.at(face) - g0.barycenter_images.at(face);
      CHECK(image == g0.barycenter_images.at(face) + slope * Rational(-2));
      CHECK(g3.barycenter_images.at(face) == g0.barycenter_images.at(face) + slope * Rational(3));
    }
  }
}

TEST_CASE("integral of a form along the image of a nerve cycle") {
  SubspaceArrangement x = four_lines();
  SimplicialCycle tri{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  TranslationTuple zero(4, pt({0, 0}));
  // direct evaluation: feet of perpendiculars and pairwise crossings by hand
  // lines: y = 0, x = 0, x + y = 3
  RationalVector f0 = pt({0, 0}), f1 = pt({0, 0}), f2 = RationalVector{q("3/2"), q("3/2")};
  RationalVector c01 = pt({0, 0}), c12 = pt({0, 3}), c02 = pt({3, 0});
  Rational expect = integral_x_dy(f0, c01) + integral_x_dy(c01, f1) + integral_x_dy(f1, c12) + integral_x_dy(c12, f2) +
                    integral_x_dy(f2, c02) + integral_x_dy(c02, f0);
  CHECK(integral_F_value(x, tri, x_dy(), zero) == expect);

  SimplicialCycle open{{0, 1, 1}};
  CHECK_THROWS_AS(integral_F_value(x, open, x_dy(), zero), Error);
  SimplicialCycle outside{{0, 1, 1}, {1, 0, 1}};
  CHECK(integral_F_value(x, outside, x_dy(), zero) == 0);
}

TEST_CASE("integral_F is polynomial in compatible translations") {
  // concurrent triple moved by a common translation (the only compatible directions)
  SubspaceArrangement x = concurrent_triple();
  SimplicialCycle tri{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  std::vector<TranslationTuple> basis{TranslationTuple(3, pt({1, 0})), TranslationTuple(3, pt({0, 1}))};
  IntegralFReport r = integral_F(x, tri, x_dy(), basis, 5, 7);
  CHECK(r.ok);
  CHECK(r.fitted.degree() <= 2);
  CHECK(r.holdout_checked == 5);

  // constant coefficients integrate to zero on any closed path
  OneForm constant{MultiPolynomial::constant(2, 3), MultiPolynomial::constant(2, q("-1/2"))};
  IntegralFReport c = integral_F(four_lines(), tri, constant, {}, 3, 1);
  CHECK(c.ok);
  CHECK(c.fitted.is_zero());

  // four generic lines, every line moved independently along its normal
  SubspaceArrangement g = four_lines();
  std::vector<TranslationTuple> independent;
  std::vector<RationalVector> normals{pt({0, 1}), pt({1, 0}), pt({1, 1}), pt({1, -2})};
  for (std::size_t i = 0; i < 4; ++i) {
    TranslationTuple y(4, pt({0, 0}));
    y[i] = normals[i];
    independent.push_back(y);
  }
  IntegralFReport f = integral_F(g, tri, x_dy(), independent, 5, 11);
  CHECK(f.ok);
  CHECK(f.holdout_checked == 5);
  CHECK(f.excluded > 0);  // grid points where a third line passes through a crossing
  CHECK(f.fitted.degree() == 2);

  std::vector<TranslationTuple> bad{TranslationTuple{pt({1, 0}), pt({0, 0}), pt({0, 0})}};
  CHECK_THROWS_AS(integral_F(x, tri, x_dy(), bad, 1, 1), Error);
}
