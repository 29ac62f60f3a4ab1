#include "doctest.h"
#include "support.hpp"

#include "vpoly/chain.hpp"
#include "vpoly/error.hpp"

#include <random>

using namespace vpoly;
using namespace vpoly::testing;

namespace {

ConvexPolytope seg(long a, long b) { return poly({{a}, {b}}); }
ConvexPolytope point1(long a) { return poly({{a}}); }
RationalVector x1(const char* s) { return RationalVector{q(s)}; }

ConvexChain random_chain(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<long> d(-2, 2);
  std::vector<ChainTerm> t;
  for (int i = 0; i < terms; ++i) {
    ConvexPolytope p = kind(rng) == 0   ? poly({{d(rng), d(rng)}})
                       : kind(rng) == 1 ? poly({{d(rng), d(rng)}, {d(rng) + 3, d(rng)}})
                                        : random_polygon(rng, 4, 2);
    t.push_back({Rational(coeff(rng)), p});
  }
  return ConvexChain(2, std::move(t));
}

}  // namespace

TEST_CASE("chain_of and identity") {
  ConvexChain c = chain_of(unit_square());
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].coeff == 1);
  CHECK(chain_of(poly({{0, 0}})) == ConvexChain::identity(2));
  CHECK(chain_of(seg(0, 1)).terms().front().polytope.dim() == 1);
}

TEST_CASE("add and scale") {
  ConvexChain f = chain_of(unit_square());
  CHECK(add(f, scale(f, -1)).is_zero());
  ConvexChain twice = add(f, f);
  REQUIRE(twice.terms().size() == 1);
  CHECK(twice.terms()[0].coeff == 2);
  CHECK(scale(f, 0).is_zero());
  CHECK_THROWS_AS(add(f, chain_of(seg(0, 1))), Error);
}

TEST_CASE("product examples") {
  CHECK(product(chain_of(seg(0, 1)), chain_of(seg(0, 1))) == chain_of(seg(0, 2)));
  ConvexChain f = add(chain_of(unit_square()), scale(chain_of(unit_triangle()), q("-1/2")));
  CHECK(product(ConvexChain::identity(2), f) == f);
  CHECK(product(f, ConvexChain::identity(2)) == f);

  ConvexPolytope a = unit_square(), b = unit_triangle(), c = poly({{0, 0}, {2, 1}});
  ConvexChain lhs = product(add(chain_of(a), scale(chain_of(b), -1)), chain_of(c));
  ConvexChain rhs = add(chain_of(minkowski_sum(a, c)), scale(chain_of(minkowski_sum(b, c)), -1));
  CHECK(lhs == rhs);
}

TEST_CASE("open polytope chains") {
  CHECK(open_polytope_chain(point1(4)) == chain_of(point1(4)));

  ConvexChain open_seg = open_polytope_chain(seg(0, 1));
  ConvexChain expect = add(chain_of(seg(0, 1)), scale(add(chain_of(point1(0)), chain_of(point1(1))), -1));
  CHECK(open_seg == expect);
  CHECK(evaluate(open_seg, x1("0")) == 0);
  CHECK(evaluate(open_seg, x1("1/2")) == 1);
  CHECK(evaluate(open_seg, x1("1")) == 0);

  ConvexChain open_sq = open_polytope_chain(unit_square());
  CHECK(open_sq.terms().size() == 9);
  CHECK(evaluate(open_sq, pt({0, 0})) == 0);
  CHECK(evaluate(open_sq, RationalVector{q("1/2"), Rational(0)}) == 0);
  CHECK(evaluate(open_sq, RationalVector{q("1/2"), q("1/2")}) == 1);
  CHECK(evaluate(open_sq, pt({2, 2})) == 0);
}

TEST_CASE("inverse of a point, a segment and a square") {
  CHECK(inverse(point1(3)) == chain_of(point1(-3)));

  ConvexChain inv = inverse(seg(0, 1));
  CHECK(inv == scale(open_polytope_chain(seg(-1, 0)), -1));
  ConvexChain prod = product(inv, chain_of(seg(0, 1)));
  // hand expansion: -chi[-1,1] + chi[-1,0] + chi[0,1]
  ConvexChain hand = add(add(scale(chain_of(seg(-1, 1)), -1), chain_of(seg(-1, 0))), chain_of(seg(0, 1)));
  CHECK(prod == hand);
  CHECK(evaluate(prod, x1("0")) == 1);
  for (const char* s : {"-1/2", "1/2", "-1", "1"}) CHECK(evaluate(prod, x1(s)) == 0);

  ConvexChain inv_sq = inverse(unit_square());
  CHECK(inv_sq == open_polytope_chain(poly({{-1, -1}, {0, -1}, {-1, 0}, {0, 0}})));
  ConvexChain one = product(inv_sq, chain_of(unit_square()));
  for (const auto& x : refinement_samples(one)) {
    CHECK(evaluate(one, x) == (x.is_zero() ? 1 : 0));
  }
  CHECK(chains_equal(one, ConvexChain::identity(2)).equal);
}

TEST_CASE("powers") {
  ConvexPolytope s = unit_square();
  CHECK(power(s, 0).chain() == ConvexChain::identity(2));
  CHECK(power(s, 1).chain() == chain_of(s));
  CHECK(chains_equal(power(seg(0, 1), -2).chain(), inverse(seg(0, 2))).equal);
  CHECK(power(seg(0, 1), 3).chain() == chain_of(seg(0, 3)));
}

TEST_CASE("virtual polytope construction is checked") {
  ConvexPolytope s = seg(0, 1);
  CHECK_NOTHROW(VirtualPolytope(inverse(seg(0, 2)), {{s, -2}}));
  CHECK_THROWS_AS(VirtualPolytope(inverse(seg(0, 1)), {{s, -2}}), Error);
}

TEST_CASE("evaluate and euler integral") {
  CHECK(evaluate(chain_of(unit_square()), RationalVector{q("1/2"), q("1/2")}) == 1);
  CHECK(evaluate(chain_of(unit_square()), pt({2, 2})) == 0);
  CHECK_THROWS_AS(evaluate(chain_of(unit_square()), pt({0})), Error);

  CHECK(euler_integral(chain_of(unit_triangle())) == 1);
  CHECK(euler_integral(open_polytope_chain(seg(0, 1))) == -1);
  CHECK(euler_integral(open_polytope_chain(unit_square())) == 1);
}

TEST_CASE("chains_equal examples") {
  ConvexChain f = add(chain_of(unit_square()), scale(chain_of(unit_triangle()), 2));
  ConvexChain g = add(scale(chain_of(unit_triangle()), 2), chain_of(unit_square()));
  CHECK(chains_equal(f, g).equal);

  ConvexChain split = add(add(chain_of(seg(0, 1)), chain_of(seg(1, 2))), scale(chain_of(point1(1)), -1));
  ChainEquality eq = chains_equal(chain_of(seg(0, 2)), split);
  CHECK(eq.equal);
  CHECK(eq.exact);
  CHECK_FALSE(chains_equal(chain_of(seg(0, 1)), chain_of(seg(0, 2))).equal);

  // square cut along its diagonal
  ConvexChain halves = add(add(chain_of(poly({{0, 0}, {1, 0}, {1, 1}})), chain_of(poly({{0, 0}, {0, 1}, {1, 1}}))),
                           scale(chain_of(poly({{0, 0}, {1, 1}})), -1));
  CHECK(chains_equal(halves, chain_of(unit_square())).equal);
  ConvexChain wrong = add(chain_of(poly({{0, 0}, {1, 0}, {1, 1}})), chain_of(poly({{0, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(chains_equal(wrong, chain_of(unit_square())).equal);
}

TEST_CASE("chains_equal in R^3 is a flagged semi-decision") {
  ConvexPolytope cube = poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  ChainEquality eq = chains_equal(product(inverse(cube), chain_of(cube)), ConvexChain::identity(3));
  CHECK(eq.equal);
  CHECK_FALSE(eq.exact);
  CHECK_FALSE(chains_equal(chain_of(cube), ConvexChain::identity(3)).equal);
}

TEST_CASE("truncate_lower_dim") {
  ConvexChain f = add(chain_of(unit_square()), scale(chain_of(poly({{0, 0}, {1, 0}})), -1));
  CHECK(truncate_lower_dim(f) == chain_of(unit_square()));
  CHECK(truncate_lower_dim(chain_of(poly({{0, 0}, {1, 1}}))).is_zero());
  ConvexChain t = truncate_lower_dim(inverse(unit_square()));
  CHECK(t == chain_of(poly({{-1, -1}, {0, -1}, {-1, 0}, {0, 0}})));
}

TEST_CASE("product is commutative and associative with identity") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    ConvexChain f = random_chain(rng, 3), g = random_chain(rng, 2), h = random_chain(rng, 2);
    CHECK(chains_equal(product(f, g), product(g, f)).equal);
    CHECK(chains_equal(product(product(f, g), h), product(f, product(g, h))).equal);
    CHECK(product(ConvexChain::identity(2), f) == f);
  }
}

TEST_CASE("product does not depend on the representation") {
  // chi_square written three ways, times a random chain
  ConvexChain s1 = chain_of(unit_square());
  ConvexChain s2 = add(add(chain_of(poly({{0, 0}, {1, 0}, {1, 1}})), chain_of(poly({{0, 0}, {0, 1}, {1, 1}}))),
                       scale(chain_of(poly({{0, 0}, {1, 1}})), -1));
  ConvexChain s3 = add(add(chain_of(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}})),
                           scale(chain_of(poly({{1, 0}, {2, 0}, {1, 1}, {2, 1}})), -1)),
                       chain_of(poly({{1, 0}, {1, 1}})));
  REQUIRE(chains_equal(s1, s2).equal);
  REQUIRE(chains_equal(s1, s3).equal);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    ConvexChain g = random_chain(rng, 3);
    ConvexChain p1 = product(s1, g);
    CHECK(chains_equal(p1, product(s2, g)).equal);
    CHECK(chains_equal(p1, product(s3, g)).equal);
  }
}

TEST_CASE("inverse times the polytope is the identity on a corpus") {
  std::vector<ConvexPolytope> corpus = {
      point1(2), seg(-1, 3), poly({{0, 0}}), poly({{0, 0}, {2, 1}}), unit_triangle(), unit_square(),
      poly({{0, 0}, {2, 0}, {1, 1}, {0, 1}}), poly({{0, 0}, {2, 0}, {3, 1}, {1, 3}, {-1, 1}}),
      poly({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 2}, {-1, 1}})};
  for (const auto& p : corpus) {
    ConvexChain one = ConvexChain::identity(p.ambient_dim());
    CHECK(chains_equal(product(inverse(p), chain_of(p)), one).equal);
    CHECK(chains_equal(product(chain_of(p), inverse(p)), one).equal);
  }
}

TEST_CASE("powers add exponents") {
  for (const ConvexPolytope& p : {seg(0, 1), unit_triangle()}) {
    for (long a = -2; a <= 2; ++a) {
      for (long b = -2; b <= 2; ++b) {
        ConvexChain lhs = product(power(p, a).chain(), power(p, b).chain());
        CHECK(chains_equal(lhs, power(p, a + b).chain()).equal);
      }
    }
  }
}

TEST_CASE("euler integral is multiplicative and evaluation is additive") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexChain f = random_chain(rng, 3), g = random_chain(rng, 3);
    CHECK(euler_integral(product(f, g)) == euler_integral(f) * euler_integral(g));
    ConvexChain s = add(f, g);
    for (const auto& x : refinement_samples(s)) CHECK(evaluate(s, x) == evaluate(f, x) + evaluate(g, x));
  }
}
