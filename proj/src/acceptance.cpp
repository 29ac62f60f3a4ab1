#include "vpoly/acceptance.hpp"

#include "vpoly/chain.hpp"
#include "vpoly/error.hpp"
#include "vpoly/measures.hpp"
#include "vpoly/nerve.hpp"
#include "vpoly/polynomial.hpp"
#include "vpoly/winding.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace vpoly {

namespace {

RationalVector pt(std::initializer_list<long> xs) {
  RationalVector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

ConvexPolytope poly(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<RationalVector> v;
  for (auto p : pts) v.push_back(pt(p));
  return hull(v);
}

ConvexPolytope unit_square() { return poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
ConvexPolytope unit_triangle() { return poly({{0, 0}, {1, 0}, {0, 1}}); }

ConvexPolytope random_polygon(std::mt19937_64& rng, int k = 5, long r = 3) {
  std::uniform_int_distribution<long> d(-r, r);
  while (true) {
    std::vector<RationalVector> v;
    for (int i = 0; i < k; ++i) v.push_back(pt({d(rng), d(rng)}));
    ConvexPolytope p = hull(v);
    if (p.dim() == 2) return p;
  }
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// 1. chi_P^{-1} * chi_P == identity
void inverse_identity(Outcome& out, std::uint64_t) {
  std::vector<ConvexPolytope> corpus{
      poly({{3}}),
      poly({{0}, {2}}),
      hull({RationalVector{Rational(-1)}, RationalVector{Rational(1, 2)}}),
      poly({{1, -2}}),
      poly({{0, 0}, {3, 0}}),
      poly({{0, 0}, {2, 3}}),
      unit_triangle(),
      unit_square(),
      poly({{0, 0}, {3, 0}, {1, 2}}),
      poly({{0, 0}, {2, 0}, {3, 1}, {1, 3}, {-1, 1}}),
      poly({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}}),
      hull({RationalVector{Rational(1, 2), 0}, RationalVector{2, Rational(1, 3)}, RationalVector{1, 2}, RationalVector{0, 1}}),
      poly({{-2, -1}, {1, -2}, {2, 2}, {-1, 3}}),
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ConvexPolytope& p = corpus[i];
    ConvexChain prod = product(inverse(p), chain_of(p));
    out.require(chains_equal(prod, ConvexChain::identity(p.ambient_dim())).equal, "polytope " + std::to_string(i));
  }
  out.detail << corpus.size() << " polytopes";
}

// 2. lattice measure of dilations is polynomial
void lattice_dilations(Outcome& out, std::uint64_t) {
  ConvexPolytope hexagon = poly({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
  ConvexPolytope segment = poly({{0, 0}, {1, 2}});
  std::vector<std::pair<std::string, std::vector<ConvexPolytope>>> families{
      {"square", {unit_square()}},
      {"square+triangle", {unit_square(), unit_triangle()}},
      {"hexagon+segment", {hexagon, segment}},
  };
  MultiPolynomial one = MultiPolynomial::constant(2, 1), x = MultiPolynomial::variable(2, 0);
  MultiPolynomial y = MultiPolynomial::variable(2, 1);
  std::vector<std::pair<std::string, MultiPolynomial>> weights{{"1", one}, {"x", x}, {"x^2+y", x * x + y}};
  std::size_t checked = 0;
  for (const auto& [fname, bases] : families) {
    for (const auto& [wname, w] : weights) {
      LatticeMeasureReport r = lattice_polynomiality_check(bases, w, 4, 2);
      out.require(r.ok && r.mismatches.empty(), fname + " with P=" + wname);
      out.require(r.fitted_degree <= 2 + w.degree(), fname + " degree bound with P=" + wname);
      checked += r.checked;
    }
  }
  out.detail << "9 runs, " << checked << " mixed-sign tuples checked";
}

// 3. Vol(lambda A + mu B) is a homogeneous quadratic
void minkowski_polynomiality(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 3);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexPolytope a = random_polygon(rng), b = random_polygon(rng);
    PolynomialityReport r = minkowski_polynomiality_check(a, b, 5);
    std::vector<ConvexPolytope> pair{a, b};
    out.require(r.ok && r.homogeneous, "pair " + std::to_string(trial));
    out.require(r.mixed_coefficient == 2 * mixed_volume(pair), "mixed coefficient of pair " + std::to_string(trial));
  }
  out.detail << "10 random pairs on the 5x5 grid";
}

Rational mv2(const ConvexPolytope& a, const ConvexPolytope& b) {
  std::vector<ConvexPolytope> v{a, b};
  return mixed_volume(v);
}

// 4. mixed volume axioms and the virtual expansion
void mixed_volume_axioms(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 4);
  for (int trial = 0; trial < 12; ++trial) {
    ConvexPolytope a = random_polygon(rng), b = random_polygon(rng), c = random_polygon(rng), d = random_polygon(rng);
    std::string t = " (trial " + std::to_string(trial) + ")";
    out.require(mv2(a, b) == mv2(b, a), "symmetry" + t);
    out.require(mv2(minkowski_sum(a, c), b) == mv2(a, b) + mv2(c, b), "additivity" + t);
    out.require(mv2(a.scale(3), b) == 3 * mv2(a, b), "homogeneity" + t);
    out.require(mv2(a, a) == volume(a), "diagonal" + t);
    std::vector<VirtualBody> bodies{VirtualBody(a, b), VirtualBody(c, d)};
    out.require(virtual_mixed_volume(bodies) == mv2(a, c) - mv2(a, d) - mv2(b, c) + mv2(b, d), "virtual expansion" + t);
  }
  out.detail << "12 random quadruples";
}

bool segments_cross(const Segment2& s, const Segment2& t) {
  auto orient = [](const RationalVector& p, const RationalVector& q, const RationalVector& r) {
    return sgn((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]));
  };
  int o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b), o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool self_intersecting(const PLCycle& g) {
  auto segs = g.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 2; j < segs.size(); ++j) {
      if (i == 0 && j + 1 == segs.size()) continue;
      if (segments_cross(segs[i], segs[j])) return true;
    }
  }
  return false;
}

// 5. Green identity on self-intersecting cycles
void green_identity(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 5);
  std::uniform_int_distribution<long> d(-5, 5), c(-4, 4);
  int cycles = 0;
  while (cycles < 24) {
    std::vector<RationalVector> v;
    int k = 6 + cycles % 4;
    for (int i = 0; i < k; ++i) {
      RationalVector p = pt({d(rng), d(rng)});
      if (v.empty() || !(v.back() == p)) v.push_back(p);
    }
    if (v.size() < 3 || v.back() == v.front()) continue;
    PLCycle g(v);
    if (!self_intersecting(g)) continue;
    ++cycles;
    WindingChain chain = winding_chain(g);
    for (int deg = 0; deg <= 3; ++deg) {
      MultiPolynomial p(2);
      for (const auto& m : monomials_up_to(2, deg)) p.add_term(m, Rational(c(rng), 3));
      out.require(integrate_pullback(g, p.antiderivative(0)) == integrate_form_over_chain(chain, p),
                  "cycle " + std::to_string(cycles) + " degree " + std::to_string(deg));
    }
  }
  out.detail << cycles << " self-intersecting cycles, degrees 0..3";
}

ConvexPolytope trapezoid() { return poly({{0, 0}, {2, 0}, {1, 1}, {0, 1}}); }

// 6. truncated virtual polytope equals the winding chain of the Gauss-type map
void virtual_winding(Outcome& out, std::uint64_t) {
  ConvexPolytope sq = unit_square();
  int cases = 0;
  for (long k = 1; k <= 3; ++k) {
    for (long m = 1; m <= 3; ++m) {
      ConvexPolytope d1 = sq.scale(k).translate(pt({k - 2, 1 - m})), d2 = sq.scale(m);
      SupportFunctionPL h = SupportFunctionPL::of(sq, d1).combine(1, SupportFunctionPL::of(sq, d2), -1);
      VirtualWindingReport r = virtual_winding_check(h, d1, d2);
      out.require(r.equal, "square family k=" + std::to_string(k) + " m=" + std::to_string(m));
      ++cases;
    }
  }
  std::map<RationalVector, Rational> values{{pt({0, -1}), 0}, {pt({1, 1}), 2}, {pt({0, 1}), -1}, {pt({-1, 0}), 0}};
  SupportFunctionPL fig(trapezoid(), values);
  ConvexPolytope d1 = poly({{0, 0}, {5, 0}, {4, 1}, {0, 1}}), d2 = poly({{0, 0}, {3, 0}, {1, 2}, {0, 2}});
  VirtualWindingReport r = virtual_winding_check(fig, d1, d2);
  out.require(r.equal && r.negative_region, "trapezoid virtual 4-gon");
  out.detail << cases << " square-family cases and the trapezoid 4-gon";
}

// 7. volume from support is homogeneous of degree 2
void homogeneity(Outcome& out, std::uint64_t) {
  std::vector<ConvexPolytope> bases{unit_square(), poly({{0, 0}, {2, 0}, {3, 1}, {1, 3}, {-1, 1}})};
  for (const auto& d0 : bases) {
    SupportFunctionPL h = SupportFunctionPL::of(d0, d0), zero = SupportFunctionPL::of(d0, poly({{0, 0}}));
    for (long lambda = -2; lambda <= 2; ++lambda) {
      out.require(virtual_volume_from_support(h.combine(lambda, zero, 0)) == lambda * lambda * volume(d0),
                  "lambda=" + std::to_string(lambda));
    }
  }
  out.detail << "2 bodies, lambda in -2..2";
}

// 8. smooth disk
void smooth_demo(Outcome& out, std::uint64_t) {
  const double r = 1.5;
  auto start = std::chrono::steady_clock::now();
  double v = smooth_support_demo([r](double c, double s) { return std::array<double, 2>{r * c, r * s}; }, 256);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double exact = std::numbers::pi * r * r;
  double rel = std::abs(v - exact) / exact;
  out.require(rel < 0.01, "relative error");
  out.require(seconds < 1.0, "runtime");
  char buf[96];
  std::snprintf(buf, sizeof buf, "relative error %.2e at N=256, under 1 s", rel);
  out.detail << buf;
}

struct RawLine {
  long a, b, c;
};

AffineSubspace line(const RawLine& l) { return AffineSubspace::hyperplane(pt({l.a, l.b}), Rational(l.c)); }

std::vector<RawLine> random_lines(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<long> d(-3, 3), pick(0, 2);
  std::vector<std::array<long, 2>> hubs{{d(rng), d(rng)}, {d(rng), d(rng)}};
  std::vector<RawLine> out;
  std::vector<AffineSubspace> seen;
  while (static_cast<int>(out.size()) < k) {
    long a = d(rng), b = d(rng);
    if (a == 0 && b == 0) continue;
    long choice = pick(rng);
    long c = choice < 2 ? a * hubs[choice][0] + b * hubs[choice][1] : d(rng);
    AffineSubspace l = line({a, b, c});
    if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
    seen.push_back(l);
    out.push_back({a, b, c});
  }
  return out;
}

SubspaceArrangement arrangement(const std::vector<RawLine>& ls) {
  std::vector<AffineSubspace> v;
  for (const auto& l : ls) v.push_back(line(l));
  return SubspaceArrangement(2, v);
}

// 1 - k + sum over crossing points of (lines through it - 1)
long bounded_region_oracle(const std::vector<RawLine>& ls) {
  std::map<RationalVector, std::set<std::size_t>> through;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      Rational det(ls[i].a * ls[j].b - ls[i].b * ls[j].a);
      if (is_zero(det)) continue;
      RationalVector p{Rational(ls[i].c * ls[j].b - ls[j].c * ls[i].b) / det, Rational(ls[i].a * ls[j].c - ls[j].a * ls[i].c) / det};
      through[p].insert(i);
      through[p].insert(j);
    }
  }
  long s = 1 - static_cast<long>(ls.size());
  for (const auto& [p, set] : through) s += static_cast<long>(set.size()) - 1;
  return s;
}

// 9. nerve homology vs bounded regions
void wedge(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 9);
  int concurrent = 0, trials = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto raw = random_lines(rng, 3 + trial % 6);
    SubspaceArrangement x = arrangement(raw);
    WedgeReport r = wedge_check(x);
    if (r.core_dim != 0) continue;
    ++trials;
    std::string t = "arrangement " + std::to_string(trial);
    out.require(r.ok, t);
    out.require(r.betti.size() >= 2 && r.betti[1] == static_cast<long>(r.bounded_regions), t + " b1");
    for (std::size_t k = 2; k < r.betti.size(); ++k) out.require(r.betti[k] == 0, t + " higher betti");
    out.require(static_cast<long>(r.bounded_regions) == bounded_region_oracle(raw), t + " region count oracle");
    concurrent += nerve(x).dimension() >= 2;
  }
  out.require(trials >= 50, "at least 50 arrangements");
  out.require(concurrent >= 5, "engineered concurrences present");
  out.detail << trials << " arrangements of 3-8 lines, " << concurrent << " with concurrences";
}

// 10. compatible maps exist iff the nerve inclusion holds
void compatible(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 10);
  std::uniform_int_distribution<long> shift(-2, 2);
  std::uniform_int_distribution<int> mode(0, 2);
  int included = 0, excluded = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int k = 2 + trial % 5;
    auto base = random_lines(rng, k);
    auto moved = base;
    for (auto& l : moved) l.c += shift(rng);
    auto other = random_lines(rng, k);
    SubspaceArrangement x1 = arrangement(base), x2 = arrangement(moved);
    switch (mode(rng)) {
      case 0: std::swap(x1, x2); break;
      case 1: x2 = arrangement(other); break;
      default: break;
    }
    bool inclusion = dominates(x1, x2);
    bool built = true;
    try {
      CompatibleMap g = compatible_map(nerve(x1), x2);
      out.require(verify_compatible(g, x2), "covering condition, trial " + std::to_string(trial));
    } catch (const Error& e) {
      built = false;
      out.require(e.kind() == ErrorKind::NotCompatible, "error kind, trial " + std::to_string(trial));
    }
    out.require(built == inclusion, "iff, trial " + std::to_string(trial));
    (inclusion ? included : excluded)++;
  }
  out.require(included > 0 && excluded > 0, "both outcomes exercised");
  out.detail << "120 trials, " << included << " inclusions, " << excluded << " non-inclusions";
}

// 11. F_{alpha, gamma} is polynomial in compatible translations
void integral_f(Outcome& out, std::uint64_t seed) {
  auto lines = [](std::initializer_list<RawLine> ls) { return arrangement(std::vector<RawLine>(ls)); };
  SubspaceArrangement triple = lines({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
  SubspaceArrangement four = lines({{0, 1, 0}, {1, 0, 0}, {1, 1, 3}, {1, -2, -2}});
  MultiPolynomial x = MultiPolynomial::variable(2, 0), y = MultiPolynomial::variable(2, 1);
  OneForm x_dy{MultiPolynomial(2), x};
  OneForm quadratic{y * y, x * y + x * x};
  SimplicialCycle tri{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  SimplicialCycle square{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}};

  std::vector<TranslationTuple> common{TranslationTuple(3, pt({1, 0})), TranslationTuple(3, pt({0, 1}))};
  std::vector<TranslationTuple> normals;
  std::vector<RationalVector> n{pt({0, 1}), pt({1, 0}), pt({1, 1}), pt({1, -2})};
  for (std::size_t i = 0; i < 4; ++i) {
    TranslationTuple t(4, pt({0, 0}));
    t[i] = n[i];
    normals.push_back(t);
  }
  struct Config {
    std::string name;
    const SubspaceArrangement* x;
    const SimplicialCycle* gamma;
    const OneForm* alpha;
    const std::vector<TranslationTuple>* basis;
  };
  std::vector<Config> configs{{"concurrent triple, x dy", &triple, &tri, &x_dy, &common},
                              {"four lines, triangle cycle, x dy", &four, &tri, &x_dy, &normals},
                              {"four lines, square cycle, quadratic form", &four, &square, &quadratic, &normals}};
  std::size_t held = 0;
  for (const auto& c : configs) {
    IntegralFReport r = integral_F(*c.x, *c.gamma, *c.alpha, *c.basis, 6, seed + 11);
    out.require(r.ok && r.holdout_checked >= 5 && r.holdout_mismatches == 0, c.name);
    held += r.holdout_checked;
  }
  out.detail << "3 configurations, " << held << " held-out samples";
}

// 12. numeric root counts vs BKK
void bkk(Outcome& out, std::uint64_t seed, const RootTolerances& tol) {
  auto catalog = bkk_catalog();
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s <= 10; ++s) seeds.push_back(seed + s);
  HarnessReport r = bkk_harness(catalog, seeds, tol);
  std::vector<long> expected{1, 2, 2, 4};
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    out.require(bkk_number(std::vector<ConvexPolytope>{catalog[i].first, catalog[i].second}) == expected[i],
                catalog[i].name + " bkk value");
  }
  for (const auto& run : r.runs) {
    out.require(run.agree, run.case_name + " seed " + std::to_string(run.seed));
  }
  out.require(r.ok, "harness verdict (agreement and at most 5% flagged)");
  out.detail << r.runs.size() << " runs, " << r.flagged_runs << " flagged";
}

const char* kNames[kCriteria] = {
    "inverse(P) * chi_P == 1",
    "lattice measure of dilations is polynomial",
    "Minkowski polynomiality of volume",
    "mixed volume axioms and virtual expansion",
    "Green identity on winding chains",
    "truncated virtual polygon == winding chain",
    "support-function volume is 2-homogeneous",
    "smooth disk area from support function",
    "nerve b1 == bounded complement regions",
    "compatible map iff nerve inclusion",
    "F_{alpha,gamma} polynomial in translations",
    "BKK harness: root counts == 2! MV",
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceConfig& config) {
  if (id < 1 || id > kCriteria) throw Error(ErrorKind::InvalidInput, "no acceptance criterion " + std::to_string(id));
  CriterionResult result;
  result.id = id;
  result.name = kNames[id - 1];
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: inverse_identity(out, config.seed); break;
      case 2: lattice_dilations(out, config.seed); break;
      case 3: minkowski_polynomiality(out, config.seed); break;
      case 4: mixed_volume_axioms(out, config.seed); break;
      case 5: green_identity(out, config.seed); break;
      case 6: virtual_winding(out, config.seed); break;
      case 7: homogeneity(out, config.seed); break;
      case 8: smooth_demo(out, config.seed); break;
      case 9: wedge(out, config.seed); break;
      case 10: compatible(out, config.seed); break;
      case 11: integral_f(out, config.seed); break;
      default: bkk(out, config.seed, config.tol); break;
    }
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "exception: " << e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.pass = out.pass;
  result.detail = out.detail.str();
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, config));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s  %2d  ", r.pass ? "PASS" : "FAIL", r.id);
  char time[32];
  std::snprintf(time, sizeof time, "  (%.2fs)  ", r.seconds);
  return buf + r.name + time + r.detail;
}

}  // namespace vpoly
