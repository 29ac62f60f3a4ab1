#include "vpoly/measures.hpp"

#include "vpoly/error.hpp"
#include "vpoly/linalg.hpp"

#include <string>

namespace vpoly {

namespace {

void require_dim_bound(std::size_t n, const char* op) {
  if (n > static_cast<std::size_t>(kMaxHullDim))
    throw Error(ErrorKind::DimensionBound, std::string(op) + ": ambient dimension above " +
                                               std::to_string(kMaxHullDim));
}

Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational det3(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

// Calls visit(tuple) for every tuple in [lo, hi]^k in lexicographic order.
template <class F>
void for_each_tuple(std::size_t k, long lo, long hi, F&& visit) {
  std::vector<long> t(k, lo);
  while (true) {
    visit(static_cast<const std::vector<long>&>(t));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (t[i] < hi) {
        ++t[i];
        break;
      }
      t[i] = lo;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

LinearSolution solve_samples(const SampleMap& samples, int max_degree, std::size_t& vars,
                             std::vector<MultiPolynomial::Exponents>& monomials) {
  if (samples.empty()) throw Error(ErrorKind::EmptyInput, "fit: no samples");
  if (max_degree < 0) throw Error(ErrorKind::InvalidInput, "fit: negative degree");
  vars = samples.begin()->first.size();
  for (const auto& [key, value] : samples) {
    if (key.size() != vars) throw Error(ErrorKind::DimensionMismatch, "fit: sample tuples differ in length");
  }
  monomials = monomials_up_to(vars, max_degree);
  RationalMatrix a(samples.size(), monomials.size());
  RationalVector b(samples.size());
  std::size_t r = 0;
  for (const auto& [key, value] : samples) {
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      Rational m = 1;
      for (std::size_t v = 0; v < vars; ++v) {
        for (int e = 0; e < monomials[c][v]; ++e) m *= key[v];
      }
      a(r, c) = m;
    }
    b[r] = value;
    ++r;
  }
  return solve(a, b);
}

MultiPolynomial assemble(std::size_t vars, const std::vector<MultiPolynomial::Exponents>& monomials,
                         const RationalVector& x) {
  MultiPolynomial p(vars);
  for (std::size_t c = 0; c < monomials.size(); ++c) p.add_term(monomials[c], x[c]);
  return p;
}

}  // namespace

Rational volume(const ConvexPolytope& p) {
  const std::size_t n = p.ambient_dim();
  require_dim_bound(n, "volume");
  if (p.dim() < static_cast<int>(n)) return 0;
  const auto& v = p.vertices();
  if (n == 0) return 1;
  if (n == 1) return v.back()[0] - v.front()[0];
  if (n == 2) {
    const auto& cyc = p.boundary_cycle();
    Rational twice = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto& a = v[cyc[i]];
      const auto& b = v[cyc[(i + 1) % cyc.size()]];
      twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs_q(twice) / 2;
  }
  // Cone from the first vertex over a fan triangulation of every facet.
  const RationalVector& apex = v.front();
  Rational six = 0;
  for (const Halfspace& h : p.facets()) {
    std::vector<RationalVector> fv;
    for (auto i : h.vertex_ids) fv.push_back(v[i]);
    ConvexPolytope facet = hull(fv);
    const auto& cyc = facet.boundary_cycle();
    const auto& w = facet.vertices();
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
      six += abs_q(det3(w[cyc[0]] - apex, w[cyc[i]] - apex, w[cyc[i + 1]] - apex));
    }
  }
  return six / 6;
}

Rational lattice_measure(const MultiPolynomial& weight, const ConvexChain& f) {
  require_dim_bound(f.ambient_dim(), "lattice_measure");
  if (weight.vars() != f.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "lattice_measure: weight variables differ from ambient dimension");
  Rational total = 0;
  for (const auto& t : f.terms()) {
    if (!t.polytope.has_integer_vertices())
      throw Error(ErrorKind::NonIntegral, "lattice_measure: polytope with non-integer vertices");
    Rational s = 0;
    for (const auto& x : lattice_points(t.polytope)) s += weight.evaluate(x);
    total += t.coeff * s;
  }
  return total;
}

ConvexChain dilate_chain(const std::vector<ConvexPolytope>& bases, const std::vector<long>& exponents) {
  if (bases.empty()) throw Error(ErrorKind::EmptyInput, "dilate_chain: no bases");
  if (bases.size() != exponents.size())
    throw Error(ErrorKind::InvalidInput, "dilate_chain: bases and exponents differ in length");
  const std::size_t n = bases.front().ambient_dim();
  std::vector<VirtualPolytope::Power> powers;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "dilate_chain: mixed ambient dimensions");
    if (!bases[i].has_integer_vertices())
      throw Error(ErrorKind::NonIntegral, "dilate_chain: base with non-integer vertices");
    powers.emplace_back(bases[i], exponents[i]);
  }
  return VirtualPolytope::from_powers(n, std::move(powers)).chain();
}

MultiPolynomial interpolate(const SampleMap& samples, int max_degree) {
  std::size_t vars = 0;
  std::vector<MultiPolynomial::Exponents> monomials;
  LinearSolution sol = solve_samples(samples, max_degree, vars, monomials);
  if (sol.status == SolveStatus::Inconsistent)
    throw Error(ErrorKind::Inconsistent, "no polynomial of degree <= " + std::to_string(max_degree) +
                                             " interpolates the samples");
  if (sol.status == SolveStatus::Underdetermined)
    throw Error(ErrorKind::InvalidInput, "samples do not determine the interpolant");
  return assemble(vars, monomials, sol.x);
}

MultiPolynomial fit_polynomial(const SampleMap& samples, int max_degree) {
  if (samples.empty()) throw Error(ErrorKind::EmptyInput, "fit: no samples");
  if (max_degree < 0) throw Error(ErrorKind::InvalidInput, "fit: negative degree");
  const std::size_t k = samples.begin()->first.size();
  bool box = true;
  for_each_tuple(k, 0, max_degree, [&](const std::vector<long>& t) {
    if (!samples.count(t)) box = false;
  });
  if (!box)
    throw Error(ErrorKind::InvalidInput, "fit: samples must contain the box [0, " + std::to_string(max_degree) + "]^" +
                                             std::to_string(k));
  return interpolate(samples, max_degree);
}

Rational mixed_volume(std::span<const ConvexPolytope> bodies) {
  if (bodies.empty()) throw Error(ErrorKind::EmptyInput, "mixed_volume: no bodies");
  const std::size_t n = bodies.front().ambient_dim();
  require_dim_bound(n, "mixed_volume");
  if (bodies.size() != n)
    throw Error(ErrorKind::InvalidInput, "mixed_volume: need exactly " + std::to_string(n) + " bodies, got " +
                                             std::to_string(bodies.size()));
  for (const auto& b : bodies) {
    if (b.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "mixed_volume: mixed ambient dimensions");
  }
  Rational total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    ConvexPolytope sum = hull({RationalVector(n)});
    std::size_t size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sum = minkowski_sum(sum, bodies[i]);
        ++size;
      }
    }
    Rational v = volume(sum);
    total += ((n - size) % 2 == 0) ? v : Rational(-v);
  }
  return total / factorial(n);
}

VirtualBody::VirtualBody(ConvexPolytope positive, ConvexPolytope negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  if (positive_.ambient_dim() != negative_.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "virtual body parts differ in ambient dimension");
  for (const ConvexPolytope* p : {&positive_, &negative_}) {
    if (p->dim() != 0 && !p->is_full_dimensional())
      throw Error(ErrorKind::NotFullDimensional, "virtual body part must be full-dimensional or a point");
  }
}

VirtualBody::VirtualBody(ConvexPolytope positive)
    : VirtualBody(positive, hull({RationalVector(positive.ambient_dim())})) {}

VirtualBody VirtualBody::multiple(const ConvexPolytope& body, const Rational& lambda) {
  ConvexPolytope origin = hull({RationalVector(body.ambient_dim())});
  if (lambda < 0) return VirtualBody(origin, body.scale(-lambda));
  return VirtualBody(body.scale(lambda), origin);
}

bool operator==(const VirtualBody& x, const VirtualBody& y) {
  return minkowski_sum(x.positive_, y.negative_) == minkowski_sum(y.positive_, x.negative_);
}

Rational virtual_mixed_volume(std::span<const VirtualBody> bodies) {
  if (bodies.empty()) throw Error(ErrorKind::EmptyInput, "virtual_mixed_volume: no bodies");
  const std::size_t n = bodies.size();
  require_dim_bound(n, "virtual_mixed_volume");
  Rational total = 0;
  std::vector<ConvexPolytope> chosen(bodies.size(), bodies.front().positive());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int negatives = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool neg = mask & (1u << i);
      chosen[i] = neg ? bodies[i].negative() : bodies[i].positive();
      negatives += neg;
    }
    Rational mv = mixed_volume(chosen);
    total += (negatives % 2 == 0) ? mv : Rational(-mv);
  }
  return total;
}

Rational virtual_volume(const VirtualBody& body) {
  std::vector<VirtualBody> copies(body.positive().ambient_dim(), body);
  require_dim_bound(copies.size(), "virtual_volume");
  if (copies.empty()) return 1;
  return virtual_mixed_volume(copies);
}

PolynomialityReport minkowski_polynomiality_check(const ConvexPolytope& a, const ConvexPolytope& b, int grid) {
  const std::size_t n = a.ambient_dim();
  require_dim_bound(n, "minkowski_polynomiality_check");
  if (b.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "minkowski_polynomiality_check: dimensions differ");
  if (grid < static_cast<int>(n) + 1)
    throw Error(ErrorKind::InvalidInput, "minkowski_polynomiality_check: grid must have at least n + 1 points");
  SampleMap samples;
  for_each_tuple(2, 0, grid - 1, [&](const std::vector<long>& t) {
    samples[t] = volume(minkowski_sum(a.scale(t[0]), b.scale(t[1])));
  });
  PolynomialityReport r;
  r.volume_polynomial = fit_polynomial(samples, static_cast<int>(n));
  r.homogeneous = r.volume_polynomial.is_homogeneous(static_cast<int>(n));
  if (n >= 1) {
    r.mixed_coefficient = r.volume_polynomial.coefficient({static_cast<int>(n) - 1, 1});
    std::vector<ConvexPolytope> args(n - 1, a);
    args.push_back(b);
    r.mixed_volume = mixed_volume(args);
    r.ok = r.homogeneous && r.mixed_coefficient == Rational(static_cast<long>(n)) * r.mixed_volume;
  }
  return r;
}

LatticeMeasureReport lattice_polynomiality_check(const std::vector<ConvexPolytope>& bases,
                                                 const MultiPolynomial& weight, int grid_max, int range) {
  if (bases.empty()) throw Error(ErrorKind::EmptyInput, "lattice_polynomiality_check: no bases");
  const std::size_t n = bases.front().ambient_dim();
  const std::size_t k = bases.size();
  LatticeMeasureReport r;
  r.degree_bound = static_cast<int>(n) + std::max(weight.degree(), 0);
  if (grid_max < r.degree_bound)
    throw Error(ErrorKind::InvalidInput, "lattice_polynomiality_check: grid smaller than the degree bound");
  if (range < 0) throw Error(ErrorKind::InvalidInput, "lattice_polynomiality_check: negative range");

  // Powers of each base are shared across all tuples.
  std::vector<std::map<long, ConvexChain>> cache(k);
  auto chain_value = [&](const std::vector<long>& e) {
    ConvexChain acc = ConvexChain::identity(n);
    for (std::size_t i = 0; i < k; ++i) {
      auto it = cache[i].find(e[i]);
      if (it == cache[i].end()) it = cache[i].emplace(e[i], dilate_chain({bases[i]}, {e[i]})).first;
      acc = product(acc, it->second);
    }
    return lattice_measure(weight, acc);
  };

  SampleMap samples;
  for_each_tuple(k, 0, grid_max, [&](const std::vector<long>& t) { samples[t] = chain_value(t); });
  try {
    r.fitted = fit_polynomial(samples, r.degree_bound);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inconsistent) throw;
    return r;
  }
  r.fitted_degree = r.fitted.degree();

  for_each_tuple(k, -range, range, [&](const std::vector<long>& t) {
    RationalVector x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = t[i];
    Rational fitted = r.fitted.evaluate(x);
    Rational actual = chain_value(t);
    ++r.checked;
    if (fitted != actual) r.mismatches.push_back({t, fitted, actual});
  });
  r.ok = r.mismatches.empty() && r.fitted_degree <= r.degree_bound;
  return r;
}

}  // namespace vpoly
