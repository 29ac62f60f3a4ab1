#include "vpoly/chain.hpp"

#include "vpoly/error.hpp"
#include "vpoly/refinement.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vpoly {

namespace {

void require_same_dim(const ConvexChain& f, const ConvexChain& g, const char* op) {
  if (f.ambient_dim() != g.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": ambient dimensions differ");
}

void require_dim_bound(const ConvexPolytope& p, const char* op) {
  if (p.ambient_dim() > static_cast<std::size_t>(kMaxHullDim))
    throw Error(ErrorKind::DimensionBound, std::string(op) + ": ambient dimension above " +
                                               std::to_string(kMaxHullDim));
}

ConvexChain from_map(std::size_t n, std::map<ConvexPolytope, Rational>&& acc) {
  std::vector<ChainTerm> terms;
  terms.reserve(acc.size());
  for (auto& [p, c] : acc) {
    if (!is_zero(c)) terms.push_back({std::move(c), p});
  }
  return ConvexChain(n, std::move(terms));
}

}  // namespace

ConvexChain::ConvexChain(std::size_t ambient_dim, std::vector<ChainTerm> terms) : ambient_(ambient_dim) {
  std::map<ConvexPolytope, Rational> acc;
  for (auto& t : terms) {
    if (t.polytope.ambient_dim() != ambient_dim)
      throw Error(ErrorKind::DimensionMismatch, "chain term has wrong ambient dimension");
    auto [it, inserted] = acc.emplace(t.polytope, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  for (auto& [p, c] : acc) {
    if (!vpoly::is_zero(c)) terms_.push_back({std::move(c), p});
  }
}

ConvexChain ConvexChain::identity(std::size_t ambient_dim) {
  return chain_of(hull({RationalVector(ambient_dim)}));
}

bool operator==(const ConvexChain& a, const ConvexChain& b) {
  if (a.ambient_ != b.ambient_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].polytope == b.terms_[i].polytope)) return false;
  }
  return true;
}

ConvexChain chain_of(const ConvexPolytope& p) {
  return ConvexChain(p.ambient_dim(), {{Rational(1), p}});
}

ConvexChain add(const ConvexChain& f, const ConvexChain& g) {
  require_same_dim(f, g, "add");
  std::vector<ChainTerm> terms = f.terms();
  terms.insert(terms.end(), g.terms().begin(), g.terms().end());
  return ConvexChain(f.ambient_dim(), std::move(terms));
}

ConvexChain scale(const ConvexChain& f, const Rational& c) {
  std::vector<ChainTerm> terms = f.terms();
  for (auto& t : terms) t.coeff *= c;
  return ConvexChain(f.ambient_dim(), std::move(terms));
}

ConvexChain product(const ConvexChain& f, const ConvexChain& g) {
  require_same_dim(f, g, "product");
  std::map<ConvexPolytope, Rational> acc;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      ConvexPolytope s = minkowski_sum(a.polytope, b.polytope);
      auto [it, inserted] = acc.emplace(std::move(s), a.coeff * b.coeff);
      if (!inserted) it->second += a.coeff * b.coeff;
    }
  }
  return from_map(f.ambient_dim(), std::move(acc));
}

ConvexChain open_polytope_chain(const ConvexPolytope& p) {
  require_dim_bound(p, "open_polytope_chain");
  std::vector<ChainTerm> terms;
  for (const Face& f : p.faces()) {
    Rational sign = ((p.dim() - f.dim) % 2 == 0) ? 1 : -1;
    terms.push_back({sign, p.face_polytope(f)});
  }
  return ConvexChain(p.ambient_dim(), std::move(terms));
}

ConvexChain inverse(const ConvexPolytope& p) {
  require_dim_bound(p, "inverse");
  Rational sign = (p.dim() % 2 == 0) ? 1 : -1;
  return scale(open_polytope_chain(p.scale(-1)), sign);
}

VirtualPolytope VirtualPolytope::from_powers(std::size_t ambient_dim, std::vector<Power> powers) {
  ConvexChain acc = ConvexChain::identity(ambient_dim);
  for (const auto& [base, k] : powers) {
    if (base.ambient_dim() != ambient_dim)
      throw Error(ErrorKind::DimensionMismatch, "virtual polytope base has wrong ambient dimension");
    require_dim_bound(base, "power");
    if (k == 0) continue;
    ConvexChain factor = k > 0 ? chain_of(base) : inverse(base);
    for (long i = 0; i < (k > 0 ? k : -k); ++i) acc = product(acc, factor);
  }
  return VirtualPolytope(std::move(acc), std::move(powers), true);
}

VirtualPolytope::VirtualPolytope(ConvexChain chain, std::vector<Power> powers)
    : chain_(std::move(chain)), powers_(std::move(powers)) {
  VirtualPolytope expected = from_powers(chain_.ambient_dim(), powers_);
  if (!chains_equal(chain_, expected.chain()).equal)
    throw Error(ErrorKind::Inconsistent, "chain is not the product of the recorded powers");
}

VirtualPolytope power(const ConvexPolytope& p, long k) {
  return VirtualPolytope::from_powers(p.ambient_dim(), {{p, k}});
}

Rational evaluate(const ConvexChain& f, const RationalVector& x) {
  if (x.size() != f.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "evaluate: dimension mismatch");
  Rational s = 0;
  for (const auto& t : f.terms()) {
    if (t.polytope.contains(x)) s += t.coeff;
  }
  return s;
}

Rational euler_integral(const ConvexChain& f) {
  Rational s = 0;
  for (const auto& t : f.terms()) s += t.coeff;
  return s;
}

std::vector<RationalVector> refinement_samples(const ConvexChain& f) {
  const std::size_t n = f.ambient_dim();
  if (n == 1) {
    std::set<Rational> xs;
    for (const auto& t : f.terms())
      for (const auto& v : t.polytope.vertices()) xs.insert(v[0]);
    std::vector<RationalVector> out;
    if (xs.empty()) return {RationalVector{Rational(0)}};
    std::vector<Rational> v(xs.begin(), xs.end());
    out.push_back(RationalVector{v.front() - 1});
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(RationalVector{v[i]});
      out.push_back(RationalVector{i + 1 < v.size() ? (v[i] + v[i + 1]) / 2 : v[i] + 1});
    }
    return out;
  }
  if (n != 2) throw Error(ErrorKind::DimensionBound, "refinement_samples: complete refinement only for n <= 2");
  std::vector<Line2> lines;
  std::vector<RationalVector> points;
  for (const auto& t : f.terms()) {
    const ConvexPolytope& p = t.polytope;
    for (const auto& v : p.vertices()) points.push_back(v);
    if (p.dim() == 1) {
      lines.push_back(line_through(p.vertices()[0], p.vertices()[1]));
    } else if (p.dim() == 2) {
      for (const auto& fc : p.facets()) lines.push_back(canonical_line(fc.normal[0], fc.normal[1], fc.offset));
    }
  }
  return slab_samples(lines, points, false);
}

namespace {

// Fixed sample set for ambient dimension >= 3: every vertex, every edge
// midpoint of every face, every face centroid, plus a 5^n grid over the
// bounding box offset by 1/3 of a cell.
std::vector<RationalVector> semi_samples(const ConvexChain& h) {
  const std::size_t n = h.ambient_dim();
  std::set<RationalVector> pts;
  RationalVector lo = h.terms().front().polytope.vertices().front(), hi = lo;
  for (const auto& t : h.terms()) {
    const ConvexPolytope& p = t.polytope;
    for (const auto& v : p.vertices()) {
      pts.insert(v);
      for (std::size_t c = 0; c < n; ++c) {
        if (v[c] < lo[c]) lo[c] = v[c];
        if (v[c] > hi[c]) hi[c] = v[c];
      }
    }
    for (const Face& f : p.faces()) {
      RationalVector centroid(n);
      for (auto i : f.vertex_ids) centroid += p.vertices()[i];
      centroid *= Rational(1, static_cast<long>(f.vertex_ids.size()));
      pts.insert(centroid);
      if (f.dim == 1) {
        pts.insert((p.vertices()[f.vertex_ids[0]] + p.vertices()[f.vertex_ids[1]]) * Rational(1, 2));
      }
    }
  }
  constexpr int kGrid = 5;
  std::vector<int> idx(n, 0);
  while (true) {
    RationalVector x(n);
    for (std::size_t c = 0; c < n; ++c) {
      Rational cell = (hi[c] - lo[c] + 2) / kGrid;
      x[c] = lo[c] - 1 + cell * (Rational(idx[c]) + Rational(1, 3));
    }
    pts.insert(std::move(x));
    std::size_t c = 0;
    while (c < n && ++idx[c] == kGrid) idx[c++] = 0;
    if (c == n) break;
  }
  return {pts.begin(), pts.end()};
}

}  // namespace

ChainEquality chains_equal(const ConvexChain& f, const ConvexChain& g) {
  require_same_dim(f, g, "chains_equal");
  ConvexChain h = add(f, scale(g, -1));
  ChainEquality out;
  if (h.is_zero()) {
    out.equal = true;
    return out;
  }
  std::vector<RationalVector> samples;
  if (h.ambient_dim() <= 2) {
    samples = refinement_samples(h);
  } else {
    samples = semi_samples(h);
    out.exact = false;
  }
  out.samples = samples.size();
  out.equal = std::all_of(samples.begin(), samples.end(),
                          [&](const RationalVector& x) { return is_zero(evaluate(h, x)); });
  return out;
}

ConvexChain truncate_lower_dim(const ConvexChain& f) {
  std::vector<ChainTerm> terms;
  for (const auto& t : f.terms()) {
    if (t.polytope.is_full_dimensional()) terms.push_back(t);
  }
  return ConvexChain(f.ambient_dim(), std::move(terms));
}

}  // namespace vpoly
