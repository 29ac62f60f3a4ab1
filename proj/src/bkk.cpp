#include "vpoly/bkk.hpp"

#include "vpoly/error.hpp"
#include "vpoly/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace vpoly {

namespace {

Complex ipow(Complex z, long k) {
  if (k < 0) return 1.0 / ipow(z, -k);
  Complex r = 1;
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long>(k);
  return f;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

double relative_residual(const std::vector<Complex>& c, Complex z) {
  double scale = 0, az = std::abs(z), p = 1;
  for (const auto& ck : c) {
    scale += std::abs(ck) * p;
    p *= az;
  }
  return scale == 0 ? 0 : std::abs(horner(c, z)) / scale;
}

void newton_polish(const std::vector<Complex>& c, Complex& z, int steps) {
  for (int s = 0; s < steps; ++s) {
    Complex p = 0, dp = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      dp = dp * z + p;
      p = p * z + *it;
    }
    if (dp == Complex(0)) return;
    Complex next = z - p / dp;
    if (relative_residual(c, next) > relative_residual(c, z)) return;
    z = next;
  }
}

// Dense bivariate polynomial: coef[i][j] multiplies y^i x^j.
struct Dense {
  std::vector<std::vector<Complex>> coef;

  int deg_y() const { return static_cast<int>(coef.size()) - 1; }
  int deg_x() const {
    int d = 0;
    for (const auto& row : coef) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }
  // coefficients in y at a fixed x
  std::vector<Complex> at_x(Complex x) const {
    std::vector<Complex> out;
    for (const auto& row : coef) out.push_back(horner(row, x));
    return out;
  }
  Complex value(Complex x, Complex y) const { return horner(at_x(x), y); }
  double scale(Complex x, Complex y) const {
    double s = 0;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      for (std::size_t j = 0; j < coef[i].size(); ++j) {
        s += std::abs(coef[i][j]) * std::pow(std::abs(y), static_cast<double>(i)) *
             std::pow(std::abs(x), static_cast<double>(j));
      }
    }
    return s;
  }
  double residual(Complex x, Complex y) const {
    double s = scale(x, y);
    return s == 0 ? 0 : std::abs(value(x, y)) / s;
  }
  std::pair<Complex, Complex> gradient(Complex x, Complex y) const {
    Complex dx = 0, dy = 0;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      for (std::size_t j = 0; j < coef[i].size(); ++j) {
        if (j > 0) dx += coef[i][j] * static_cast<double>(j) * ipow(x, static_cast<long>(j) - 1) * ipow(y, static_cast<long>(i));
        if (i > 0) dy += coef[i][j] * static_cast<double>(i) * ipow(x, static_cast<long>(j)) * ipow(y, static_cast<long>(i) - 1);
      }
    }
    return {dx, dy};
  }
};

// Shifted so every exponent is nonnegative and both minima are zero.
Dense to_dense(const LaurentPolynomial& p, bool swap) {
  long min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    long ex = swap ? e[1] : e[0], ey = swap ? e[0] : e[1];
    if (first) {
      min_x = max_x = ex;
      min_y = max_y = ey;
      first = false;
    }
    min_x = std::min(min_x, ex);
    max_x = std::max(max_x, ex);
    min_y = std::min(min_y, ey);
    max_y = std::max(max_y, ey);
  }
  Dense d;
  d.coef.assign(static_cast<std::size_t>(max_y - min_y + 1), std::vector<Complex>(static_cast<std::size_t>(max_x - min_x + 1)));
  for (const auto& [e, c] : p.terms()) {
    long ex = swap ? e[1] : e[0], ey = swap ? e[0] : e[1];
    d.coef[static_cast<std::size_t>(ey - min_y)][static_cast<std::size_t>(ex - min_x)] = c;
  }
  return d;
}

Complex determinant(std::vector<std::vector<Complex>> m) {
  const std::size_t n = m.size();
  Complex det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == Complex(0)) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

Complex sylvester_resultant(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Complex>> s(size, std::vector<Complex>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  }
  return determinant(std::move(s));
}

// Res_y(p1, p2) as a polynomial in x, sampled at roots of unity and
// recovered by an inverse discrete Fourier transform.
std::vector<Complex> resultant_in_x(const Dense& p1, const Dense& p2) {
  const int bound = p1.deg_y() * p2.deg_x() + p2.deg_y() * p1.deg_x();
  const std::size_t n = static_cast<std::size_t>(bound) + 1;
  std::vector<Complex> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex x = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    values[k] = sylvester_resultant(p1.at_x(x), p2.at_x(x));
  }
  std::vector<Complex> coef(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex s = 0;
    for (std::size_t k = 0; k < n; ++k) {
      s += values[k] * std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(j * k % n) / static_cast<double>(n));
    }
    coef[j] = s / static_cast<double>(n);
  }
  return coef;
}

void polish_pair(const Dense& p1, const Dense& p2, Complex& x, Complex& y) {
  for (int step = 0; step < 4; ++step) {
    Complex f1 = p1.value(x, y), f2 = p2.value(x, y);
    auto [a, b] = p1.gradient(x, y);
    auto [c, d] = p2.gradient(x, y);
    Complex det = a * d - b * c;
    if (det == Complex(0)) return;
    Complex nx = x - (d * f1 - b * f2) / det, ny = y - (a * f2 - c * f1) / det;
    if (std::max(p1.residual(nx, ny), p2.residual(nx, ny)) > std::max(p1.residual(x, y), p2.residual(x, y))) return;
    x = nx;
    y = ny;
  }
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t vars, std::map<Exponent, Complex> terms) : vars_(vars) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars) throw Error(ErrorKind::DimensionMismatch, "laurent polynomial: exponent length differs from variable count");
    if (c != Complex(0)) terms_.emplace(e, c);
  }
  if (terms_.empty()) throw Error(ErrorKind::EmptyInput, "laurent polynomial: no nonzero monomial");
}

std::vector<RationalVector> LaurentPolynomial::support() const {
  std::vector<RationalVector> out;
  for (const auto& [e, c] : terms_) {
    RationalVector v(vars_);
    for (std::size_t i = 0; i < vars_; ++i) v[i] = e[i];
    out.push_back(v);
  }
  return out;
}

Complex LaurentPolynomial::evaluate(std::span<const Complex> point) const {
  if (point.size() != vars_) throw Error(ErrorKind::DimensionMismatch, "laurent polynomial: point has the wrong length");
  Complex s = 0;
  for (const auto& [e, c] : terms_) {
    Complex t = c;
    for (std::size_t i = 0; i < vars_; ++i) t *= ipow(point[i], e[i]);
    s += t;
  }
  return s;
}

ConvexPolytope newton_polytope(const LaurentPolynomial& p) { return hull(p.support()); }

Rational bkk_number(std::span<const ConvexPolytope> polytopes) {
  Rational v = factorial(polytopes.size()) * mixed_volume(polytopes);
  bool lattice = std::all_of(polytopes.begin(), polytopes.end(), [](const ConvexPolytope& p) { return p.has_integer_vertices(); });
  if (lattice && !is_integer(v)) throw Error(ErrorKind::NonIntegral, "bkk_number: lattice polytopes gave a non-integer count");
  return v;
}

Rational virtual_bkk(std::span<const std::pair<ConvexPolytope, ConvexPolytope>> pairs) {
  std::vector<VirtualBody> bodies;
  for (const auto& [num, den] : pairs) bodies.emplace_back(num, den);
  return factorial(pairs.size()) * virtual_mixed_volume(bodies);
}

std::vector<LaurentPolynomial> sample_system(std::span<const ConvexPolytope> polytopes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<LaurentPolynomial> out;
  for (const auto& p : polytopes) {
    if (!p.has_integer_vertices()) throw Error(ErrorKind::NonIntegral, "sample_system: polytope has non-integer vertices");
    std::map<LaurentPolynomial::Exponent, Complex> terms;
    for (const auto& v : lattice_points(p)) {
      LaurentPolynomial::Exponent e;
      for (std::size_t i = 0; i < v.size(); ++i) e.push_back(v[i].convert_to<long>());
      Complex c;
      do {
        c = Complex(unit(rng), unit(rng));
      } while (c == Complex(0));
      terms.emplace(std::move(e), c);
    }
    out.emplace_back(p.ambient_dim(), std::move(terms));
  }
  return out;
}

std::vector<Complex> polynomial_roots(std::vector<Complex> c, double tol_residual, bool& converged) {
  converged = true;
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t d = c.size() - 1;
  std::vector<Complex> monic(c.size());
  for (std::size_t k = 0; k <= d; ++k) monic[k] = c[k] / c[d];

  double radius = 1;
  if (std::abs(monic[0]) > 0) radius = std::pow(std::abs(monic[0]), 1.0 / static_cast<double>(d));
  std::vector<Complex> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    z[k] = std::polar(radius, 0.4 + 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double biggest = 0;
    for (std::size_t i = 0; i < d; ++i) {
      Complex p = 0, dp = 0;
      for (auto it = monic.rbegin(); it != monic.rend(); ++it) {
        dp = dp * z[i] + p;
        p = p * z[i] + *it;
      }
      if (p == Complex(0)) continue;
      Complex ratio = p / dp;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      Complex w = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      biggest = std::max(biggest, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (biggest < 1e-15) break;
  }
  for (auto& r : z) {
    newton_polish(c, r, 3);
    if (!(relative_residual(c, r) <= tol_residual)) converged = false;
  }
  return z;
}

TorusRootCount count_torus_roots_2d(const LaurentPolynomial& p1, const LaurentPolynomial& p2, const RootTolerances& tol) {
  if (p1.vars() != 2 || p2.vars() != 2) throw Error(ErrorKind::InvalidInput, "count_torus_roots_2d: expects two bivariate polynomials");
  TorusRootCount out;
  RootCertificate& cert = out.certificate;

  Dense a = to_dense(p1, false), b = to_dense(p2, false);
  if (std::min(a.deg_y(), b.deg_y()) == 0 && std::min(a.deg_x(), b.deg_x()) > 0) {
    cert.swapped = true;
    a = to_dense(p1, true);
    b = to_dense(p2, true);
  }

  std::vector<Complex> res = resultant_in_x(a, b);
  double biggest = 0;
  for (const auto& r : res) biggest = std::max(biggest, std::abs(r));
  if (biggest == 0) {
    cert.flags.push_back("resultant vanishes identically");
    return out;
  }
  while (!res.empty() && std::abs(res.back()) < 1e-11 * biggest) res.pop_back();
  std::size_t zeros = 0;
  while (zeros < res.size() && std::abs(res[zeros]) < 1e-11 * biggest) ++zeros;
  cert.excluded_off_torus += zeros;
  res.erase(res.begin(), res.begin() + static_cast<long>(zeros));
  cert.resultant_degree = static_cast<int>(res.size()) - 1;

  bool converged = true;
  std::vector<Complex> xs = polynomial_roots(res, tol.residual, converged);
  for (const auto& x : xs) cert.max_resultant_residual = std::max(cert.max_resultant_residual, relative_residual(res, x));
  if (!converged) cert.flags.push_back("resultant root residual above tolerance");

  std::vector<Complex> torus_x;
  for (const auto& x : xs) {
    if (std::abs(x) > tol.torus) {
      torus_x.push_back(x);
    } else {
      ++cert.excluded_off_torus;
    }
  }

  // group nearby roots
  std::vector<std::size_t> parent(torus_x.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < torus_x.size(); ++i) {
    for (std::size_t j = i + 1; j < torus_x.size(); ++j) {
      double scale = std::max(1.0, std::max(std::abs(torus_x[i]), std::abs(torus_x[j])));
      if (std::abs(torus_x[i] - torus_x[j]) <= tol.cluster * scale) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, int> cluster_size;
  for (std::size_t i = 0; i < torus_x.size(); ++i) ++cluster_size[find(i)];
  for (const auto& [root, size] : cluster_size) {
    if (size > 1) {
      cert.flags.push_back("cluster of " + std::to_string(size) + " resultant roots");
    }
  }

  for (std::size_t i = 0; i < torus_x.size(); ++i) {
    Complex x = torus_x[i];
    const Dense& solve = b.deg_y() == 0 || (a.deg_y() > 0 && a.deg_y() <= b.deg_y()) ? a : b;
    const Dense& other = &solve == &a ? b : a;
    bool ok = true;
    std::vector<Complex> ys = polynomial_roots(solve.at_x(x), tol.residual, ok);
    double best = std::numeric_limits<double>::infinity();
    Complex y = 0;
    for (const auto& cand : ys) {
      double r = other.residual(x, cand);
      if (r < best) {
        best = r;
        y = cand;
      }
    }
    if (!(best <= tol.common)) {
      cert.flags.push_back("no common root over a resultant root");
      continue;
    }
    polish_pair(a, b, x, y);
    if (std::abs(y) <= tol.torus) {
      ++cert.excluded_off_torus;
      continue;
    }
    TorusRoot r;
    r.x = cert.swapped ? y : x;
    r.y = cert.swapped ? x : y;
    r.residual = std::max(a.residual(x, y), b.residual(x, y));
    r.multiplicity = cluster_size[find(i)];
    cert.max_system_residual = std::max(cert.max_system_residual, r.residual);
    cert.roots.push_back(r);
    ++out.count;
  }
  return out;
}

std::vector<HarnessCase> bkk_catalog() {
  auto poly = [](std::initializer_list<std::array<long, 2>> pts) {
    std::vector<RationalVector> v;
    for (auto [x, y] : pts) v.push_back(RationalVector{Rational(x), Rational(y)});
    return hull(v);
  };
  ConvexPolytope triangle = poly({{0, 0}, {1, 0}, {0, 1}});
  ConvexPolytope square = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  ConvexPolytope big = poly({{0, 0}, {2, 0}, {0, 2}});
  return {{"triangle/triangle", triangle, triangle},
          {"square/square", square, square},
          {"square/triangle", square, triangle},
          {"big-triangle-2x/square", big, square}};
}

HarnessReport bkk_harness(std::span<const HarnessCase> cases, std::span<const std::uint64_t> seeds, const RootTolerances& tol) {
  HarnessReport report;
  for (const auto& c : cases) {
    std::vector<ConvexPolytope> pair{c.first, c.second};
    Rational expected = bkk_number(pair);
    for (std::uint64_t seed : seeds) {
      HarnessRun run;
      run.case_name = c.name;
      run.seed = seed;
      run.bkk = expected;
      for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
        run.used_seed = seed + static_cast<std::uint64_t>(attempt) * 1000003ULL;
        run.resamples = attempt;
        std::vector<LaurentPolynomial> system = sample_system(pair, run.used_seed);
        TorusRootCount count = count_torus_roots_2d(system[0], system[1], tol);
        run.counted = count.count;
        run.certificate = count.certificate;
        for (const auto& f : count.certificate.flags) run.flags.push_back("seed " + std::to_string(run.used_seed) + ": " + f);
        if (count.certificate.reliable()) break;
      }
      run.agree = run.certificate.reliable() && Rational(run.counted) == expected;
      if (!run.flags.empty()) ++report.flagged_runs;
      report.runs.push_back(std::move(run));
    }
  }
  bool all_agree = std::all_of(report.runs.begin(), report.runs.end(), [](const HarnessRun& r) { return r.agree; });
  report.ok = !report.runs.empty() && all_agree &&
              static_cast<double>(report.flagged_runs) <= kMaxFlaggedFraction * static_cast<double>(report.runs.size());
  return report;
}

}  // namespace vpoly
