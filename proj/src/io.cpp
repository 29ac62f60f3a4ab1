#include "vpoly/io.hpp"

#include "vpoly/error.hpp"

#include <algorithm>
#include <string>

namespace vpoly::io {

namespace {

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, std::string(what) + ": expected an array");
  return j;
}

std::vector<RationalVector> points_from_json(const Json& j) {
  std::vector<RationalVector> out;
  for (const auto& p : array(j, "points")) out.push_back(vector_from_json(p));
  return out;
}

Json points_to_json(const std::vector<RationalVector>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_array() && j.size() == 2) {
    Rational num = rational_from_json(j[0]), den = rational_from_json(j[1]);
    if (!is_integer(num) || !is_integer(den)) throw Error(ErrorKind::InvalidInput, "rational pair must hold integers");
    if (is_zero(den)) throw Error(ErrorKind::InvalidInput, "zero denominator");
    return num / den;
  }
  throw Error(ErrorKind::InvalidInput, "expected a rational as \"p/q\", an integer or [num, den]");
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

RationalVector vector_from_json(const Json& j) {
  RationalVector v(array(j, "vector").size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
  return v;
}

Json to_json(const ConvexPolytope& p) { return {{"dim", p.ambient_dim()}, {"vertices", points_to_json(p.vertices())}}; }

ConvexPolytope polytope_from_json(const Json& j) {
  return guarded("polytope", [&] {
    auto dim = field(j, "dim").get<std::size_t>();
    std::vector<RationalVector> v = points_from_json(field(j, "vertices"));
    if (v.empty()) throw Error(ErrorKind::EmptyInput, "polytope: no vertices");
    for (const auto& p : v) {
      if (p.size() != dim) throw Error(ErrorKind::DimensionMismatch, "polytope: vertex length differs from dim");
    }
    return hull(v);
  });
}

Json to_json(const ConvexChain& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back({{"coeff", to_json(t.coeff)}, {"polytope", to_json(t.polytope)}});
  return {{"dim", f.ambient_dim()}, {"terms", terms}};
}

ConvexChain chain_from_json(const Json& j) {
  return guarded("chain", [&] {
    auto dim = field(j, "dim").get<std::size_t>();
    std::vector<ChainTerm> terms;
    for (const auto& t : array(field(j, "terms"), "terms")) {
      terms.push_back({rational_from_json(field(t, "coeff")), polytope_from_json(field(t, "polytope"))});
    }
    return ConvexChain(dim, std::move(terms));
  });
}

Json to_json(const MultiPolynomial& p) {
  Json monomials = Json::array();
  for (const auto& [e, c] : p.terms()) monomials.push_back({{"exps", e}, {"coeff", to_json(c)}});
  return {{"vars", p.vars()}, {"monomials", monomials}};
}

MultiPolynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    auto vars = field(j, "vars").get<std::size_t>();
    MultiPolynomial p(vars);
    for (const auto& m : array(field(j, "monomials"), "monomials")) {
      auto e = field(m, "exps").get<MultiPolynomial::Exponents>();
      if (e.size() != vars) throw Error(ErrorKind::DimensionMismatch, "polynomial: exponent length differs from vars");
      for (int k : e) {
        if (k < 0) throw Error(ErrorKind::InvalidInput, "polynomial: negative exponent");
      }
      p.add_term(e, rational_from_json(field(m, "coeff")));
    }
    return p;
  });
}

Json to_json(const PLCycle& c) { return {{"points", points_to_json(c.points())}}; }

PLCycle cycle_from_json(const Json& j) {
  return guarded("cycle", [&] {
    std::vector<RationalVector> pts = points_from_json(field(j, "points"));
    for (const auto& p : pts) {
      if (p.size() != 2) throw Error(ErrorKind::DimensionMismatch, "cycle: points must lie in the plane");
    }
    return PLCycle(std::move(pts));
  });
}

Json to_json(const SupportFunctionPL& h) {
  Json values = Json::array();
  for (const auto& [normal, value] : h.values()) values.push_back({{"normal", to_json(normal)}, {"h", to_json(value)}});
  return {{"delta0", to_json(h.delta0())}, {"values", values}};
}

SupportFunctionPL support_from_json(const Json& j) {
  return guarded("support function", [&] {
    ConvexPolytope delta0 = polytope_from_json(field(j, "delta0"));
    std::map<RationalVector, Rational> values;
    for (const auto& v : array(field(j, "values"), "values")) {
      values[vector_from_json(field(v, "normal"))] = rational_from_json(field(v, "h"));
    }
    return SupportFunctionPL(delta0, std::move(values));
  });
}

Json to_json(const WindingChain& w) {
  Json regions = Json::array();
  for (const auto& r : w.regions) {
    Json loops = Json::array();
    for (const auto& loop : r.region.loops) loops.push_back(points_to_json(loop));
    regions.push_back({{"weight", r.weight},
                       {"area", to_json(r.region.area)},
                       {"sample", to_json(r.region.sample)},
                       {"loops", loops}});
  }
  return {{"regions", regions}};
}

WindingChain winding_chain_from_json(const Json& j) {
  return guarded("winding chain", [&] {
    WindingChain w;
    for (const auto& r : array(field(j, "regions"), "regions")) {
      WeightedRegion wr;
      wr.weight = field(r, "weight").get<long>();
      wr.region.area = rational_from_json(field(r, "area"));
      wr.region.sample = vector_from_json(field(r, "sample"));
      for (const auto& loop : array(field(r, "loops"), "loops")) wr.region.loops.push_back(points_from_json(loop));
      w.regions.push_back(std::move(wr));
    }
    return w;
  });
}

Json to_json(const AffineSubspace& s) { return {{"point", to_json(s.point())}, {"dirs", points_to_json(s.directions())}}; }

AffineSubspace subspace_from_json(const Json& j) {
  return guarded("subspace", [&] {
    std::vector<RationalVector> dirs = j.contains("dirs") ? points_from_json(j.at("dirs")) : std::vector<RationalVector>{};
    return AffineSubspace(vector_from_json(field(j, "point")), std::move(dirs));
  });
}

Json to_json(const SubspaceArrangement& x) {
  Json subspaces = Json::array();
  for (const auto& s : x.subspaces()) subspaces.push_back(to_json(s));
  return {{"ambient", x.ambient_dim()}, {"subspaces", subspaces}};
}

SubspaceArrangement arrangement_from_json(const Json& j) {
  return guarded("arrangement", [&] {
    auto ambient = field(j, "ambient").get<std::size_t>();
    std::vector<AffineSubspace> subspaces;
    for (const auto& s : array(field(j, "subspaces"), "subspaces")) subspaces.push_back(subspace_from_json(s));
    return SubspaceArrangement(ambient, std::move(subspaces));
  });
}

Json to_json(const SimplicialComplex& k) {
  Json faces = Json::array();
  for (const auto& f : k.faces()) faces.push_back(f);
  return {{"vertices", k.vertex_count()}, {"faces", faces}};
}

SimplicialComplex complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    auto n = field(j, "vertices").get<std::size_t>();
    std::vector<Simplex> faces;
    for (const auto& f : array(field(j, "faces"), "faces")) {
      Simplex s = f.get<Simplex>();
      std::sort(s.begin(), s.end());
      if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= n)
        throw Error(ErrorKind::InvalidInput, "complex: faces must be nonempty sets of vertex indices");
      faces.push_back(std::move(s));
    }
    return SimplicialComplex(n, faces);
  });
}

Json to_json(const LaurentPolynomial& p) {
  Json monomials = Json::array();
  for (const auto& [e, c] : p.terms()) monomials.push_back({{"exps", e}, {"re", c.real()}, {"im", c.imag()}});
  return {{"vars", p.vars()}, {"monomials", monomials}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
  return guarded("laurent polynomial", [&] {
    auto vars = field(j, "vars").get<std::size_t>();
    std::map<LaurentPolynomial::Exponent, Complex> terms;
    for (const auto& m : array(field(j, "monomials"), "monomials")) {
      auto e = field(m, "exps").get<LaurentPolynomial::Exponent>();
      double re = m.value("re", 0.0), im = m.value("im", 0.0);
      terms[e] += Complex(re, im);
    }
    return LaurentPolynomial(vars, std::move(terms));
  });
}

Json system_to_json(const std::vector<LaurentPolynomial>& system) {
  Json polys = Json::array();
  for (const auto& p : system) {
    Json one = to_json(p);
    polys.push_back({{"monomials", one["monomials"]}});
  }
  return {{"vars", system.empty() ? 0 : system.front().vars()}, {"polys", polys}};
}

std::vector<LaurentPolynomial> system_from_json(const Json& j) {
  return guarded("system", [&] {
    auto vars = field(j, "vars").get<std::size_t>();
    std::vector<LaurentPolynomial> out;
    for (const auto& p : array(field(j, "polys"), "polys")) {
      Json one = p;
      one["vars"] = vars;
      out.push_back(laurent_from_json(one));
    }
    return out;
  });
}

Json to_json(const PolynomialityReport& r) {
  return {{"volume_polynomial", to_json(r.volume_polynomial)},
          {"homogeneous", r.homogeneous},
          {"mixed_coefficient", to_json(r.mixed_coefficient)},
          {"mixed_volume", to_json(r.mixed_volume)},
          {"ok", r.ok}};
}

Json to_json(const LatticeMeasureReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"exponents", m.exponents}, {"fitted", to_json(m.fitted)}, {"chain", to_json(m.chain_value)}});
  }
  return {{"fitted", to_json(r.fitted)},
          {"fitted_degree", r.fitted_degree},
          {"degree_bound", r.degree_bound},
          {"checked", r.checked},
          {"mismatches", mismatches},
          {"ok", r.ok}};
}

Json to_json(const VirtualWindingReport& r) {
  return {{"equal", r.equal},
          {"ok", r.equal},
          {"samples", r.samples},
          {"truncated", to_json(r.truncated)},
          {"winding", to_json(r.winding)},
          {"negative_region", r.negative_region}};
}

Json to_json(const WedgeReport& r) {
  Json out = {{"betti", r.betti},
              {"bounded", r.bounded_regions},
              {"core_dim", r.core_dim},
              {"sphere_dim", r.sphere_dim},
              {"expected_spheres", r.expected_spheres},
              {"ok", r.ok}};
  out["b1"] = r.betti.size() > 1 ? r.betti[1] : 0;
  return out;
}

Json to_json(const IntegralFReport& r) {
  return {{"fitted", to_json(r.fitted)},
          {"degree_bound", r.degree_bound},
          {"fit_samples", r.fit_samples},
          {"excluded", r.excluded},
          {"holdout_checked", r.holdout_checked},
          {"holdout_mismatches", r.holdout_mismatches},
          {"ok", r.ok}};
}

Json to_json(const RootCertificate& c) {
  Json roots = Json::array();
  for (const auto& r : c.roots) {
    roots.push_back({{"x", {r.x.real(), r.x.imag()}},
                     {"y", {r.y.real(), r.y.imag()}},
                     {"residual", r.residual},
                     {"multiplicity", r.multiplicity}});
  }
  return {{"swapped", c.swapped},
          {"resultant_degree", c.resultant_degree},
          {"max_resultant_residual", c.max_resultant_residual},
          {"max_system_residual", c.max_system_residual},
          {"excluded_off_torus", c.excluded_off_torus},
          {"roots", roots},
          {"flags", c.flags},
          {"reliable", c.reliable()}};
}

Json to_json(const HarnessReport& r) {
  Json runs = Json::array();
  for (const auto& run : r.runs) {
    runs.push_back({{"pair", run.case_name},
                    {"seed", run.seed},
                    {"used_seed", run.used_seed},
                    {"resamples", run.resamples},
                    {"bkk", to_json(run.bkk)},
                    {"counted", run.counted},
                    {"flags", run.flags},
                    {"certificate", to_json(run.certificate)},
                    {"agree", run.agree}});
  }
  return {{"runs", runs}, {"flagged_runs", r.flagged_runs}, {"ok", r.ok}};
}

}  // namespace vpoly::io
