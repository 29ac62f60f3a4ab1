#pragma once

#include "vpoly/bkk.hpp"
#include "vpoly/chain.hpp"
#include "vpoly/geometry.hpp"
#include "vpoly/measures.hpp"
#include "vpoly/nerve.hpp"
#include "vpoly/polynomial.hpp"
#include "vpoly/winding.hpp"

#include "json.hpp"

namespace vpoly::io {

using Json = nlohmann::json;

// Rationals are written as "p/q" strings (or "p" for integers). Readers also
// accept JSON integers and [num, den] pairs. Every reader throws
// Error(InvalidInput) on malformed input.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

/// {"dim": n, "vertices": [[..], ..]}
Json to_json(const ConvexPolytope& p);
ConvexPolytope polytope_from_json(const Json& j);

/// {"dim": n, "terms": [{"coeff": "p/q", "polytope": {..}}]}
Json to_json(const ConvexChain& f);
ConvexChain chain_from_json(const Json& j);

/// {"vars": n, "monomials": [{"exps": [..], "coeff": "p/q"}]}
Json to_json(const MultiPolynomial& p);
MultiPolynomial polynomial_from_json(const Json& j);

/// {"points": [[..], ..]}
Json to_json(const PLCycle& c);
PLCycle cycle_from_json(const Json& j);

/// {"delta0": {..}, "values": [{"normal": [a, b], "h": "p/q"}]}
Json to_json(const SupportFunctionPL& h);
SupportFunctionPL support_from_json(const Json& j);

/// {"regions": [{"weight": w, "area": "p/q", "sample": [..], "loops": [[[..], ..], ..]}]}
Json to_json(const WindingChain& w);
WindingChain winding_chain_from_json(const Json& j);

/// {"point": [..], "dirs": [[..], ..]}
Json to_json(const AffineSubspace& s);
AffineSubspace subspace_from_json(const Json& j);

/// {"ambient": n, "subspaces": [..]}
Json to_json(const SubspaceArrangement& x);
SubspaceArrangement arrangement_from_json(const Json& j);

/// {"vertices": n, "faces": [[..], ..]}
Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

/// {"vars": n, "monomials": [{"exps": [..], "re": f, "im": f}]}
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const Json& j);

/// {"vars": 2, "polys": [..]}
Json system_to_json(const std::vector<LaurentPolynomial>& system);
std::vector<LaurentPolynomial> system_from_json(const Json& j);

// Reports are output only.
Json to_json(const PolynomialityReport& r);
Json to_json(const LatticeMeasureReport& r);
Json to_json(const VirtualWindingReport& r);
Json to_json(const WedgeReport& r);
Json to_json(const IntegralFReport& r);
Json to_json(const RootCertificate& c);
Json to_json(const HarnessReport& r);

}  // namespace vpoly::io
