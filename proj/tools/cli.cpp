#include "cli.hpp"

#include "vpoly/acceptance.hpp"
#include "vpoly/chain.hpp"
#include "vpoly/error.hpp"
#include "vpoly/io.hpp"
#include "vpoly/measures.hpp"
#include "vpoly/nerve.hpp"
#include "vpoly/svg.hpp"
#include "vpoly/winding.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace vpoly::cli {

namespace {

using io::Json;

struct Context {
  const RunConfig& config;
  std::string svg;  // filled by subcommands that can draw
};

using Handler = std::function<Json(const Json&, Context&)>;

struct Command {
  std::string help;
  bool needs_input = true;
  Handler handler;
};

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<ConvexPolytope> polytopes(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of polytopes");
  std::vector<ConvexPolytope> out;
  for (const auto& p : j) out.push_back(io::polytope_from_json(p));
  return out;
}

template <class T>
T number(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "' must be an integer");
  return j.at(key).get<T>();
}

Json verdict(Json j, bool ok) {
  j["ok"] = ok;
  return j;
}

const std::map<std::string, Command>& registry() {
  static const std::map<std::string, Command> commands = {
      {"hull",
       {"canonical polytope of a vertex list (polytope JSON)",
        true,
        [](const Json& in, Context&) { return io::to_json(io::polytope_from_json(in)); }}},
      {"volume",
       {"exact volume of a polytope",
        true,
        [](const Json& in, Context&) { return Json{{"volume", io::to_json(volume(io::polytope_from_json(in)))}}; }}},
      {"mixed-volume",
       {"mixed volume of {\"polytopes\": [...]}",
        true,
        [](const Json& in, Context& ctx) {
          auto ps = polytopes(at(in, "polytopes"));
          if (ps.size() == 2 && ps[0].ambient_dim() == 2) ctx.svg = svg::polygons(ps);
          return Json{{"mv", io::to_json(mixed_volume(ps))}};
        }}},
      {"inverse-identity",
       {"checks inverse(P) * chi_P == 1 for a polytope",
        true,
        [](const Json& in, Context&) {
          ConvexPolytope p = io::polytope_from_json(in);
          ChainEquality eq = chains_equal(product(inverse(p), chain_of(p)), ConvexChain::identity(p.ambient_dim()));
          return Json{{"ok", eq.equal}, {"exact", eq.exact}, {"samples", eq.samples}};
        }}},
      {"inverse",
       {"chain of the Minkowski inverse of a polytope",
        true,
        [](const Json& in, Context&) { return io::to_json(inverse(io::polytope_from_json(in))); }}},
      {"product",
       {"Minkowski product of {\"chains\": [f, g]}",
        true,
        [](const Json& in, Context&) {
          const Json& cs = at(in, "chains");
          if (!cs.is_array() || cs.size() != 2) throw Error(ErrorKind::InvalidInput, "product: expected two chains");
          return io::to_json(product(io::chain_from_json(cs[0]), io::chain_from_json(cs[1])));
        }}},
      {"chains-equal",
       {"function equality of {\"chains\": [f, g]}",
        true,
        [](const Json& in, Context&) {
          const Json& cs = at(in, "chains");
          if (!cs.is_array() || cs.size() != 2) throw Error(ErrorKind::InvalidInput, "chains-equal: expected two chains");
          ChainEquality eq = chains_equal(io::chain_from_json(cs[0]), io::chain_from_json(cs[1]));
          return Json{{"equal", eq.equal}, {"exact", eq.exact}, {"samples", eq.samples}};
        }}},
      {"dilate",
       {"chain of {\"bases\": [...], \"exponents\": [...]}",
        true,
        [](const Json& in, Context&) {
          auto e = at(in, "exponents").get<std::vector<long>>();
          return io::to_json(dilate_chain(polytopes(at(in, "bases")), e));
        }}},
      {"lattice-measure",
       {"lattice measure of {\"weight\": polynomial, \"chain\": chain}",
        true,
        [](const Json& in, Context&) {
          Rational v = lattice_measure(io::polynomial_from_json(at(in, "weight")), io::chain_from_json(at(in, "chain")));
          return Json{{"value", io::to_json(v)}};
        }}},
      {"lattice-check",
       {"polynomiality of the lattice measure: {\"bases\", \"weight\", \"grid_max\"?, \"range\"?}",
        true,
        [](const Json& in, Context&) {
          auto r = lattice_polynomiality_check(polytopes(at(in, "bases")), io::polynomial_from_json(at(in, "weight")),
                                               number(in, "grid_max", 4), number(in, "range", 2));
          return io::to_json(r);
        }}},
      {"minkowski-check",
       {"polynomiality of Vol(lambda A + mu B): {\"a\", \"b\", \"grid\"?}",
        true,
        [](const Json& in, Context&) {
          auto r = minkowski_polynomiality_check(io::polytope_from_json(at(in, "a")), io::polytope_from_json(at(in, "b")),
                                                 number(in, "grid", 5));
          return io::to_json(r);
        }}},
      {"winding-chain",
       {"winding chain of a cycle {\"points\": [...]}",
        true,
        [](const Json& in, Context& ctx) {
          PLCycle c = io::cycle_from_json(in);
          WindingChain w = winding_chain(c);
          ctx.svg = svg::winding_chain(w, &c);
          return io::to_json(w);
        }}},
      {"winding-number",
       {"winding number of {\"cycle\", \"point\"}",
        true,
        [](const Json& in, Context&) {
          long w = winding_number(io::cycle_from_json(at(in, "cycle")), io::vector_from_json(at(in, "point")));
          return Json{{"winding", w}};
        }}},
      {"green",
       {"Green identity for {\"cycle\", \"p\"}: pullback of Q dy vs winding-chain integral of P",
        true,
        [](const Json& in, Context& ctx) {
          PLCycle c = io::cycle_from_json(at(in, "cycle"));
          MultiPolynomial p = io::polynomial_from_json(at(in, "p"));
          WindingChain w = winding_chain(c);
          ctx.svg = svg::winding_chain(w, &c);
          Rational lhs = integrate_pullback(c, p.antiderivative(0)), rhs = integrate_form_over_chain(w, p);
          return verdict({{"pullback", io::to_json(lhs)}, {"chain", io::to_json(rhs)}}, lhs == rhs);
        }}},
      {"gauss-map",
       {"Gauss-type cycle of a support function",
        true,
        [](const Json& in, Context& ctx) {
          PLCycle c = gauss_type_map(io::support_from_json(in));
          ctx.svg = svg::winding_chain(winding_chain(c), &c);
          return io::to_json(c);
        }}},
      {"virtual-volume",
       {"volume of the virtual polygon of a support function",
        true,
        [](const Json& in, Context&) {
          return Json{{"volume", io::to_json(virtual_volume_from_support(io::support_from_json(in)))}};
        }}},
      {"virtual-winding",
       {"truncated chain vs winding chain: {\"support\", \"d1\", \"d2\"}",
        true,
        [](const Json& in, Context& ctx) {
          auto r = virtual_winding_check(io::support_from_json(at(in, "support")), io::polytope_from_json(at(in, "d1")),
                                         io::polytope_from_json(at(in, "d2")));
          ctx.svg = svg::winding_chain(r.winding);
          return io::to_json(r);
        }}},
      {"nerve",
       {"nerve of an arrangement",
        true,
        [](const Json& in, Context& ctx) {
          SubspaceArrangement x = io::arrangement_from_json(in);
          if (x.ambient_dim() == 2) {
            try {
              ctx.svg = svg::arrangement(x);
            } catch (const Error&) {
            }
          }
          return io::to_json(nerve(x));
        }}},
      {"homology",
       {"rational Betti numbers of a complex {\"vertices\", \"faces\"}",
        true,
        [](const Json& in, Context&) { return Json{{"betti", homology_ranks(io::complex_from_json(in))}}; }}},
      {"wedge-check",
       {"nerve Betti numbers vs bounded complement regions of a line arrangement",
        true,
        [](const Json& in, Context& ctx) {
          SubspaceArrangement x = io::arrangement_from_json(in);
          WedgeReport r = wedge_check(x);
          ctx.svg = svg::arrangement(x);
          return io::to_json(r);
        }}},
      {"compatible-map",
       {"compatible map from nerve(x1) into x2: {\"x1\", \"x2\"}",
        true,
        [](const Json& in, Context&) {
          SubspaceArrangement x1 = io::arrangement_from_json(at(in, "x1")), x2 = io::arrangement_from_json(at(in, "x2"));
          Json out{{"inclusion", dominates(x1, x2)}};
          try {
            CompatibleMap g = compatible_map(nerve(x1), x2);
            Json images = Json::array();
            for (const auto& [face, p] : g.barycenter_images) images.push_back({{"face", face}, {"point", io::to_json(p)}});
            out["compatible"] = true;
            out["images"] = images;
            out["ok"] = verify_compatible(g, x2) && out["inclusion"].get<bool>();
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotCompatible) throw;
            out["compatible"] = false;
            out["ok"] = !out["inclusion"].get<bool>();
          }
          return out;
        }}},
      {"integral-f",
       {"polynomiality of F: {\"arrangement\", \"cycle\": [{from,to,coeff}], \"alpha\": {p,q}, \"basis\": [[..]], \"holdout\"?}",
        true,
        [](const Json& in, Context& ctx) {
          SubspaceArrangement x = io::arrangement_from_json(at(in, "arrangement"));
          SimplicialCycle gamma;
          for (const auto& e : at(in, "cycle")) {
            gamma.push_back({at(e, "from").get<std::size_t>(), at(e, "to").get<std::size_t>(), number(e, "coeff", 1L)});
          }
          OneForm alpha{io::polynomial_from_json(at(at(in, "alpha"), "p")), io::polynomial_from_json(at(at(in, "alpha"), "q"))};
          std::vector<TranslationTuple> basis;
          for (const auto& b : at(in, "basis")) {
            TranslationTuple t;
            for (const auto& v : b) t.push_back(io::vector_from_json(v));
            basis.push_back(std::move(t));
          }
          return io::to_json(integral_F(x, gamma, alpha, basis, number(in, "holdout", 5), ctx.config.seed));
        }}},
      {"newton-polytope",
       {"Newton polytope of a Laurent polynomial",
        true,
        [](const Json& in, Context&) { return io::to_json(newton_polytope(io::laurent_from_json(in))); }}},
      {"bkk",
       {"BKK number of {\"polytopes\": [...]}",
        true,
        [](const Json& in, Context&) { return Json{{"bkk", io::to_json(bkk_number(polytopes(at(in, "polytopes"))))}}; }}},
      {"virtual-bkk",
       {"virtual BKK number of {\"pairs\": [{\"num\", \"den\"}]}",
        true,
        [](const Json& in, Context&) {
          std::vector<std::pair<ConvexPolytope, ConvexPolytope>> pairs;
          for (const auto& p : at(in, "pairs")) {
            pairs.emplace_back(io::polytope_from_json(at(p, "num")), io::polytope_from_json(at(p, "den")));
          }
          return Json{{"bkk", io::to_json(virtual_bkk(pairs))}};
        }}},
      {"sample-system",
       {"random system supported on {\"polytopes\": [...]} (uses --seed)",
        true,
        [](const Json& in, Context& ctx) { return io::system_to_json(sample_system(polytopes(at(in, "polytopes")), ctx.config.seed)); }}},
      {"count-roots",
       {"torus roots of a 2-variable system {\"vars\": 2, \"polys\": [...]}",
        true,
        [](const Json& in, Context& ctx) {
          auto sys = io::system_from_json(in);
          if (sys.size() != 2) throw Error(ErrorKind::InvalidInput, "count-roots: expected two polynomials");
          TorusRootCount r = count_torus_roots_2d(sys[0], sys[1], ctx.config.tol);
          std::vector<ConvexPolytope> newton{newton_polytope(sys[0]), newton_polytope(sys[1])};
          return Json{{"count", r.count}, {"bkk", io::to_json(bkk_number(newton))}, {"certificate", io::to_json(r.certificate)}};
        }}},
      {"harness",
       {"numeric root counts vs BKK over the catalog, 10 seeds from --seed",
        false,
        [](const Json&, Context& ctx) {
          std::vector<std::uint64_t> seeds;
          for (std::uint64_t s = 1; s <= 10; ++s) seeds.push_back(ctx.config.seed + s);
          return io::to_json(bkk_harness(bkk_catalog(), seeds, ctx.config.tol));
        }}},
  };
  return commands;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  f << text;
}

void emit(const RunConfig& config, const Json& j, std::ostream& out) {
  std::string text = j.dump(2) + "\n";
  if (config.output_path) {
    write_file(*config.output_path, text);
  } else {
    out << text;
  }
}

int run_suite(const RunConfig& config, std::ostream& out) {
  AcceptanceConfig ac;
  ac.seed = config.seed;
  ac.tol = config.tol;
  Json rows = Json::array();
  bool all = true;
  for (const auto& r : run_acceptance(ac)) {
    out << format_result(r) << std::endl;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  out << (all ? "suite: all criteria pass" : "suite: FAILED") << std::endl;
  if (config.output_path) write_file(*config.output_path, Json{{"criteria", rows}, {"ok", all}}.dump(2) + "\n");
  return all ? kExitOk : kExitVerification;
}

}  // namespace

std::vector<std::string> subcommands() {
  std::vector<std::string> names;
  for (const auto& [name, c] : registry()) names.push_back(name);
  names.push_back("suite");
  return names;
}

int run(const RunConfig& config, std::ostream& out) {
  try {
    if (config.input_path && config.input_json) throw Error(ErrorKind::InvalidInput, "give either --in or --json, not both");
    if (config.subcommand == "suite") return run_suite(config, out);
    auto it = registry().find(config.subcommand);
    if (it == registry().end()) throw Error(ErrorKind::InvalidInput, "unknown subcommand '" + config.subcommand + "'");
    const Command& cmd = it->second;
    Json in = Json::object();
    if (config.input_path || config.input_json) {
      std::string text = config.input_path ? read_file(*config.input_path) : *config.input_json;
      try {
        in = Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
      }
    } else if (cmd.needs_input) {
      throw Error(ErrorKind::InvalidInput, "'" + config.subcommand + "' needs --in or --json");
    }
    Context ctx{config, {}};
    Json result;
    try {
      result = cmd.handler(in, ctx);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::InvalidInput, e.what());
    }
    if (config.svg_path) {
      if (ctx.svg.empty()) throw Error(ErrorKind::InvalidInput, "'" + config.subcommand + "' has no picture");
      write_file(*config.svg_path, ctx.svg);
    }
    emit(config, result, out);
    bool failed = result.is_object() && result.contains("ok") && result["ok"].is_boolean() && !result["ok"].get<bool>();
    return failed ? kExitVerification : kExitOk;
  } catch (const Error& e) {
    Json err{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    try {
      emit(config, err, out);
    } catch (const Error&) {
      out << err.dump(2) << "\n";
    }
    return kExitInput;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact virtual polytope and polytope-algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  std::string in_path, in_json, out_path, svg_path;
  app.add_option("--in", in_path, "input JSON file");
  app.add_option("--json", in_json, "inline input JSON");
  app.add_option("--out", out_path, "write result JSON here instead of stdout");
  app.add_option("--svg", svg_path, "write an SVG picture (where supported)");
  app.add_option("--seed", config.seed, "random seed (default 0)");
  app.add_option("--tol-residual", config.tol.residual, "root residual tolerance");
  app.add_option("--tol-torus", config.tol.torus, "torus membership tolerance");
  app.add_option("--tol-cluster", config.tol.cluster, "root clustering tolerance");
  for (const auto& [name, cmd] : registry()) app.add_subcommand(name, cmd.help);
  app.add_subcommand("suite", "run every acceptance criterion and print a pass/fail table");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitInput;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (!in_path.empty()) config.input_path = in_path;
  if (app.count("--json")) config.input_json = in_json;
  if (!out_path.empty()) config.output_path = out_path;
  if (!svg_path.empty()) config.svg_path = svg_path;
  return run(config, out);
}

}  // namespace vpoly::cli
