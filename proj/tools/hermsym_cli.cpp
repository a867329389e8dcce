// hermsym: command-line front end.  Every command prints one canonical JSON
// document.  Exit codes: 0 ok, 1 verification failed, 2 bad input,
// 3 capacity certificate with an unknown bound.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hermsym/canonical_json.hpp"
#include "hermsym/capacities.hpp"
#include "hermsym/catalog.hpp"
#include "hermsym/errors.hpp"
#include "hermsym/quantum.hpp"
#include "hermsym/space.hpp"
#include "hermsym/verify.hpp"

using namespace hermsym;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  bool json = true;
  std::string out;
};

int emit(const Globals& g, const Json& doc) {
  const std::string text = canonical_dump(doc) + "\n";
  std::cout << text;
  if (!g.out.empty()) {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

Partition partition_arg(const std::string& text) { return Partition::parse(text); }

Hssct compact_arg(const std::string& text) {
  const SpaceExpr s = parse_space(text);
  if (s.kind != SpaceExpr::Kind::Hssct) throw PreconditionError(text + " is not an irreducible compact space");
  return *s.hssct;
}

Json codim_json(const CodimPair& p) { return {{"a", p.a}, {"b", p.b}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan triple systems, quantum Grassmannians and symplectic capacity certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance (suite default when omitted)");
  app.add_flag("--json", g.json, "JSON output (always on)");
  app.add_option("--out", g.out, "Also write the output to FILE");

  std::string expr, quantity;
  auto* capacity = app.add_subcommand("capacity", "Certified bounds for a capacity of a space");
  capacity->add_option("space", expr, "Space expression, e.g. prod(1*grass[2,4],2*quadric[3])")->required();
  capacity->add_option("quantity", quantity, "cG, cHZ, cHZ_pi1, C2, C2o or GW")->required();

  int k = 0, n = 0, d = 0;
  std::string lambda, mu, nu;
  auto* qh = app.add_subcommand("qh", "Quantum product of two Schubert classes of G(k,n)");
  qh->add_option("k", k)->required();
  qh->add_option("n", n)->required();
  qh->add_option("lambda", lambda)->required();
  qh->add_option("mu", mu)->required();

  auto* gw = app.add_subcommand("gw", "Three-point genus-zero invariant of G(k,n)");
  gw->add_option("k", k)->required();
  gw->add_option("n", n)->required();
  gw->add_option("lambda", lambda)->required();
  gw->add_option("mu", mu)->required();
  gw->add_option("nu", nu)->required();
  gw->add_option("d", d)->required();

  std::string suite;
  int samples = 100;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "jordan, spectral, embeddings, quantum or all")->required();
  verify->add_option("--samples", samples)->capture_default_str();

  auto* pair = app.add_subcommand("pair", "Catalog entry with its nonvanishing codimension pair");
  pair->add_option("space", expr)->required();

  auto* seshadri = app.add_subcommand("seshadri", "Upper bound for the Seshadri constant");
  seshadri->add_option("space", expr)->required();

  auto* atlas = app.add_subcommand("atlas", "Upper bound for the symplectic category from the Pluecker atlas");
  atlas->add_option("space", expr)->required();

  int m = 1;
  std::string convention = "codim_complex_dim";
  auto* dimcheck = app.add_subcommand("dimcheck", "Dimension condition for an (m+2)-point invariant of a product");
  dimcheck->add_option("space", expr)->required();
  dimcheck->add_option("m", m)->required();
  dimcheck->add_option("--convention", convention)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*capacity) {
      const Quantity q = parse_quantity(quantity);
      const BoundCertificate cert = capacity_bounds(parse_space(expr), q);
      const ReplayResult check = replay(cert);
      if (!check.ok) throw InternalConsistencyError("certificate does not replay: " + check.message);
      if (const int rc = emit(g, to_json(cert))) return rc;
      return cert.closed_bounds() ? 0 : 3;
    }
    if (*qh) {
      const GrassSpec spec(k, n);
      const Partition a = partition_arg(lambda), b = partition_arg(mu);
      return emit(g, qh_to_json(spec, a, b, quantum_product(spec, a, b)));
    }
    if (*gw) {
      const GrassSpec spec(k, n);
      return emit(g, Json(gw_invariant(spec, partition_arg(lambda), partition_arg(mu), partition_arg(nu), d)));
    }
    if (*verify) {
      const VerifyReport report = run_verify(suite, samples, g.seed, g.tol);
      if (const int rc = emit(g, to_json(report))) return rc;
      return report.pass ? 0 : 1;
    }
    if (*pair) {
      const CatalogEntry e = catalog_entry(compact_arg(expr));
      Json candidates = Json::array();
      for (const auto& c : e.candidates)
        candidates.push_back({{"reading", c.reading}, {"pair", codim_json(c.pair)}, {"satisfies_identity", c.satisfies_identity}});
      Json doc{{"space", e.name},       {"complex_dim", e.complex_dim}, {"rank", e.rank},
               {"c1", e.c1},            {"pair", codim_json(e.pair)},   {"pair_source", e.pair_source},
               {"candidates", candidates}};
      if (e.classes) doc["classes"] = {{"alpha", to_json(e.classes->alpha)}, {"beta", to_json(e.classes->beta)}};
      return emit(g, doc);
    }
    if (*seshadri) {
      const SpaceExpr s = parse_space(expr);
      const Rational r = seshadri_upper(s);
      return emit(g, {{"space", to_string(s)}, {"upper", {{"num", r.numerator()}, {"den", r.denominator()}}}});
    }
    if (*atlas) {
      const SpaceExpr s = parse_space(expr);
      const auto bound = atlas_upper(s);
      return emit(g, {{"space", to_string(s)}, {"upper", bound ? Json(*bound) : Json(nullptr)}});
    }
    if (*dimcheck) {
      const SpaceExpr s = parse_space(expr);
      std::optional<DegreeConvention> conv;
      for (DegreeConvention c : all_degree_conventions())
        if (to_string(c) == convention) conv = c;
      if (!conv) throw PreconditionError("unknown convention '" + convention + "'");
      const bool ok = dimension_condition_check(product_factor_data(s), m, *conv);
      return emit(g, {{"space", to_string(s)}, {"m", m}, {"convention", convention}, {"satisfiable", ok}});
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
