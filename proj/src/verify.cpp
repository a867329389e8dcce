#include "hermsym/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hermsym/catalog.hpp"
#include "hermsym/embeddings.hpp"
#include "hermsym/errors.hpp"
#include "hermsym/quantum.hpp"
#include "hermsym/spectral.hpp"

namespace hermsym {

namespace {

// Disjoint index ranges keep the sample streams of different checks apart.
constexpr std::uint64_t kStream = 1ULL << 32;

std::vector<JtsSpec> algebra_families() {
  return {JtsSpec::type_i(2, 3), JtsSpec::type_ii(4), JtsSpec::type_iii(3), JtsSpec::type_iv(5)};
}

class Collector {
 public:
  Collector(std::string suite, double tol) : suite_(std::move(suite)), tol_(tol) {}

  void numeric(const std::string& name, const std::string& on, long count, double residual) {
    out.push_back({suite_, name, on, count, residual, tol_, false, residual < tol_});
  }
  void exact(const std::string& name, const std::string& on, long count, long failures) {
    out.push_back({suite_, name, on, count, static_cast<double>(failures), 0.0, true, failures == 0});
  }
  /// A bound that is part of the statement rather than a tolerance (e.g. |z| < 1).
  void bounded(const std::string& name, const std::string& on, long count, double value, double bound) {
    out.push_back({suite_, name, on, count, value, bound, false, value < bound});
  }

  std::vector<InvariantResult> out;

 private:
  std::string suite_;
  double tol_;
};

void jordan_suite(Collector& c, int samples, std::uint64_t seed) {
  for (const JtsSpec& spec : algebra_families()) {
    double jordan = 0.0;
    double outer = 0.0;
    double hermitian = 0.0;
    for (int i = 0; i < samples; ++i) {
      std::array<JtsElement, 5> e{JtsElement::zero(spec), JtsElement::zero(spec), JtsElement::zero(spec),
                                  JtsElement::zero(spec), JtsElement::zero(spec)};
      for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = sample_box_point(spec, seed, 5 * static_cast<std::uint64_t>(i) + j);
      jordan = std::max(jordan, jordan_residual(e[0], e[1], e[2], e[3], e[4]));
      outer = std::max(outer, (triple_product(e[0], e[1], e[2]) - triple_product(e[2], e[1], e[0])).norm());
      hermitian = std::max(hermitian, std::abs(trace_form(e[0], e[1]) - std::conj(trace_form(e[1], e[0]))));
    }
    c.numeric("jordan_identity", spec.name(), samples, jordan);
    c.numeric("outer_symmetry", spec.name(), samples, outer);
    c.numeric("trace_form_hermitian", spec.name(), samples, hermitian);
  }
}

void spectral_suite(Collector& c, int samples, std::uint64_t seed) {
  for (const JtsSpec& spec : algebra_families()) {
    double recon = 0.0;
    double tripotent = 0.0;
    double orthogonal = 0.0;
    long order_failures = 0;
    long disagreements = 0;
    long compared = 0;
    for (int i = 0; i < samples; ++i) {
      const JtsElement v = sample_box_point(spec, seed, kStream + static_cast<std::uint64_t>(i));
      const SpectralDecomposition sd = spectral_decompose(v);
      recon = std::max(recon, (sd.reconstruct(spec) - v).norm());
      for (int a = 0; a < sd.rank(); ++a) {
        const JtsElement& ca = sd.tripotents[static_cast<std::size_t>(a)];
        tripotent = std::max(tripotent, (triple_product(ca, ca, ca) - ca * 2.0).norm());
        if (a > 0 && !(sd.eigenvalues[static_cast<std::size_t>(a)] < sd.eigenvalues[static_cast<std::size_t>(a - 1)]))
          ++order_failures;
        for (int b = 0; b < sd.rank(); ++b) {
          if (a == b) continue;
          const JtsElement& cb = sd.tripotents[static_cast<std::size_t>(b)];
          for (int k = 0; k < spec.dim(); ++k)
            orthogonal = std::max(orthogonal, triple_product(ca, cb, JtsElement::basis(spec, k)).norm());
        }
      }
      if (!sd.eigenvalues.empty() && sd.eigenvalues.back() <= 0.0) ++order_failures;

      // Rescale to a spectral norm in [0.25, 1.75) and compare the two membership tests.
      const double target = 0.25 + 1.5 * static_cast<double>((static_cast<std::uint64_t>(i) * 7919u) % 1000u) / 1000.0;
      if (std::abs(target - 1.0) < 0.01) continue;
      const JtsElement w = v * (target / spectral_norm(v));
      ++compared;
      if (in_domain(w) != bergman_positive(w)) ++disagreements;
    }
    c.numeric("spectral_reconstruction", spec.name(), samples, recon);
    c.numeric("tripotency", spec.name(), samples, tripotent);
    c.numeric("strong_orthogonality", spec.name(), samples, orthogonal);
    c.exact("eigenvalue_order", spec.name(), samples, order_failures);
    c.exact("membership_agreement", spec.name(), compared, disagreements);
  }
}

void embeddings_suite(Collector& c, int samples, std::uint64_t seed, double tol) {
  const std::vector<JtsSpec> duality_families{JtsSpec::type_i(1, 1), JtsSpec::type_i(1, 2), JtsSpec::type_i(2, 2),
                                              JtsSpec::type_iii(2), JtsSpec::type_iv(3)};
  for (const JtsSpec& spec : duality_families) {
    const SmoothMap phi = duality_map(spec);
    const TwoForm flat = TwoForm::standard(2 * spec.dim());
    const PullbackReport fs = certify_pullback(phi, flat, fs_form(spec), spec, samples, seed, 0.9, tol);
    c.numeric("duality_pullback_fs", spec.name(), samples, fs.max_residual);
    const PullbackReport hyp = certify_pullback(phi, hyp_form(spec), flat, spec, samples, seed, 0.9, tol);
    c.numeric("duality_pullback_hyp", spec.name(), samples, hyp.max_residual);

    double bergman = 0.0;
    for (int i = 0; i < samples; ++i) {
      const JtsElement v = sample_domain_point(spec, seed, static_cast<std::uint64_t>(i), 0.9);
      bergman = std::max(bergman, (symplectic_duality(v) - symplectic_duality_bergman(v)).norm());
    }
    c.numeric("duality_bergman_agreement", spec.name(), samples, bergman);
  }

  const int cylinder_samples = 100 * samples;
  for (const JtsSpec& spec : algebra_families()) {
    const Eigen::MatrixXcd w = cylinder_unitary(spec, primitive_tripotent(spec));
    double first = 0.0;
    for (int i = 0; i < cylinder_samples; ++i) {
      const JtsElement v = sample_domain_point(spec, seed, 2 * kStream + static_cast<std::uint64_t>(i));
      first = std::max(first, std::abs((w * v.coords())(0)));
    }
    c.bounded("cylinder_containment", spec.name(), cylinder_samples, first, 1.0);
    const double unitary = (w * w.adjoint() - Eigen::MatrixXcd::Identity(spec.dim(), spec.dim())).cwiseAbs().maxCoeff();
    c.numeric("cylinder_unitarity", spec.name(), 1, unitary);
  }
}

QhElement single(const Partition& p) {
  QhElement e;
  e.add(p, 0, 1);
  return e;
}

void quantum_suite(Collector& c) {
  for (const GrassSpec& spec : {GrassSpec(2, 4), GrassSpec(2, 5), GrassSpec(3, 6)}) {
    const std::string on = "grass[" + std::to_string(spec.k()) + "," + std::to_string(spec.n()) + "]";
    const QuantumRing ring(spec);
    const auto box = spec.box_partitions();
    long pairs = 0, comm = 0, homog = 0, classical = 0;
    for (const auto& a : box)
      for (const auto& b : box) {
        ++pairs;
        const QhElement ab = ring.product(a, b);
        if (!(ab == ring.product(b, a))) ++comm;
        for (const auto& [key, coeff] : ab.terms()) {
          (void)coeff;
          if (a.size() + b.size() != key.nu.size() + key.d * spec.n()) ++homog;
        }
        for (const auto& nu : box)
          if (ab.coefficient(nu, 0) != lr_coefficient(a, b, nu)) ++classical;
      }
    c.exact("commutativity", on, pairs, comm);
    c.exact("degree_homogeneity", on, pairs, homog);
    c.exact("classical_limit", on, pairs * static_cast<long>(box.size()), classical);

    long triples = 0, assoc = 0, sym = 0;
    for (const auto& a : box)
      for (const auto& b : box)
        for (const auto& x : box) {
          ++triples;
          if (!(ring.multiply(ring.product(a, b), single(x)) == ring.multiply(single(a), ring.product(b, x)))) ++assoc;
          for (int d = 0; d <= 2; ++d) {
            const auto g = gw_invariant(spec, a, b, x, d);
            if (g != gw_invariant(spec, b, a, x, d) || g != gw_invariant(spec, a, x, b, d) ||
                g != gw_invariant(spec, x, b, a, d))
              ++sym;
          }
        }
    c.exact("associativity", on, triples, assoc);
    c.exact("gw_s3_symmetry", on, triples, sym);
  }

  const GrassSpec g24(2, 4);
  long failures = 0;
  QhElement q;
  q.add(Partition(), 1, 1);
  if (!(quantum_product(g24, Partition({2}), Partition({1, 1})) == q)) ++failures;
  QhElement s2s11;
  s2s11.add(Partition({2}), 0, 1);
  s2s11.add(Partition({1, 1}), 0, 1);
  if (!(quantum_product(g24, Partition({1}), Partition({1})) == s2s11)) ++failures;
  QhElement qs1;
  qs1.add(Partition({1}), 1, 1);
  if (!(quantum_product(g24, Partition({1}), Partition({2, 2})) == qs1)) ++failures;
  c.exact("known_products", "grass[2,4]", 3, failures);

  long identity = 0;
  const auto spaces = catalog_spaces(27);
  for (const auto& h : spaces) {
    const CatalogEntry e = catalog_entry(h);
    if (!codim_identity_holds(e.complex_dim, e.c1, e.pair)) ++identity;
  }
  c.exact("catalog_degree_identity", "catalog", static_cast<long>(spaces.size()), identity);
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"jordan", "spectral", "embeddings", "quantum", "all"};
  return names;
}

double default_tolerance(const std::string& suite) {
  if (suite == "jordan") return 1e-10;
  if (suite == "spectral") return 1e-8;
  if (suite == "embeddings") return 1e-4;
  if (suite == "quantum") return 0.0;
  throw PreconditionError("unknown suite '" + suite + "'");
}

VerifyReport run_verify(const std::string& suite, int samples, std::uint64_t seed, std::optional<double> tolerance) {
  if (samples <= 0) throw PreconditionError("samples must be positive");
  if (std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end())
    throw PreconditionError("unknown suite '" + suite + "'");
  if (tolerance && !(*tolerance > 0.0)) throw PreconditionError("tolerance must be positive");

  VerifyReport report;
  report.suite = suite;
  report.samples = samples;
  report.seed = seed;
  const auto run = [&](const std::string& name) {
    if (suite != "all" && suite != name) return;
    Collector c(name, name == "quantum" ? 0.0 : tolerance.value_or(default_tolerance(name)));
    if (name == "jordan") jordan_suite(c, samples, seed);
    if (name == "spectral") spectral_suite(c, samples, seed);
    if (name == "embeddings") embeddings_suite(c, samples, seed, tolerance.value_or(default_tolerance(name)));
    if (name == "quantum") quantum_suite(c);
    report.invariants.insert(report.invariants.end(), c.out.begin(), c.out.end());
  };
  for (const char* name : {"jordan", "spectral", "embeddings", "quantum"}) run(name);
  report.pass = std::all_of(report.invariants.begin(), report.invariants.end(),
                            [](const InvariantResult& r) { return r.pass; });
  return report;
}

Json to_json(const VerifyReport& report) {
  Json list = Json::array();
  for (const auto& r : report.invariants)
    list.push_back({{"suite", r.suite},
                    {"name", r.name},
                    {"on", r.on},
                    {"count", r.count},
                    {"max_residual", r.max_residual},
                    {"tolerance", r.tolerance},
                    {"exact", r.exact},
                    {"pass", r.pass}});
  return {{"suite", report.suite},
          {"samples", report.samples},
          {"seed", report.seed},
          {"invariants", std::move(list)},
          {"pass", report.pass}};
}

}  // namespace hermsym
