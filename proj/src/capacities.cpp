#include "hermsym/capacities.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hermsym/errors.hpp"
#include "hermsym/quantum.hpp"

namespace hermsym {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::cG: return "cG";
    case Quantity::cHZ: return "cHZ";
    case Quantity::cHZ_pi1: return "cHZ_pi1";
    case Quantity::C2: return "C2";
    case Quantity::C2o: return "C2o";
    case Quantity::GW: return "GW";
  }
  return {};
}

Quantity parse_quantity(const std::string& name) {
  for (Quantity q : kAllQuantities)
    if (to_string(q) == name) return q;
  throw PreconditionError("unknown quantity '" + name + "' (expected cG, cHZ, cHZ_pi1, C2, C2o or GW)");
}

std::string CapValue::str() const {
  switch (kind_) {
    case Kind::Unknown: return "unknown";
    case Kind::Infinite: return "inf";
    case Kind::Finite:
      if (coeff_ == Rational(0)) return "0";
      if (coeff_ == Rational(1)) return "pi";
      return to_string(coeff_) + "pi";
  }
  return {};
}

std::string to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

std::string to_string(StepOp op) {
  switch (op) {
    case StepOp::Given: return "given";
    case StepOp::Copy: return "copy";
    case StepOp::Scale: return "scale";
    case StepOp::Sum: return "sum";
    case StepOp::Min: return "min";
  }
  return {};
}

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> rules{
      {"nontriviality", "c(B^{2n}(1), omega_0) = c(Z^{2n}(1), omega_0) = pi"},
      {"conformality", "c(M, a omega) = |a| c(M, omega) for every real a != 0"},
      {"ball_into_domain",
       "B^{2n}(1) is contained in the Cartan domain Omega, hence c(Omega, omega_0) >= c(B^{2n}(1), omega_0)"},
      {"domain_into_cylinder",
       "a unitary map W sends Omega into Z^{2n}(1), hence c(Omega, omega_0) <= c(Z^{2n}(1), omega_0)"},
      {"symplectic_duality",
       "Phi_Omega embeds (Omega, omega_0) symplectically into (M, omega_FS), hence c_G(M, omega_FS) >= "
       "c_G(Omega, omega_0)"},
      {"minimal_area",
       "GW(M, omega; pt, gamma) is the omega-area of a class A with omega(A) > 0, and every such class has "
       "omega(A) >= pi"},
      {"gw_nonvanishing",
       "Psi_{dA,0,3}(pt; pt, alpha, beta) != 0 with omega_FS(A) = pi, hence GW(M, omega_FS; pt, gamma) <= d pi"},
      {"pseudo_capacity_chain",
       "C^(2o)_HZ(M, omega; pt, gamma) <= GW_0(M, omega; pt, gamma) = GW(M, omega; pt, gamma) for closed M "
       "with dim M >= 4"},
      {"width_below_pseudo", "c_G(M, omega) <= C^(2)_HZ(M, omega; pt, gamma)"},
      {"pseudo_order", "C^(2)_HZ(M, omega; pt, gamma) <= C^(2o)_HZ(M, omega; pt, gamma)"},
      {"pseudo_below_hz",
       "C^(2)_HZ(M, omega; pt, gamma) <= c_HZ(M, omega) and C^(2o)_HZ(M, omega; pt, gamma) <= c^o_HZ(M, omega)"},
      {"hz_below_pi1", "c_HZ(M, omega) <= c^o_HZ(M, omega)"},
      {"product_superadditivity",
       "c_HZ(N_1 x N_2, omega_1 + omega_2) >= c_HZ(N_1, omega_1) + c_HZ(N_2, omega_2) for closed N_1, N_2"},
      {"nonnegativity", "c(M, omega) >= 0"},
      {"product_gw_upper",
       "Psi^{N x M}_{0+A,0,3}(pt; [N] x alpha, [N] x beta, pt x pt) = Psi^M_{A,0,3}(pt; alpha, beta, pt) != 0, "
       "hence GW(N x M, omega + a omega_FS; pt, [N] x gamma) <= |a| pi for closed N"},
      {"ball_product",
       "B^{2(n_1 + ... + n_r)}(r) is contained in B^{2n_1}(r_1) x ... x B^{2n_r}(r_r) for r = min r_j"},
      {"cylinder_product", "X x Y is contained in Z^{2(k+m)}(r) when X is contained in Z^{2k}(r) and Y is open in C^m"},
      {"closed_times_ball",
       "c_HZ(N x B^{2n}(r), omega + omega_0) = c_HZ(N x Z^{2n}(r), omega + omega_0) = pi r^2 for closed N"},
      {"projective_hz_upper",
       "c_HZ(CP^{n_1} x ... x CP^{n_r}, a_1 omega_FS + ... + a_r omega_FS) <= (|a_1| + ... + |a_r|) pi"},
  };
  return rules;
}

namespace {

const std::string& rule_ref(const std::string& rule) {
  for (const auto& r : rule_registry())
    if (r.name == rule) return r.ref;
  throw InternalConsistencyError("unregistered rule " + rule);
}

bool less_known(const CapValue& a, const CapValue& b) {
  if (a.kind() == CapValue::Kind::Infinite) return false;
  if (b.kind() == CapValue::Kind::Infinite) return true;
  return a.coefficient() < b.coefficient();
}

bool improves(Side side, const CapValue& candidate, const CapValue& current) {
  if (!candidate.known()) return false;
  if (!current.known()) return true;
  return side == Side::Lower ? less_known(current, candidate) : less_known(candidate, current);
}

std::optional<CapValue> evaluate(StepOp op, const Rational& factor, const std::vector<StepInput>& inputs) {
  switch (op) {
    case StepOp::Given: return std::nullopt;
    case StepOp::Copy:
      if (inputs.size() != 1) return CapValue::unknown();
      return inputs[0].value;
    case StepOp::Scale: {
      if (inputs.size() != 1 || factor <= Rational(0)) return CapValue::unknown();
      const CapValue& v = inputs[0].value;
      return v.finite() ? CapValue::pi_times(v.coefficient() * factor) : v;
    }
    case StepOp::Sum: {
      if (inputs.empty()) return CapValue::unknown();
      Rational total(0);
      bool inf = false;
      for (const auto& in : inputs) {
        if (!in.value.known()) return CapValue::unknown();
        if (in.value.finite())
          total += in.value.coefficient();
        else
          inf = true;
      }
      return inf ? CapValue::infinite() : CapValue::pi_times(total);
    }
    case StepOp::Min: {
      if (inputs.empty()) return CapValue::unknown();
      CapValue best = inputs[0].value;
      for (const auto& in : inputs) {
        if (!in.value.known()) return CapValue::unknown();
        if (less_known(in.value, best)) best = in.value;
      }
      return best;
    }
  }
  return CapValue::unknown();
}

Step make_step(const std::string& rule, std::string subject, Quantity q, Side side, StepOp op,
               std::vector<StepInput> inputs = {}) {
  Step s;
  s.rule = rule;
  s.ref = rule_ref(rule);
  s.subject = std::move(subject);
  s.quantity = q;
  s.side = side;
  s.op = op;
  s.inputs = std::move(inputs);
  return s;
}

Step given(const std::string& rule, std::string subject, Quantity q, Side side, CapValue value) {
  Step s = make_step(rule, std::move(subject), q, side, StepOp::Given);
  s.output = value;
  return s;
}

std::size_t qi(Quantity q) { return static_cast<std::size_t>(q); }
std::size_t si(Side s) { return s == Side::Lower ? 0 : 1; }

class Builder {
 public:
  explicit Builder(std::string subject) : subject_(std::move(subject)) {
    for (auto& f : facts_) f = {-1, -1};
  }

  const std::string& subject() const noexcept { return subject_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::string classes = "pt, pt";

  int fact(Quantity q, Side s) const { return facts_[qi(q)][si(s)]; }
  CapValue value(Quantity q, Side s) const {
    const int i = fact(q, s);
    return i < 0 ? CapValue::unknown() : steps_[static_cast<std::size_t>(i)].output;
  }

  StepInput input(Quantity q, Side s, int offset = 0) const {
    const int i = fact(q, s);
    return {to_string(s) + " " + to_string(q) + " of " + subject_, value(q, s), i < 0 ? -1 : i + offset};
  }

  /// Appends unconditionally; the step does not become a fact.
  int push(Step s) {
    if (auto v = evaluate(s.op, s.factor, s.inputs)) s.output = *v;
    steps_.push_back(std::move(s));
    return static_cast<int>(steps_.size()) - 1;
  }

  /// Appends and records the step if it tightens the bound it targets.
  bool offer(Step s) {
    if (auto v = evaluate(s.op, s.factor, s.inputs)) s.output = *v;
    if (!improves(s.side, s.output, value(s.quantity, s.side))) return false;
    const Quantity q = s.quantity;
    const Side side = s.side;
    facts_[qi(q)][si(side)] = push(std::move(s));
    return true;
  }

  /// Appends another derivation's steps; returns the index offset.
  int import(const Builder& other) {
    const int offset = static_cast<int>(steps_.size());
    for (Step s : other.steps_) {
      for (auto& in : s.inputs)
        if (in.from_step >= 0) in.from_step += offset;
      steps_.push_back(std::move(s));
    }
    return offset;
  }

  void adopt_facts(const Builder& other, int offset) {
    for (Quantity q : kAllQuantities)
      for (Side s : {Side::Lower, Side::Upper}) {
        const int i = other.fact(q, s);
        facts_[qi(q)][si(s)] = i < 0 ? -1 : i + offset;
      }
    classes = other.classes;
  }

 private:
  std::string subject_;
  std::vector<Step> steps_;
  std::array<std::array<int, 2>, 6> facts_{};
};

struct Relation {
  Quantity below;
  Quantity above;
  const char* rule;
};

// Ordered so that the pseudo capacity chain is preferred over the c_HZ route.
constexpr std::array<Relation, 5> kRelations{{
    {Quantity::cG, Quantity::C2, "width_below_pseudo"},
    {Quantity::C2, Quantity::C2o, "pseudo_order"},
    {Quantity::C2, Quantity::cHZ, "pseudo_below_hz"},
    {Quantity::C2o, Quantity::cHZ_pi1, "pseudo_below_hz"},
    {Quantity::cHZ, Quantity::cHZ_pi1, "hz_below_pi1"},
}};

void close_under_generic_rules(Builder& b) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : kRelations) {
      if (b.fact(r.above, Side::Upper) >= 0)
        changed |= b.offer(make_step(r.rule, b.subject(), r.below, Side::Upper, StepOp::Copy,
                                     {b.input(r.above, Side::Upper)}));
      if (b.fact(r.below, Side::Lower) >= 0)
        changed |= b.offer(make_step(r.rule, b.subject(), r.above, Side::Lower, StepOp::Copy,
                                     {b.input(r.below, Side::Lower)}));
    }
  }
}

const CapValue kPi = CapValue::pi_times(Rational(1));

std::string ball_name(int complex_dim) { return "ball[" + std::to_string(2 * complex_dim) + "]"; }
std::string cyl_name(int complex_dim) { return "cyl[" + std::to_string(2 * complex_dim) + "]"; }

std::string class_name(const Partition& p) { return "sigma_{" + (p.empty() ? std::string("0") : p.str()) + "}"; }

/// Nonvanishing witness of an irreducible compact space: d pi with its data.
struct Nonvanishing {
  int degree = 1;
  std::string gamma;
  std::optional<GwWitness> gw;
  std::optional<CodimWitness> codim;
};

Nonvanishing nonvanishing(const Hssct& h) {
  Nonvanishing out;
  if (auto g = h.grassmannian()) {
    const GwCapacity cap = gw_capacity(*g);
    const Partition pt = Partition(std::vector<int>(static_cast<std::size_t>(g->k()), g->cols()));
    GwWitness w;
    w.k = g->k();
    w.n = g->n();
    w.alpha = cap.pair.alpha;
    w.beta = cap.pair.beta;
    w.d = cap.degree;
    w.value = gw_invariant(*g, pt, w.alpha, w.beta, w.d);
    out.degree = cap.degree;
    out.gamma = class_name(w.alpha.empty() ? w.beta : w.alpha);
    out.gw = w;
    return out;
  }
  const CatalogEntry e = catalog_entry(h);
  CodimWitness w;
  w.space = e.name;
  w.complex_dim = e.complex_dim;
  w.c1 = e.c1;
  w.pair = e.pair;
  w.source = e.pair_source;
  out.gamma = "class of complex codimension " + std::to_string(e.pair.a == 0 ? e.pair.b : e.pair.a);
  out.codim = w;
  return out;
}

std::string domain_name(const Hssct& h) {
  if (auto spec = h.cartan_dual()) return spec->name();
  return "noncompact dual of " + h.name();
}

Builder derive_compact(const Hssct& h) {
  Builder b(h.name());
  const int dim = h.complex_dim();
  const int ball = b.push(given("nontriviality", ball_name(dim), Quantity::cG, Side::Lower, kPi));
  const int dom = b.push(make_step("ball_into_domain", domain_name(h), Quantity::cG, Side::Lower, StepOp::Copy,
                                   {{"lower cG of " + ball_name(dim), kPi, ball}}));
  b.offer(make_step("symplectic_duality", b.subject(), Quantity::cG, Side::Lower, StepOp::Copy,
                    {{"lower cG of " + domain_name(h), kPi, dom}}));

  b.offer(given("minimal_area", b.subject(), Quantity::GW, Side::Lower, kPi));
  const Nonvanishing nv = nonvanishing(h);
  Step gw = given("gw_nonvanishing", b.subject(), Quantity::GW, Side::Upper, CapValue::pi_times(nv.degree));
  gw.gw = nv.gw;
  gw.codim = nv.codim;
  gw.note = "gamma = " + nv.gamma;
  b.offer(std::move(gw));
  b.classes = "pt, " + nv.gamma;

  if (2 * dim >= 4)
    b.offer(make_step("pseudo_capacity_chain", b.subject(), Quantity::C2o, Side::Upper, StepOp::Copy,
                      {b.input(Quantity::GW, Side::Upper)}));
  if (h.is_projective())
    b.offer(make_step("projective_hz_upper", b.subject(), Quantity::cHZ, Side::Upper, StepOp::Sum,
                      {{"|a_1| pi", kPi, -1}}));
  return b;
}

Builder derive_open(const std::string& subject, int complex_dim, bool is_domain) {
  Builder b(subject);
  for (Quantity q : {Quantity::cG, Quantity::cHZ}) {
    if (!is_domain) {
      b.offer(given("nontriviality", subject, q, Side::Lower, kPi));
      b.offer(given("nontriviality", subject, q, Side::Upper, kPi));
      continue;
    }
    const int ball = b.push(given("nontriviality", ball_name(complex_dim), q, Side::Lower, kPi));
    b.offer(make_step("ball_into_domain", subject, q, Side::Lower, StepOp::Copy,
                      {{"lower " + to_string(q) + " of " + ball_name(complex_dim), kPi, ball}}));
    const int cyl = b.push(given("nontriviality", cyl_name(complex_dim), q, Side::Upper, kPi));
    b.offer(make_step("domain_into_cylinder", subject, q, Side::Upper, StepOp::Copy,
                      {{"upper " + to_string(q) + " of " + cyl_name(complex_dim), kPi, cyl}}));
  }
  return b;
}

Builder derive_atomic(const SpaceExpr& s) {
  Builder b = [&]() {
    switch (s.kind) {
      case SpaceExpr::Kind::Hssct: return derive_compact(*s.hssct);
      case SpaceExpr::Kind::Cartan: return derive_open(to_string(s), s.complex_dim(), true);
      case SpaceExpr::Kind::Ball:
      case SpaceExpr::Kind::Cylinder: return derive_open(to_string(s), s.complex_dim(), false);
      case SpaceExpr::Kind::ClosedGeneric: return Builder(to_string(s));
      case SpaceExpr::Kind::Product: break;
    }
    throw InternalConsistencyError("derive_atomic called on a product");
  }();
  close_under_generic_rules(b);
  return b;
}

Builder derive_scaled(const ProductFactor& f, const std::string& subject) {
  Builder inner = derive_atomic(f.space);
  const Rational a = boost::abs(f.scale);
  Builder b(subject);
  const int offset = b.import(inner);
  if (a == Rational(1)) {
    b.adopt_facts(inner, offset);
    return b;
  }
  for (Quantity q : kAllQuantities)
    for (Side side : {Side::Lower, Side::Upper}) {
      if (inner.fact(q, side) < 0) continue;
      Step s = make_step("conformality", subject, q, side, StepOp::Scale, {inner.input(q, side, offset)});
      s.factor = a;
      b.offer(std::move(s));
    }
  b.classes = inner.classes;
  return b;
}

bool is_open(const SpaceExpr& s) {
  return s.kind == SpaceExpr::Kind::Cartan || s.kind == SpaceExpr::Kind::Ball ||
         s.kind == SpaceExpr::Kind::Cylinder;
}

Builder derive_product(const SpaceExpr& s, const std::vector<ProductFactor>& fs) {
  Builder b(to_string(s));
  std::vector<Builder> subs;
  std::vector<int> offsets;
  for (const auto& f : fs) {
    subs.push_back(derive_scaled(f, to_string(f.scale) + "*" + to_string(f.space)));
    offsets.push_back(b.import(subs.back()));
  }
  const auto inputs_of = [&](const std::vector<std::size_t>& idx, Quantity q, Side side) {
    std::vector<StepInput> in;
    for (std::size_t j : idx) in.push_back(subs[j].input(q, side, offsets[j]));
    return in;
  };
  const auto all_known = [](const std::vector<StepInput>& in) {
    return std::all_of(in.begin(), in.end(), [](const StepInput& x) { return x.value.known(); });
  };

  std::vector<std::size_t> all, closed, open;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    all.push_back(j);
    (is_open(fs[j].space) ? open : closed).push_back(j);
  }

  if (auto in = inputs_of(all, Quantity::cG, Side::Lower); all_known(in))
    b.offer(make_step("ball_product", b.subject(), Quantity::cG, Side::Lower, StepOp::Min, std::move(in)));

  if (open.empty()) {
    std::vector<StepInput> hz;
    bool positive = false;
    for (std::size_t j : all) {
      StepInput in = subs[j].input(Quantity::cHZ, Side::Lower, offsets[j]);
      if (!in.value.known()) {
        const int zero = b.push(given("nonnegativity", subs[j].subject(), Quantity::cHZ, Side::Lower,
                                      CapValue::pi_times(Rational(0))));
        in = {"lower cHZ of " + subs[j].subject(), CapValue::pi_times(Rational(0)), zero};
      } else if (!in.value.finite() || in.value.coefficient() > Rational(0)) {
        positive = true;
      }
      hz.push_back(std::move(in));
    }
    if (positive)
      b.offer(make_step("product_superadditivity", b.subject(), Quantity::cHZ, Side::Lower, StepOp::Sum,
                        std::move(hz)));

    std::optional<std::size_t> best;
    for (std::size_t j : all)
      if (fs[j].space.kind == SpaceExpr::Kind::Hssct &&
          (!best || boost::abs(fs[j].scale) < boost::abs(fs[*best].scale)))
        best = j;
    if (best) {
      const Hssct& h = *fs[*best].space.hssct;
      const Rational a = boost::abs(fs[*best].scale);
      const Nonvanishing nv = nonvanishing(h);
      Step gw = given("product_gw_upper", b.subject(), Quantity::GW, Side::Upper,
                      CapValue::pi_times(a * nv.degree));
      if (nv.gw) {
        GwWitness w = *nv.gw;
        const GrassSpec g(w.k, w.n);
        const Partition pt(std::vector<int>(static_cast<std::size_t>(w.k), g.cols()));
        w.lifted = true;
        w.value = product_gw_lift(g, 3,
                                  {{ProductInsertion::Pad::Fundamental, w.alpha},
                                   {ProductInsertion::Pad::Fundamental, w.beta},
                                   {ProductInsertion::Pad::Point, pt}},
                                  w.d);
        gw.gw = w;
      }
      gw.codim = nv.codim;
      gw.note = "factor " + subs[*best].subject() + ", gamma = " + nv.gamma;
      b.offer(std::move(gw));
      b.classes = "pt, [N] x " + nv.gamma + " of " + h.name();
      if (2 * s.complex_dim() >= 4)
        b.offer(make_step("pseudo_capacity_chain", b.subject(), Quantity::C2o, Side::Upper, StepOp::Copy,
                          {b.input(Quantity::GW, Side::Upper)}));
    }

    const bool projective = std::all_of(fs.begin(), fs.end(), [](const ProductFactor& f) {
      return f.space.kind == SpaceExpr::Kind::Hssct && f.space.hssct->is_projective();
    });
    if (projective) {
      std::vector<StepInput> in;
      for (const auto& f : fs)
        in.push_back({"|a| pi for " + to_string(f.space), CapValue::pi_times(boost::abs(f.scale)), -1});
      b.offer(make_step("projective_hz_upper", b.subject(), Quantity::cHZ, Side::Upper, StepOp::Sum, std::move(in)));
    }
  } else if (!closed.empty()) {
    if (auto in = inputs_of(open, Quantity::cG, Side::Lower); all_known(in))
      b.offer(make_step("closed_times_ball", b.subject(), Quantity::cHZ, Side::Lower, StepOp::Min, std::move(in)));
    if (auto in = inputs_of(open, Quantity::cHZ, Side::Upper); all_known(in))
      b.offer(make_step("closed_times_ball", b.subject(), Quantity::cHZ, Side::Upper, StepOp::Min, std::move(in)));
  } else {
    if (auto in = inputs_of(open, Quantity::cHZ, Side::Upper); all_known(in))
      b.offer(make_step("cylinder_product", b.subject(), Quantity::cHZ, Side::Upper, StepOp::Min, std::move(in)));
  }
  close_under_generic_rules(b);
  return b;
}

Builder derive(const SpaceExpr& s) {
  if (s.kind != SpaceExpr::Kind::Product) return derive_atomic(s);
  const std::vector<ProductFactor> fs = flatten(s);
  if (fs.size() == 1) {
    Builder b = derive_scaled(fs[0], to_string(s));
    close_under_generic_rules(b);
    return b;
  }
  return derive_product(s, fs);
}

}  // namespace

BoundCertificate capacity_bounds(const SpaceExpr& space, Quantity quantity) {
  const Builder b = derive(space);
  BoundCertificate cert;
  cert.space = to_string(space);
  cert.quantity = quantity;
  cert.classes = b.classes;
  cert.lower = b.value(quantity, Side::Lower);
  cert.upper = b.value(quantity, Side::Upper);

  std::set<int> keep;
  std::function<void(int)> visit = [&](int i) {
    if (i < 0 || !keep.insert(i).second) return;
    for (const auto& in : b.steps()[static_cast<std::size_t>(i)].inputs) visit(in.from_step);
  };
  visit(b.fact(quantity, Side::Lower));
  visit(b.fact(quantity, Side::Upper));

  std::map<int, int> renumber;
  for (int i : keep) {
    renumber[i] = static_cast<int>(cert.steps.size());
    Step s = b.steps()[static_cast<std::size_t>(i)];
    for (auto& in : s.inputs)
      if (in.from_step >= 0) in.from_step = renumber.at(in.from_step);
    cert.steps.push_back(std::move(s));
  }
  const auto mapped = [&](int i) { return i < 0 ? -1 : renumber.at(i); };
  cert.lower_step = mapped(b.fact(quantity, Side::Lower));
  cert.upper_step = mapped(b.fact(quantity, Side::Upper));
  return cert;
}

ReplayResult replay(const BoundCertificate& cert) {
  const auto fail = [](std::string m) { return ReplayResult{false, std::move(m)}; };
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const Step& s = cert.steps[i];
    const std::string where = "step " + std::to_string(i) + " (" + s.rule + "): ";
    const auto rule = std::find_if(rule_registry().begin(), rule_registry().end(),
                                   [&](const RuleInfo& r) { return r.name == s.rule; });
    if (rule == rule_registry().end()) return fail(where + "unregistered rule");
    if (rule->ref != s.ref) return fail(where + "reference does not match the registry");
    for (const auto& in : s.inputs) {
      if (in.from_step < 0) continue;
      if (in.from_step >= static_cast<int>(i)) return fail(where + "input refers forward");
      if (!(cert.steps[static_cast<std::size_t>(in.from_step)].output == in.value))
        return fail(where + "input '" + in.label + "' differs from the cited output");
    }
    if (auto v = evaluate(s.op, s.factor, s.inputs)) {
      if (!(*v == s.output)) return fail(where + "output " + s.output.str() + " but inputs give " + v->str());
    } else if (!s.output.known()) {
      return fail(where + "given step without a value");
    }
    if (s.gw) {
      const GwWitness& w = *s.gw;
      const GrassSpec g(w.k, w.n);
      const Partition pt(std::vector<int>(static_cast<std::size_t>(w.k), g.cols()));
      const std::int64_t value =
          w.lifted ? product_gw_lift(g, 3,
                                     {{ProductInsertion::Pad::Fundamental, w.alpha},
                                      {ProductInsertion::Pad::Fundamental, w.beta},
                                      {ProductInsertion::Pad::Point, pt}},
                                     w.d)
                   : gw_invariant(g, pt, w.alpha, w.beta, w.d);
      if (value != w.value) return fail(where + "invariant recomputes to " + std::to_string(value));
      if (value == 0) return fail(where + "invariant vanishes");
    }
    if (s.codim && !codim_identity_holds(s.codim->complex_dim, s.codim->c1, s.codim->pair))
      return fail(where + "codimension pair violates the degree identity");
  }
  const auto check_bound = [&](const CapValue& bound, int index, Side side) -> std::optional<std::string> {
    if (index < 0) {
      if (bound.known()) return to_string(side) + " bound has no derivation";
      return std::nullopt;
    }
    if (index >= static_cast<int>(cert.steps.size())) return to_string(side) + " step out of range";
    const Step& s = cert.steps[static_cast<std::size_t>(index)];
    if (s.quantity != cert.quantity || s.side != side) return to_string(side) + " step targets another bound";
    if (!(s.output == bound)) return to_string(side) + " bound differs from its step";
    return std::nullopt;
  };
  if (auto m = check_bound(cert.lower, cert.lower_step, Side::Lower)) return fail(*m);
  if (auto m = check_bound(cert.upper, cert.upper_step, Side::Upper)) return fail(*m);
  if (cert.lower.known() && cert.upper.known() && less_known(cert.upper, cert.lower))
    return fail("lower bound exceeds upper bound");
  return {};
}

Rational seshadri_upper(const SpaceExpr& space) {
  if (space.kind != SpaceExpr::Kind::Hssct)
    throw PreconditionError("Seshadri bound needs an irreducible compact Hermitian symmetric space");
  const BoundCertificate cert = capacity_bounds(space, Quantity::cG);
  if (!cert.upper.finite()) throw PreconditionError("no upper bound for the Gromov width of " + cert.space);
  return cert.upper.coefficient();
}

std::optional<std::int64_t> atlas_upper(const SpaceExpr& space) {
  if (space.kind != SpaceExpr::Kind::Hssct) return std::nullopt;
  const auto g = space.hssct->grassmannian();
  if (!g) return std::nullopt;
  std::int64_t c = 1;
  for (int i = 1; i <= g->k(); ++i) c = c * (g->n() - g->k() + i) / i;
  return c;
}

std::vector<FactorData> product_factor_data(const SpaceExpr& space) {
  std::vector<FactorData> out;
  for (const auto& f : flatten(space)) {
    if (f.space.kind != SpaceExpr::Kind::Hssct)
      throw PreconditionError(to_string(f.space) + " is not a catalog space");
    out.push_back(factor_data(*f.space.hssct));
  }
  return out;
}

}  // namespace hermsym
