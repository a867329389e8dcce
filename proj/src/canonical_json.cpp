#include "hermsym/canonical_json.hpp"

#include <cmath>
#include <cstdio>

namespace hermsym {

namespace {

void dump(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        dump(v[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      break;
    }
    default: out += v.dump(-1, ' ', false, Json::error_handler_t::replace);
  }
}

}  // namespace

std::string canonical_dump(const Json& value) {
  std::string out;
  dump(value, out);
  return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const CapValue& v) {
  switch (v.kind()) {
    case CapValue::Kind::Unknown: return nullptr;
    case CapValue::Kind::Infinite: return {{"unit", "inf"}};
    case CapValue::Kind::Finite:
      return {{"num", v.coefficient().numerator()}, {"den", v.coefficient().denominator()}, {"unit", "pi"}};
  }
  return nullptr;
}

Json to_json(const Step& s) {
  Json j{{"rule", s.rule},
         {"ref", s.ref},
         {"subject", s.subject},
         {"quantity", to_string(s.quantity)},
         {"side", to_string(s.side)},
         {"op", to_string(s.op)},
         {"output", to_json(s.output)}};
  if (s.op == StepOp::Scale) j["factor"] = {{"num", s.factor.numerator()}, {"den", s.factor.denominator()}};
  Json inputs = Json::array();
  for (const auto& in : s.inputs) {
    Json e{{"label", in.label}, {"value", to_json(in.value)}};
    if (in.from_step >= 0) e["from_step"] = in.from_step;
    inputs.push_back(std::move(e));
  }
  j["inputs"] = std::move(inputs);
  if (s.gw)
    j["gw"] = {{"k", s.gw->k},          {"n", s.gw->n},           {"alpha", to_json(s.gw->alpha)},
               {"beta", to_json(s.gw->beta)}, {"d", s.gw->d}, {"value", s.gw->value},
               {"lifted", s.gw->lifted}};
  if (s.codim)
    j["codim"] = {{"space", s.codim->space}, {"complex_dim", s.codim->complex_dim}, {"c1", s.codim->c1},
                  {"a", s.codim->pair.a},     {"b", s.codim->pair.b},                 {"source", s.codim->source}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const BoundCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) steps.push_back(to_json(s));
  Json j{{"space", cert.space},     {"quantity", to_string(cert.quantity)}, {"classes", cert.classes},
         {"lower", to_json(cert.lower)}, {"upper", to_json(cert.upper)},         {"steps", std::move(steps)}};
  j["lower_step"] = cert.lower_step < 0 ? Json(nullptr) : Json(cert.lower_step);
  j["upper_step"] = cert.upper_step < 0 ? Json(nullptr) : Json(cert.upper_step);
  return j;
}

Json qh_to_json(const GrassSpec& spec, const Partition& lambda, const Partition& mu, const QhElement& product) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : product.terms())
    terms.push_back({{"nu", to_json(key.nu)}, {"d", key.d}, {"coeff", coeff}});
  return {{"k", spec.k()}, {"n", spec.n()}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"terms", terms}};
}

Json to_json(const PullbackReport& r) {
  return {{"map", r.map},
          {"source_form", r.source_form},
          {"target_form", r.target_form},
          {"num_points", r.num_points},
          {"seed", r.seed},
          {"max_residual", r.max_residual},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

}  // namespace hermsym
