#pragma once

// Deterministic JSON: keys sorted, no whitespace, doubles with 17 significant
// digits, exact rationals as {"num","den"}.

#include <string>

#include <json.hpp>

#include "hermsym/capacities.hpp"
#include "hermsym/embeddings.hpp"
#include "hermsym/quantum.hpp"

namespace hermsym {

using Json = nlohmann::json;

std::string canonical_dump(const Json& value);

Json to_json(const Partition& p);
/// {"num","den","unit":"pi"}, {"unit":"inf"} or null.
Json to_json(const CapValue& v);
Json to_json(const Step& s);
Json to_json(const BoundCertificate& cert);
/// {"k","n","lambda","mu","terms":[{"nu","d","coeff"}]}.
Json qh_to_json(const GrassSpec& spec, const Partition& lambda, const Partition& mu, const QhElement& product);
Json to_json(const PullbackReport& report);

}  // namespace hermsym
