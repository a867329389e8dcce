#pragma once

// Two-sided bounds for symplectic capacities, derived by a fixed set of
// inequality rules.  Every bound is an exact rational multiple of pi and is
// backed by a list of steps that replay() can re-check independently.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermsym/catalog.hpp"
#include "hermsym/space.hpp"

namespace hermsym {

enum class Quantity { cG, cHZ, cHZ_pi1, C2, C2o, GW };

inline constexpr std::array<Quantity, 6> kAllQuantities{Quantity::cG, Quantity::cHZ, Quantity::cHZ_pi1,
                                                        Quantity::C2, Quantity::C2o, Quantity::GW};

std::string to_string(Quantity q);
/// Throws PreconditionError for an unknown name.
Quantity parse_quantity(const std::string& name);

/// r * pi, +infinity, or not known.
class CapValue {
 public:
  enum class Kind { Finite, Infinite, Unknown };

  static CapValue pi_times(Rational r) { return CapValue(Kind::Finite, r); }
  static CapValue infinite() { return CapValue(Kind::Infinite, 0); }
  static CapValue unknown() { return CapValue(Kind::Unknown, 0); }

  Kind kind() const noexcept { return kind_; }
  bool known() const noexcept { return kind_ != Kind::Unknown; }
  bool finite() const noexcept { return kind_ == Kind::Finite; }
  /// Coefficient of pi; 0 unless finite.
  const Rational& coefficient() const noexcept { return coeff_; }

  /// "pi", "2pi", "1/2pi", "inf", "unknown".
  std::string str() const;

  friend bool operator==(const CapValue&, const CapValue&) = default;

 private:
  CapValue(Kind kind, Rational coeff) : kind_(kind), coeff_(coeff) {}
  Kind kind_;
  Rational coeff_;
};

enum class Side { Lower, Upper };
std::string to_string(Side s);

enum class StepOp { Given, Copy, Scale, Sum, Min };
std::string to_string(StepOp op);

struct StepInput {
  std::string label;
  CapValue value = CapValue::unknown();
  /// Index of the step whose output this is; -1 for a constant of the rule.
  int from_step = -1;
};

/// A three-point invariant the step depends on; replay() recomputes it.
struct GwWitness {
  int k = 0;
  int n = 0;
  Partition alpha;
  Partition beta;
  int d = 1;
  std::int64_t value = 0;
  /// Evaluated on N x G(k,n) through the product insertion pattern.
  bool lifted = false;
};

/// A catalog codimension pair the step depends on; replay() checks the degree identity.
struct CodimWitness {
  std::string space;
  int complex_dim = 0;
  int c1 = 0;
  CodimPair pair;
  std::string source;
};

struct Step {
  std::string rule;
  std::string ref;
  std::string subject;
  Quantity quantity = Quantity::cG;
  Side side = Side::Lower;
  StepOp op = StepOp::Given;
  /// Scale only.
  Rational factor{1};
  std::vector<StepInput> inputs;
  CapValue output = CapValue::unknown();
  std::optional<GwWitness> gw;
  std::optional<CodimWitness> codim;
  std::string note;
};

struct BoundCertificate {
  std::string space;
  Quantity quantity = Quantity::cG;
  /// Homology classes the pseudo capacities are evaluated at.
  std::string classes;
  CapValue lower = CapValue::unknown();
  CapValue upper = CapValue::unknown();
  std::vector<Step> steps;
  /// Index into steps, -1 when the bound is unknown.
  int lower_step = -1;
  int upper_step = -1;

  bool closed_bounds() const noexcept { return lower.known() && upper.known(); }
};

struct RuleInfo {
  std::string name;
  std::string ref;
};

/// Every rule the engine may cite, in a fixed order.
const std::vector<RuleInfo>& rule_registry();

/// Tightest bounds derivable for `quantity`.  Throws UnknownSpaceError for
/// spaces the engine cannot describe (none at present; parse_space rejects them).
BoundCertificate capacity_bounds(const SpaceExpr& space, Quantity quantity);

struct ReplayResult {
  bool ok = true;
  std::string message;
};

/// Re-checks arithmetic, references, registered rules and witnesses.
ReplayResult replay(const BoundCertificate& cert);

/// Upper bound for the Seshadri constant of the line bundle with
/// c_1(L) = [omega_FS / pi] on an irreducible compact space.  Throws
/// PreconditionError for other spaces or when no upper bound for c_G is known.
Rational seshadri_upper(const SpaceExpr& space);

/// binom(n, k) for grass[k,n] (size of the Pluecker atlas); nullopt otherwise.
std::optional<std::int64_t> atlas_upper(const SpaceExpr& space);

/// Factor data of a product of compact factors, for dimension_condition_check.
/// Throws PreconditionError if some factor is not a catalog space.
std::vector<FactorData> product_factor_data(const SpaceExpr& space);

}  // namespace hermsym
