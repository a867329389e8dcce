#pragma once

// Seeded property suites over the library.  Reports are deterministic in
// (suite, samples, seed, tolerance).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermsym/canonical_json.hpp"

namespace hermsym {

struct InvariantResult {
  std::string suite;
  std::string name;
  /// Space or family the invariant was evaluated on.
  std::string on;
  long count = 0;
  double max_residual = 0.0;
  /// Exact invariants have tolerance 0 and pass only with residual 0.
  double tolerance = 0.0;
  bool exact = false;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<InvariantResult> invariants;
  bool pass = false;
};

/// "jordan", "spectral", "embeddings", "quantum", "all".
const std::vector<std::string>& verify_suites();

/// 1e-10, 1e-8, 1e-4 and 0 respectively.
double default_tolerance(const std::string& suite);

/// Throws PreconditionError for samples <= 0 or an unknown suite.
VerifyReport run_verify(const std::string& suite, int samples, std::uint64_t seed,
                        std::optional<double> tolerance = std::nullopt);

Json to_json(const VerifyReport& report);

}  // namespace hermsym
