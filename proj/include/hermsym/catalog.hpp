#pragma once

// Irreducible Hermitian symmetric spaces of compact type and their numeric
// invariants.  Quantum data is computed only for Grassmannians; the other
// families carry a codimension pair certifying a nonvanishing line invariant
// through a point.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermsym/jts.hpp"
#include "hermsym/quantum.hpp"

namespace hermsym {

enum class HssctKind { Grass, SOdual, LGdual, Quadric, E6, E7 };

class Hssct {
 public:
  static Hssct grass(int k, int n);
  /// SO(2n)/U(n), n >= 2.
  static Hssct so(int n);
  /// LG(n, 2n), n >= 1.
  static Hssct lg(int n);
  /// Smooth quadric of complex dimension m >= 3.
  static Hssct quadric(int m);
  static Hssct e6();
  static Hssct e7();

  HssctKind kind() const noexcept { return kind_; }
  int param1() const noexcept { return p1_; }
  int param2() const noexcept { return p2_; }

  int complex_dim() const noexcept;
  int rank() const noexcept;
  /// c_1 on the line class.
  int c1() const noexcept;
  /// Biholomorphic to a projective space.
  bool is_projective() const noexcept;

  /// Noncompact dual, when it is a classical Cartan domain.
  std::optional<JtsSpec> cartan_dual() const;
  std::optional<GrassSpec> grassmannian() const;

  /// Grammar spelling: grass[2,4], so[5], lg[3], quadric[4], e6, e7.
  std::string name() const;

  friend bool operator==(const Hssct&, const Hssct&) = default;

 private:
  Hssct(HssctKind kind, int p1, int p2) : kind_(kind), p1_(p1), p2_(p2) {}
  HssctKind kind_;
  int p1_;
  int p2_;
};

struct CodimPair {
  int a = 0;
  int b = 0;
};

struct PairCandidate {
  std::string reading;
  CodimPair pair;
  bool satisfies_identity = false;
};

struct CatalogEntry {
  std::string name;
  int complex_dim = 0;
  int rank = 0;
  int c1 = 0;
  /// Accepted pair of complex codimensions.
  CodimPair pair;
  /// "computed" (quantum search), "catalog" or "derived".
  std::string pair_source;
  /// Classes found by the search, Grassmannians only.
  std::optional<ClassPair> classes;
  /// Every reading considered for the pair, including rejected ones.
  std::vector<PairCandidate> candidates;
};

/// 2(D - a) + 2(D - b) = 4D - 2 c_1, in exact integer arithmetic.
bool codim_identity_holds(int complex_dim, int c1, const CodimPair& pair);

CatalogEntry catalog_entry(const Hssct& space);

/// Every catalog space of complex dimension at most max_dim (E6/E7 included
/// when they fit).
std::vector<Hssct> catalog_spaces(int max_dim);

FactorData factor_data(const Hssct& space);

}  // namespace hermsym
