#include "hermsym/catalog.hpp"

#include <algorithm>

#include "hermsym/errors.hpp"

namespace hermsym {

Hssct Hssct::grass(int k, int n) {
  if (!(0 < k && k < n)) throw PreconditionError("grass[k,n] needs 0 < k < n");
  return Hssct(HssctKind::Grass, k, n);
}

Hssct Hssct::so(int n) {
  if (n < 2) throw PreconditionError("so[n] needs n >= 2");
  return Hssct(HssctKind::SOdual, n, 0);
}

Hssct Hssct::lg(int n) {
  if (n < 1) throw PreconditionError("lg[n] needs n >= 1");
  return Hssct(HssctKind::LGdual, n, 0);
}

Hssct Hssct::quadric(int m) {
  if (m < 3) throw PreconditionError("quadric[m] needs m >= 3");
  return Hssct(HssctKind::Quadric, m, 0);
}

Hssct Hssct::e6() { return Hssct(HssctKind::E6, 0, 0); }
Hssct Hssct::e7() { return Hssct(HssctKind::E7, 0, 0); }

int Hssct::complex_dim() const noexcept {
  switch (kind_) {
    case HssctKind::Grass: return p1_ * (p2_ - p1_);
    case HssctKind::SOdual: return p1_ * (p1_ - 1) / 2;
    case HssctKind::LGdual: return p1_ * (p1_ + 1) / 2;
    case HssctKind::Quadric: return p1_;
    case HssctKind::E6: return 16;
    case HssctKind::E7: return 27;
  }
  return 0;
}

int Hssct::rank() const noexcept {
  switch (kind_) {
    case HssctKind::Grass: return std::min(p1_, p2_ - p1_);
    case HssctKind::SOdual: return p1_ / 2;
    case HssctKind::LGdual: return p1_;
    case HssctKind::Quadric: return 2;
    case HssctKind::E6: return 2;
    case HssctKind::E7: return 3;
  }
  return 0;
}

int Hssct::c1() const noexcept {
  switch (kind_) {
    case HssctKind::Grass: return p2_;
    case HssctKind::SOdual: return 2 * p1_ - 2;
    case HssctKind::LGdual: return p1_ + 1;
    case HssctKind::Quadric: return p1_;
    case HssctKind::E6: return 12;
    case HssctKind::E7: return 18;
  }
  return 0;
}

bool Hssct::is_projective() const noexcept {
  switch (kind_) {
    case HssctKind::Grass: return p1_ == 1 || p1_ == p2_ - 1;
    case HssctKind::SOdual: return p1_ == 2 || p1_ == 3;
    case HssctKind::LGdual: return p1_ == 1;
    default: return false;
  }
}

std::optional<JtsSpec> Hssct::cartan_dual() const {
  switch (kind_) {
    case HssctKind::Grass: return JtsSpec::type_i(p1_, p2_ - p1_);
    case HssctKind::SOdual: return JtsSpec::type_ii(p1_);
    case HssctKind::LGdual: return JtsSpec::type_iii(p1_);
    case HssctKind::Quadric: return JtsSpec::type_iv(p1_);
    default: return std::nullopt;
  }
}

std::optional<GrassSpec> Hssct::grassmannian() const {
  if (kind_ != HssctKind::Grass) return std::nullopt;
  return GrassSpec(p1_, p2_);
}

std::string Hssct::name() const {
  switch (kind_) {
    case HssctKind::Grass: return "grass[" + std::to_string(p1_) + "," + std::to_string(p2_) + "]";
    case HssctKind::SOdual: return "so[" + std::to_string(p1_) + "]";
    case HssctKind::LGdual: return "lg[" + std::to_string(p1_) + "]";
    case HssctKind::Quadric: return "quadric[" + std::to_string(p1_) + "]";
    case HssctKind::E6: return "e6";
    case HssctKind::E7: return "e7";
  }
  return {};
}

bool codim_identity_holds(int complex_dim, int c1, const CodimPair& pair) {
  return 2 * (complex_dim - pair.a) + 2 * (complex_dim - pair.b) == 4 * complex_dim - 2 * c1;
}

namespace {

PairCandidate candidate(const Hssct& s, std::string reading, CodimPair pair) {
  return {std::move(reading), pair, codim_identity_holds(s.complex_dim(), s.c1(), pair)};
}

}  // namespace

CatalogEntry catalog_entry(const Hssct& s) {
  CatalogEntry e;
  e.name = s.name();
  e.complex_dim = s.complex_dim();
  e.rank = s.rank();
  e.c1 = s.c1();
  const int n = s.param1();
  switch (s.kind()) {
    case HssctKind::Grass: {
      const ClassPair found = find_point_class_pair(*s.grassmannian());
      e.classes = found;
      e.candidates.push_back(candidate(s, "search", {found.alpha.size(), found.beta.size()}));
      e.pair_source = "computed";
      break;
    }
    case HssctKind::SOdual: {
      // alpha = beta of homology degree (n-1)(n-2): as a real degree the complex
      // codimension is D - (n-1)(n-2)/2 = n - 1.
      const int deg = (n - 1) * (n - 2);
      e.candidates.push_back(candidate(s, "real homology degree", {n - 1, n - 1}));
      e.candidates.push_back(candidate(s, "complex codimension", {deg, deg}));
      e.pair_source = "catalog";
      break;
    }
    case HssctKind::LGdual:
      e.candidates.push_back(candidate(s, "codimensions n and 1", {n, 1}));
      e.pair_source = "catalog";
      break;
    case HssctKind::Quadric:
      // Psi_A(pt, H, line) = (H.A) Psi_A(pt, line) = 1: exactly one line through
      // a general point meets a general line.
      e.candidates.push_back(candidate(s, "hyperplane and line", {1, n - 1}));
      e.pair_source = "derived";
      break;
    case HssctKind::E6:
      e.candidates.push_back(candidate(s, "codimensions 8 and 4", {8, 4}));
      e.pair_source = "catalog";
      break;
    case HssctKind::E7:
      e.candidates.push_back(candidate(s, "codimensions 13 and 5", {13, 5}));
      e.pair_source = "catalog";
      break;
  }
  bool chosen = false;
  for (const auto& c : e.candidates) {
    if (c.satisfies_identity) {
      e.pair = c.pair;
      chosen = true;
      break;
    }
  }
  if (!chosen) throw InternalConsistencyError("no codimension pair of " + e.name + " satisfies the degree identity");
  return e;
}

std::vector<Hssct> catalog_spaces(int max_dim) {
  std::vector<Hssct> out;
  for (int n = 2; n <= max_dim + 1; ++n)
    for (int k = 1; k < n; ++k)
      if (k * (n - k) <= max_dim) out.push_back(Hssct::grass(k, n));
  for (int n = 2; n * (n - 1) / 2 <= max_dim; ++n) out.push_back(Hssct::so(n));
  for (int n = 1; n * (n + 1) / 2 <= max_dim; ++n) out.push_back(Hssct::lg(n));
  for (int m = 3; m <= max_dim; ++m) out.push_back(Hssct::quadric(m));
  if (max_dim >= 16) out.push_back(Hssct::e6());
  if (max_dim >= 27) out.push_back(Hssct::e7());
  return out;
}

FactorData factor_data(const Hssct& space) { return {space.name(), space.complex_dim(), space.c1()}; }

}  // namespace hermsym
