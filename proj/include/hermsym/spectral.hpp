#pragma once

#include <functional>
#include <vector>

#include "hermsym/jts.hpp"

namespace hermsym {

inline constexpr double kDefaultSpectralTol = 1e-9;

/// v = sum_j eigenvalues[j] * tripotents[j] with strictly decreasing positive
/// eigenvalues and pairwise strongly orthogonal tripotents.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<JtsElement> tripotents;

  int rank() const noexcept { return static_cast<int>(eigenvalues.size()); }
  JtsElement reconstruct(const JtsSpec& spec) const;
};

/// Eigenvalues closer than `tol` are merged, eigenvalues below `tol` dropped.
/// Throws InternalConsistencyError if the result does not reproduce v to 100 * tol.
SpectralDecomposition spectral_decompose(const JtsElement& v, double tol = kDefaultSpectralTol);

/// Largest eigenvalue; 0 for v = 0.
double spectral_norm(const JtsElement& v);

bool is_regular(const JtsElement& v, double tol = kDefaultSpectralTol);

struct Membership {
  bool inside = false;
  /// Spectral norm within tol of 1; such points are reported as outside.
  bool near_boundary = false;
  double spectral_norm = 0.0;
};

Membership classify_membership(const JtsElement& v, double tol = kDefaultSpectralTol);

/// Spectral-norm test for the Cartan domain: |v|_spec < 1.
bool in_domain(const JtsElement& v, double tol = kDefaultSpectralTol);

/// Bergman-operator test for the Cartan domain: v lies in the connected
/// component of {u : B(u,u) > 0} containing 0.  Since the domain is circled and
/// convex this is checked along the segment t v, t in [0,1], using only the
/// assembled operators and a symmetric eigensolver.
bool bergman_positive(const JtsElement& v);

/// Smallest eigenvalue of the symmetrized real matrix of B(v,v).
double bergman_min_eigenvalue(const JtsElement& v);

/// sum_j f(lambda_j) c_j for an odd real function f.  Smooth in v wherever f is:
/// matrix families act on singular pairs directly and TypeIV uses the
/// closed-form two-eigenvalue split without grouping.
JtsElement apply_odd_function(const JtsElement& v, const std::function<double(double)>& f);

}  // namespace hermsym
