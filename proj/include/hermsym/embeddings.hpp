#pragma once

// Symplectic embeddings between the unit ball, a Cartan domain, the unit
// cylinder and the affine chart of the compact dual, together with a numerical
// pullback verifier for 2-forms.
//
// Real coordinates are interleaved, (x1, y1, ..., xn, yn), so the standard form
// is sum_j dx_j ^ dy_j.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hermsym/jts.hpp"

namespace hermsym {

enum class JacobianMode { Analytic, CentralDifference };

struct SmoothMap {
  std::string name;
  int source_dim = 0;  // real
  int target_dim = 0;  // real
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> evaluate;
  /// Open source region the map is declared on.
  std::function<bool(const Eigen::VectorXd&)> in_source;
  /// Present only when a closed form is available.
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> analytic_jacobian;
  JacobianMode jacobian_mode = JacobianMode::CentralDifference;
  double difference_step = 1e-5;

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;
};

/// Real potential on R^{2n} (interleaved coordinates).
using Potential = std::function<double(const Eigen::VectorXd&)>;

class TwoForm {
 public:
  static TwoForm standard(int real_dim);
  /// sign * (i/2) d d-bar(potential), evaluated through a Richardson-extrapolated
  /// central-difference Hessian of the potential.
  static TwoForm kaehler(std::string name, Potential potential, int real_dim, double sign = 1.0);

  const std::string& name() const noexcept { return name_; }
  int real_dim() const noexcept { return real_dim_; }
  bool is_standard() const noexcept { return !potential_; }

  /// Antisymmetric matrix W with form(u, w) = u^T W w.
  Eigen::MatrixXd at(const Eigen::VectorXd& x) const;

 private:
  TwoForm(std::string name, int real_dim, Potential potential, double sign)
      : name_(std::move(name)), real_dim_(real_dim), potential_(std::move(potential)), sign_(sign) {}

  std::string name_;
  int real_dim_;
  Potential potential_;
  double sign_;
};

/// Block form sum_j dx_j ^ dy_j.
Eigen::MatrixXd standard_form_matrix(int real_dim);

/// Real 2-form of the Hermitian matrix G (G_jk = d^2 phi / dz_k dzbar_j):
/// form(u, w) = Im(u^* G w).
Eigen::MatrixXd form_from_hermitian(const Eigen::MatrixXcd& g);

/// Central-difference Hessian at steps h and h/2 combined by Richardson extrapolation.
Eigen::MatrixXd richardson_hessian(const Potential& f, const Eigen::VectorXd& x, double h = 2e-3);

// --- potentials ------------------------------------------------------------

/// N(v, v): I det(I - ZZ*), II det(I - ZZ*)^{1/2}, III det(I - Z Zbar),
/// IV 1 - 2|u|^2 + |u.u|^2 in the vector model u.
double generic_norm(const JtsElement& v);

/// log N(v, -v): the compact-dual chart potential (I: log det(I + ZZ*)).
double fs_potential(const JtsElement& v);

/// -log N(v, v); throws DomainError outside the domain.
double hyp_potential(const JtsElement& v);

TwoForm fs_form(const JtsSpec& spec);
TwoForm hyp_form(const JtsSpec& spec);

// --- maps -------------------------------------------------------------------

/// Identity, declared on the Euclidean unit ball.
SmoothMap ball_inclusion(const JtsSpec& spec);

/// Unitary W (with respect to the trace form) whose first row is p^*, completed
/// by Gram-Schmidt against the coordinate frame in index order.
Eigen::MatrixXcd cylinder_unitary(const JtsSpec& spec, const JtsElement& p);

/// v -> W v on the domain; p must be a primitive tripotent.
SmoothMap cylinder_map(const JtsSpec& spec, const JtsElement& p);

/// Multiplication by a real scalar on all of R^{2n}.
SmoothMap scaling_map(const JtsSpec& spec, double factor);

/// sum_j lambda_j (1 - lambda_j^2)^{-1/2} c_j; throws DomainError outside the domain.
JtsElement symplectic_duality(const JtsElement& v);

/// B(v,v)^{-1/4} v through the symmetric real Bergman matrix.
JtsElement symplectic_duality_bergman(const JtsElement& v);

/// The duality as a map on the domain.  Analytic Jacobians exist for the
/// matrix families; TypeIV always uses central differences.
SmoothMap duality_map(const JtsSpec& spec, JacobianMode mode = JacobianMode::Analytic);

/// max over points of max_{ab} |(J^T W_target(phi(x)) J - W_source(x))_{ab}|.
/// Points are processed on `threads` workers (0 = hardware concurrency).
double pullback_residual(const SmoothMap& map, const TwoForm& source_form, const TwoForm& target_form,
                         const std::vector<Eigen::VectorXd>& points, unsigned threads = 0);

// --- deterministic sampling --------------------------------------------------

/// Uniform point of [-half_width, half_width]^{2 dim} keyed by (seed, index).
JtsElement sample_box_point(const JtsSpec& spec, std::uint64_t seed, std::uint64_t index,
                            double half_width = 1.0);

/// Rejection sample with spectral norm < max_norm.  The box starts at half
/// width 1 and halves after every 10^4 rejections.  Depends only on
/// (seed, index, max_norm), never on call order.
JtsElement sample_domain_point(const JtsSpec& spec, std::uint64_t seed, std::uint64_t index,
                               double max_norm = 1.0);

struct PullbackReport {
  std::string map;
  std::string source_form;
  std::string target_form;
  int num_points = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Samples `num_points` domain points of spectral norm < max_norm and certifies
/// the pullback identity map^* target = source.
PullbackReport certify_pullback(const SmoothMap& map, const TwoForm& source_form, const TwoForm& target_form,
                                const JtsSpec& spec, int num_points, std::uint64_t seed, double max_norm,
                                double tolerance, unsigned threads = 0);

}  // namespace hermsym
