#include "hermsym/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hermsym/errors.hpp"

namespace hermsym {

namespace {

// Spin-factor data of a TypeIV element in its vector model u:
// e^{-i theta/2} u = a + i b with a, b real and orthogonal, |a| >= |b|.
// The two eigenvalues are |a| + |b| and |a| - |b|.
struct SpinSplit {
  cplx phase;  // e^{i theta / 2}
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  double a_norm = 0.0;
  double b_norm = 0.0;
};

SpinSplit spin_split(const Eigen::VectorXcd& u) {
  cplx q = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) q += u(i) * u(i);
  const double theta = std::abs(q) > 0.0 ? std::arg(q) : 0.0;
  SpinSplit s;
  s.phase = std::polar(1.0, 0.5 * theta);
  const Eigen::VectorXcd w = u * std::conj(s.phase);
  s.a = w.real();
  s.b = w.imag();
  s.a_norm = s.a.norm();
  if (s.a_norm > 0.0) s.b -= (s.a.dot(s.b) / (s.a_norm * s.a_norm)) * s.a;
  s.b_norm = s.b.norm();
  return s;
}

Eigen::MatrixXcd column(const Eigen::VectorXcd& v) { return v; }

SpectralDecomposition decompose_matrix_family(const JtsElement& v, double tol) {
  const JtsSpec& spec = v.spec();
  const Eigen::MatrixXcd z = v.to_model();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(z, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();
  const Eigen::MatrixXcd& u = svd.matrixU();
  const Eigen::MatrixXcd& w = svd.matrixV();

  SpectralDecomposition out;
  Eigen::Index i = 0;
  while (i < s.size() && s(i) >= tol) {
    Eigen::Index j = i + 1;
    while (j < s.size() && s(j) >= tol && s(j - 1) - s(j) <= tol) ++j;
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(z.rows(), z.cols());
    double sum = 0.0;
    for (Eigen::Index k = i; k < j; ++k) {
      c += u.col(k) * w.col(k).adjoint();
      sum += s(k);
    }
    out.eigenvalues.push_back(sum / static_cast<double>(j - i));
    out.tripotents.push_back(JtsElement::from_model(spec, c));
    i = j;
  }
  return out;
}

SpectralDecomposition decompose_spin(const JtsElement& v, double tol) {
  const JtsSpec& spec = v.spec();
  const SpinSplit sp = spin_split(v.to_model().col(0));
  SpectralDecomposition out;
  if (sp.a_norm < tol) return out;
  const Eigen::VectorXcd a_hat = sp.a.cast<cplx>() / sp.a_norm;
  const double hi = sp.a_norm + sp.b_norm;
  const double lo = sp.a_norm - sp.b_norm;
  if (hi - lo <= tol) {
    // Maximal tripotent: both eigenvalues coincide.
    out.eigenvalues.push_back(sp.a_norm);
    out.tripotents.push_back(JtsElement::from_model(spec, column(sp.phase * a_hat)));
    return out;
  }
  const Eigen::VectorXcd ib_hat = cplx(0.0, 1.0) * sp.b.cast<cplx>() / sp.b_norm;
  out.eigenvalues.push_back(hi);
  out.tripotents.push_back(JtsElement::from_model(spec, column(0.5 * sp.phase * (a_hat + ib_hat))));
  if (lo >= tol) {
    out.eigenvalues.push_back(lo);
    out.tripotents.push_back(JtsElement::from_model(spec, column(0.5 * sp.phase * (a_hat - ib_hat))));
  }
  return out;
}

}  // namespace

JtsElement SpectralDecomposition::reconstruct(const JtsSpec& spec) const {
  JtsElement sum = JtsElement::zero(spec);
  for (std::size_t j = 0; j < eigenvalues.size(); ++j) sum = sum + tripotents[j] * eigenvalues[j];
  return sum;
}

SpectralDecomposition spectral_decompose(const JtsElement& v, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("spectral tolerance must be positive");
  if (!v.coords().allFinite()) throw PreconditionError("element has non-finite coordinates");
  SpectralDecomposition out =
      v.spec().family() == Family::TypeIV ? decompose_spin(v, tol) : decompose_matrix_family(v, tol);
  const double residual = (out.reconstruct(v.spec()) - v).norm();
  if (residual > 100.0 * tol)
    throw InternalConsistencyError("spectral reconstruction residual " + std::to_string(residual) + " for " +
                                   v.spec().name());
  return out;
}

double spectral_norm(const JtsElement& v) {
  if (v.spec().family() == Family::TypeIV) {
    const SpinSplit sp = spin_split(v.to_model().col(0));
    return sp.a_norm + sp.b_norm;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v.to_model());
  const Eigen::VectorXd s = svd.singularValues();
  return s.size() == 0 ? 0.0 : s(0);
}

bool is_regular(const JtsElement& v, double tol) {
  return spectral_decompose(v, tol).rank() == v.spec().rank();
}

Membership classify_membership(const JtsElement& v, double tol) {
  Membership m;
  m.spectral_norm = spectral_norm(v);
  m.near_boundary = std::abs(m.spectral_norm - 1.0) <= tol;
  m.inside = !m.near_boundary && m.spectral_norm < 1.0;
  return m;
}

bool in_domain(const JtsElement& v, double tol) { return classify_membership(v, tol).inside; }

namespace {

double min_sym_eigenvalue(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

double bergman_min_eigenvalue(const JtsElement& v) {
  return min_sym_eigenvalue(operator_matrix(OperatorKind::B, v, v).matrix);
}

bool bergman_positive(const JtsElement& v) {
  // B(tv,tv) = id - t^2 T(v,v) + t^4 Q(v)^2, assembled once.
  const Eigen::MatrixXd t_op = operator_matrix(OperatorKind::T, v, v).matrix;
  const Eigen::MatrixXd q_op = operator_matrix(OperatorKind::Q, v, v).matrix;
  const Eigen::MatrixXd q2 = q_op * q_op;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(t_op.rows(), t_op.cols());
  const auto min_eig = [&](double t) {
    const double t2 = t * t;
    return min_sym_eigenvalue(id - t2 * t_op + (t2 * t2) * q2);
  };
  constexpr double kThreshold = 1e-10;
  if (min_eig(1.0) <= kThreshold) return false;

  // Along the ray the smallest eigenvalue can touch zero without changing sign
  // (e.g. (1 - t^2 |v|^2)^2 in rank one), so every local minimum is refined.
  constexpr int kGrid = 64;
  std::vector<double> values(kGrid + 1);
  for (int i = 0; i <= kGrid; ++i) {
    values[i] = min_eig(static_cast<double>(i) / kGrid);
    if (values[i] <= kThreshold) return false;
  }
  constexpr double kGolden = 0.61803398874989484820;
  for (int i = 1; i < kGrid; ++i) {
    if (!(values[i] <= values[i - 1] && values[i] <= values[i + 1])) continue;
    double lo = static_cast<double>(i - 1) / kGrid;
    double hi = static_cast<double>(i + 1) / kGrid;
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = min_eig(x1);
    double f2 = min_eig(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
      if (f1 <= kThreshold || f2 <= kThreshold) return false;
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kGolden * (hi - lo);
        f1 = min_eig(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kGolden * (hi - lo);
        f2 = min_eig(x2);
      }
    }
    if (std::min(f1, f2) <= kThreshold) return false;
  }
  return true;
}

JtsElement apply_odd_function(const JtsElement& v, const std::function<double(double)>& f) {
  const JtsSpec& spec = v.spec();
  if (spec.family() == Family::TypeIV) {
    const SpinSplit sp = spin_split(v.to_model().col(0));
    if (sp.a_norm == 0.0) return JtsElement::zero(spec);
    const double f_hi = f(sp.a_norm + sp.b_norm);
    const double f_lo = f(sp.a_norm - sp.b_norm);
    Eigen::VectorXcd out = (0.5 * (f_hi + f_lo) / sp.a_norm) * sp.a.cast<cplx>();
    if (sp.b_norm > 0.0) out += cplx(0.0, 0.5 * (f_hi - f_lo) / sp.b_norm) * sp.b.cast<cplx>();
    return JtsElement::from_model(spec, column(sp.phase * out));
  }
  const Eigen::MatrixXcd z = v.to_model();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(z, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(z.rows(), z.cols());
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) == 0.0) continue;
    out += f(s(k)) * (svd.matrixU().col(k) * svd.matrixV().col(k).adjoint());
  }
  return JtsElement::from_model(spec, out);
}

}  // namespace hermsym
