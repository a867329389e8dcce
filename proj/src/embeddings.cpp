#include "hermsym/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>

#include "hermsym/errors.hpp"
#include "hermsym/spectral.hpp"

namespace hermsym {

namespace {

Eigen::MatrixXd complex_matrix_to_real(const Eigen::MatrixXcd& w) {
  Eigen::MatrixXd r(2 * w.rows(), 2 * w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      const cplx a = w(i, j);
      r(2 * i, 2 * j) = a.real();
      r(2 * i, 2 * j + 1) = -a.imag();
      r(2 * i + 1, 2 * j) = a.imag();
      r(2 * i + 1, 2 * j + 1) = a.real();
    }
  return r;
}

Eigen::MatrixXd central_difference_jacobian(const SmoothMap& map, const Eigen::VectorXd& x, double h) {
  Eigen::MatrixXd j(map.target_dim, map.source_dim);
  Eigen::VectorXd xp = x;
  Eigen::VectorXd xm = x;
  for (int a = 0; a < map.source_dim; ++a) {
    xp(a) = x(a) + h;
    xm(a) = x(a) - h;
    j.col(a) = (map.evaluate(xp) - map.evaluate(xm)) / (2.0 * h);
    xp(a) = x(a);
    xm(a) = x(a);
  }
  return j;
}

Eigen::MatrixXd central_difference_hessian(const Potential& f, const Eigen::VectorXd& x, double h) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd hess(n, n);
  const double f0 = f(x);
  Eigen::VectorXd y = x;
  for (Eigen::Index a = 0; a < n; ++a) {
    y(a) = x(a) + h;
    const double fp = f(y);
    y(a) = x(a) - h;
    const double fm = f(y);
    y(a) = x(a);
    hess(a, a) = (fp - 2.0 * f0 + fm) / (h * h);
    for (Eigen::Index b = a + 1; b < n; ++b) {
      y(a) = x(a) + h;
      y(b) = x(b) + h;
      const double fpp = f(y);
      y(b) = x(b) - h;
      const double fpm = f(y);
      y(a) = x(a) - h;
      const double fmm = f(y);
      y(b) = x(b) + h;
      const double fmp = f(y);
      y(a) = x(a);
      y(b) = x(b);
      hess(a, b) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      hess(b, a) = hess(a, b);
    }
  }
  return hess;
}

cplx model_det(const Eigen::MatrixXcd& m) { return m.rows() == 0 ? cplx(1.0) : m.determinant(); }

// Shared by generic_norm (sign = -1) and the chart potential (sign = +1):
// N(v, sign * v-bar) up to the family normalization.
double norm_with_sign(const JtsElement& v, double sign) {
  const JtsSpec& spec = v.spec();
  const Eigen::MatrixXcd z = v.to_model();
  switch (spec.family()) {
    case Family::TypeI:
    case Family::TypeIII: {
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(z.rows(), z.rows());
      return model_det(id + sign * z * z.adjoint()).real();
    }
    case Family::TypeII: {
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(z.rows(), z.rows());
      return std::sqrt(std::max(0.0, model_det(id + sign * z * z.adjoint()).real()));
    }
    case Family::TypeIV: {
      const Eigen::VectorXcd u = z.col(0);
      const double u2 = u.squaredNorm();
      const double q = std::abs(u.cwiseProduct(u).sum());
      return 1.0 + 2.0 * sign * u2 + q * q;
    }
  }
  return 0.0;
}

// Daleckii-Krein derivative of Z -> Z (I - Z*Z)^{-1/2}.
Eigen::MatrixXd duality_jacobian_matrix_family(const JtsSpec& spec, const Eigen::VectorXd& x) {
  const JtsElement v = JtsElement::from_real(spec, x);
  const Eigen::MatrixXcd z = v.to_model();
  const Eigen::Index cols = z.cols();
  const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(cols, cols) - z.adjoint() * z;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  const Eigen::VectorXd d = es.eigenvalues();
  if (d.minCoeff() <= 0.0) throw DomainError("duality Jacobian requested outside the domain");
  const Eigen::MatrixXcd& p = es.eigenvectors();
  const Eigen::VectorXd root = d.cwiseSqrt();
  Eigen::MatrixXcd s = p * root.cwiseInverse().asDiagonal() * p.adjoint();
  Eigen::MatrixXd gamma(cols, cols);
  for (Eigen::Index i = 0; i < cols; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) gamma(i, j) = -1.0 / (root(i) * root(j) * (root(i) + root(j)));

  const int n = spec.dim();
  Eigen::MatrixXd jac(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    for (int part = 0; part < 2; ++part) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
      e(k) = part == 0 ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
      const Eigen::MatrixXcd dz = JtsElement(spec, e).to_model();
      const Eigen::MatrixXcd da = -(dz.adjoint() * z + z.adjoint() * dz);
      const Eigen::MatrixXcd m = p.adjoint() * da * p;
      const Eigen::MatrixXcd ds = p * m.cwiseProduct(gamma.cast<cplx>()) * p.adjoint();
      const Eigen::MatrixXcd dphi = dz * s + z * ds;
      jac.col(2 * k + part) = JtsElement::from_model(spec, dphi).to_real();
    }
  }
  return jac;
}

double unit_interval(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::mt19937_64 keyed_generator(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

JtsElement draw_box(const JtsSpec& spec, std::mt19937_64& gen, double half_width) {
  Eigen::VectorXd x(2 * spec.dim());
  for (Eigen::Index a = 0; a < x.size(); ++a) x(a) = half_width * (2.0 * unit_interval(gen) - 1.0);
  return JtsElement::from_real(spec, x);
}

}  // namespace

// ---------------------------------------------------------------------------

Eigen::MatrixXd SmoothMap::jacobian(const Eigen::VectorXd& x) const {
  if (jacobian_mode == JacobianMode::Analytic && analytic_jacobian) return analytic_jacobian(x);
  return central_difference_jacobian(*this, x, difference_step);
}

Eigen::MatrixXd standard_form_matrix(int real_dim) {
  if (real_dim % 2 != 0) throw DimensionError("symplectic form needs even dimension");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(real_dim, real_dim);
  for (int j = 0; j < real_dim; j += 2) {
    w(j, j + 1) = 1.0;
    w(j + 1, j) = -1.0;
  }
  return w;
}

Eigen::MatrixXd form_from_hermitian(const Eigen::MatrixXcd& g) {
  const Eigen::Index n = g.rows();
  const cplx eps[2] = {cplx(1.0, 0.0), cplx(0.0, 1.0)};
  Eigen::MatrixXd w(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (int s = 0; s < 2; ++s)
      for (Eigen::Index k = 0; k < n; ++k)
        for (int t = 0; t < 2; ++t) w(2 * j + s, 2 * k + t) = (std::conj(eps[s]) * g(j, k) * eps[t]).imag();
  return w;
}

Eigen::MatrixXd richardson_hessian(const Potential& f, const Eigen::VectorXd& x, double h) {
  const Eigen::MatrixXd coarse = central_difference_hessian(f, x, h);
  const Eigen::MatrixXd fine = central_difference_hessian(f, x, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

TwoForm TwoForm::standard(int real_dim) { return TwoForm("omega0", real_dim, nullptr, 1.0); }

TwoForm TwoForm::kaehler(std::string name, Potential potential, int real_dim, double sign) {
  if (!potential) throw PreconditionError("kaehler form needs a potential");
  return TwoForm(std::move(name), real_dim, std::move(potential), sign);
}

Eigen::MatrixXd TwoForm::at(const Eigen::VectorXd& x) const {
  if (x.size() != real_dim_) throw DimensionError("form evaluated at a point of the wrong dimension");
  if (!potential_) return standard_form_matrix(real_dim_);
  const Eigen::MatrixXd r = richardson_hessian(potential_, x);
  const Eigen::Index n = real_dim_ / 2;
  // G_jk = d^2 phi / dz_k dzbar_j
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      const double re = r(2 * k, 2 * j) + r(2 * k + 1, 2 * j + 1);
      const double im = r(2 * k, 2 * j + 1) - r(2 * k + 1, 2 * j);
      g(j, k) = 0.25 * cplx(re, im);
    }
  const Eigen::MatrixXd w = sign_ * form_from_hermitian(g);
  return 0.5 * (w - w.transpose());
}

// ---------------------------------------------------------------------------

double generic_norm(const JtsElement& v) { return norm_with_sign(v, -1.0); }

double fs_potential(const JtsElement& v) { return std::log(norm_with_sign(v, 1.0)); }

double hyp_potential(const JtsElement& v) {
  if (!in_domain(v)) throw DomainError("hyperbolic potential evaluated outside the domain");
  return -std::log(generic_norm(v));
}

TwoForm fs_form(const JtsSpec& spec) {
  return TwoForm::kaehler(
      "fs", [spec](const Eigen::VectorXd& x) { return fs_potential(JtsElement::from_real(spec, x)); },
      2 * spec.dim());
}

TwoForm hyp_form(const JtsSpec& spec) {
  return TwoForm::kaehler(
      "hyp", [spec](const Eigen::VectorXd& x) { return hyp_potential(JtsElement::from_real(spec, x)); },
      2 * spec.dim());
}

// ---------------------------------------------------------------------------

SmoothMap ball_inclusion(const JtsSpec& spec) {
  const int n = 2 * spec.dim();
  SmoothMap m;
  m.name = "ball_inclusion";
  m.source_dim = n;
  m.target_dim = n;
  m.evaluate = [](const Eigen::VectorXd& x) { return x; };
  m.in_source = [](const Eigen::VectorXd& x) { return x.norm() < 1.0; };
  m.analytic_jacobian = [n](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(n, n).eval(); };
  m.jacobian_mode = JacobianMode::Analytic;
  return m;
}

Eigen::MatrixXcd cylinder_unitary(const JtsSpec& spec, const JtsElement& p) {
  if (!(p.spec() == spec)) throw DimensionError("tripotent belongs to " + p.spec().name());
  const double cube_err = (triple_product(p, p, p) - p * 2.0).norm();
  const double unit_err = std::abs(trace_form(p, p) - 1.0);
  if (cube_err > 1e-8 || unit_err > 1e-8)
    throw PreconditionError("cylinder map needs a primitive tripotent");
  const int n = spec.dim();
  std::vector<Eigen::VectorXcd> frame{p.coords() / p.coords().norm()};
  for (int k = 0; k < n && static_cast<int>(frame.size()) < n; ++k) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
    e(k) = 1.0;
    for (const auto& f : frame) e -= f.dot(e) * f;
    for (const auto& f : frame) e -= f.dot(e) * f;
    const double len = e.norm();
    if (len > 1e-6) frame.push_back(e / len);
  }
  Eigen::MatrixXcd w(n, n);
  for (int r = 0; r < n; ++r) w.row(r) = frame[r].adjoint();
  return w;
}

SmoothMap cylinder_map(const JtsSpec& spec, const JtsElement& p) {
  const Eigen::MatrixXd w = complex_matrix_to_real(cylinder_unitary(spec, p));
  SmoothMap m;
  m.name = "cylinder_map";
  m.source_dim = 2 * spec.dim();
  m.target_dim = 2 * spec.dim();
  m.evaluate = [w](const Eigen::VectorXd& x) { return (w * x).eval(); };
  m.in_source = [spec](const Eigen::VectorXd& x) { return in_domain(JtsElement::from_real(spec, x)); };
  m.analytic_jacobian = [w](const Eigen::VectorXd&) { return w; };
  m.jacobian_mode = JacobianMode::Analytic;
  return m;
}

SmoothMap scaling_map(const JtsSpec& spec, double factor) {
  const int n = 2 * spec.dim();
  SmoothMap m;
  m.name = "scaling";
  m.source_dim = n;
  m.target_dim = n;
  m.evaluate = [factor](const Eigen::VectorXd& x) { return (factor * x).eval(); };
  m.in_source = [](const Eigen::VectorXd&) { return true; };
  m.analytic_jacobian = [n, factor](const Eigen::VectorXd&) {
    return (factor * Eigen::MatrixXd::Identity(n, n)).eval();
  };
  m.jacobian_mode = JacobianMode::Analytic;
  return m;
}

JtsElement symplectic_duality(const JtsElement& v) {
  if (!in_domain(v)) throw DomainError("symplectic duality is defined on the domain only");
  return apply_odd_function(v, [](double l) { return l / std::sqrt(1.0 - l * l); });
}

JtsElement symplectic_duality_bergman(const JtsElement& v) {
  if (!in_domain(v)) throw DomainError("symplectic duality is defined on the domain only");
  const Eigen::MatrixXd b = operator_matrix(OperatorKind::B, v, v).matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (b + b.transpose()));
  const Eigen::VectorXd scale = es.eigenvalues().array().pow(-0.25).matrix();
  const Eigen::MatrixXd root = es.eigenvectors() * scale.asDiagonal() * es.eigenvectors().transpose();
  return JtsElement::from_real(v.spec(), root * v.to_real());
}

SmoothMap duality_map(const JtsSpec& spec, JacobianMode mode) {
  SmoothMap m;
  m.name = "symplectic_duality";
  m.source_dim = 2 * spec.dim();
  m.target_dim = 2 * spec.dim();
  m.evaluate = [spec](const Eigen::VectorXd& x) {
    return symplectic_duality(JtsElement::from_real(spec, x)).to_real();
  };
  m.in_source = [spec](const Eigen::VectorXd& x) { return in_domain(JtsElement::from_real(spec, x)); };
  if (spec.family() != Family::TypeIV) {
    m.analytic_jacobian = [spec](const Eigen::VectorXd& x) { return duality_jacobian_matrix_family(spec, x); };
    m.jacobian_mode = mode;
  } else {
    m.jacobian_mode = JacobianMode::CentralDifference;
  }
  return m;
}

double pullback_residual(const SmoothMap& map, const TwoForm& source_form, const TwoForm& target_form,
                         const std::vector<Eigen::VectorXd>& points, unsigned threads) {
  if (source_form.real_dim() != map.source_dim || target_form.real_dim() != map.target_dim)
    throw DimensionError("form dimensions do not match the map");
  for (const auto& x : points) {
    if (x.size() != map.source_dim) throw DimensionError("point dimension does not match the map");
    if (map.in_source && !map.in_source(x)) throw DomainError("point outside the source region of " + map.name);
  }
  std::vector<double> residual(points.size(), 0.0);
  const auto work = [&](std::size_t i) {
    const Eigen::VectorXd& x = points[i];
    const Eigen::MatrixXd j = map.jacobian(x);
    const Eigen::MatrixXd pulled = j.transpose() * target_form.at(map.evaluate(x)) * j;
    residual[i] = (pulled - source_form.at(x)).cwiseAbs().maxCoeff();
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < points.size(); i += threads) work(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return residual.empty() ? 0.0 : *std::max_element(residual.begin(), residual.end());
}

// ---------------------------------------------------------------------------

JtsElement sample_box_point(const JtsSpec& spec, std::uint64_t seed, std::uint64_t index, double half_width) {
  std::mt19937_64 gen = keyed_generator(seed, index);
  return draw_box(spec, gen, half_width);
}

JtsElement sample_domain_point(const JtsSpec& spec, std::uint64_t seed, std::uint64_t index, double max_norm) {
  if (!(max_norm > 0.0)) throw PreconditionError("sampling radius must be positive");
  std::mt19937_64 gen = keyed_generator(seed, index);
  double half_width = 1.0;
  for (long attempt = 1;; ++attempt) {
    JtsElement v = draw_box(spec, gen, half_width);
    // lambda_1 <= |v| <= sqrt(rank) lambda_1 decides most draws without a decomposition.
    const double r = v.norm();
    if (r < max_norm) return v;
    if (r < max_norm * std::sqrt(static_cast<double>(spec.rank())) && spectral_norm(v) < max_norm) return v;
    if (attempt % 10000 == 0) half_width *= 0.5;
  }
}

PullbackReport certify_pullback(const SmoothMap& map, const TwoForm& source_form, const TwoForm& target_form,
                                const JtsSpec& spec, int num_points, std::uint64_t seed, double max_norm,
                                double tolerance, unsigned threads) {
  if (num_points <= 0) throw PreconditionError("certification needs at least one point");
  std::vector<Eigen::VectorXd> points;
  points.reserve(num_points);
  for (int i = 0; i < num_points; ++i)
    points.push_back(sample_domain_point(spec, seed, static_cast<std::uint64_t>(i), max_norm).to_real());
  PullbackReport r;
  r.map = map.name + "(" + spec.name() + ")";
  r.source_form = source_form.name();
  r.target_form = target_form.name();
  r.num_points = num_points;
  r.seed = seed;
  r.max_residual = pullback_residual(map, source_form, target_form, points, threads);
  r.tolerance = tolerance;
  r.pass = r.max_residual < tolerance;
  return r;
}

}  // namespace hermsym
