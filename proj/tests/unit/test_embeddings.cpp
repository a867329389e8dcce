#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hermsym/embeddings.hpp"
#include "hermsym/errors.hpp"
#include "hermsym/spectral.hpp"

using namespace hermsym;

namespace {

Eigen::VectorXd point2(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return v;
}

// Composite Simpson rule on [a, b] with an even number of panels.
template <class F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("chart forms of the disc and the sphere") {
  const JtsSpec disc = JtsSpec::type_i(1, 1);
  const TwoForm fs = fs_form(disc);
  const TwoForm hyp = hyp_form(disc);
  for (double r : {0.0, 0.3, 0.7, 0.9}) {
    const Eigen::VectorXd x = point2(r * 0.6, r * 0.8);
    CHECK(fs.at(x)(0, 1) == doctest::Approx(1.0 / std::pow(1.0 + r * r, 2)).epsilon(1e-6));
    CHECK(hyp.at(x)(0, 1) == doctest::Approx(1.0 / std::pow(1.0 - r * r, 2)).epsilon(1e-6));
    CHECK(fs.at(x)(1, 0) == doctest::Approx(-fs.at(x)(0, 1)));
  }
}

TEST_CASE("Fubini-Study area of the chart tends to pi") {
  const TwoForm fs = fs_form(JtsSpec::type_i(1, 1));
  const double radius = 10.0;
  const double area = simpson([&](double r) { return 2.0 * std::numbers::pi * r * fs.at(point2(r, 0.0))(0, 1); },
                              0.0, radius, 400);
  CHECK(area == doctest::Approx(std::numbers::pi * (1.0 - 1.0 / (1.0 + radius * radius))).epsilon(1e-6));
}

TEST_CASE("generic norm of the disc and the type I determinant") {
  const JtsSpec disc = JtsSpec::type_i(1, 1);
  const JtsElement v = JtsElement::from_real(disc, point2(0.3, -0.4));
  CHECK(generic_norm(v) == doctest::Approx(1.0 - 0.25));
  CHECK(fs_potential(v) == doctest::Approx(std::log(1.25)));
  CHECK(hyp_potential(v) == doctest::Approx(-std::log(0.75)));
  CHECK_THROWS_AS(hyp_potential(JtsElement::from_real(disc, point2(1.0, 0.5))), DomainError);

  const JtsSpec spec = JtsSpec::type_i(2, 2);
  const Eigen::MatrixXcd z{{cplx(0.1, 0.2), cplx(-0.3, 0.0)}, {cplx(0.0, 0.1), cplx(0.4, -0.2)}};
  const cplx det = (Eigen::MatrixXcd::Identity(2, 2) - z * z.adjoint()).determinant();
  CHECK(generic_norm(JtsElement::from_model(spec, z)) == doctest::Approx(det.real()));
}

TEST_CASE("duality on the disc is z / sqrt(1 - |z|^2)") {
  const JtsSpec disc = JtsSpec::type_i(1, 1);
  for (double r : {0.1, 0.5, 0.95}) {
    const cplx z = std::polar(r, 0.7);
    const JtsElement v(disc, Eigen::VectorXcd::Constant(1, z));
    const cplx expected = z / std::sqrt(1.0 - r * r);
    CHECK(std::abs(symplectic_duality(v).coords()[0] - expected) < 1e-12);
    CHECK(std::abs(symplectic_duality_bergman(v).coords()[0] - expected) < 1e-10);
  }
  CHECK_THROWS_AS(symplectic_duality(JtsElement(disc, Eigen::VectorXcd::Constant(1, 1.2))), DomainError);
}

TEST_CASE("spectral and Bergman formulas for the duality agree") {
  for (const JtsSpec& spec : {JtsSpec::type_i(2, 3), JtsSpec::type_ii(4), JtsSpec::type_iii(2), JtsSpec::type_iv(4)}) {
    CAPTURE(spec.name());
    for (std::uint64_t i = 0; i < 10; ++i) {
      const JtsElement v = sample_domain_point(spec, 5, i, 0.9);
      CHECK((symplectic_duality(v) - symplectic_duality_bergman(v)).norm() < 1e-9);
    }
  }
}

TEST_CASE("analytic and difference Jacobians of the duality agree") {
  const JtsSpec spec = JtsSpec::type_i(2, 2);
  const SmoothMap analytic = duality_map(spec, JacobianMode::Analytic);
  const SmoothMap numeric = duality_map(spec, JacobianMode::CentralDifference);
  for (std::uint64_t i = 0; i < 5; ++i) {
    const Eigen::VectorXd x = sample_domain_point(spec, 9, i, 0.8).to_real();
    CHECK((analytic.jacobian(x) - numeric.jacobian(x)).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("duality pulls the chart forms back to the flat and hyperbolic forms") {
  for (const JtsSpec& spec : {JtsSpec::type_i(1, 1), JtsSpec::type_i(1, 2), JtsSpec::type_iii(2)}) {
    CAPTURE(spec.name());
    const SmoothMap phi = duality_map(spec);
    const TwoForm flat = TwoForm::standard(2 * spec.dim());
    const PullbackReport fs = certify_pullback(phi, flat, fs_form(spec), spec, 10, 1, 0.9, 1e-4, 1);
    CHECK(fs.pass);
    CHECK(fs.max_residual < 1e-4);
    const PullbackReport hyp = certify_pullback(phi, hyp_form(spec), flat, spec, 10, 1, 0.9, 1e-4, 1);
    CHECK(hyp.pass);
  }
}

TEST_CASE("a map that is not symplectic fails the certificate") {
  const JtsSpec spec = JtsSpec::type_i(1, 2);
  const TwoForm flat = TwoForm::standard(4);
  const PullbackReport r = certify_pullback(scaling_map(spec, 2.0), flat, flat, spec, 5, 0, 0.9, 1e-4, 1);
  CHECK_FALSE(r.pass);
  CHECK(r.max_residual == doctest::Approx(3.0));
  CHECK(certify_pullback(ball_inclusion(spec), flat, flat, spec, 5, 0, 0.9, 1e-12, 1).pass);
}

TEST_CASE("cylinder unitary is unitary and squeezes the domain") {
  for (const JtsSpec& spec : {JtsSpec::type_i(2, 2), JtsSpec::type_ii(4), JtsSpec::type_iv(3)}) {
    CAPTURE(spec.name());
    const JtsElement p = primitive_tripotent(spec);
    const Eigen::MatrixXcd w = cylinder_unitary(spec, p);
    CHECK((w * w.adjoint() - Eigen::MatrixXcd::Identity(spec.dim(), spec.dim())).norm() < 1e-12);
    for (std::uint64_t i = 0; i < 200; ++i) {
      const JtsElement v = sample_domain_point(spec, 3, i);
      CHECK(std::abs((w * v.coords())[0]) < 1.0);
    }
  }
}

TEST_CASE("sampling is keyed by seed and index") {
  const JtsSpec spec = JtsSpec::type_iii(2);
  const JtsElement a = sample_domain_point(spec, 17, 4, 0.5);
  const JtsElement b = sample_domain_point(spec, 17, 4, 0.5);
  CHECK((a - b).norm() == 0.0);
  CHECK(spectral_norm(a) < 0.5);
  CHECK((sample_box_point(spec, 17, 4) - sample_box_point(spec, 17, 5)).norm() > 0.0);
  const Eigen::VectorXd box = sample_box_point(spec, 1, 2, 0.25).to_real();
  CHECK(box.cwiseAbs().maxCoeff() <= 0.25);
}
