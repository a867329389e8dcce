#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hermsym/errors.hpp"
#include "hermsym/spectral.hpp"

using namespace hermsym;

namespace {

JtsElement random_element(const JtsSpec& spec, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::VectorXcd c(spec.dim());
  for (int i = 0; i < spec.dim(); ++i) c[i] = cplx(g(rng), g(rng));
  return JtsElement(spec, c);
}

// Distinct singular values of the model matrix, largest first.
std::vector<double> svd_oracle(const JtsElement& v, bool paired) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v.to_model());
  std::vector<double> s(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
  std::vector<double> out;
  for (std::size_t i = 0; i < s.size(); i += paired ? 2 : 1)
    if (s[i] > 1e-12) out.push_back(s[i]);
  return out;
}

// lambda^2 = |u|^2 +- sqrt(|u|^4 - |u.u|^2) in the vector model.
std::vector<double> spin_oracle(const JtsElement& v) {
  const Eigen::VectorXcd u = v.to_model();
  const double n2 = u.squaredNorm();
  const double q = std::abs((u.transpose() * u)(0, 0));
  const double disc = std::sqrt(std::max(0.0, n2 * n2 - q * q));
  std::vector<double> out{std::sqrt(n2 + disc)};
  if (n2 - disc > 1e-24) out.push_back(std::sqrt(n2 - disc));
  return out;
}

}  // namespace

TEST_CASE("eigenvalues agree with singular values in the matrix families") {
  std::mt19937_64 rng(21);
  const std::vector<std::pair<JtsSpec, bool>> cases{
      {JtsSpec::type_i(2, 3), false}, {JtsSpec::type_i(3, 3), false}, {JtsSpec::type_iii(3), false},
      {JtsSpec::type_ii(4), true},    {JtsSpec::type_ii(5), true}};
  for (const auto& [spec, paired] : cases) {
    CAPTURE(spec.name());
    for (int t = 0; t < 20; ++t) {
      const JtsElement v = random_element(spec, rng);
      const SpectralDecomposition d = spectral_decompose(v);
      const std::vector<double> expected = svd_oracle(v, paired);
      REQUIRE(d.eigenvalues.size() == expected.size());
      for (std::size_t j = 0; j < expected.size(); ++j) CHECK(d.eigenvalues[j] == doctest::Approx(expected[j]));
      CHECK(spectral_norm(v) == doctest::Approx(expected.front()));
    }
  }
}

TEST_CASE("eigenvalues of the spin factor follow the closed form") {
  std::mt19937_64 rng(22);
  const JtsSpec spec = JtsSpec::type_iv(5);
  for (int t = 0; t < 30; ++t) {
    const JtsElement v = random_element(spec, rng);
    const SpectralDecomposition d = spectral_decompose(v);
    const std::vector<double> expected = spin_oracle(v);
    REQUIRE(d.eigenvalues.size() == expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) CHECK(d.eigenvalues[j] == doctest::Approx(expected[j]));
  }
}

TEST_CASE("decomposition reconstructs v from strongly orthogonal tripotents") {
  std::mt19937_64 rng(23);
  for (const JtsSpec& spec : {JtsSpec::type_i(2, 4), JtsSpec::type_ii(5), JtsSpec::type_iii(3), JtsSpec::type_iv(6)}) {
    CAPTURE(spec.name());
    for (int t = 0; t < 10; ++t) {
      const JtsElement v = random_element(spec, rng);
      const SpectralDecomposition d = spectral_decompose(v);
      CHECK((d.reconstruct(spec) - v).norm() < 1e-10);
      for (int j = 0; j < d.rank(); ++j) {
        const JtsElement& c = d.tripotents[j];
        CHECK((triple_product(c, c, c) - 2.0 * c).norm() < 1e-10);
        if (j > 0) CHECK(d.eigenvalues[j] < d.eigenvalues[j - 1]);
        for (int k = j + 1; k < d.rank(); ++k) CHECK(complex_operator_t(c, d.tripotents[k]).norm() < 1e-10);
      }
    }
  }
}

TEST_CASE("degenerate elements merge equal eigenvalues") {
  const JtsSpec spec = JtsSpec::type_i(2, 2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
  const SpectralDecomposition d = spectral_decompose(JtsElement::from_model(spec, m));
  REQUIRE(d.rank() == 1);
  CHECK(d.eigenvalues[0] == doctest::Approx(0.5));
  CHECK(is_regular(JtsElement::from_model(spec, Eigen::MatrixXcd{{0.5, 0.0}, {0.0, 0.25}})));
  CHECK_FALSE(is_regular(JtsElement::from_model(spec, m)));
  CHECK(spectral_decompose(JtsElement::zero(spec)).rank() == 0);
  CHECK(spectral_norm(JtsElement::zero(spec)) == 0.0);
}

TEST_CASE("spectral and Bergman membership agree off the boundary") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  for (const JtsSpec& spec : {JtsSpec::type_i(2, 2), JtsSpec::type_ii(4), JtsSpec::type_iii(2), JtsSpec::type_iv(3)}) {
    CAPTURE(spec.name());
    int inside = 0;
    for (int t = 0; t < 200; ++t) {
      Eigen::VectorXd x(2 * spec.dim());
      for (int i = 0; i < x.size(); ++i) x[i] = box(rng) * 1.5 / std::sqrt(static_cast<double>(spec.dim()));
      const JtsElement v = JtsElement::from_real(spec, x);
      const Membership m = classify_membership(v);
      if (std::abs(m.spectral_norm - 1.0) < 1e-6) continue;
      CHECK(m.inside == bergman_positive(v));
      inside += m.inside;
    }
    CHECK(inside > 0);
  }
}

TEST_CASE("type I membership matches positivity of I - Z Z*") {
  std::mt19937_64 rng(25);
  const JtsSpec spec = JtsSpec::type_i(2, 3);
  for (int t = 0; t < 100; ++t) {
    const JtsElement v = random_element(spec, rng, 0.5);
    const Eigen::MatrixXcd z = v.to_model();
    const Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(2, 2) - z * z.adjoint();
    const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(g).eigenvalues().minCoeff();
    if (std::abs(min_eig) < 1e-6) continue;
    CHECK(in_domain(v) == (min_eig > 0));
  }
}

TEST_CASE("odd functional calculus") {
  std::mt19937_64 rng(26);
  const JtsSpec spec = JtsSpec::type_i(2, 3);
  const JtsElement v = random_element(spec, rng);
  CHECK((apply_odd_function(v, [](double t) { return t; }) - v).norm() < 1e-10);
  // f(t) = t^3 gives {v,v,v}/2
  const JtsElement cube = apply_odd_function(v, [](double t) { return t * t * t; });
  CHECK((cube - 0.5 * triple_product(v, v, v)).norm() < 1e-9);
}
