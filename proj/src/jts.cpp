#include "hermsym/jts.hpp"

#include <cmath>
#include <utility>

#include "hermsym/errors.hpp"

namespace hermsym {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

struct Shape {
  Family family;
  int p;
  int q;
};

int dim_of(const Shape& s) {
  switch (s.family) {
    case Family::TypeI: return s.p * s.q;
    case Family::TypeII: return s.p * (s.p - 1) / 2;
    case Family::TypeIII: return s.p * (s.p + 1) / 2;
    case Family::TypeIV: return s.p;
  }
  return 0;
}

int rank_of(const Shape& s) {
  switch (s.family) {
    case Family::TypeI: return std::min(s.p, s.q);
    case Family::TypeII: return s.p / 2;
    case Family::TypeIII: return s.p;
    case Family::TypeIV: return 2;
  }
  return 0;
}

cplx bilinear_dot(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  cplx s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) s += a(i, 0) * b(i, 0);
  return s;
}

// Symmetric in (x, z) under exact floating-point evaluation: both terms are
// produced by the same expression and floating-point addition commutes.
Eigen::MatrixXcd model_triple(Family family, const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y,
                              const Eigen::MatrixXcd& z) {
  if (family == Family::TypeIV) {
    const Eigen::MatrixXcd ybar = y.conjugate();
    const cplx xy = bilinear_dot(x, ybar);
    const cplx zy = bilinear_dot(z, ybar);
    const cplx xz = bilinear_dot(x, z);
    return 2.0 * ((xy * z + zy * x) - xz * ybar);
  }
  const Eigen::MatrixXcd ya = y.adjoint();
  const Eigen::MatrixXcd left = (x * ya) * z;
  const Eigen::MatrixXcd right = (z * ya) * x;
  return left + right;
}

Eigen::MatrixXcd model_from_coords(const Shape& s, const Eigen::VectorXcd& c) {
  switch (s.family) {
    case Family::TypeI: {
      Eigen::MatrixXcd m(s.p, s.q);
      for (int i = 0; i < s.p; ++i)
        for (int j = 0; j < s.q; ++j) m(i, j) = c(i * s.q + j);
      return m;
    }
    case Family::TypeII: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.p, s.p);
      int k = 0;
      for (int i = 0; i < s.p; ++i)
        for (int j = i + 1; j < s.p; ++j, ++k) {
          m(i, j) = c(k);
          m(j, i) = -c(k);
        }
      return m;
    }
    case Family::TypeIII: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.p, s.p);
      int k = 0;
      for (int i = 0; i < s.p; ++i)
        for (int j = i; j < s.p; ++j, ++k) {
          if (i == j) {
            m(i, i) = c(k);
          } else {
            m(i, j) = c(k) / kSqrt2;
            m(j, i) = m(i, j);
          }
        }
      return m;
    }
    case Family::TypeIV: return c / kSqrt2;
  }
  return {};
}

Eigen::VectorXcd coords_from_model(const Shape& s, const Eigen::MatrixXcd& m) {
  Eigen::VectorXcd c(dim_of(s));
  switch (s.family) {
    case Family::TypeI:
      for (int i = 0; i < s.p; ++i)
        for (int j = 0; j < s.q; ++j) c(i * s.q + j) = m(i, j);
      break;
    case Family::TypeII: {
      int k = 0;
      for (int i = 0; i < s.p; ++i)
        for (int j = i + 1; j < s.p; ++j, ++k) c(k) = 0.5 * (m(i, j) - m(j, i));
      break;
    }
    case Family::TypeIII: {
      int k = 0;
      for (int i = 0; i < s.p; ++i)
        for (int j = i; j < s.p; ++j, ++k)
          c(k) = (i == j) ? m(i, i) : (m(i, j) + m(j, i)) / kSqrt2;
      break;
    }
    case Family::TypeIV: c = kSqrt2 * m.col(0); break;
  }
  return c;
}

Eigen::MatrixXcd primitive_model(const Shape& s) {
  switch (s.family) {
    case Family::TypeI: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.p, s.q);
      m(0, 0) = 1.0;
      return m;
    }
    case Family::TypeII: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.p, s.p);
      m(0, 1) = 1.0;
      m(1, 0) = -1.0;
      return m;
    }
    case Family::TypeIII: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.p, s.p);
      m(0, 0) = 1.0;
      return m;
    }
    case Family::TypeIV: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.p, 1);
      m(0, 0) = 0.5;
      m(1, 0) = cplx(0.0, 0.5);
      return m;
    }
  }
  return {};
}

// tr T(c, c) summed over the coordinate frame; independent of the genus.
double trace_t_of_primitive(const Shape& s) {
  const Eigen::MatrixXcd c = primitive_model(s);
  const int d = dim_of(s);
  cplx tr = 0.0;
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
    e(k) = 1.0;
    const Eigen::VectorXcd image = coords_from_model(s, model_triple(s.family, c, c, model_from_coords(s, e)));
    tr += image(k);
  }
  return tr.real();
}

void require_same_spec(const JtsElement& a, const JtsElement& b) {
  if (!(a.spec() == b.spec()))
    throw DimensionError("elements of " + a.spec().name() + " and " + b.spec().name() + " mixed");
}

template <typename Fn>
RealLinearOperator assemble(const JtsSpec& spec, Fn&& apply) {
  const int d = spec.dim();
  Eigen::MatrixXd m(2 * d, 2 * d);
  for (int k = 0; k < d; ++k) {
    for (int part = 0; part < 2; ++part) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
      e(k) = part == 0 ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
      m.col(2 * k + part) = apply(JtsElement(spec, e)).to_real();
    }
  }
  return {std::move(m)};
}

}  // namespace

// ---------------------------------------------------------------------------

JtsSpec::JtsSpec(Family family, int p, int q) : family_(family), p_(p), q_(q) {
  const Shape s{family, p, q};
  dim_ = dim_of(s);
  rank_ = rank_of(s);
  genus_ = trace_t_of_primitive(s);
}

JtsSpec JtsSpec::type_i(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("I[p,q] needs p, q >= 1");
  return JtsSpec(Family::TypeI, p, q);
}

JtsSpec JtsSpec::type_ii(int n) {
  if (n < 2) throw PreconditionError("II[n] needs n >= 2");
  return JtsSpec(Family::TypeII, n, n);
}

JtsSpec JtsSpec::type_iii(int n) {
  if (n < 1) throw PreconditionError("III[n] needs n >= 1");
  return JtsSpec(Family::TypeIII, n, n);
}

JtsSpec JtsSpec::type_iv(int n) {
  if (n < 2) throw PreconditionError("IV[n] needs n >= 2");
  return JtsSpec(Family::TypeIV, n, n);
}

std::string JtsSpec::name() const {
  switch (family_) {
    case Family::TypeI: return "I[" + std::to_string(p_) + "," + std::to_string(q_) + "]";
    case Family::TypeII: return "II[" + std::to_string(p_) + "]";
    case Family::TypeIII: return "III[" + std::to_string(p_) + "]";
    case Family::TypeIV: return "IV[" + std::to_string(p_) + "]";
  }
  return {};
}

// ---------------------------------------------------------------------------

JtsElement::JtsElement(JtsSpec spec, Eigen::VectorXcd coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
  if (coords_.size() != spec_.dim())
    throw DimensionError(spec_.name() + " expects " + std::to_string(spec_.dim()) +
                         " coordinates, got " + std::to_string(coords_.size()));
}

JtsElement JtsElement::zero(const JtsSpec& spec) {
  return JtsElement(spec, Eigen::VectorXcd::Zero(spec.dim()));
}

JtsElement JtsElement::basis(const JtsSpec& spec, int k) {
  if (k < 0 || k >= spec.dim()) throw DimensionError("basis index out of range");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(spec.dim());
  c(k) = 1.0;
  return JtsElement(spec, std::move(c));
}

JtsElement JtsElement::from_model(const JtsSpec& spec, const Eigen::MatrixXcd& model) {
  if (model.rows() != spec.model_rows() || model.cols() != spec.model_cols())
    throw DimensionError("model shape does not match " + spec.name());
  return JtsElement(spec, coords_from_model({spec.family(), spec.p(), spec.q()}, model));
}

JtsElement JtsElement::from_real(const JtsSpec& spec, const Eigen::VectorXd& real) {
  if (real.size() != 2 * spec.dim()) throw DimensionError("real coordinate length mismatch");
  return JtsElement(spec, real_to_complex(real));
}

Eigen::MatrixXcd JtsElement::to_model() const {
  return model_from_coords({spec_.family(), spec_.p(), spec_.q()}, coords_);
}

Eigen::VectorXd JtsElement::to_real() const { return complex_to_real(coords_); }

JtsElement JtsElement::operator+(const JtsElement& other) const {
  require_same_spec(*this, other);
  return JtsElement(spec_, coords_ + other.coords_);
}

JtsElement JtsElement::operator-(const JtsElement& other) const {
  require_same_spec(*this, other);
  return JtsElement(spec_, coords_ - other.coords_);
}

JtsElement JtsElement::operator-() const { return JtsElement(spec_, -coords_); }

JtsElement JtsElement::operator*(cplx s) const { return JtsElement(spec_, coords_ * s); }

// ---------------------------------------------------------------------------

JtsElement triple_product(const JtsElement& x, const JtsElement& y, const JtsElement& z) {
  require_same_spec(x, y);
  require_same_spec(x, z);
  const JtsSpec& spec = x.spec();
  return JtsElement::from_model(spec, model_triple(spec.family(), x.to_model(), y.to_model(), z.to_model()));
}

RealLinearOperator operator_matrix(OperatorKind kind, const JtsElement& x, const JtsElement& y) {
  require_same_spec(x, y);
  const JtsSpec& spec = x.spec();
  const auto quad = [](const JtsElement& a, const JtsElement& w) { return triple_product(a, w, a) * 0.5; };
  switch (kind) {
    case OperatorKind::T:
      return assemble(spec, [&](const JtsElement& w) { return triple_product(x, y, w); });
    case OperatorKind::Q:
      return assemble(spec, [&](const JtsElement& w) { return quad(x, w); });
    case OperatorKind::B:
      return assemble(spec, [&](const JtsElement& w) {
        return (w - triple_product(x, y, w)) + quad(x, quad(y, w));
      });
  }
  throw PreconditionError("unknown operator kind");
}

Eigen::MatrixXcd complex_operator_t(const JtsElement& x, const JtsElement& y) {
  require_same_spec(x, y);
  const int d = x.dim();
  Eigen::MatrixXcd m(d, d);
  for (int k = 0; k < d; ++k) m.col(k) = triple_product(x, y, JtsElement::basis(x.spec(), k)).coords();
  return m;
}

cplx trace_form(const JtsElement& u, const JtsElement& v) {
  return complex_operator_t(u, v).trace() / u.spec().genus();
}

double genus_of(Family family, int p, int q) {
  switch (family) {
    case Family::TypeI: return JtsSpec::type_i(p, q).genus();
    case Family::TypeII: return JtsSpec::type_ii(p).genus();
    case Family::TypeIII: return JtsSpec::type_iii(p).genus();
    case Family::TypeIV: return JtsSpec::type_iv(p).genus();
  }
  return 0.0;
}

double jordan_residual(const JtsElement& x, const JtsElement& y, const JtsElement& u,
                       const JtsElement& v, const JtsElement& w) {
  const JtsElement lhs = triple_product(x, y, triple_product(u, v, w)) - triple_product(u, v, triple_product(x, y, w));
  const JtsElement rhs = triple_product(triple_product(x, y, u), v, w) - triple_product(u, triple_product(v, x, y), w);
  return (lhs - rhs).norm();
}

JtsElement primitive_tripotent(const JtsSpec& spec) {
  return JtsElement::from_model(spec, primitive_model({spec.family(), spec.p(), spec.q()}));
}

std::vector<JtsElement> canonical_frame(const JtsSpec& spec) {
  std::vector<JtsElement> frame;
  const int r = spec.rank();
  for (int j = 0; j < r; ++j) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.model_rows(), spec.model_cols());
    switch (spec.family()) {
      case Family::TypeI:
      case Family::TypeIII: m(j, j) = 1.0; break;
      case Family::TypeII:
        m(2 * j, 2 * j + 1) = 1.0;
        m(2 * j + 1, 2 * j) = -1.0;
        break;
      case Family::TypeIV:
        m(0, 0) = 0.5;
        m(1, 0) = cplx(0.0, j == 0 ? 0.5 : -0.5);
        break;
    }
    frame.push_back(JtsElement::from_model(spec, m));
  }
  return frame;
}

Eigen::VectorXd complex_to_real(const Eigen::VectorXcd& z) {
  Eigen::VectorXd x(2 * z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    x(2 * k) = z(k).real();
    x(2 * k + 1) = z(k).imag();
  }
  return x;
}

Eigen::VectorXcd real_to_complex(const Eigen::VectorXd& x) {
  Eigen::VectorXcd z(x.size() / 2);
  for (Eigen::Index k = 0; k < z.size(); ++k) z(k) = cplx(x(2 * k), x(2 * k + 1));
  return z;
}

}  // namespace hermsym
