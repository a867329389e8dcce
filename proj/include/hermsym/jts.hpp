#pragma once

// Hermitian positive Jordan triple systems of the four classical families.
//
// Every element is stored by its coordinates in a fixed basis that is
// orthonormal for the trace form (u|v) = tr T(u,v) / genus.  Products are
// evaluated in the family's matrix (or vector) model:
//
//   I(p,q)   p x q complex matrices            {x,y,z} = x y* z + z y* x
//   II(n)    skew-symmetric n x n matrices      same formula
//   III(n)   symmetric n x n matrices           same formula
//   IV(n)    C^n (spin factor)                  {x,y,z} = 2[(x.y~)z + (z.y~)x - (x.z)y~]
//
// where a.b is the bilinear dot product and y~ the complex conjugate.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hermsym {

using cplx = std::complex<double>;

enum class Family { TypeI, TypeII, TypeIII, TypeIV };

class JtsSpec {
 public:
  static JtsSpec type_i(int p, int q);
  static JtsSpec type_ii(int n);
  static JtsSpec type_iii(int n);
  static JtsSpec type_iv(int n);

  Family family() const noexcept { return family_; }
  /// Row count for TypeI, matrix size / vector length otherwise.
  int p() const noexcept { return p_; }
  /// Column count for TypeI, equal to p() otherwise.
  int q() const noexcept { return q_; }

  int dim() const noexcept { return dim_; }
  int rank() const noexcept { return rank_; }
  double genus() const noexcept { return genus_; }

  /// Shape of the model: p x q matrix, or n x 1 column for TypeIV.
  int model_rows() const noexcept { return p_; }
  int model_cols() const noexcept { return family_ == Family::TypeIV ? 1 : q_; }

  /// Grammar spelling, e.g. "I[2,3]" or "IV[5]".
  std::string name() const;

  friend bool operator==(const JtsSpec& a, const JtsSpec& b) noexcept {
    return a.family_ == b.family_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  JtsSpec(Family family, int p, int q);

  Family family_;
  int p_;
  int q_;
  int dim_;
  int rank_;
  double genus_;
};

class JtsElement {
 public:
  JtsElement(JtsSpec spec, Eigen::VectorXcd coords);

  static JtsElement zero(const JtsSpec& spec);
  /// k-th vector of the orthonormal frame.
  static JtsElement basis(const JtsSpec& spec, int k);
  /// Builds an element from its matrix model; the part outside the family's
  /// subspace (e.g. the symmetric part for TypeII) is projected away.
  static JtsElement from_model(const JtsSpec& spec, const Eigen::MatrixXcd& model);
  /// Interleaved real coordinates (x1, y1, x2, y2, ...).
  static JtsElement from_real(const JtsSpec& spec, const Eigen::VectorXd& real);

  const JtsSpec& spec() const noexcept { return spec_; }
  const Eigen::VectorXcd& coords() const noexcept { return coords_; }
  int dim() const noexcept { return spec_.dim(); }

  Eigen::MatrixXcd to_model() const;
  Eigen::VectorXd to_real() const;

  /// Euclidean norm of the coordinates, i.e. sqrt((v|v)).
  double norm() const { return coords_.norm(); }

  JtsElement operator+(const JtsElement& other) const;
  JtsElement operator-(const JtsElement& other) const;
  JtsElement operator-() const;
  JtsElement operator*(cplx s) const;
  friend JtsElement operator*(cplx s, const JtsElement& v) { return v * s; }

 private:
  JtsSpec spec_;
  Eigen::VectorXcd coords_;
};

/// Matrix of a real-linear map of M viewed as R^{2 dim}, interleaved ordering.
struct RealLinearOperator {
  Eigen::MatrixXd matrix;

  int size() const noexcept { return static_cast<int>(matrix.rows()); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return matrix * x; }
};

enum class OperatorKind { T, Q, B };

/// {x, y, z}
JtsElement triple_product(const JtsElement& x, const JtsElement& y, const JtsElement& z);

/// T(x,y), Q(x) (y ignored; Q(x)w = {x,w,x}/2) or the Bergman operator B(x,y),
/// assembled columnwise from images of the real basis vectors.
RealLinearOperator operator_matrix(OperatorKind kind, const JtsElement& x, const JtsElement& y);

/// T(x,y) as a complex d x d matrix acting on coordinates.
Eigen::MatrixXcd complex_operator_t(const JtsElement& x, const JtsElement& y);

/// (u|v) = tr T(u,v) / genus.
cplx trace_form(const JtsElement& u, const JtsElement& v);

/// tr T(c,c) for the family's fixed primitive tripotent.
double genus_of(Family family, int p, int q = 0);

/// Norm of LHS - RHS of the Jordan identity
///   {x,y,{u,v,w}} - {u,v,{x,y,w}} = {{x,y,u},v,w} - {u,{v,x,y},w}.
double jordan_residual(const JtsElement& x, const JtsElement& y, const JtsElement& u,
                       const JtsElement& v, const JtsElement& w);

/// The primitive tripotent used to fix the genus: E11 for I and III,
/// E12 - E21 for II, (e1 + i e2)/2 in the vector model for IV.
JtsElement primitive_tripotent(const JtsSpec& spec);

/// rank() pairwise strongly orthogonal primitive tripotents.
std::vector<JtsElement> canonical_frame(const JtsSpec& spec);

/// Interleaved real <-> complex coordinate conversion.
Eigen::VectorXd complex_to_real(const Eigen::VectorXcd& z);
Eigen::VectorXcd real_to_complex(const Eigen::VectorXd& x);

}  // namespace hermsym
