#pragma once

// Quantum cohomology of the Grassmannian G(k,n) of k-planes in C^n in the
// Schubert basis.  Products are exact: classical Littlewood-Richardson
// expansion followed by n-rim-hook reduction onto the k x (n-k) box.

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace hermsym {

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws PreconditionError if not weakly decreasing
  /// or if a part is negative.
  explicit Partition(std::vector<int> parts);

  /// "2,1" style list; "" and "0" give the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Part i (0-based), 0 beyond the length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  bool fits(int rows, int cols) const noexcept;
  bool contains(const Partition& inner) const noexcept;
  /// Complement inside the rows x cols box, rotated by 180 degrees.
  Partition complement(int rows, int cols) const;
  Partition conjugate() const;

  /// Comma-separated parts, "0" for the empty partition.
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

class GrassSpec {
 public:
  GrassSpec(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int cols() const noexcept { return n_ - k_; }
  int dim() const noexcept { return k_ * (n_ - k_); }
  /// c_1 on the line class; also the q-degree shift of one rim hook.
  int c1() const noexcept { return n_; }

  bool fits(const Partition& p) const noexcept { return p.fits(k_, n_ - k_); }
  /// All partitions in the box, ordered by size then lexicographically.
  std::vector<Partition> box_partitions() const;

  friend bool operator==(const GrassSpec&, const GrassSpec&) = default;

 private:
  int k_;
  int n_;
};

struct QhKey {
  Partition nu;
  int d = 0;
  auto operator<=>(const QhKey&) const = default;
};

/// Finite integer combination of q^d sigma_nu.
class QhElement {
 public:
  void add(const Partition& nu, int d, std::int64_t coeff);
  std::int64_t coefficient(const Partition& nu, int d) const;
  const std::map<QhKey, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  QhElement operator+(const QhElement& other) const;
  QhElement scaled(std::int64_t factor, int shift_d = 0) const;
  friend bool operator==(const QhElement&, const QhElement&) = default;

 private:
  std::map<QhKey, std::int64_t> terms_;
};

/// Number of LR tableaux of shape nu/lambda and content mu; 0 unless
/// |lambda| + |mu| = |nu| and lambda is inside nu.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda s_mu = sum c^nu s_nu over nu with at most max_rows rows.
std::map<Partition, std::int64_t> classical_product(const Partition& lambda, const Partition& mu, int max_rows);

struct RimHookReduction {
  /// 0 when the shape reduces to zero.
  int sign = 0;
  int d = 0;
  Partition core;
};

/// Removes n-rim hooks from a shape with at most k rows until it fits the box.
/// Each removal of a hook of height h contributes (-1)^{k-h} and one power of q.
RimHookReduction rim_hook_reduce(const GrassSpec& spec, const Partition& nu);

/// sigma_lambda * sigma_mu.  Throws PreconditionError for partitions outside the box.
QhElement quantum_product(const GrassSpec& spec, const Partition& lambda, const Partition& mu);

/// Products of Schubert classes, computed once per pair.  Thread-safe.
class QuantumRing {
 public:
  explicit QuantumRing(GrassSpec spec) : spec_(spec) {}
  const GrassSpec& spec() const noexcept { return spec_; }

  QhElement product(const Partition& lambda, const Partition& mu) const;
  /// Bilinear extension with q-degrees added.
  QhElement multiply(const QhElement& a, const QhElement& b) const;

 private:
  GrassSpec spec_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Partition, Partition>, QhElement> cache_;
};

/// Three-point genus-zero invariant in degree d: the coefficient of
/// (nu^vee, d) in lambda * mu, or 0 if the degree condition fails.
std::int64_t gw_invariant(const GrassSpec& spec, const Partition& lambda, const Partition& mu,
                          const Partition& nu, int d);

struct ClassPair {
  Partition alpha;
  Partition beta;
};

/// First pair (ordered by |alpha|, then alpha, then beta) with
/// gw_invariant(pt, alpha, beta, 1) != 0.  Throws NotFoundError if none exists.
ClassPair find_point_class_pair(const GrassSpec& spec);

struct GwCapacity {
  /// Multiple of pi.
  int degree = 0;
  ClassPair pair;
};

/// Smallest d >= 1 with a nonvanishing Psi_{dA}(pt, alpha, beta); the capacity is d * pi.
GwCapacity gw_capacity(const GrassSpec& spec);

/// Insertion [N_1] (x) beta or pt (x) beta on a product N_1 x G(k,n).
struct ProductInsertion {
  enum class Pad { Fundamental, Point };
  Pad pad = Pad::Fundamental;
  Partition inner;
};

/// Invariant of N_1 x G(k,n) in class 0 (+) dA reduced to the inner Grassmannian.
/// Exactly one insertion may carry the point pad.  Only k = 3 insertions are
/// supported, the length of the inner quantum product.
std::int64_t product_gw_lift(const GrassSpec& inner, int k, const std::vector<ProductInsertion>& classes,
                             int d = 1);

/// Complex dimension and c_1 on the line class of one factor.
struct FactorData {
  std::string name;
  int complex_dim = 0;
  int c1 = 0;
};

enum class DegreeConvention {
  /// deg = real codimension in [0, 2D], dim(M) complex.
  CodimComplexDim,
  /// deg = real codimension in [0, 2D], dim(M) real.
  CodimRealDim,
  /// As CodimComplexDim with fundamental classes excluded: deg in [2, 2D].
  NonFundamental,
  /// NonFundamental imposed on every factor separately.
  FactorwiseNonFundamental,
};

std::string to_string(DegreeConvention c);
std::vector<DegreeConvention> all_degree_conventions();

/// Whether even degrees deg(beta_j), j = 1..m, exist with
/// sum deg(beta_j) = 2(c_1(A) - dim(M) - 1 + m), A the sum of the factor line classes.
bool dimension_condition_check(const std::vector<FactorData>& factors, int m,
                               DegreeConvention convention = DegreeConvention::CodimComplexDim);

}  // namespace hermsym
