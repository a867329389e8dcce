#include "hermsym/quantum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hermsym/errors.hpp"

namespace hermsym {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw PreconditionError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  const auto flush = [&](bool last) {
    if (token.empty()) {
      if (!last || !parts.empty()) throw PreconditionError("empty part in partition '" + text + "'");
      return;
    }
    for (char ch : token)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw PreconditionError("invalid partition '" + text + "'");
    if (token.size() > 6) throw PreconditionError("partition part too large in '" + text + "'");
    parts.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush(false);
    } else {
      token.push_back(ch);
    }
  }
  flush(true);
  return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits(int rows, int cols) const noexcept {
  return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::complement(int rows, int cols) const {
  if (!fits(rows, cols)) throw PreconditionError("partition " + str() + " does not fit the box");
  std::vector<int> out(rows);
  for (int i = 0; i < rows; ++i) out[i] = cols - (*this)[static_cast<std::size_t>(rows - 1 - i)];
  return Partition(std::move(out));
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// GrassSpec

GrassSpec::GrassSpec(int k, int n) : k_(k), n_(n) {
  if (!(0 < k && k < n)) throw PreconditionError("G(k,n) needs 0 < k < n");
}

namespace {

void partitions_in_box(int rows, int cols, int remaining, std::vector<int>& current,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == rows) return;
  const int cap = std::min(cols, current.empty() ? cols : current.back());
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    current.push_back(part);
    partitions_in_box(rows, cols, remaining - part, current, out);
    current.pop_back();
  }
}

std::vector<Partition> partitions_of(int size, int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_in_box(rows, cols, size, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Partition> GrassSpec::box_partitions() const {
  std::vector<Partition> all;
  for (int s = 0; s <= dim(); ++s) {
    auto level = partitions_of(s, k_, cols());
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

// ---------------------------------------------------------------------------
// QhElement

void QhElement::add(const Partition& nu, int d, std::int64_t coeff) {
  if (coeff == 0) return;
  const QhKey key{nu, d};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

std::int64_t QhElement::coefficient(const Partition& nu, int d) const {
  auto it = terms_.find(QhKey{nu, d});
  return it == terms_.end() ? 0 : it->second;
}

QhElement QhElement::operator+(const QhElement& other) const {
  QhElement out = *this;
  for (const auto& [key, c] : other.terms_) out.add(key.nu, key.d, c);
  return out;
}

QhElement QhElement::scaled(std::int64_t factor, int shift_d) const {
  QhElement out;
  for (const auto& [key, c] : terms_) out.add(key.nu, key.d + shift_d, c * factor);
  return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson

namespace {

struct LrSearch {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::pair<int, int>> cells;  // reading order
  std::vector<std::vector<int>> filling;   // indexed [row][col], 0 = empty or inside lambda
  std::vector<int> count;
  std::int64_t found = 0;

  void run(std::size_t idx) {
    if (idx == cells.size()) {
      ++found;
      return;
    }
    const auto [r, c] = cells[idx];
    int hi = mu.length();
    // Rows weakly increase to the right; the right neighbour is filled already.
    if (c + 1 < nu[r] && c + 1 >= lambda[r]) hi = std::min(hi, filling[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= lambda[r - 1]) lo = filling[r - 1][c] + 1;
    for (int x = lo; x <= hi; ++x) {
      if (count[x] >= mu[x - 1]) continue;
      if (x > 1 && count[x] + 1 > count[x - 1]) continue;
      ++count[x];
      filling[r][c] = x;
      run(idx + 1);
      filling[r][c] = 0;
      --count[x];
    }
  }
};

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size() || !nu.contains(lambda)) return 0;
  LrSearch s{lambda, mu, nu, {}, {}, {}, 0};
  s.filling.assign(nu.length(), std::vector<int>(nu.empty() ? 0 : nu[0], 0));
  for (int r = 0; r < nu.length(); ++r)
    for (int c = nu[r] - 1; c >= lambda[r]; --c) s.cells.emplace_back(r, c);
  s.count.assign(mu.length() + 1, 0);
  s.run(0);
  return s.found;
}

namespace {

void outer_shapes(const Partition& lambda, int max_first, int max_rows, int remaining, std::vector<int>& current,
                  std::vector<Partition>& out) {
  const int row = static_cast<int>(current.size());
  if (remaining == 0) {
    std::vector<int> shape = current;
    for (int i = row; i < lambda.length(); ++i) shape.push_back(lambda[i]);
    out.emplace_back(std::move(shape));
    return;
  }
  if (row == max_rows) return;
  const int cap = row == 0 ? max_first : current.back();
  const int floor_part = lambda[row];
  for (int part = std::min(cap, floor_part + remaining); part >= std::max(floor_part, 1); --part) {
    current.push_back(part);
    outer_shapes(lambda, max_first, max_rows, remaining - (part - floor_part), current, out);
    current.pop_back();
  }
}

}  // namespace

std::map<Partition, std::int64_t> classical_product(const Partition& lambda, const Partition& mu, int max_rows) {
  std::map<Partition, std::int64_t> out;
  if (lambda.length() > max_rows || mu.length() > max_rows) return out;
  std::vector<Partition> shapes;
  std::vector<int> current;
  outer_shapes(lambda, lambda[0] + mu[0], max_rows, mu.size(), current, shapes);
  for (const Partition& nu : shapes) {
    const std::int64_t c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rim hooks and the quantum product

RimHookReduction rim_hook_reduce(const GrassSpec& spec, const Partition& nu) {
  const int k = spec.k();
  const int n = spec.n();
  if (nu.length() > k) return {0, 0, {}};
  // beta_i = nu_i + k - i, distinct; nu fits the box iff every beta < n.
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = nu[static_cast<std::size_t>(i)] + k - 1 - i;
  int sign = 1;
  int d = 0;
  for (;;) {
    int pick = -1;
    for (int i = k - 1; i >= 0; --i) {
      if (beta[i] < n) continue;
      const int target = beta[i] - n;
      if (std::find(beta.begin(), beta.end(), target) == beta.end()) {
        pick = i;
        break;
      }
    }
    if (pick < 0) {
      if (*std::max_element(beta.begin(), beta.end()) >= n) return {0, 0, {}};
      break;
    }
    const int from = beta[pick];
    const int to = from - n;
    const int jumped = static_cast<int>(
        std::count_if(beta.begin(), beta.end(), [&](int b) { return b > to && b < from; }));
    const int height = jumped + 1;
    if ((k - height) % 2 != 0) sign = -sign;
    ++d;
    beta[pick] = to;
  }
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  std::vector<int> parts(k);
  for (int i = 0; i < k; ++i) parts[i] = beta[i] - (k - 1 - i);
  return {sign, d, Partition(std::move(parts))};
}

QhElement quantum_product(const GrassSpec& spec, const Partition& lambda, const Partition& mu) {
  if (!spec.fits(lambda) || !spec.fits(mu))
    throw PreconditionError("partition outside the " + std::to_string(spec.k()) + "x" +
                            std::to_string(spec.cols()) + " box");
  QhElement out;
  for (const auto& [nu, c] : classical_product(lambda, mu, spec.k())) {
    const RimHookReduction red = rim_hook_reduce(spec, nu);
    if (red.sign != 0) out.add(red.core, red.d, red.sign * c);
  }
  return out;
}

QhElement QuantumRing::product(const Partition& lambda, const Partition& mu) const {
  const auto key = lambda <= mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  QhElement value = quantum_product(spec_, key.first, key.second);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(key, std::move(value)).first->second;
}

QhElement QuantumRing::multiply(const QhElement& a, const QhElement& b) const {
  QhElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out = out + product(ka.nu, kb.nu).scaled(ca * cb, ka.d + kb.d);
  return out;
}

std::int64_t gw_invariant(const GrassSpec& spec, const Partition& lambda, const Partition& mu, const Partition& nu,
                          int d) {
  if (!spec.fits(lambda) || !spec.fits(mu) || !spec.fits(nu))
    throw PreconditionError("partition outside the Grassmannian box");
  if (d < 0) throw PreconditionError("curve degree must be nonnegative");
  if (lambda.size() + mu.size() + nu.size() != spec.dim() + d * spec.n()) return 0;
  return quantum_product(spec, lambda, mu).coefficient(nu.complement(spec.k(), spec.cols()), d);
}

namespace {

bool search_pair(const GrassSpec& spec, int d, ClassPair& out) {
  const Partition pt = Partition(std::vector<int>(spec.k(), spec.cols()));
  const int total = d * spec.n();
  for (int a = 0; a <= std::min(total, spec.dim()); ++a) {
    const int b = total - a;
    if (b > spec.dim()) continue;
    const auto alphas = partitions_of(a, spec.k(), spec.cols());
    const auto betas = partitions_of(b, spec.k(), spec.cols());
    for (const Partition& alpha : alphas) {
      // pt * alpha does not depend on beta; reuse it across the inner loop.
      const QhElement prod = quantum_product(spec, pt, alpha);
      for (const Partition& beta : betas) {
        if (prod.coefficient(beta.complement(spec.k(), spec.cols()), d) != 0) {
          out = {alpha, beta};
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

ClassPair find_point_class_pair(const GrassSpec& spec) {
  ClassPair pair;
  if (!search_pair(spec, 1, pair))
    throw NotFoundError("no class pair with a nonvanishing line invariant through a point on G(" +
                        std::to_string(spec.k()) + "," + std::to_string(spec.n()) + ")");
  return pair;
}

GwCapacity gw_capacity(const GrassSpec& spec) {
  for (int d = 1; d <= spec.dim() + 1; ++d) {
    ClassPair pair;
    if (search_pair(spec, d, pair)) return {d, pair};
  }
  throw NotFoundError("no nonvanishing invariant through a point");
}

std::int64_t product_gw_lift(const GrassSpec& inner, int k, const std::vector<ProductInsertion>& classes, int d) {
  if (k < 3) throw PreconditionError("product lift needs at least three insertions");
  if (static_cast<int>(classes.size()) != k) throw PreconditionError("insertion count does not match k");
  const auto points = std::count_if(classes.begin(), classes.end(), [](const ProductInsertion& c) {
    return c.pad == ProductInsertion::Pad::Point;
  });
  if (points != 1) throw PreconditionError("exactly one insertion must carry the point of the first factor");
  if (k != 3) throw PreconditionError("only three-point invariants of the inner Grassmannian are available");
  return gw_invariant(inner, classes[0].inner, classes[1].inner, classes[2].inner, d);
}

// ---------------------------------------------------------------------------
// Dimension condition

std::string to_string(DegreeConvention c) {
  switch (c) {
    case DegreeConvention::CodimComplexDim: return "codim_complex_dim";
    case DegreeConvention::CodimRealDim: return "codim_real_dim";
    case DegreeConvention::NonFundamental: return "non_fundamental";
    case DegreeConvention::FactorwiseNonFundamental: return "factorwise_non_fundamental";
  }
  return {};
}

std::vector<DegreeConvention> all_degree_conventions() {
  return {DegreeConvention::CodimComplexDim, DegreeConvention::CodimRealDim, DegreeConvention::NonFundamental,
          DegreeConvention::FactorwiseNonFundamental};
}

namespace {

// m even degrees in [lo, hi] summing to target exist iff target is even and in [m lo, m hi].
bool degrees_exist(long target, int m, long lo, long hi) {
  return target % 2 == 0 && target >= m * lo && target <= m * hi;
}

}  // namespace

bool dimension_condition_check(const std::vector<FactorData>& factors, int m, DegreeConvention convention) {
  if (m < 1) throw PreconditionError("dimension condition needs m >= 1");
  if (factors.empty()) throw PreconditionError("dimension condition needs at least one factor");
  long dim = 0;
  long c1 = 0;
  for (const auto& f : factors) {
    if (f.complex_dim < 1 || f.c1 < 1) throw PreconditionError("factor " + f.name + " has invalid invariants");
    dim += f.complex_dim;
    c1 += f.c1;
  }
  switch (convention) {
    case DegreeConvention::CodimComplexDim: return degrees_exist(2 * (c1 - dim - 1 + m), m, 0, 2 * dim);
    case DegreeConvention::CodimRealDim: return degrees_exist(2 * (c1 - 2 * dim - 1 + m), m, 0, 2 * dim);
    case DegreeConvention::NonFundamental: return degrees_exist(2 * (c1 - dim - 1 + m), m, 2, 2 * dim);
    case DegreeConvention::FactorwiseNonFundamental:
      return std::all_of(factors.begin(), factors.end(), [m](const FactorData& f) {
        return degrees_exist(2L * (f.c1 - f.complex_dim - 1 + m), m, 2, 2L * f.complex_dim);
      });
  }
  return false;
}

}  // namespace hermsym
