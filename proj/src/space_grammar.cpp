#include <cctype>
#include <limits>

#include "hermsym/errors.hpp"
#include "hermsym/space.hpp"

namespace hermsym {

SpaceExpr SpaceExpr::compact(const hermsym::Hssct& h) {
  SpaceExpr s;
  s.kind = Kind::Hssct;
  s.hssct = h;
  return s;
}

SpaceExpr SpaceExpr::domain(const JtsSpec& spec) {
  SpaceExpr s;
  s.kind = Kind::Cartan;
  s.cartan = spec;
  return s;
}

SpaceExpr SpaceExpr::ball(int real_dim) {
  if (real_dim < 2 || real_dim % 2 != 0) throw PreconditionError("ball dimension must be even and positive");
  SpaceExpr s;
  s.kind = Kind::Ball;
  s.real_dim = real_dim;
  return s;
}

SpaceExpr SpaceExpr::cylinder(int real_dim) {
  if (real_dim < 2 || real_dim % 2 != 0) throw PreconditionError("cylinder dimension must be even and positive");
  SpaceExpr s;
  s.kind = Kind::Cylinder;
  s.real_dim = real_dim;
  return s;
}

SpaceExpr SpaceExpr::closed(std::string name, int real_dim) {
  if (real_dim < 2 || real_dim % 2 != 0) throw PreconditionError("closed manifold dimension must be even and positive");
  SpaceExpr s;
  s.kind = Kind::ClosedGeneric;
  s.real_dim = real_dim;
  s.name = std::move(name);
  return s;
}

SpaceExpr SpaceExpr::product(std::vector<ProductFactor> factors) {
  if (factors.empty()) throw PreconditionError("product needs at least one factor");
  for (const auto& f : factors)
    if (f.scale == Rational(0)) throw PreconditionError("product scales must be nonzero");
  SpaceExpr s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

bool SpaceExpr::is_closed() const {
  switch (kind) {
    case Kind::Hssct:
    case Kind::ClosedGeneric: return true;
    case Kind::Product:
      for (const auto& f : factors)
        if (!f.space.is_closed()) return false;
      return true;
    default: return false;
  }
}

int SpaceExpr::complex_dim() const {
  switch (kind) {
    case Kind::Hssct: return hssct->complex_dim();
    case Kind::Cartan: return cartan->dim();
    case Kind::Ball:
    case Kind::Cylinder:
    case Kind::ClosedGeneric: return real_dim / 2;
    case Kind::Product: {
      int d = 0;
      for (const auto& f : factors) d += f.space.complex_dim();
      return d;
    }
  }
  return 0;
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SpaceExpr::Kind::Hssct: return *a.hssct == *b.hssct;
    case SpaceExpr::Kind::Cartan: return *a.cartan == *b.cartan;
    case SpaceExpr::Kind::Ball:
    case SpaceExpr::Kind::Cylinder: return a.real_dim == b.real_dim;
    case SpaceExpr::Kind::ClosedGeneric: return a.real_dim == b.real_dim && a.name == b.name;
    case SpaceExpr::Kind::Product: return a.factors == b.factors;
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  SpaceExpr parse_all() {
    SpaceExpr s = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what + " at position " + std::to_string(at), at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  void expect(char ch) {
    if (!peek(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) fail("expected a space name");
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail_at("integer too large", start);
    return std::stoi(text_.substr(start, pos_ - start));
  }

  std::vector<int> int_args(std::size_t count) {
    expect('[');
    std::vector<int> args;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) expect(',');
      args.push_back(integer());
    }
    expect(']');
    return args;
  }

  Rational scale() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    int digits = 0;
    const auto take_digits = [&](bool fraction) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        if (++digits > 15) fail_at("scale has too many digits", start);
        num = num * 10 + (text_[pos_] - '0');
        if (fraction) den *= 10;
        ++pos_;
      }
    };
    take_digits(false);
    if (digits == 0) fail("expected a scale");
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const int before = digits;
      take_digits(true);
      if (digits == before) fail("expected digits after '.'");
    } else if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      std::int64_t d = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        if (pos_ - dstart >= 15) fail_at("scale has too many digits", start);
        d = d * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == dstart) fail("expected a denominator");
      if (d == 0) fail_at("zero denominator", dstart);
      den = d;
    }
    if (num == 0) fail_at("scale must be nonzero", start);
    return Rational(negative ? -num : num, den);
  }

  ProductFactor factor() {
    skip_space();
    ProductFactor f;
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '+')) {
      f.scale = scale();
      expect('*');
    }
    f.space = expr();
    return f;
  }

  SpaceExpr expr() {
    skip_space();
    const std::size_t start = pos_;
    const std::string id = identifier();
    try {
      if (id == "prod") {
        expect('(');
        std::vector<ProductFactor> fs{factor()};
        while (peek(',')) {
          ++pos_;
          fs.push_back(factor());
        }
        expect(')');
        return SpaceExpr::product(std::move(fs));
      }
      if (id == "dual") {
        expect('(');
        const SpaceExpr inner = expr();
        expect(')');
        try {
          return dual(inner);
        } catch (const UnknownSpaceError& e) {
          fail_at(e.what(), start);
        }
      }
      if (id == "closed") {
        expect('[');
        const std::string name = identifier();
        expect(',');
        const int dim = integer();
        expect(']');
        return SpaceExpr::closed(name, dim);
      }
      if (id == "I") {
        const auto a = int_args(2);
        return SpaceExpr::domain(JtsSpec::type_i(a[0], a[1]));
      }
      if (id == "II") return SpaceExpr::domain(JtsSpec::type_ii(int_args(1)[0]));
      if (id == "III") return SpaceExpr::domain(JtsSpec::type_iii(int_args(1)[0]));
      if (id == "IV") return SpaceExpr::domain(JtsSpec::type_iv(int_args(1)[0]));
      if (id == "grass") {
        const auto a = int_args(2);
        return SpaceExpr::compact(Hssct::grass(a[0], a[1]));
      }
      if (id == "so") return SpaceExpr::compact(Hssct::so(int_args(1)[0]));
      if (id == "lg") return SpaceExpr::compact(Hssct::lg(int_args(1)[0]));
      if (id == "quadric") return SpaceExpr::compact(Hssct::quadric(int_args(1)[0]));
      if (id == "e6") return SpaceExpr::compact(Hssct::e6());
      if (id == "e7") return SpaceExpr::compact(Hssct::e7());
      if (id == "ball") return SpaceExpr::ball(int_args(1)[0]);
      if (id == "cyl") return SpaceExpr::cylinder(int_args(1)[0]);
    } catch (const PreconditionError& e) {
      fail_at(e.what(), start);
    }
    fail_at("unknown space '" + id + "'", start);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpaceExpr parse_space(const std::string& text) { return Parser(text).parse_all(); }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const SpaceExpr& s) {
  switch (s.kind) {
    case SpaceExpr::Kind::Hssct: return s.hssct->name();
    case SpaceExpr::Kind::Cartan: return s.cartan->name();
    case SpaceExpr::Kind::Ball: return "ball[" + std::to_string(s.real_dim) + "]";
    case SpaceExpr::Kind::Cylinder: return "cyl[" + std::to_string(s.real_dim) + "]";
    case SpaceExpr::Kind::ClosedGeneric: return "closed[" + s.name + "," + std::to_string(s.real_dim) + "]";
    case SpaceExpr::Kind::Product: {
      std::string out = "prod(";
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (i > 0) out += ",";
        out += to_string(s.factors[i].scale) + "*" + to_string(s.factors[i].space);
      }
      return out + ")";
    }
  }
  return {};
}

SpaceExpr dual(const SpaceExpr& s) {
  if (s.kind == SpaceExpr::Kind::Cartan) {
    const JtsSpec& j = *s.cartan;
    switch (j.family()) {
      case Family::TypeI: return SpaceExpr::compact(Hssct::grass(j.p(), j.p() + j.q()));
      case Family::TypeII: return SpaceExpr::compact(Hssct::so(j.p()));
      case Family::TypeIII: return SpaceExpr::compact(Hssct::lg(j.p()));
      case Family::TypeIV:
        if (j.p() < 3) throw UnknownSpaceError("IV[2] has a reducible compact dual");
        return SpaceExpr::compact(Hssct::quadric(j.p()));
    }
  }
  if (s.kind == SpaceExpr::Kind::Hssct) {
    if (auto spec = s.hssct->cartan_dual()) return SpaceExpr::domain(*spec);
    throw UnknownSpaceError("exceptional domains are not supported");
  }
  throw UnknownSpaceError("dual is defined for Cartan domains and compact Hermitian symmetric spaces");
}

std::vector<ProductFactor> flatten(const SpaceExpr& s) {
  if (s.kind != SpaceExpr::Kind::Product) return {ProductFactor{Rational(1), s}};
  std::vector<ProductFactor> out;
  for (const auto& f : s.factors) {
    for (auto inner : flatten(f.space)) {
      inner.scale *= f.scale;
      out.push_back(std::move(inner));
    }
  }
  return out;
}

}  // namespace hermsym
