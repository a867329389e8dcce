#pragma once

// Symplectic spaces handled by the capacity engine and their textual grammar:
//
//   I[p,q] II[n] III[n] IV[n]            Cartan domains with the flat form
//   grass[k,n] so[n] lg[n] quadric[m] e6 e7
//   dual(X)                              Cartan domain <-> compact dual
//   ball[2n] cyl[2n]                     unit ball and unit cylinder
//   closed[name,dim]                     closed manifold, real dimension dim
//   prod(a1*X1, a2*X2, ...)              scales are nonzero rationals

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hermsym/catalog.hpp"
#include "hermsym/jts.hpp"

namespace hermsym {

using Rational = boost::rational<std::int64_t>;

struct ProductFactor;

struct SpaceExpr {
  enum class Kind { Hssct, Cartan, Ball, Cylinder, ClosedGeneric, Product };

  Kind kind = Kind::Ball;
  std::optional<hermsym::Hssct> hssct;
  std::optional<JtsSpec> cartan;
  /// Ball, Cylinder and ClosedGeneric: real dimension.
  int real_dim = 0;
  std::string name;
  std::vector<ProductFactor> factors;

  static SpaceExpr compact(const hermsym::Hssct& h);
  static SpaceExpr domain(const JtsSpec& spec);
  static SpaceExpr ball(int real_dim);
  static SpaceExpr cylinder(int real_dim);
  static SpaceExpr closed(std::string name, int real_dim);
  static SpaceExpr product(std::vector<ProductFactor> factors);

  bool is_closed() const;
  int complex_dim() const;
};

struct ProductFactor {
  Rational scale{1};
  SpaceExpr space;
};

bool operator==(const SpaceExpr& a, const SpaceExpr& b);
inline bool operator==(const ProductFactor& a, const ProductFactor& b) {
  return a.scale == b.scale && a.space == b.space;
}

/// Throws ParseError carrying the 0-based offset of the offending character.
SpaceExpr parse_space(const std::string& text);

/// Canonical spelling; parse_space(to_string(x)) == x.
std::string to_string(const SpaceExpr& space);

std::string to_string(const Rational& r);

/// Cartan domain <-> compact dual.  Throws UnknownSpaceError when the dual is
/// not available (exceptional spaces, balls, products, ...).
SpaceExpr dual(const SpaceExpr& space);

/// Nested products merged into one level with multiplied scales.
std::vector<ProductFactor> flatten(const SpaceExpr& space);

}  // namespace hermsym
