#include <doctest.h>

#include <set>

#include "hermsym/capacities.hpp"
#include "hermsym/errors.hpp"

using namespace hermsym;

namespace {

BoundCertificate bounds(const std::string& expr, Quantity q) { return capacity_bounds(parse_space(expr), q); }

CapValue pi(std::int64_t num, std::int64_t den = 1) { return CapValue::pi_times(Rational(num, den)); }

bool cites(const BoundCertificate& c, const std::string& rule) {
  for (const auto& s : c.steps)
    if (s.rule == rule) return true;
  return false;
}

}  // namespace

TEST_CASE("capacity values print as multiples of pi") {
  CHECK(pi(1).str() == "pi");
  CHECK(pi(0).str() == "0");
  CHECK(pi(3, 2).str() == "3/2pi");
  CHECK(CapValue::infinite().str() == "inf");
  CHECK(CapValue::unknown().str() == "unknown");
  CHECK(parse_quantity("cHZ_pi1") == Quantity::cHZ_pi1);
  CHECK_THROWS_AS(parse_quantity("cX"), PreconditionError);
}

TEST_CASE("rule registry has unique names and plain references") {
  std::set<std::string> names;
  for (const auto& r : rule_registry()) {
    CHECK(names.insert(r.name).second);
    CHECK_FALSE(r.ref.empty());
    CHECK(r.ref.find('\\') == std::string::npos);
  }
}

TEST_CASE("Gromov width of Grassmannians") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const std::string expr = "grass[" + std::to_string(k) + "," + std::to_string(n) + "]";
      CAPTURE(expr);
      const BoundCertificate c = bounds(expr, Quantity::cG);
      CHECK(c.lower == pi(1));
      CHECK(c.upper == pi(1));
      CHECK(replay(c).ok);
    }
  const BoundCertificate g = bounds("grass[2,4]", Quantity::cG);
  REQUIRE(cites(g, "gw_nonvanishing"));
  for (const auto& s : g.steps)
    if (s.rule == "gw_nonvanishing") {
      REQUIRE(s.gw);
      CHECK(s.gw->d == 1);
      CHECK(s.gw->value == 1);
    }
}

TEST_CASE("Cartan domains sit between the ball and the cylinder") {
  for (const std::string expr : {"I[2,3]", "II[4]", "III[3]", "IV[4]"})
    for (Quantity q : {Quantity::cG, Quantity::cHZ}) {
      CAPTURE(expr);
      const BoundCertificate c = bounds(expr, q);
      CHECK(c.lower == pi(1));
      CHECK(c.upper == pi(1));
      CHECK(cites(c, "ball_into_domain"));
      CHECK(cites(c, "domain_into_cylinder"));
      CHECK(replay(c).ok);
    }
}

TEST_CASE("conformality scales both bounds by |a|") {
  for (const std::string expr : {"grass[2,4]", "I[2,2]", "quadric[3]", "ball[4]"})
    for (Quantity q : {Quantity::cG, Quantity::cHZ, Quantity::GW}) {
      CAPTURE(expr);
      const BoundCertificate base = bounds(expr, q);
      const BoundCertificate scaled = bounds("prod(-5/2*" + expr + ")", q);
      const auto times = [](const CapValue& v) {
        return v.finite() ? CapValue::pi_times(v.coefficient() * Rational(5, 2)) : v;
      };
      CHECK(scaled.lower == times(base.lower));
      CHECK(scaled.upper == times(base.upper));
      CHECK(replay(scaled).ok);
    }
}

TEST_CASE("products of compact spaces") {
  const BoundCertificate unit = bounds("prod(1*grass[2,4],1*quadric[3])", Quantity::cG);
  CHECK(unit.lower == pi(1));
  CHECK(unit.upper == pi(1));

  const BoundCertificate scaled = bounds("prod(3*grass[2,5],2*lg[2],-4*e6)", Quantity::cG);
  CHECK(scaled.upper == pi(2));
  CHECK(scaled.lower == pi(2));

  const BoundCertificate hz = bounds("prod(3*grass[2,5],2*lg[2])", Quantity::cHZ);
  CHECK(hz.lower == pi(5));
  CHECK_FALSE(hz.upper.known());
  CHECK(cites(hz, "product_superadditivity"));

  const BoundCertificate proj = bounds("prod(2*grass[1,3],1/2*grass[2,3],-1*lg[1])", Quantity::cHZ);
  CHECK(proj.lower == pi(7, 2));
  CHECK(proj.upper == pi(7, 2));
  CHECK(cites(proj, "projective_hz_upper"));
}

TEST_CASE("closed manifold times a Cartan domain") {
  const BoundCertificate c = bounds("prod(1*closed[N,6],1*I[2,2])", Quantity::cHZ);
  CHECK(c.lower == pi(1));
  CHECK(c.upper == pi(1));
  CHECK(cites(c, "closed_times_ball"));
  const BoundCertificate s = bounds("prod(1*grass[2,4],3*III[2])", Quantity::cHZ);
  CHECK(s.lower == pi(3));
  CHECK(s.upper == pi(3));
}

TEST_CASE("products of Cartan domains") {
  CHECK(bounds("prod(1*I[1,2],1*IV[3])", Quantity::cG).lower == pi(1));
  CHECK(bounds("prod(1*I[1,2],1*IV[3])", Quantity::cG).upper == pi(1));
  const BoundCertificate c = bounds("prod(2*I[1,2],3*II[4],-7/3*ball[2])", Quantity::cG);
  CHECK(c.lower == pi(2));
  CHECK(c.upper == pi(2));
}

TEST_CASE("unknown bounds are reported, not invented") {
  const BoundCertificate c = bounds("closed[N,4]", Quantity::cG);
  CHECK_FALSE(c.lower.known());
  CHECK_FALSE(c.upper.known());
  CHECK(replay(c).ok);
  CHECK_FALSE(bounds("e7", Quantity::cHZ).upper.known());
  CHECK_FALSE(bounds("I[2,2]", Quantity::cHZ_pi1).upper.known());
}

TEST_CASE("replay rejects tampered certificates") {
  const BoundCertificate good = bounds("prod(1*grass[2,4],2*grass[1,2])", Quantity::cG);
  REQUIRE(replay(good).ok);
  REQUIRE(good.upper_step >= 0);

  BoundCertificate bound = good;
  bound.upper = pi(1, 2);
  CHECK_FALSE(replay(bound).ok);

  BoundCertificate output = good;
  output.steps.front().output = pi(7);
  CHECK_FALSE(replay(output).ok);

  BoundCertificate rule = good;
  rule.steps.back().rule = "wishful_thinking";
  CHECK_FALSE(replay(rule).ok);

  BoundCertificate ref = good;
  ref.steps.back().ref = "c = pi";
  CHECK_FALSE(replay(ref).ok);

  BoundCertificate witness = bounds("grass[2,4]", Quantity::GW);
  REQUIRE(replay(witness).ok);
  for (auto& s : witness.steps)
    if (s.gw) s.gw->beta = Partition({2});
  CHECK_FALSE(replay(witness).ok);

  BoundCertificate codim = bounds("e6", Quantity::GW);
  REQUIRE(replay(codim).ok);
  bool found = false;
  for (auto& s : codim.steps)
    if (s.codim) {
      s.codim->pair = {8, 5};
      found = true;
    }
  CHECK(found);
  CHECK_FALSE(replay(codim).ok);

  BoundCertificate order = good;
  order.lower = pi(2);
  order.steps[static_cast<std::size_t>(order.lower_step)].output = pi(2);
  CHECK_FALSE(replay(order).ok);
}

TEST_CASE("Seshadri and atlas bounds") {
  CHECK(seshadri_upper(parse_space("grass[2,5]")) == Rational(1));
  CHECK(seshadri_upper(parse_space("quadric[4]")) == Rational(1));
  CHECK_THROWS_AS(seshadri_upper(parse_space("I[2,2]")), PreconditionError);
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      // Pascal's triangle
      std::vector<std::vector<std::int64_t>> c(n + 1, std::vector<std::int64_t>(n + 1, 0));
      for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
      }
      CHECK(atlas_upper(parse_space("grass[" + std::to_string(k) + "," + std::to_string(n) + "]")) == c[n][k]);
    }
  CHECK_FALSE(atlas_upper(parse_space("quadric[3]")));
}

TEST_CASE("factor data of products") {
  const auto f = product_factor_data(parse_space("prod(1*grass[1,3],2*prod(1*quadric[4],1*e6))"));
  REQUIRE(f.size() == 3);
  CHECK(f[0].complex_dim == 2);
  CHECK(f[1].c1 == 4);
  CHECK(f[2].c1 == 12);
  CHECK_THROWS_AS(product_factor_data(parse_space("prod(1*grass[1,3],1*ball[2])")), PreconditionError);
}
