#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcrit/errors.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/poly.hpp"
#include "dcrit/random.hpp"

using namespace dcrit;

namespace {
const VarList xy = parse_vars("x,y");
Poly P(const char* s) { return parse_poly(s, xy); }
}  // namespace

TEST_CASE("printing") {
  CHECK(P("x^2 - 2*x + 1").to_string() == "x^2 - 2*x + 1");
  CHECK(P("1/2*x*y + y^3").to_string() == "y^3 + 1/2*x*y");
  CHECK(P("-x").to_string() == "-x");
  CHECK(P("0").to_string() == "0");
  CHECK(P("2/4").to_string() == "1/2");
  CHECK(P("(x+y)^2").to_string() == "x^2 + 2*x*y + y^2");
}

TEST_CASE("degrevlex order") {
  // Total degree first, ties go to the smaller last exponent.
  CHECK(P("x^2 + x*y^2").leading_monomial() == Exponents{1, 2});
  CHECK(P("x*y^2 + x^2*y").leading_monomial() == Exponents{2, 1});
  CHECK(P("y + x").leading_monomial() == Exponents{1, 0});
}

TEST_CASE("arithmetic") {
  CHECK(P("(x+1)*(x-1)") == P("x^2-1"));
  CHECK(P("x") - P("x") == Poly(xy));
  CHECK((P("x+y") * P("x-y")).to_string() == "x^2 - y^2");
  CHECK(P("3*x") * make_rational(1, 3) == P("x"));
}

TEST_CASE("calculus and substitution") {
  CHECK(P("x^3*y + y").diff(0) == P("3*x^2*y"));
  CHECK(P("x^3*y + y").diff("y") == P("x^3 + 1"));
  auto t = parse_vars("t");
  std::vector<Poly> images{parse_poly("t^2", t), parse_poly("t+1", t)};
  CHECK(P("x*y").substitute(t, images) == parse_poly("t^3 + t^2", t));
  auto xyz = parse_vars("x,y,z");
  CHECK(P("x*y + 1").embed(xyz) == parse_poly("x*y+1", xyz));
}

TEST_CASE("weighted degree") {
  std::vector<unsigned> w{2, 3};
  CHECK(P("x^3 + y^2").weighted_degree(w) == WeightedDegree{WeightedDegree::Kind::Homogeneous, 6});
  CHECK(P("x + y").weighted_degree(w).is_inhomogeneous());
  CHECK(P("0").weighted_degree(w).is_any());
}

TEST_CASE("parse errors carry positions") {
  try {
    P("x + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(parse_vars("x,x"), DomainError);
  CHECK_THROWS_AS(parse_weights("1,0"), DomainError);
}

TEST_CASE("printed polynomials re-parse") {
  Rng rng(7);
  auto xyz = standard_vars(3);
  for (int i = 0; i < 300; ++i) {
    Poly p = random_poly(rng, xyz, 4, 6, 5, 0);
    p *= make_rational(1 + static_cast<long>(rng.below(3)), 1 + static_cast<long>(rng.below(4)));
    CHECK(parse_poly(p.to_string(), xyz) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng, xy, 3, 4), b = random_poly(rng, xy, 3, 4), c = random_poly(rng, xy, 3, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a * b).diff(0) == a.diff(0) * b + a * b.diff(0));
  }
}
