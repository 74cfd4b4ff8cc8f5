#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcrit/groebner.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/random.hpp"
#include "dcrit/symplectic.hpp"

using namespace dcrit;

namespace {
const VarList xy = parse_vars("x,y");
}

TEST_CASE("hessian") {
  auto h = hessian(parse_poly("x^3 + x*y^2", xy));
  CHECK(h.to_strings() == std::vector<std::vector<std::string>>{{"6*x", "2*y"}, {"2*y", "2*x"}});
  Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    auto vars = standard_vars(1 + rng.below(3));
    auto f = random_poly(rng, vars, 4, 5);
    auto h2 = hessian(f);
    CHECK(h2 == h2.transpose());
    CHECK(minus_one_pairing(f).symmetric);
  }
}

TEST_CASE("pairing on the tangent complex") {
  auto p = minus_one_pairing(parse_poly("x^3 + y^3", xy));
  CHECK(p.symmetric);
  CHECK(p.nondegenerate);
  CHECK_FALSE(p.asymmetry);
  auto t = tangent_complex(parse_poly("x^2*y", xy));
  CHECK(t.euler_characteristic() == 0);

  PolyMatrix skew(xy, 2, 2);
  skew.at(0, 1) = parse_poly("x", xy);
  auto bad = pairing_report(TwoTermComplex{skew});
  CHECK_FALSE(bad.symmetric);
  REQUIRE(bad.asymmetry);
  CHECK(*bad.asymmetry == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("obstruction theory of x^3") {
  auto x = parse_vars("x");
  auto ob = obstruction_theory(parse_poly("x^3", x));
  CHECK(ob.truncation_dimension == QuotientDimension::finite(2));
  REQUIRE(ob.cohomology);
  CHECK(ob.cohomology->h0 == 1);
  CHECK(ob.cohomology->h1 == 1);
  CHECK(ob.symmetric);
  REQUIRE(ob.hessian_invertible);
  CHECK_FALSE(*ob.hessian_invertible);
}

TEST_CASE("obstruction theory of a morse function") {
  auto ob = obstruction_theory(parse_poly("x^2 + y^2", xy));
  CHECK(ob.truncation_dimension == QuotientDimension::finite(1));
  REQUIRE(ob.cohomology);
  CHECK(ob.cohomology->h0 == 0);
  CHECK(ob.cohomology->h1 == 0);
  CHECK(*ob.hessian_invertible);
}

TEST_CASE("graph lagrangian intersections") {
  for (const char* src : {"x^3 + y^3", "x^2*y + y^4", "x*y"}) {
    auto f = parse_poly(src, xy);
    auto li = intersect_graph_lagrangians(OneForm::exact(f), OneForm::zero(xy));
    auto crit = build_koszul(xy, 2, Section{jacobian_ideal(f)});
    for (int p = -2; p < 0; ++p) CHECK(li.complex.differential_matrix(p) == crit.differential_matrix(p));
    CHECK(li.pairing.hessian == hessian(f));
  }
  auto li = intersect_graph_lagrangians(OneForm::exact(parse_poly("x^2", xy)), OneForm::exact(parse_poly("x", xy)));
  CHECK(li.complex.section().components[0] == parse_poly("2*x - 1", xy));
}

TEST_CASE("non-closed input is rejected with a witness") {
  OneForm bad{{parse_poly("y", xy), parse_poly("0", xy)}};
  try {
    intersect_graph_lagrangians(OneForm::zero(xy), bad);
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    CHECK(e.form() == "beta");
    CHECK(e.i() == 0);
    CHECK(e.j() == 1);
    CHECK(std::string(e.what()).find("not closed") != std::string::npos);
  }
}
