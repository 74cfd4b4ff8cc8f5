#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcrit/coalgebra.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/random.hpp"

using namespace dcrit;

namespace {
const VarList xy = parse_vars("x,y");
const Poly one = Poly::constant(xy, 1);
}  // namespace

TEST_CASE("coproduct of a bivector") {
  auto k = build_koszul(xy, 3, Section{parse_poly_list("x, y, x*y", xy)});
  auto e1 = ExtElt::generator(k.ambient(), 0), e2 = ExtElt::generator(k.ambient(), 1);
  TensorElt expected(k.ambient());
  expected.add({0b11, 0b00}, one);
  expected.add({0b01, 0b10}, one);
  expected.add({0b10, 0b01}, -one);
  expected.add({0b00, 0b11}, one);
  CHECK(comultiply(wedge(e1, e2)) == expected);
  CHECK(flip(expected) == expected);
  CHECK(counit(wedge(e1, e2)).is_zero());
  CHECK(counit(ExtElt::scalar(k.ambient(), parse_poly("x+2", xy))) == parse_poly("x+2", xy));
  CHECK(antipode(e1) == -e1);
  CHECK(antipode(wedge(e1, e2)) == wedge(e1, e2));
}

TEST_CASE("coaction is a chain map") {
  auto k = build_koszul(xy, 2, Section{parse_poly_list("x^2, x*y", xy)});
  auto e1 = ExtElt::generator(k.ambient(), 0), e2 = ExtElt::generator(k.ambient(), 1);
  auto a = parse_poly("y", xy) * wedge(e1, e2);
  CHECK(differential_left(k, coaction(k, a)) == coaction(k, k.differential(a)));
}

TEST_CASE("hopf identities on random elements") {
  auto k = build_koszul(xy, 3, Section{parse_poly_list("x, y, 1", xy)});
  Rng rng(29);
  for (int i = 0; i < 60; ++i) {
    auto a = random_element(rng, k.ambient(), 2, 4);
    auto b = random_element(rng, k.ambient(), 2, 4);
    auto da = comultiply(a);
    CHECK(comultiply_left(da) == comultiply_right(da));
    CHECK(counit_left(da) == a);
    CHECK(counit_right(da) == a);
    CHECK(flip(da) == da);
    CHECK(multiply_factors(antipode_left(da)) == ExtElt::scalar(k.ambient(), counit(a)));
    CHECK(multiply_factors(antipode_right(da)) == ExtElt::scalar(k.ambient(), counit(a)));
    CHECK(comultiply(wedge(a, b)) == multiply(da, comultiply(b)));
  }
}

TEST_CASE("coalgebra suite passes") {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto r = check_coalgebra(m, 80, m);
    CHECK(r.passed());
    CHECK(r.checks.size() == 7);
  }
}
