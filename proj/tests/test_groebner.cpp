#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcrit/errors.hpp"
#include "dcrit/groebner.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/random.hpp"

using namespace dcrit;

namespace {

Poly s_poly(const Poly& f, const Poly& g) {
  const auto& a = f.leading_monomial();
  const auto& b = g.leading_monomial();
  Exponents lcm(a.size()), fa(a.size()), gb(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    lcm[i] = std::max(a[i], b[i]);
    fa[i] = lcm[i] - a[i];
    gb[i] = lcm[i] - b[i];
  }
  return f.mul_term(fa, 1 / f.leading_coefficient()) - g.mul_term(gb, 1 / g.leading_coefficient());
}

}  // namespace

TEST_CASE("quotient dimensions") {
  auto xy = parse_vars("x,y");
  CHECK(quotient_dimension(xy, parse_poly_list("x^2, y^2", xy)) == QuotientDimension::finite(4));
  CHECK(quotient_dimension(xy, parse_poly_list("x^2, x*y, y^3", xy)) == QuotientDimension::finite(4));
  CHECK(quotient_dimension(xy, parse_poly_list("x*y", xy)).is_infinite());
  CHECK(quotient_dimension(xy, parse_poly_list("x, x - 1", xy)) == QuotientDimension::finite(0));
  CHECK(buchberger(xy, parse_poly_list("x, x - 1", xy)).is_unit_ideal());
  CHECK(quotient_dimension(xy, parse_poly_list("x^2 + y^2 - 1, x - y", xy)) == QuotientDimension::finite(2));
}

TEST_CASE("milnor numbers") {
  auto x = parse_vars("x");
  auto xy = parse_vars("x,y");
  auto xyz = parse_vars("x,y,z");
  CHECK(milnor_number(parse_poly("x^2", x)).value() == 1);
  CHECK(milnor_number(parse_poly("x^3", x)).value() == 2);
  CHECK(milnor_number(parse_poly("x^3+y^3", xy)).value() == 4);
  CHECK(milnor_number(parse_poly("x^4+y^4", xy)).value() == 9);
  CHECK(milnor_number(parse_poly("x^3+y^3+z^3", xyz)).value() == 8);
  CHECK(milnor_number(parse_poly("x^2*y + y^4", xy)).value() == 5);  // D5
  CHECK(milnor_number(parse_poly("x*y", xy)).value() == 1);
  CHECK(milnor_number(parse_poly("x^2", xy)).is_infinite());
  CHECK_THROWS_AS(milnor_number(parse_poly("3", xy)), DomainError);
}

TEST_CASE("normal forms and standard monomials") {
  auto xy = parse_vars("x,y");
  auto gb = buchberger(xy, parse_poly_list("x^2, y^2", xy));
  CHECK(gb.normal_form(parse_poly("x^3 + x*y + 2", xy)) == parse_poly("x*y + 2", xy));
  auto std_monos = gb.standard_monomials();
  CHECK(std_monos.size() == 4);
  CHECK(gb.is_zero_dimensional());
  CHECK(GroebnerBasis(xy).is_zero_ideal());
  CHECK_THROWS(buchberger(std::vector<Poly>{}));
}

TEST_CASE("random ideals give reduced groebner bases") {
  Rng rng(13);
  auto xyz = standard_vars(3);
  for (int t = 0; t < 30; ++t) {
    std::vector<Poly> gens;
    for (std::size_t i = 0, k = 1 + rng.below(3); i < k; ++i) gens.push_back(random_poly(rng, xyz, 2, 3));
    auto gb = buchberger(xyz, gens);
    for (const auto& g : gens) CHECK(gb.contains(g));
    for (const auto& g : gb.generators()) CHECK(g.leading_coefficient() == 1);
    const auto& b = gb.generators();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i != j) CHECK_FALSE(divides(b[i].leading_monomial(), b[j].leading_monomial()));
        if (i < j) CHECK(gb.normal_form(s_poly(b[i], b[j])).is_zero());
      }
    Poly h = random_poly(rng, xyz, 2, 3);
    CHECK(gb.contains(h * gens[0]));
  }
}
