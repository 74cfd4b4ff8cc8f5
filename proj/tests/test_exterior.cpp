#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dcrit/errors.hpp"
#include "dcrit/exterior.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/random.hpp"

using namespace dcrit;

namespace {

// Sign of the permutation sorting the concatenation of two index lists.
int bubble_sign(std::vector<std::size_t> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  return sign;
}

AmbientPtr koszul_ambient(const VarList& vars, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= m; ++j) names.push_back("e" + std::to_string(j));
  return make_ambient(vars, names);
}

}  // namespace

TEST_CASE("merge sign against permutation parity") {
  for (Mask s = 0; s < 32; ++s)
    for (Mask t = 0; t < 32; ++t) {
      if (s & t) {
        CHECK(merge_sign(s, t) == 0);
        continue;
      }
      auto v = mask_indices(s);
      auto w = mask_indices(t);
      v.insert(v.end(), w.begin(), w.end());
      CHECK(merge_sign(s, t) == bubble_sign(v));
    }
}

TEST_CASE("subsets in lexicographic order") {
  auto s = subsets_of_size(3, 2);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 0b011);
  CHECK(s[1] == 0b101);
  CHECK(s[2] == 0b110);
  CHECK(subsets_of_size(4, 0) == std::vector<Mask>{0});
}

TEST_CASE("wedge is graded commutative") {
  auto vars = parse_vars("x");
  auto amb = koszul_ambient(vars, 3);
  auto e1 = ExtElt::generator(amb, 0), e2 = ExtElt::generator(amb, 1);
  CHECK(wedge(e1, e2) == -wedge(e2, e1));
  CHECK(wedge(e1, e1).is_zero());
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    int p = -static_cast<int>(rng.below(4)), q = -static_cast<int>(rng.below(4));
    auto a = random_homogeneous(rng, amb, p, 2, 3);
    auto b = random_homogeneous(rng, amb, q, 2, 3);
    auto c = random_element(rng, amb, 2, 3);
    int sign = (p * q) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == Rational(sign) * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("contraction examples") {
  auto vars = parse_vars("x,y");
  auto amb = koszul_ambient(vars, 2);
  Section s{{parse_poly("x", vars), parse_poly("y", vars)}};
  auto e1 = ExtElt::generator(amb, 0), e2 = ExtElt::generator(amb, 1);
  CHECK(contract(s, e1) == ExtElt::scalar(amb, parse_poly("-x", vars)));
  CHECK(contract(s, e2) == ExtElt::scalar(amb, parse_poly("-y", vars)));
  // d(e1∧e2) = −x e2 + y e1
  CHECK(contract(s, wedge(e1, e2)) == parse_poly("y", vars) * e1 - parse_poly("x", vars) * e2);
  Section unit{{Poly::constant(vars, 1), Poly(vars)}};
  CHECK(contract(unit, wedge(e1, e2)) == -e2);
}

TEST_CASE("contraction is a degree one derivation squaring to zero") {
  auto vars = standard_vars(2);
  auto amb = koszul_ambient(vars, 4);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Section s = random_section(rng, vars, 4, 2, 3);
    int p = -static_cast<int>(rng.below(5));
    auto a = random_homogeneous(rng, amb, p, 2, 3);
    auto b = random_element(rng, amb, 2, 3);
    CHECK(contract(s, contract(s, b)).is_zero());
    Rational sign = p % 2 == 0 ? 1 : -1;
    CHECK(contract(s, wedge(a, b)) == wedge(contract(s, a), b) + sign * wedge(a, contract(s, b)));
  }
}

TEST_CASE("odd derivative") {
  auto vars = parse_vars("x");
  auto amb = koszul_ambient(vars, 3);
  auto e1 = ExtElt::generator(amb, 0), e2 = ExtElt::generator(amb, 1), e3 = ExtElt::generator(amb, 2);
  CHECK(odd_derivative(0, wedge(e1, e2)) == e2);
  CHECK(odd_derivative(1, wedge(e1, e2)) == -e1);
  CHECK(odd_derivative(2, wedge(e1, e2)).is_zero());
  CHECK(odd_derivative(1, wedge(wedge(e1, e2), e3)) == -wedge(e1, e3));
}

TEST_CASE("graded parsing") {
  auto vars = parse_vars("x,y");
  auto amb = make_ambient(vars, {"@x", "@y"});
  auto a = parse_graded("(x*y)*@x/\\@y - @y/\\@x + 3", amb);
  auto g = [&](std::size_t i) { return ExtElt::generator(amb, i); };
  CHECK(a == parse_poly("x*y+1", vars) * wedge(g(0), g(1)) + ExtElt::scalar(amb, Poly::constant(vars, 3)));
  CHECK(parse_graded(a.to_string(), amb) == a);
  CHECK(parse_graded("0", amb).is_zero());
  CHECK_THROWS_AS(parse_graded("x*@z", amb), ParseError);
  CHECK(parse_graded("@x/\\@x", amb).is_zero());
}

TEST_CASE("monomials of weight") {
  std::vector<unsigned> w{1, 2};
  auto m = monomials_of_weight(w, 4);
  CHECK(m.size() == 3);  // x^4, x^2 y, y^2
  std::vector<unsigned> none;
  CHECK(monomials_of_weight(none, 0).size() == 1);
  CHECK(monomials_of_weight(none, 2).empty());
}
