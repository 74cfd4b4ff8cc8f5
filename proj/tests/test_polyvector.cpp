#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcrit/errors.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/polyvector.hpp"
#include "dcrit/random.hpp"

using namespace dcrit;

namespace {
const VarList xy = parse_vars("x,y");
const AmbientPtr T = polyvector_ambient(xy);
PolyVector V(const char* s) { return parse_graded(s, T); }
}  // namespace

TEST_CASE("schouten bracket examples") {
  CHECK(schouten(V("@x"), V("x")) == V("1"));
  CHECK(schouten(V("x*@x"), V("x^2*y")) == V("2*x^2*y"));
  CHECK(schouten(V("x"), V("@x")) == V("-1"));
  CHECK(schouten(V("x*@y"), V("y*@x")) == V("x*@x - y*@y"));
  CHECK(schouten(V("x*@x"), V("y*@y")).is_zero());
  CHECK(schouten(V("x"), V("y")).is_zero());
  // Contraction of the bivector with df, the sign fixed by ⟦X,f⟧ = X(f) and the axioms.
  CHECK(schouten(V("@x/\\@y"), V("x*y")) == V("x*@x - y*@y"));
}

TEST_CASE("vector field helpers") {
  std::vector<Poly> X{parse_poly("x*y", xy), parse_poly("1", xy)};
  std::vector<Poly> Y{parse_poly("0", xy), parse_poly("x", xy)};
  CHECK(apply_vector_field(X, parse_poly("x^2", xy)) == parse_poly("2*x^2*y", xy));
  auto br = lie_bracket(X, Y);
  auto sch = schouten(V("(x*y)*@x + @y"), V("x*@y"));
  CHECK(vector_components(sch) == br);
}

TEST_CASE("one-form parsing and closedness") {
  auto a = parse_one_form("y*d_x + x*d_y", xy);
  CHECK(a.components[0] == parse_poly("y", xy));
  CHECK(is_closed(a));
  CHECK(a.components == OneForm::exact(parse_poly("x*y", xy)).components);
  auto b = parse_one_form("y*d_x", xy);
  auto w = closedness_failure(b);
  REQUIRE(w);
  CHECK(w->i == 0);
  CHECK(w->j == 1);
  CHECK_THROWS_AS(parse_one_form("d_x/\\d_y", xy), DomainError);
  CHECK_THROWS_AS(parse_one_form("x*d_z", xy), ParseError);
  CHECK(parse_one_form("0", xy).components[1].is_zero());
}

TEST_CASE("d_alpha") {
  auto a = OneForm::exact(parse_poly("x^2*y", xy));
  CHECK(d_alpha(a, V("@x")) == V("-2*x*y"));
  CHECK(d_alpha(a, d_alpha(a, V("x*@x/\\@y"))).is_zero());
}

TEST_CASE("bv operator") {
  VolumeForm vol(1);
  CHECK(bv_delta(vol, V("x*@x")) == V("1"));
  CHECK(bv_delta(vol, V("x*y*@x/\\@y")) == V("y*@y - x*@x"));
  CHECK(vol_contract(vol, V("@x/\\@y")) == ExtElt::scalar(form_ambient(xy), Poly::constant(xy, -1)));
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    auto a = random_element(rng, T, 3, 4);
    CHECK(bv_delta(vol, a) == bv_delta_via_forms(vol, a));
    CHECK(vol_contract_inverse(vol, vol_contract(vol, a)) == a);
    CHECK(bv_delta(vol, bv_delta(vol, a)).is_zero());
  }
  CHECK_THROWS_AS(VolumeForm(0), DomainError);
}

TEST_CASE("bv generates the bracket") {
  VolumeForm vol(1);
  auto a = V("@x"), b = V("x");
  // |a| = -1: ⟦a,b⟧ = −(−1)^{|a|}(Δ(ab) − Δa·b − (−1)^{|a|} a·Δb)
  auto gen = bv_delta(vol, wedge(a, b)) - wedge(bv_delta(vol, a), b) + wedge(a, bv_delta(vol, b));
  CHECK(schouten(a, b) == gen);
  CHECK(schouten(a, b) == V("1"));
}

TEST_CASE("axiom suites pass") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(check_gerstenhaber(n, 2, 60, n).passed());
    CHECK(check_bv(n, 60, n).passed());
  }
  auto bv = check_bv(2, 40, 0);
  const auto* nd = bv.find("delta not a derivation");
  REQUIRE(nd);
  CHECK(nd->status == Status::Pass);
  CHECK(nd->counterexample.has_value());
}

TEST_CASE("bracket compatibility") {
  auto exact = check_bracket_compat(OneForm::exact(parse_poly("x^3 + x*y^2", xy)), 40, 1);
  CHECK(exact.holds);
  CHECK(exact.is_closed);
  auto bad = check_bracket_compat(parse_one_form("y*d_x", xy), 40, 1);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.is_closed);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->find("X = (1)*@x, Y = (1)*@y") == 0);
  REQUIRE(bad.discrepancy);
  CHECK(*bad.discrepancy == Poly::constant(xy, -1));
}
