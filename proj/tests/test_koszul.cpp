#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dcrit/koszul.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/random.hpp"

using namespace dcrit;

namespace {

void combos(std::size_t m, std::size_t q, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == q) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    combos(m, q, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t m, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combos(m, q, 0, cur, out);
  return out;
}

// d(β_1∧…∧β_q) = Σ_j ξ_j Σ_k (−1)^k β_k(x_j) β_1∧…β̂_k…∧β_q, written out on
// the basis e_{i_1}∧…∧e_{i_q} where β_k(x_j) = δ_{i_k j}.
PolyMatrix expanded_fancy_matrix(const FancyKoszul& f, std::size_t q) {
  const auto src = lex_subsets(f.rank(), q);
  const auto dst = lex_subsets(f.rank(), q - 1);
  PolyMatrix mat(f.vars(), dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (std::size_t j = 0; j < f.rank(); ++j)
      for (std::size_t k = 1; k <= q; ++k) {
        if (src[c][k - 1] != j) continue;
        auto rest = src[c];
        rest.erase(rest.begin() + static_cast<long>(k - 1));
        auto row = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), rest) - dst.begin());
        Poly term = Poly::variable(f.vars(), f.fiber_index(j));
        mat.at(row, c) += (k % 2 == 0 ? term : -term);
      }
  return mat;
}

}  // namespace

TEST_CASE("fancy differential matches the explicit formula") {
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      auto f = build_fancy_koszul(standard_vars(n), m);
      for (std::size_t q = 1; q <= m; ++q) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(q);
        CHECK(f.complex().differential_matrix(-static_cast<int>(q)) == expanded_fancy_matrix(f, q));
      }
    }
}

TEST_CASE("fiber variable names avoid collisions") {
  auto f = build_fancy_koszul(parse_vars("x,xi1"), 2);
  CHECK(*f.vars() == std::vector<std::string>{"x", "xi1", "xi1_", "xi2"});
  CHECK(f.fiber_index(0) == 2);
  CHECK_THROWS(build_fancy_koszul(parse_vars("x"), 0));
}

TEST_CASE("koszul matrices of (x, y)") {
  auto vars = parse_vars("x,y");
  auto k = build_koszul(vars, 2, Section{parse_poly_list("x, y", vars)});
  CHECK(k.component_rank(-1) == 2);
  auto d1 = k.differential_matrix(-1);
  REQUIRE(d1.rows() == 1);
  CHECK(d1.at(0, 0) == parse_poly("-x", vars));
  CHECK(d1.at(0, 1) == parse_poly("-y", vars));
  auto d2 = k.differential_matrix(-2);
  CHECK(d2.at(0, 0) == parse_poly("y", vars));
  CHECK(d2.at(1, 0) == parse_poly("-x", vars));
  CHECK((d1 * d2).is_zero());
}

TEST_CASE("d squared on random sections") {
  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    auto vars = standard_vars(rng.below(4));
    std::size_t m = 1 + rng.below(4);
    auto k = build_koszul(vars, m, random_section(rng, vars, m, 3, 3));
    CHECK(check_d_squared(k));
  }
  for (std::size_t m = 1; m <= 4; ++m) CHECK(check_d_squared(build_fancy_koszul(standard_vars(2), m)));
}

TEST_CASE("corrupted sign breaks d squared") {
  auto vars = parse_vars("x,y");
  auto k = build_koszul(vars, 2, Section{parse_poly_list("x, y", vars)});
  auto c = k.to_matrix_complex();
  CHECK(check_d_squared(c));
  c.differentials[0].at(0, 0) = -c.differentials[0].at(0, 0);
  CHECK_FALSE(check_d_squared(c));
}

TEST_CASE("base change recovers the koszul differential") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    auto vars = standard_vars(rng.below(4));
    std::size_t m = 1 + rng.below(3);
    auto s = random_section(rng, vars, m, 3, 3);
    auto r = base_change_compare(build_fancy_koszul(vars, m), s);
    CHECK(r.equal);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("augmentation") {
  auto vars = parse_vars("x,y");
  auto k = build_koszul(vars, 2, Section{parse_poly_list("x^2, x*y", vars)});
  auto aug = augmentation(k);
  CHECK(aug.composite_vanishes);
  auto e1 = ExtElt::generator(k.ambient(), 0);
  CHECK(aug.apply(k.differential(parse_poly("y + 1", vars) * e1)).is_zero());
  CHECK(aug.apply(ExtElt::scalar(k.ambient(), parse_poly("x^2 + y", vars))) == parse_poly("y", vars));
}
