#include "dcrit/suite.hpp"

#include <chrono>
#include <sstream>

#include "dcrit/coalgebra.hpp"
#include "dcrit/cohomology.hpp"
#include "dcrit/errors.hpp"
#include "dcrit/groebner.hpp"
#include "dcrit/koszul.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/polyvector.hpp"
#include "dcrit/random.hpp"
#include "dcrit/symplectic.hpp"

namespace dcrit {

std::vector<CorpusEntry> standard_corpus() {
  auto x = parse_vars("x");
  auto xy = parse_vars("x,y");
  auto xyz = parse_vars("x,y,z");
  return {
      {x, parse_poly("x^2", x), 2},
      {x, parse_poly("x^3", x), 3},
      {xy, parse_poly("x^3+y^3", xy), 3},
      {xy, parse_poly("x^2+y^2", xy), 2},
      {xy, parse_poly("x^4+y^4", xy), 4},
      {xyz, parse_poly("x^3+y^3+z^3", xyz), 3},
  };
}

std::size_t milnor_orlik(unsigned degree, const std::vector<unsigned>& weights) {
  Rational prod = 1;
  for (unsigned w : weights) prod *= make_rational(static_cast<long>(degree) - static_cast<long>(w), static_cast<long>(w));
  if (prod.get_den() != 1 || prod < 0) throw DomainError("weights do not give an integral Milnor number");
  return prod.get_num().get_ui();
}

namespace {

CheckResult pass(std::string name, std::string detail = {}) {
  return CheckResult{std::move(name), Status::Pass, std::nullopt, std::move(detail), false};
}

CheckResult fail(std::string name, std::string counterexample, std::string detail = {}) {
  return CheckResult{std::move(name), Status::Fail, std::move(counterexample), std::move(detail), false};
}

/// Number of monomials of degree w in n variables, C(w+n−1, n−1).
std::size_t monomial_count(std::size_t n, unsigned w) {
  if (n == 0) return w == 0 ? 1 : 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), w + n - 1, n - 1);
  return c.get_ui();
}

std::string first_failure(const CheckReport& r) {
  for (const auto& c : r.checks) {
    if (c.passed()) continue;
    std::string s = c.name;
    if (c.counterexample) s += ": " + *c.counterexample;
    else if (!c.detail.empty()) s += ": " + c.detail;
    return s;
  }
  return {};
}

CheckResult fancy_certificate(std::uint64_t) {
  const std::string name = "fancy koszul resolution";
  constexpr unsigned cutoff = 8;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      auto table = hilbert_table(build_fancy_koszul(standard_vars(n), m), cutoff);
      for (std::size_t k = 1; k < table.rows.size(); ++k)
        for (unsigned w = 0; w <= cutoff; ++w)
          if (table.rows[k][w] != 0) {
            std::ostringstream os;
            os << "n=" << n << " m=" << m << " H^-" << k << " weight " << w << " dim " << table.rows[k][w];
            return fail(name, os.str());
          }
      for (unsigned w = 0; w <= cutoff; ++w)
        if (table.rows[0][w] != monomial_count(n, w)) {
          std::ostringstream os;
          os << "n=" << n << " m=" << m << " H^0 weight " << w << " dim " << table.rows[0][w] << " expected "
             << monomial_count(n, w);
          return fail(name, os.str());
        }
    }
  }
  return pass(name, "n <= 3, m <= 3, cutoff 8");
}

CheckResult dual_numbers(std::uint64_t) {
  const std::string name = "zero section rank one";
  auto vars = parse_vars("");
  auto k = build_koszul(vars, 1, Section{{Poly(vars)}});
  std::vector<unsigned> weights;
  auto table = hilbert_table(k, weights, 4);
  if (table.total(0) != 1 || table.total(-1) != 1) {
    return fail(name, "dims (" + std::to_string(table.total(0)) + ", " + std::to_string(table.total(-1)) + ")");
  }
  return pass(name, "H^0 = H^-1 = 1");
}

CheckResult base_change(std::uint64_t seed) {
  const std::string name = "base change";
  Rng rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.below(4);
    std::size_t m = 1 + rng.below(3);
    auto vars = standard_vars(n);
    Section s = random_section(rng, vars, m, 3, 3);
    auto report = base_change_compare(build_fancy_koszul(vars, m), s);
    if (!report.equal) {
      const auto& w = *report.witness;
      std::ostringstream os;
      os << "s = " << s.to_string() << " degree " << w.degree << " entry (" << w.row << ", " << w.col
         << "): " << w.substituted << " vs " << w.direct;
      return fail(name, os.str());
    }
  }
  return pass(name, "100 sections");
}

CheckResult milnor_oracles(std::uint64_t) {
  const std::string name = "milnor oracle agreement";
  for (const auto& e : standard_corpus()) {
    std::vector<unsigned> unit(e.vars->size(), 1);
    auto jac = jacobian_ideal(e.f);
    auto k = build_koszul(e.vars, jac.size(), Section{jac});
    auto table = hilbert_table(k, unit, 12);
    std::size_t sliced = table.total(0);
    auto q = quotient_dimension(e.vars, jac);
    std::size_t oracle = milnor_orlik(e.degree, unit);
    if (!table.vanishes_at_cutoff[0] || q.is_infinite() || q.value() != sliced || sliced != oracle) {
      return fail(name, "f = " + e.f.to_string() + ": slices " + std::to_string(sliced) + ", groebner " +
                            q.to_string() + ", closed form " + std::to_string(oracle));
    }
  }
  return pass(name, "6 polynomials");
}

CheckResult regular_sequences(std::uint64_t) {
  const std::string name = "regular sequences";
  for (std::size_t n = 1; n <= 3; ++n) {
    auto vars = standard_vars(n);
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Poly::variable(vars, i));
    std::vector<unsigned> unit(n, 1);
    auto v = is_regular_sequence(build_koszul(vars, n, Section{comps}), unit, 8);
    if (!v.regular) return fail(name, "coordinates in " + std::to_string(n) + " variables not exact");
  }
  auto x = parse_vars("x");
  auto xx = Poly::variable(x, 0);
  std::vector<unsigned> unit{1};
  auto k = build_koszul(x, 2, Section{{xx, xx}});
  auto sc = slice_cohomology(k, unit, 1);
  if (sc.h(-1) == 0) return fail(name, "s = (x, x): H^-1 vanishes at weight 1");
  auto v = is_regular_sequence(k, unit, 8);
  if (v.regular) return fail(name, "s = (x, x) reported regular");
  return pass(name, "(x, x): H^-1(1) = " + std::to_string(sc.h(-1)));
}

CheckResult gerstenhaber(std::uint64_t seed) {
  const std::string name = "gerstenhaber axioms";
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = check_gerstenhaber(n, 3, 200, seed + n);
    if (!r.passed()) return fail(name, "n=" + std::to_string(n) + " " + first_failure(r));
  }
  return pass(name, "200 trials for each n <= 3");
}

CheckResult compatibility(std::uint64_t seed) {
  const std::string name = "bracket compatibility";
  for (const auto& e : standard_corpus()) {
    auto r = check_bracket_compat(OneForm::exact(e.f), 50, seed);
    if (!r.holds) return fail(name, "alpha = d(" + e.f.to_string() + "): " + r.counterexample.value_or(""));
  }
  auto xy = parse_vars("x,y");
  OneForm bad{{parse_poly("y", xy), parse_poly("0", xy)}};
  auto r = check_bracket_compat(bad, 50, seed);
  if (r.holds) return fail(name, "alpha = y*d_x reported compatible");
  const std::string expected = "X = (1)*@x, Y = (1)*@y";
  if (!r.counterexample || r.counterexample->find(expected) == std::string::npos)
    return fail(name, "alpha = y*d_x: unexpected counterexample " + r.counterexample.value_or("<none>"));
  if (!r.discrepancy || *r.discrepancy != Poly::constant(xy, -1))
    return fail(name, "alpha = y*d_x: discrepancy " + (r.discrepancy ? r.discrepancy->to_string() : "<none>"));
  return pass(name, "y*d_x fails on (@x, @y) with discrepancy -1");
}

CheckResult bv(std::uint64_t seed) {
  const std::string name = "bv axioms";
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = check_bv(n, 200, seed + n);
    if (!r.passed()) return fail(name, "n=" + std::to_string(n) + " " + first_failure(r));
  }
  return pass(name, "200 trials for each n <= 3");
}

CheckResult symplectic(std::uint64_t seed) {
  const std::string name = "shifted symplectic pairing";
  Rng rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    auto vars = standard_vars(1 + rng.below(3));
    Poly f = random_poly(rng, vars, 4, 5);
    auto p = minus_one_pairing(f);
    if (!p.symmetric) return fail(name, "hessian of " + f.to_string() + " not symmetric");
  }
  for (const auto& e : standard_corpus()) {
    auto li = intersect_graph_lagrangians(OneForm::exact(e.f), OneForm::zero(e.vars));
    auto crit = build_koszul(e.vars, e.vars->size(), Section{jacobian_ideal(e.f)});
    for (int p = crit.lowest_degree(); p < 0; ++p)
      if (!(li.complex.differential_matrix(p) == crit.differential_matrix(p)))
        return fail(name, "intersection complex of d(" + e.f.to_string() + ") differs in degree " +
                              std::to_string(p));
  }
  auto xy = parse_vars("x,y");
  OneForm bad{{parse_poly("y", xy), parse_poly("0", xy)}};
  try {
    intersect_graph_lagrangians(bad, OneForm::zero(xy));
    return fail(name, "y*d_x accepted as a closed form");
  } catch (const NotClosedError& err) {
    if (err.i() != 0 || err.j() != 1) return fail(name, std::string("wrong witness: ") + err.what());
  }
  return pass(name, "100 hessians; intersection matches critical locus; non-closed rejected");
}

CheckResult coalgebra(std::uint64_t seed) {
  const std::string name = "coalgebra laws";
  for (std::size_t m = 1; m <= 4; ++m) {
    auto r = check_coalgebra(m, 200, seed + m);
    if (!r.passed()) return fail(name, "m=" + std::to_string(m) + " " + first_failure(r));
  }
  return pass(name, "200 trials for each m <= 4");
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "fancy koszul resolution", 10, fancy_certificate},
      {2, "zero section rank one", 1, dual_numbers},
      {3, "base change", 10, base_change},
      {4, "milnor oracle agreement", 20, milnor_oracles},
      {5, "regular sequences", 5, regular_sequences},
      {6, "gerstenhaber axioms", 30, gerstenhaber},
      {7, "bracket compatibility", 5, compatibility},
      {8, "bv axioms", 30, bv},
      {9, "shifted symplectic pairing", 10, symplectic},
      {10, "coalgebra laws", 30, coalgebra},
  };
  return all;
}

std::vector<CriterionOutcome> run_suite(std::uint64_t seed) {
  std::vector<CriterionOutcome> out;
  for (const auto& c : acceptance_criteria()) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run(seed);
    } catch (const std::exception& e) {
      r = CheckResult{c.name, Status::Error, std::nullopt, e.what(), false};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back({c.id, std::move(r), secs});
  }
  return out;
}

}  // namespace dcrit
