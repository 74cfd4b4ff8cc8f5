#include "dcrit/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "dcrit/errors.hpp"

namespace dcrit {

namespace {

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& num, const Exponents& den) {
  Exponents r(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) r[i] = num[i] - den[i];
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading_coefficient());
}

// Full reduction of p against `basis` (every term, not only the head).
Poly reduce(Poly p, const std::vector<Poly>& basis) {
  Poly remainder(p.vars());
  while (!p.is_zero()) {
    const Exponents lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    const Poly* divisor = nullptr;
    for (const auto& g : basis) {
      if (divides(g.leading_monomial(), lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      p -= divisor->mul_term(quotient(lm, divisor->leading_monomial()), lc / divisor->leading_coefficient());
    } else {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return remainder;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const auto l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(quotient(l, f.leading_monomial()), 1 / f.leading_coefficient()) -
         g.mul_term(quotient(l, g.leading_monomial()), 1 / g.leading_coefficient());
}

// Minimal, then interreduced, monic basis sorted by leading monomial.
std::vector<Poly> reduce_basis(std::vector<Poly> g) {
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      // Drop g[i] if another leading monomial divides it; on ties keep the first.
      if (divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(monic(g[i]));
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(monic(reduce(minimal[i], others)));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return DegRevLexGreater{}(b.leading_monomial(), a.leading_monomial());
  });
  return out;
}

}  // namespace

GroebnerBasis::GroebnerBasis(VarList vars, std::vector<Poly> generators)
    : vars_(std::move(vars)), gens_(std::move(generators)) {}

bool GroebnerBasis::is_unit_ideal() const {
  return gens_.size() == 1 && total_degree(gens_.front().leading_monomial()) == 0;
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
  if (!same_vars(p.vars(), vars_)) throw DomainError("normal form over wrong variables");
  return reduce(p, gens_);
}

bool GroebnerBasis::is_zero_dimensional() const {
  if (is_unit_ideal()) return true;
  const std::size_t n = vars_->size();
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& g : gens_) {
      const auto& lm = g.leading_monomial();
      if (lm[i] > 0 && total_degree(lm) == lm[i]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Exponents> GroebnerBasis::standard_monomials() const {
  if (!is_zero_dimensional()) throw DomainError("quotient ring is infinite-dimensional");
  std::vector<Exponents> out;
  if (is_unit_ideal()) return out;
  const std::size_t n = vars_->size();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : gens_) {
    const auto& lm = g.leading_monomial();
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] > 0 && total_degree(lm) == lm[i]) bound[i] = bound[i] ? std::min(bound[i], lm[i]) : lm[i];
  }
  Exponents e(n, 0);
  auto standard = [&](const Exponents& m) {
    for (const auto& g : gens_)
      if (divides(g.leading_monomial(), m)) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (standard(e)) out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k < bound[i]; ++k) {
      e[i] = k;
      self(self, i + 1);
    }
    e[i] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) { return DegRevLexGreater{}(b, a); });
  return out;
}

GroebnerBasis buchberger(const std::vector<Poly>& gens) {
  if (gens.empty()) throw DomainError("buchberger needs at least one generator");
  return buchberger(gens.front().vars(), gens);
}

GroebnerBasis buchberger(const VarList& vars, const std::vector<Poly>& gens) {
  std::vector<Poly> basis;
  for (const auto& g : gens) {
    if (!same_vars(g.vars(), vars)) throw DomainError("generators over different variable lists");
    if (!g.is_zero()) basis.push_back(monic(g));
  }
  if (basis.empty()) return GroebnerBasis(vars);

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
    Poly r = reduce(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(monic(r));
    const std::size_t k = basis.size() - 1;
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
  }
  return GroebnerBasis(vars, reduce_basis(std::move(basis)));
}

QuotientDimension quotient_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return QuotientDimension::finite(0);
  if (!gb.is_zero_dimensional()) return QuotientDimension::infinite();
  return QuotientDimension::finite(gb.standard_monomials().size());
}

QuotientDimension quotient_dimension(const VarList& vars, const std::vector<Poly>& gens) {
  return quotient_dimension(buchberger(vars, gens));
}

std::vector<Poly> jacobian_ideal(const Poly& f) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.diff(i));
  return out;
}

QuotientDimension milnor_number(const Poly& f) {
  if (f.is_constant()) throw DomainError("milnor number of a constant polynomial");
  return quotient_dimension(f.vars(), jacobian_ideal(f));
}

}  // namespace dcrit
