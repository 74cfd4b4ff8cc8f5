#include "dcrit/random.hpp"

namespace dcrit {

VarList standard_vars(std::size_t n) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 3 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  return make_vars(std::move(names));
}

namespace {

Exponents random_monomial(Rng& rng, std::size_t n, unsigned max_deg) {
  Exponents e(n, 0);
  if (n == 0) return e;
  const auto deg = static_cast<unsigned>(rng.below(max_deg + 1));
  for (unsigned k = 0; k < deg; ++k) ++e[rng.below(n)];
  return e;
}

int nonzero_coefficient(Rng& rng, int bound) {
  int c = rng.between(1, bound);
  return rng.coin() ? -c : c;
}

}  // namespace

Poly random_poly(Rng& rng, const VarList& vars, unsigned max_deg, unsigned max_terms, int bound, unsigned min_terms) {
  Poly p(vars);
  const auto terms = min_terms + static_cast<unsigned>(rng.below(max_terms - min_terms + 1));
  for (unsigned t = 0; t < terms; ++t)
    p.add_term(random_monomial(rng, vars->size(), max_deg), nonzero_coefficient(rng, bound));
  return p;
}

ExtElt random_homogeneous(Rng& rng, const AmbientPtr& ambient, int degree, unsigned max_deg, unsigned max_terms) {
  const auto subsets = subsets_of_size(ambient->rank(), static_cast<std::size_t>(-degree));
  ExtElt a(ambient);
  if (subsets.empty()) return a;
  const auto terms = 1 + rng.below(max_terms);
  for (std::uint64_t t = 0; t < terms; ++t) {
    const Mask s = subsets[rng.below(subsets.size())];
    Exponents e = random_monomial(rng, ambient->vars->size(), max_deg);
    a.add(s, Poly::monomial(ambient->vars, std::move(e), nonzero_coefficient(rng, 3)));
  }
  return a;
}

ExtElt random_element(Rng& rng, const AmbientPtr& ambient, unsigned max_deg, unsigned max_terms) {
  ExtElt a(ambient);
  const Mask full = ambient->rank() >= 32 ? ~Mask{0} : ((Mask{1} << ambient->rank()) - 1);
  const auto terms = 1 + rng.below(max_terms);
  for (std::uint64_t t = 0; t < terms; ++t) {
    const Mask s = static_cast<Mask>(rng.below(std::uint64_t{full} + 1));
    Exponents e = random_monomial(rng, ambient->vars->size(), max_deg);
    a.add(s, Poly::monomial(ambient->vars, std::move(e), nonzero_coefficient(rng, 3)));
  }
  return a;
}

Section random_section(Rng& rng, const VarList& vars, std::size_t m, unsigned max_deg, unsigned max_terms) {
  Section s;
  for (std::size_t j = 0; j < m; ++j) s.components.push_back(random_poly(rng, vars, max_deg, max_terms, 3, 0));
  return s;
}

std::vector<ExtElt> split_terms(const ExtElt& a) {
  std::vector<ExtElt> out;
  for (const auto& [mask, coeff] : a.terms())
    for (const auto& [e, c] : coeff.terms())
      out.push_back(ExtElt::basis_element(a.ambient(), mask, Poly::monomial(a.vars(), e, c)));
  return out;
}

}  // namespace dcrit
