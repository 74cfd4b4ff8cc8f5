#include "dcrit/coalgebra.hpp"

#include "dcrit/errors.hpp"
#include "dcrit/random.hpp"

namespace dcrit {

namespace {

Poly signed_poly(int sign, const Poly& p) { return sign > 0 ? p : -p; }

// Terms of Δ(e_S): every ordered split S = A ⊔ B with its merge sign.
template <typename F>
void for_each_split(Mask s, F&& f) {
  // Enumerate submasks A of S (including 0 and S).
  Mask a = s;
  while (true) {
    const Mask b = s & ~a;
    f(a, b, merge_sign(a, b));
    if (a == 0) break;
    a = (a - 1) & s;
  }
}

}  // namespace

TensorElt comultiply(const ExtElt& a) {
  TensorElt r(a.ambient());
  for (const auto& [s, c] : a.terms())
    for_each_split(s, [&](Mask left, Mask right, int sign) { r.add({left, right}, signed_poly(sign, c)); });
  return r;
}

Poly counit(const ExtElt& a) { return a.coefficient(0); }

ExtElt antipode(const ExtElt& a) {
  ExtElt r(a.ambient());
  for (const auto& [s, c] : a.terms()) r.add(s, (popcount(s) & 1) ? -c : c);
  return r;
}

TensorElt coaction(const KoszulComplex& k, const ExtElt& a) {
  if (!same_ambient(k.ambient(), a.ambient())) throw DomainError("element is not a cochain of the Koszul complex");
  return comultiply(a);
}

TensorElt multiply(const TensorElt& x, const TensorElt& y) {
  if (!same_ambient(x.ambient(), y.ambient())) throw DomainError("tensors over different ambients");
  TensorElt r(x.ambient());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      const int s1 = merge_sign(kx[0], ky[0]);
      const int s2 = merge_sign(kx[1], ky[1]);
      if (s1 == 0 || s2 == 0) continue;
      const int koszul = (popcount(kx[1]) * popcount(ky[0])) % 2 ? -1 : 1;
      r.add({kx[0] | ky[0], kx[1] | ky[1]}, signed_poly(s1 * s2 * koszul, cx * cy));
    }
  return r;
}

TensorElt flip(const TensorElt& x) {
  TensorElt r(x.ambient());
  for (const auto& [k, c] : x.terms()) {
    const int sign = (popcount(k[0]) * popcount(k[1])) % 2 ? -1 : 1;
    r.add({k[1], k[0]}, signed_poly(sign, c));
  }
  return r;
}

ExtElt multiply_factors(const TensorElt& x) {
  ExtElt r(x.ambient());
  for (const auto& [k, c] : x.terms()) {
    const int sign = merge_sign(k[0], k[1]);
    if (sign != 0) r.add(k[0] | k[1], signed_poly(sign, c));
  }
  return r;
}

Tensor<3> comultiply_left(const TensorElt& x) {
  Tensor<3> r(x.ambient());
  for (const auto& [k, c] : x.terms())
    for_each_split(k[0], [&](Mask a, Mask b, int sign) { r.add({a, b, k[1]}, signed_poly(sign, c)); });
  return r;
}

Tensor<3> comultiply_right(const TensorElt& x) {
  Tensor<3> r(x.ambient());
  for (const auto& [k, c] : x.terms())
    for_each_split(k[1], [&](Mask a, Mask b, int sign) { r.add({k[0], a, b}, signed_poly(sign, c)); });
  return r;
}

ExtElt counit_left(const TensorElt& x) {
  ExtElt r(x.ambient());
  for (const auto& [k, c] : x.terms())
    if (k[0] == 0) r.add(k[1], c);
  return r;
}

ExtElt counit_right(const TensorElt& x) {
  ExtElt r(x.ambient());
  for (const auto& [k, c] : x.terms())
    if (k[1] == 0) r.add(k[0], c);
  return r;
}

TensorElt antipode_left(const TensorElt& x) {
  TensorElt r(x.ambient());
  for (const auto& [k, c] : x.terms()) r.add(k, (popcount(k[0]) & 1) ? -c : c);
  return r;
}

TensorElt antipode_right(const TensorElt& x) {
  TensorElt r(x.ambient());
  for (const auto& [k, c] : x.terms()) r.add(k, (popcount(k[1]) & 1) ? -c : c);
  return r;
}

TensorElt differential_left(const KoszulComplex& k, const TensorElt& x) {
  TensorElt r(x.ambient());
  for (const auto& [key, c] : x.terms()) {
    const ExtElt image = k.differential(ExtElt::basis_element(x.ambient(), key[0], c));
    for (const auto& [s, coeff] : image.terms()) r.add({s, key[1]}, coeff);
  }
  return r;
}

CheckReport check_coalgebra(std::size_t m, unsigned trials, std::uint64_t seed) {
  const auto vars = standard_vars(2);
  std::vector<std::string> basis;
  for (std::size_t j = 0; j < m; ++j) basis.push_back("e" + std::to_string(j + 1));
  const auto amb = make_ambient(vars, basis);
  Rng rng(seed);

  CheckResult coassoc{"coassociativity"}, counit_law{"counit"}, cocomm{"graded cocommutativity"},
      hopf{"antipode"}, algebra{"algebra map"}, chain{"coaction chain map"}, coaction_laws{"coaction coassociative"};
  auto fail = [](CheckResult& r, const std::string& what, unsigned t) {
    if (r.status != Status::Pass) return;
    r.status = Status::Fail;
    r.counterexample = what;
    r.detail = "first failure at trial " + std::to_string(t);
  };

  for (unsigned t = 0; t < trials; ++t) {
    const auto a = random_element(rng, amb, 2, 4);
    const auto b = random_element(rng, amb, 2, 4);
    // Alternate homogeneous and inhomogeneous sections.
    Section s = random_section(rng, vars, m, 3, 3);
    const auto k = build_koszul(vars, m, s);

    const auto da = comultiply(a);
    if (!(comultiply_left(da) == comultiply_right(da))) fail(coassoc, "a = " + a.to_string(), t);
    if (!(counit_left(da) == a) || !(counit_right(da) == a)) fail(counit_law, "a = " + a.to_string(), t);
    if (!(flip(da) == da)) fail(cocomm, "a = " + a.to_string(), t);
    const auto unit_counit = ExtElt::scalar(amb, counit(a));
    if (!(multiply_factors(antipode_left(da)) == unit_counit) || !(multiply_factors(antipode_right(da)) == unit_counit))
      fail(hopf, "a = " + a.to_string(), t);
    if (!(comultiply(wedge(a, b)) == multiply(da, comultiply(b))))
      fail(algebra, "a = " + a.to_string() + ", b = " + b.to_string(), t);

    const auto rho = coaction(k, a);
    if (!(differential_left(k, rho) == coaction(k, k.differential(a))))
      fail(chain, "a = " + a.to_string() + ", s = " + s.to_string(), t);
    if (!(comultiply_left(rho) == comultiply_right(rho)) || !(counit_right(rho) == a))
      fail(coaction_laws, "a = " + a.to_string(), t);
  }
  CheckReport report{{coassoc, counit_law, cocomm, hopf, algebra, chain, coaction_laws}};
  for (auto& r : report.checks)
    if (r.status == Status::Pass) r.detail = std::to_string(trials) + " trials, m = " + std::to_string(m);
  return report;
}

}  // namespace dcrit
