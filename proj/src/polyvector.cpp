#include "dcrit/polyvector.hpp"

#include <sstream>

#include "dcrit/errors.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/random.hpp"

namespace dcrit {

namespace {

int sign_of(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

ExtElt signed_elt(int sign, const ExtElt& a) { return sign > 0 ? a : -a; }

void check_polyvector(const PolyVector& a, const VarList& vars) {
  if (a.rank() != vars->size()) throw DomainError("polyvector rank does not match the number of variables");
}

std::string describe(const std::vector<std::pair<std::string, ExtElt>>& named) {
  std::ostringstream out;
  for (std::size_t i = 0; i < named.size(); ++i) {
    if (i) out << ", ";
    out << named[i].first << " = " << named[i].second.to_string();
  }
  return out.str();
}

}  // namespace

AmbientPtr polyvector_ambient(const VarList& vars) {
  std::vector<std::string> basis;
  for (const auto& v : *vars) basis.push_back("@" + v);
  return make_ambient(vars, std::move(basis));
}

AmbientPtr form_ambient(const VarList& vars) {
  std::vector<std::string> basis;
  for (const auto& v : *vars) basis.push_back("d_" + v);
  return make_ambient(vars, std::move(basis));
}

OneForm OneForm::exact(const Poly& f) {
  OneForm a;
  for (std::size_t i = 0; i < f.nvars(); ++i) a.components.push_back(f.diff(i));
  if (a.components.empty()) throw DomainError("one-form over zero variables");
  return a;
}

OneForm OneForm::zero(const VarList& vars) {
  if (vars->empty()) throw DomainError("one-form over zero variables");
  return OneForm{std::vector<Poly>(vars->size(), Poly(vars))};
}

OneForm OneForm::operator-(const OneForm& other) const {
  if (size() != other.size()) throw DomainError("one-forms of different length");
  OneForm r;
  for (std::size_t i = 0; i < size(); ++i) r.components.push_back(components[i] - other.components[i]);
  return r;
}

std::string OneForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + components[i].to_string() + ")*d_" + (*vars())[i];
  }
  return out.empty() ? "0" : out;
}

OneForm parse_one_form(std::string_view src, const VarList& vars) {
  const auto elt = parse_graded(src, form_ambient(vars));
  OneForm alpha{std::vector<Poly>(vars->size(), Poly(vars))};
  for (const auto& [s, c] : elt.terms()) {
    if (popcount(s) != 1) throw DomainError("expected a 1-form, got a term of degree " + std::to_string(popcount(s)));
    alpha.components[mask_indices(s).front()] = c;
  }
  return alpha;
}

std::optional<ClosednessFailure> closedness_failure(const OneForm& alpha) {
  const std::size_t n = alpha.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly di_aj = alpha.components[j].diff(i);
      Poly dj_ai = alpha.components[i].diff(j);
      if (!(di_aj == dj_ai)) return ClosednessFailure{i, j, std::move(di_aj), std::move(dj_ai)};
    }
  return std::nullopt;
}

VolumeForm::VolumeForm(Rational density) : density_(std::move(density)) {
  if (density_ == 0) throw DomainError("volume form density must be nonzero");
}

PolyVector d_alpha(const OneForm& alpha, const PolyVector& a) {
  if (alpha.size() != a.rank()) throw DomainError("one-form and polyvector dimensions differ");
  return contract(alpha.as_section(), a);
}

PolyVector schouten(const PolyVector& a, const PolyVector& b) {
  if (!same_ambient(a.ambient(), b.ambient())) throw DomainError("bracket of polyvectors over different ambients");
  const std::size_t n = a.rank();
  if (n != a.vars()->size()) throw DomainError("polyvector rank does not match the number of variables");
  PolyVector result(a.ambient());
  for (int p = 0; p <= static_cast<int>(n); ++p) {
    const PolyVector ap = a.component(-p);
    if (ap.is_zero()) continue;
    const int sign = sign_of(p);
    for (std::size_t i = 0; i < n; ++i) {
      result -= signed_elt(sign, wedge(odd_derivative(i, ap), diff(b, i)));
      result -= wedge(diff(ap, i), odd_derivative(i, b));
    }
  }
  return result;
}

std::vector<Poly> vector_components(const PolyVector& x) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < x.rank(); ++i) out.push_back(x.coefficient(Mask{1} << i));
  return out;
}

Poly apply_vector_field(const std::vector<Poly>& x, const Poly& f) {
  Poly r(f.vars());
  for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * f.diff(i);
  return r;
}

std::vector<Poly> lie_bracket(const std::vector<Poly>& x, const std::vector<Poly>& y) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(apply_vector_field(x, y[i]) - apply_vector_field(y, x[i]));
  return out;
}

Poly evaluate(const OneForm& alpha, const std::vector<Poly>& x) {
  if (x.size() != alpha.size()) throw DomainError("one-form and vector field dimensions differ");
  Poly r(alpha.vars());
  for (std::size_t i = 0; i < x.size(); ++i) r += alpha.components[i] * x[i];
  return r;
}

ExtElt interior(std::size_t j, const ExtElt& form) { return odd_derivative(j, form); }

ExtElt de_rham(const ExtElt& form) {
  ExtElt r(form.ambient());
  for (std::size_t i = 0; i < form.rank(); ++i) r += wedge(ExtElt::generator(form.ambient(), i), diff(form, i));
  return r;
}

ExtElt vol_contract(const VolumeForm& vol, const PolyVector& a) {
  check_polyvector(a, a.vars());
  const auto forms = form_ambient(a.vars());
  const std::size_t n = a.rank();
  const Mask full = n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  ExtElt result(forms);
  for (const auto& [mask, coeff] : a.terms()) {
    ExtElt w = ExtElt::basis_element(forms, full, Poly::constant(a.vars(), vol.density()));
    const auto idx = mask_indices(mask);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) w = interior(*it, w);
    result += coeff * w;
  }
  return result;
}

PolyVector vol_contract_inverse(const VolumeForm& vol, const ExtElt& form) {
  const auto pv = polyvector_ambient(form.vars());
  const std::size_t n = form.rank();
  const Mask full = n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  const auto one = Poly::constant(form.vars(), 1);
  PolyVector result(pv);
  for (const auto& [mask, coeff] : form.terms()) {
    const Mask complement = full & ~mask;
    const ExtElt image = vol_contract(vol, ExtElt::basis_element(pv, complement, one));
    // image = c·σ·dx_mask with σ = ±1.
    const Rational factor = image.coefficient(mask).constant_term();
    result.add(complement, coeff * Rational(1 / factor));
  }
  return result;
}

PolyVector bv_delta(const VolumeForm&, const PolyVector& a) {
  PolyVector r(a.ambient());
  for (std::size_t i = 0; i < a.rank(); ++i) r += diff(odd_derivative(i, a), i);
  return r;
}

PolyVector bv_delta_via_forms(const VolumeForm& vol, const PolyVector& a) {
  return vol_contract_inverse(vol, de_rham(vol_contract(vol, a)));
}

CheckReport check_gerstenhaber(std::size_t n, unsigned max_deg, unsigned trials, std::uint64_t seed) {
  const auto vars = standard_vars(n);
  const auto amb = polyvector_ambient(vars);
  Rng rng(seed);

  auto antisym_fails = [](const std::vector<ExtElt>& v, int da, int db) {
    const auto lhs = schouten(v[0], v[1]);
    const auto rhs = signed_elt(-sign_of(long{da + 1} * (db + 1)), schouten(v[1], v[0]));
    return !(lhs == rhs);
  };
  auto jacobi_fails = [](const std::vector<ExtElt>& v, int da, int db) {
    const auto lhs = schouten(v[0], schouten(v[1], v[2]));
    const auto rhs = schouten(schouten(v[0], v[1]), v[2]) +
                     signed_elt(sign_of(long{da + 1} * (db + 1)), schouten(v[1], schouten(v[0], v[2])));
    return !(lhs == rhs);
  };
  auto leibniz_fails = [](const std::vector<ExtElt>& v, int da, int db) {
    const auto lhs = schouten(v[0], wedge(v[1], v[2]));
    const auto rhs = wedge(schouten(v[0], v[1]), v[2]) +
                     signed_elt(sign_of(long{da + 1} * db), wedge(v[1], schouten(v[0], v[2])));
    return !(lhs == rhs);
  };

  CheckResult antisym{"antisymmetry"}, jacobi{"jacobi"}, leibniz{"leibniz"};
  auto record = [&](CheckResult& r, auto& pred, const std::vector<ExtElt>& v, int da, int db, unsigned trial) {
    if (r.status != Status::Pass || !pred(v, da, db)) return;
    auto small = minimize_counterexample(v, [&](const std::vector<ExtElt>& w) { return pred(w, da, db); });
    r.status = Status::Fail;
    std::vector<std::pair<std::string, ExtElt>> named{{"a", small[0]}, {"b", small[1]}};
    if (small.size() > 2) named.emplace_back("c", small[2]);
    r.counterexample = describe(named);
    r.detail = "first failure at trial " + std::to_string(trial);
  };

  for (unsigned t = 0; t < trials; ++t) {
    const int da = -static_cast<int>(rng.below(n + 1));
    const int db = -static_cast<int>(rng.below(n + 1));
    const int dc = -static_cast<int>(rng.below(n + 1));
    std::vector<ExtElt> v{random_homogeneous(rng, amb, da, max_deg, 3), random_homogeneous(rng, amb, db, max_deg, 3),
                          random_homogeneous(rng, amb, dc, max_deg, 3)};
    record(antisym, antisym_fails, {v[0], v[1]}, da, db, t);
    record(jacobi, jacobi_fails, v, da, db, t);
    record(leibniz, leibniz_fails, v, da, db, t);
  }
  for (auto* r : {&antisym, &jacobi, &leibniz})
    if (r->status == Status::Pass) r->detail = std::to_string(trials) + " trials, n = " + std::to_string(n);
  return CheckReport{{antisym, jacobi, leibniz}};
}

CompatReport check_bracket_compat(const OneForm& alpha, unsigned trials, std::uint64_t seed) {
  const auto vars = alpha.vars();
  const std::size_t n = alpha.size();
  const auto amb = polyvector_ambient(vars);
  CompatReport report;
  report.is_closed = is_closed(alpha);

  // Vector-field identity α([X,Y]) = −Y(α(X)) + X(α(Y)).
  CheckResult proof{"vector-field identity"};
  auto discrepancy = [&](const std::vector<Poly>& x, const std::vector<Poly>& y) {
    const Poly lhs = evaluate(alpha, lie_bracket(x, y));
    const Poly rhs = apply_vector_field(x, evaluate(alpha, y)) - apply_vector_field(y, evaluate(alpha, x));
    return rhs - lhs;
  };
  auto fail_pair = [&](const ExtElt& x, const ExtElt& y, const Poly& disc) {
    proof.status = Status::Fail;
    proof.counterexample = describe({{"X", x}, {"Y", y}}) + ", discrepancy = " + disc.to_string();
    report.discrepancy = disc;
  };
  const auto one = Poly::constant(vars, 1);
  for (std::size_t i = 0; i < n && proof.status == Status::Pass; ++i)
    for (std::size_t j = i + 1; j < n && proof.status == Status::Pass; ++j) {
      std::vector<Poly> x(n, Poly(vars)), y(n, Poly(vars));
      x[i] = one;
      y[j] = one;
      const Poly d = discrepancy(x, y);
      if (!d.is_zero()) fail_pair(ExtElt::generator(amb, i), ExtElt::generator(amb, j), d);
    }

  Rng rng(seed);
  CheckResult graded{"bracket derivation"};
  auto graded_fails = [&](const std::vector<ExtElt>& v, int da) {
    const auto lhs = d_alpha(alpha, schouten(v[0], v[1]));
    const auto rhs = schouten(d_alpha(alpha, v[0]), v[1]) +
                     signed_elt(sign_of(da + 1), schouten(v[0], d_alpha(alpha, v[1])));
    return !(lhs == rhs);
  };
  for (unsigned t = 0; t < trials; ++t) {
    const int da = -static_cast<int>(rng.below(n + 1));
    const int db = -static_cast<int>(rng.below(n + 1));
    std::vector<ExtElt> v{random_homogeneous(rng, amb, da, 2, 3), random_homogeneous(rng, amb, db, 2, 3)};
    if (proof.status == Status::Pass) {
      const auto x = random_homogeneous(rng, amb, -1, 2, 3);
      const auto y = random_homogeneous(rng, amb, -1, 2, 3);
      const Poly d = discrepancy(vector_components(x), vector_components(y));
      if (!d.is_zero()) fail_pair(x, y, d);
    }
    if (graded.status == Status::Pass && graded_fails(v, da)) {
      auto small = minimize_counterexample(v, [&](const std::vector<ExtElt>& w) { return graded_fails(w, da); });
      graded.status = Status::Fail;
      graded.counterexample = describe({{"a", small[0]}, {"b", small[1]}});
      graded.detail = "first failure at trial " + std::to_string(t);
    }
  }
  CheckResult closed{"closed", report.is_closed ? Status::Pass : Status::Fail, std::nullopt, "", true};
  if (auto w = closedness_failure(alpha)) {
    closed.detail = "d_" + (*vars)[w->i] + "(a_" + (*vars)[w->j] + ") = " + w->di_aj.to_string() + " != d_" +
                    (*vars)[w->j] + "(a_" + (*vars)[w->i] + ") = " + w->dj_ai.to_string();
  }
  report.holds = proof.status == Status::Pass && graded.status == Status::Pass;
  report.counterexample = proof.counterexample ? proof.counterexample : graded.counterexample;
  report.checks.checks = {closed, proof, graded};
  return report;
}

CheckReport check_bv(std::size_t n, unsigned trials, std::uint64_t seed) {
  const auto vars = standard_vars(n);
  const auto amb = polyvector_ambient(vars);
  Rng rng(seed);

  CheckResult squared{"delta squared"}, generating{"generating relation"}, intertwine{"intertwining"},
      roundtrip{"vol roundtrip"}, nonderivation{"delta not a derivation", Status::Fail},
      anticommute{"delta vs d_alpha", Status::Pass, std::nullopt, "", true};
  std::size_t anti_count = 0, comm_count = 0, samples = 0;

  auto fail = [](CheckResult& r, std::string what, unsigned t) {
    if (r.status != Status::Pass) return;
    r.status = Status::Fail;
    r.counterexample = std::move(what);
    r.detail = "first failure at trial " + std::to_string(t);
  };

  for (unsigned t = 0; t < trials; ++t) {
    int c = rng.between(1, 3);
    const VolumeForm vol(rng.coin() ? -c : c);
    const int da = -static_cast<int>(rng.below(n + 1));
    const int db = -static_cast<int>(rng.below(n + 1));
    const auto a = random_homogeneous(rng, amb, da, 3, 3);
    const auto b = random_homogeneous(rng, amb, db, 3, 3);

    if (!bv_delta(vol, bv_delta(vol, a)).is_zero()) fail(squared, describe({{"a", a}}), t);

    auto generating_fails = [&](const std::vector<ExtElt>& v) {
      const auto inner = bv_delta(vol, wedge(v[0], v[1])) - wedge(bv_delta(vol, v[0]), v[1]) -
                         signed_elt(sign_of(da), wedge(v[0], bv_delta(vol, v[1])));
      return !(schouten(v[0], v[1]) == signed_elt(-sign_of(da), inner));
    };
    if (generating.status == Status::Pass && generating_fails({a, b})) {
      auto small = minimize_counterexample(std::vector<ExtElt>{a, b}, generating_fails);
      fail(generating, describe({{"a", small[0]}, {"b", small[1]}}), t);
    }

    if (!(vol_contract(vol, bv_delta(vol, a)) == de_rham(vol_contract(vol, a))) ||
        !(bv_delta(vol, a) == bv_delta_via_forms(vol, a)))
      fail(intertwine, describe({{"a", a}}), t);

    if (!(vol_contract_inverse(vol, vol_contract(vol, a)) == a)) fail(roundtrip, describe({{"a", a}}), t);

    if (nonderivation.status == Status::Fail) {
      const auto lhs = bv_delta(vol, wedge(a, b));
      const auto rhs = wedge(bv_delta(vol, a), b) + signed_elt(sign_of(da), wedge(a, bv_delta(vol, b)));
      if (!(lhs == rhs)) {
        nonderivation.status = Status::Pass;
        nonderivation.counterexample = describe({{"a", a}, {"b", b}});
        nonderivation.detail = "witness at trial " + std::to_string(t);
      }
    }

    // Δ against d_α for exact α = df.
    const Poly f = random_poly(rng, vars, 3, 3);
    if (n > 0) {
      const auto alpha = OneForm::exact(f);
      const auto dd = bv_delta(vol, d_alpha(alpha, a));
      const auto ddr = d_alpha(alpha, bv_delta(vol, a));
      ++samples;
      if ((dd + ddr).is_zero()) ++anti_count;
      if ((dd - ddr).is_zero()) ++comm_count;
    }
  }
  if (nonderivation.status == Status::Fail) {
    // Fall back to the canonical witness a = x, b = ∂_x.
    if (n > 0) {
      const VolumeForm vol(1);
      const auto a = ExtElt::scalar(amb, Poly::variable(vars, 0));
      const auto b = ExtElt::generator(amb, 0);
      const auto lhs = bv_delta(vol, wedge(a, b));
      const auto rhs = wedge(bv_delta(vol, a), b) + wedge(a, bv_delta(vol, b));
      if (!(lhs == rhs)) {
        nonderivation.status = Status::Pass;
        nonderivation.counterexample = describe({{"a", a}, {"b", b}});
        nonderivation.detail = "fallback witness";
      }
    }
    if (nonderivation.status == Status::Fail) nonderivation.counterexample = "no witness found";
  }
  anticommute.detail = "d_alpha for alpha = df: Delta d_alpha + d_alpha Delta = 0 in " + std::to_string(anti_count) +
                       "/" + std::to_string(samples) + " samples; commutes in " + std::to_string(comm_count) + "/" +
                       std::to_string(samples);
  for (auto* r : {&squared, &generating, &intertwine, &roundtrip})
    if (r->status == Status::Pass) r->detail = std::to_string(trials) + " trials, n = " + std::to_string(n);
  return CheckReport{{squared, generating, intertwine, roundtrip, nonderivation, anticommute}};
}

}  // namespace dcrit
