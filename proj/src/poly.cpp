#include "dcrit/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dcrit/errors.hpp"

namespace dcrit {

namespace {

const VarList& empty_vars() {
  static const VarList vars = make_vars({});
  return vars;
}

}  // namespace

VarList make_vars(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw DomainError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw DomainError("duplicate variable '" + names[i] + "'");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) { return a == b || *a == *b; }

std::size_t var_index(const VarList& vars, const std::string& name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw DomainError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars->begin());
}

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool DegRevLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  // Ties: a > b iff the last nonzero entry of a - b is negative.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Poly::Poly() : vars_(empty_vars()) {}

Poly::Poly(VarList vars) : vars_(std::move(vars)) {}

Poly Poly::constant(VarList vars, const Rational& c) {
  Poly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.nvars(), 0), c);
  return p;
}

Poly Poly::variable(VarList vars, std::size_t index) {
  if (index >= vars->size()) throw DomainError("variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = 1;
  return monomial(std::move(vars), std::move(e));
}

Poly Poly::variable(VarList vars, const std::string& name) {
  const auto i = var_index(vars, name);
  return variable(std::move(vars), i);
}

Poly Poly::monomial(VarList vars, Exponents exps, const Rational& c) {
  if (exps.size() != vars->size()) throw DomainError("exponent vector length mismatch");
  Poly p(std::move(vars));
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && dcrit::total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const { return coefficient(Exponents(nvars(), 0)); }

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& Poly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, dcrit::total_degree(e));
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& other) const {
  if (!same_vars(vars_, other.vars_)) throw DomainError("polynomials over different variable lists");
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.vars_);
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Poly Poly::mul_term(const Exponents& e, const Rational& c) const {
  Poly r(vars_);
  if (c == 0) return r;
  Exponents f(nvars());
  // Multiplying by a monomial preserves the order, so hint at the end.
  for (const auto& [ea, ca] : terms_) {
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + e[i];
    r.terms_.emplace_hint(r.terms_.end(), f, ca * c);
  }
  return r;
}

Poly Poly::diff(std::size_t index) const {
  if (index >= nvars()) throw DomainError("variable index out of range");
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents f = e;
    --f[index];
    r.add_term(f, c * e[index]);
  }
  return r;
}

Poly Poly::diff(const std::string& name) const { return diff(var_index(vars_, name)); }

Poly Poly::substitute(const VarList& target, std::span<const Poly> images) const {
  if (images.size() != nvars()) throw DomainError("substitution needs one image per variable");
  for (const auto& img : images)
    if (!same_vars(img.vars(), target)) throw DomainError("substitution image over wrong variables");
  Poly result(target);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term = term * images[i];
    result += term;
  }
  return result;
}

Poly Poly::embed(const VarList& target) const {
  std::vector<std::size_t> pos(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) pos[i] = var_index(target, (*vars_)[i]);
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

WeightedDegree Poly::weighted_degree(std::span<const unsigned> weights) const {
  if (weights.size() != nvars()) throw DomainError("weight vector length mismatch");
  WeightedDegree result;
  for (const auto& [e, c] : terms_) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += std::uint64_t{weights[i]} * e[i];
    if (result.is_any()) {
      result = {WeightedDegree::Kind::Homogeneous, d};
    } else if (result.value != d) {
      return {WeightedDegree::Kind::Inhomogeneous, 0};
    }
  }
  return result;
}

std::string monomial_to_string(const VarList& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += (*vars)[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    const std::string mono = monomial_to_string(vars_, e);
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << '*' << mono;
    }
    first = false;
  }
  return out.str();
}

}  // namespace dcrit
