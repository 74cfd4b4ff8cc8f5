#include "dcrit/exterior.hpp"

#include <sstream>

#include "dcrit/errors.hpp"

namespace dcrit {

int merge_sign(Mask s, Mask t) {
  if (s & t) return 0;
  // Each element j of t has to pass every element of s greater than j.
  int swaps = 0;
  for (Mask rest = t; rest; rest &= rest - 1) {
    const int j = __builtin_ctz(rest);
    const Mask above = j >= 31 ? Mask{0} : (s >> (j + 1));
    swaps += popcount(above);
  }
  return (swaps & 1) ? -1 : 1;
}

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(__builtin_ctz(m)));
  return out;
}

std::vector<Mask> subsets_of_size(std::size_t m, std::size_t size) {
  std::vector<Mask> out;
  if (size > m) return out;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Mask mask = 0;
    for (auto i : idx) mask |= Mask{1} << i;
    out.push_back(mask);
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == m - size + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

AmbientPtr make_ambient(VarList vars, std::vector<std::string> basis) {
  if (basis.size() > kMaxGenerators) throw DomainError("too many exterior generators");
  return std::make_shared<const ExtAmbient>(ExtAmbient{std::move(vars), std::move(basis)});
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
  return a == b || (same_vars(a->vars, b->vars) && a->basis == b->basis);
}

ExtElt::ExtElt(AmbientPtr ambient) : ambient_(std::move(ambient)) {}

ExtElt ExtElt::scalar(AmbientPtr ambient, const Poly& p) { return basis_element(std::move(ambient), 0, p); }

ExtElt ExtElt::generator(AmbientPtr ambient, std::size_t index) {
  if (index >= ambient->rank()) throw DomainError("generator index out of range");
  const auto one = Poly::constant(ambient->vars, 1);
  return basis_element(std::move(ambient), Mask{1} << index, one);
}

ExtElt ExtElt::basis_element(AmbientPtr ambient, Mask s, const Poly& coeff) {
  ExtElt r(std::move(ambient));
  if (r.rank() < kMaxGenerators && (s >> r.rank()) != 0) throw DomainError("generator subset out of range");
  r.add(s, coeff);
  return r;
}

Poly ExtElt::coefficient(Mask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Poly(vars()) : it->second;
}

void ExtElt::add(Mask s, const Poly& coeff) {
  if (coeff.is_zero()) return;
  if (!same_vars(coeff.vars(), vars())) throw DomainError("coefficient over wrong variables");
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> ExtElt::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [s, c] : terms_) {
    const int d = -popcount(s);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

int ExtElt::degree_or(int fallback) const {
  if (is_zero()) return fallback;
  auto d = homogeneous_degree();
  if (!d) throw DomainError("element is not homogeneous");
  return *d;
}

ExtElt ExtElt::component(int degree) const {
  ExtElt r(ambient_);
  for (const auto& [s, c] : terms_)
    if (-popcount(s) == degree) r.terms_.emplace(s, c);
  return r;
}

void ExtElt::check_compatible(const ExtElt& other) const {
  if (!same_ambient(ambient_, other.ambient_)) throw DomainError("exterior elements over different ambients");
}

ExtElt& ExtElt::operator+=(const ExtElt& other) {
  check_compatible(other);
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

ExtElt& ExtElt::operator-=(const ExtElt& other) {
  check_compatible(other);
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

ExtElt ExtElt::operator-() const {
  ExtElt r(ambient_);
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

ExtElt operator*(const Poly& p, const ExtElt& a) {
  ExtElt r(a.ambient_);
  for (const auto& [s, c] : a.terms_) r.add(s, p * c);
  return r;
}

ExtElt operator*(const Rational& q, const ExtElt& a) {
  ExtElt r(a.ambient_);
  if (q == 0) return r;
  for (const auto& [s, c] : a.terms_) r.terms_.emplace(s, c * q);
  return r;
}

bool operator==(const ExtElt& a, const ExtElt& b) {
  return same_ambient(a.ambient_, b.ambient_) && a.terms_ == b.terms_;
}

std::string ExtElt::to_string() const {
  if (terms_.empty()) return "0";
  // Print low exterior degree first, then by generator order.
  std::vector<Mask> order;
  for (const auto& [s, c] : terms_) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return mask_indices(a) < mask_indices(b);
  });
  std::ostringstream out;
  bool first = true;
  for (Mask s : order) {
    if (!first) out << " + ";
    first = false;
    const Poly& c = terms_.at(s);
    std::string gens;
    for (auto i : mask_indices(s)) {
      if (!gens.empty()) gens += "/\\";
      gens += ambient_->basis[i];
    }
    if (gens.empty()) {
      out << '(' << c.to_string() << ')';
    } else {
      out << '(' << c.to_string() << ")*" << gens;
    }
  }
  return out.str();
}

ExtElt wedge(const ExtElt& a, const ExtElt& b) {
  if (!same_ambient(a.ambient(), b.ambient())) throw DomainError("wedge of elements over different ambients");
  ExtElt r(a.ambient());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      const int sign = merge_sign(sa, sb);
      if (sign == 0) continue;
      r.add(sa | sb, sign > 0 ? ca * cb : -(ca * cb));
    }
  }
  return r;
}

bool Section::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

std::string Section::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ", ";
    out += components[i].to_string();
  }
  return out + ")";
}

void check_section(const Section& s, const ExtAmbient& ambient) {
  if (s.size() != ambient.rank())
    throw DomainError("section has " + std::to_string(s.size()) + " components, ambient rank is " +
                      std::to_string(ambient.rank()));
  for (const auto& c : s.components)
    if (!same_vars(c.vars(), ambient.vars)) throw DomainError("section component over wrong variables");
}

ExtElt contract(const Section& s, const ExtElt& a) {
  check_section(s, *a.ambient());
  ExtElt r(a.ambient());
  for (const auto& [mask, coeff] : a.terms()) {
    int k = 0;
    for (auto i : mask_indices(mask)) {
      ++k;
      const auto& si = s.components[i];
      if (si.is_zero()) continue;
      const Poly term = coeff * si;
      r.add(mask & ~(Mask{1} << i), (k & 1) ? -term : term);
    }
  }
  return r;
}

ExtElt odd_derivative(std::size_t i, const ExtElt& a) {
  if (i >= a.rank()) throw DomainError("generator index out of range");
  const Mask bit = Mask{1} << i;
  ExtElt r(a.ambient());
  for (const auto& [mask, coeff] : a.terms()) {
    if (!(mask & bit)) continue;
    const int before = popcount(mask & (bit - 1));
    r.add(mask & ~bit, (before & 1) ? -coeff : coeff);
  }
  return r;
}

ExtElt diff(const ExtElt& a, std::size_t index) {
  return a.map_coefficients([index](const Poly& c) { return c.diff(index); });
}

std::vector<Exponents> monomials_of_weight(std::span<const unsigned> weights, unsigned weight) {
  std::vector<Exponents> out;
  const std::size_t n = weights.size();
  if (n == 0) {
    if (weight == 0) out.emplace_back();
    return out;
  }
  for (auto w : weights)
    if (w == 0) throw DomainError("weights must be positive");
  Exponents e(n, 0);
  // Depth-first over the first n-1 variables; the last one is forced.
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == n) {
      if (remaining % weights[i] == 0) {
        e[i] = remaining / weights[i];
        out.push_back(e);
      }
      return;
    }
    for (unsigned k = 0; k * weights[i] <= remaining; ++k) {
      e[i] = k;
      self(self, i + 1, remaining - k * weights[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, weight);
  return out;
}

}  // namespace dcrit
