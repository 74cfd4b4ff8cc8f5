#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dcrit/rational.hpp"

namespace dcrit {

using Exponents = std::vector<std::uint32_t>;

/// Ordered list of variable names shared between polynomials of one ring.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
bool same_vars(const VarList& a, const VarList& b);

/// Degree-reverse-lexicographic order, greatest first.
struct DegRevLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint32_t total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);

/// Result of `Poly::weighted_degree`.
struct WeightedDegree {
  enum class Kind { Any, Homogeneous, Inhomogeneous };
  Kind kind = Kind::Any;
  std::uint64_t value = 0;

  bool is_any() const { return kind == Kind::Any; }
  bool is_homogeneous() const { return kind == Kind::Homogeneous; }
  bool is_inhomogeneous() const { return kind == Kind::Inhomogeneous; }
  friend bool operator==(const WeightedDegree&, const WeightedDegree&) = default;
};

/// Multivariate polynomial over Q. Terms are kept in a map keyed by
/// exponent vectors in degrevlex order (leading term first), and zero
/// coefficients are never stored, so equal values have equal term maps.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, DegRevLexGreater>;

  Poly();
  explicit Poly(VarList vars);

  static Poly constant(VarList vars, const Rational& c);
  static Poly variable(VarList vars, std::size_t index);
  static Poly variable(VarList vars, const std::string& name);
  static Poly monomial(VarList vars, Exponents exps, const Rational& c = 1);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  const Exponents& leading_monomial() const;
  const Rational& leading_coefficient() const;
  std::uint32_t total_degree() const;

  /// Adds c * x^e in place.
  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  /// Multiplies by c * x^e.
  Poly mul_term(const Exponents& e, const Rational& c) const;

  Poly diff(std::size_t index) const;
  Poly diff(const std::string& name) const;

  /// Substitutes images[i] for the i-th variable; images live over `target`.
  Poly substitute(const VarList& target, std::span<const Poly> images) const;

  /// Re-expresses the polynomial over a ring whose variables contain ours.
  Poly embed(const VarList& target) const;

  WeightedDegree weighted_degree(std::span<const unsigned> weights) const;

  std::string to_string() const;

 private:
  void check_compatible(const Poly& other) const;

  VarList vars_;
  TermMap terms_;
};

std::size_t var_index(const VarList& vars, const std::string& name);

std::string monomial_to_string(const VarList& vars, const Exponents& e);

}  // namespace dcrit
