#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dcrit/poly.hpp"

namespace dcrit {

/// Reduced, monic Gröbner basis under degrevlex with the declared
/// variable order.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(VarList vars, std::vector<Poly> generators = {});

  const VarList& vars() const { return vars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const;

  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

  /// Whether R/I is finite-dimensional over Q (every variable has a pure
  /// power among the leading monomials).
  bool is_zero_dimensional() const;

  /// Monomials not divisible by any leading monomial, in degrevlex order
  /// (ascending). Requires a zero-dimensional ideal.
  std::vector<Exponents> standard_monomials() const;

 private:
  VarList vars_;
  std::vector<Poly> gens_;
};

/// Buchberger's algorithm with the coprime-leading-monomial criterion.
/// All generators must share one variable list.
GroebnerBasis buchberger(const std::vector<Poly>& gens);
GroebnerBasis buchberger(const VarList& vars, const std::vector<Poly>& gens);

/// dim_Q R/I, or "infinite".
class QuotientDimension {
 public:
  static QuotientDimension finite(std::size_t d) { return QuotientDimension(d); }
  static QuotientDimension infinite() { return QuotientDimension(std::nullopt); }

  bool is_infinite() const { return !value_; }
  std::size_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }
  friend bool operator==(const QuotientDimension&, const QuotientDimension&) = default;

 private:
  explicit QuotientDimension(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

QuotientDimension quotient_dimension(const GroebnerBasis& gb);
QuotientDimension quotient_dimension(const VarList& vars, const std::vector<Poly>& gens);

/// Jacobian ideal (∂f/∂x_1, …, ∂f/∂x_n).
std::vector<Poly> jacobian_ideal(const Poly& f);

/// dim_Q of the Jacobian ring; "infinite" for non-isolated critical loci.
/// Throws for constant f.
QuotientDimension milnor_number(const Poly& f);

}  // namespace dcrit
