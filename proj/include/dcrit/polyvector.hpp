#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcrit/check.hpp"
#include "dcrit/exterior.hpp"

namespace dcrit {

/// Polyvector fields on affine n-space: ExtElt whose generator i is the
/// coordinate field ∂_i (printed "@x"). A p-vector has degree −p.
using PolyVector = ExtElt;

AmbientPtr polyvector_ambient(const VarList& vars);
/// Differential forms with generators dx_i (printed "d_x").
AmbientPtr form_ambient(const VarList& vars);

/// α = Σ a_i dx_i.
struct OneForm {
  std::vector<Poly> components;

  static OneForm exact(const Poly& f);
  static OneForm zero(const VarList& vars);

  const VarList& vars() const { return components.front().vars(); }
  std::size_t size() const { return components.size(); }
  Section as_section() const { return Section{components}; }
  OneForm operator-(const OneForm& other) const;
  std::string to_string() const;
};

/// Pair (i, j) with ∂_i a_j ≠ ∂_j a_i.
struct ClosednessFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  Poly di_aj;
  Poly dj_ai;
};

/// Parses "a*d_x + b*d_y"; every term must be a single differential.
OneForm parse_one_form(std::string_view src, const VarList& vars);

std::optional<ClosednessFailure> closedness_failure(const OneForm& alpha);
inline bool is_closed(const OneForm& alpha) { return !closedness_failure(alpha).has_value(); }

/// Constant-density volume form c·dx_1∧…∧dx_n, c ≠ 0.
class VolumeForm {
 public:
  explicit VolumeForm(Rational density);
  const Rational& density() const { return density_; }

 private:
  Rational density_;
};

/// d_α = contraction along α, identifying P = Ω¹ and P∨ = T.
PolyVector d_alpha(const OneForm& alpha, const PolyVector& a);

/// Schouten–Nijenhuis bracket, degree +1. On a p-vector P:
///   ⟦P,Q⟧ = −Σ_i [ (−1)^p (∂_{θ_i}P)(∂_{x_i}Q) + (∂_{x_i}P)(∂_{θ_i}Q) ]
/// with ∂_{θ_i} the left generator derivative. This gives ⟦X,f⟧ = X(f)
/// and ⟦X,Y⟧ = [X,Y] on vector fields.
PolyVector schouten(const PolyVector& a, const PolyVector& b);

/// Components of a vector field (the arity-one part).
std::vector<Poly> vector_components(const PolyVector& x);
/// X(f) = Σ X_i ∂_i f.
Poly apply_vector_field(const std::vector<Poly>& x, const Poly& f);
/// Lie bracket of vector fields, coordinatewise.
std::vector<Poly> lie_bracket(const std::vector<Poly>& x, const std::vector<Poly>& y);
/// α(X) = Σ a_i X_i.
Poly evaluate(const OneForm& alpha, const std::vector<Poly>& x);

/// i_{∂_j} on forms (left contraction).
ExtElt interior(std::size_t j, const ExtElt& form);
/// De Rham differential on forms.
ExtElt de_rham(const ExtElt& form);

/// i_vol(f ∂_{i_1}∧…∧∂_{i_p}) = f · i_{∂_{i_1}} ∘ … ∘ i_{∂_{i_p}} (vol).
ExtElt vol_contract(const VolumeForm& vol, const PolyVector& a);
PolyVector vol_contract_inverse(const VolumeForm& vol, const ExtElt& form);

/// Divergence operator Δ(f ∂_{i_1}∧…∧∂_{i_p}) = Σ_k (−1)^{k−1} ∂_{i_k}f ∂_{i_1}∧…∂̂_{i_k}…∧∂_{i_p}.
PolyVector bv_delta(const VolumeForm& vol, const PolyVector& a);
/// i_vol⁻¹ ∘ d_dR ∘ i_vol, computed through forms.
PolyVector bv_delta_via_forms(const VolumeForm& vol, const PolyVector& a);

/// Antisymmetry, Jacobi and Leibniz on random homogeneous polyvectors.
CheckReport check_gerstenhaber(std::size_t n, unsigned max_deg, unsigned trials, std::uint64_t seed);

struct CompatReport {
  bool holds = true;
  bool is_closed = true;
  std::optional<std::string> counterexample;
  /// (−Y(α(X)) + X(α(Y))) − α([X,Y]) on the reported vector-field pair.
  std::optional<Poly> discrepancy;
  CheckReport checks;
};

/// d_α⟦a,b⟧ = ⟦d_α a,b⟧ + (−1)^{|a|+1}⟦a,d_α b⟧ on random polyvectors, plus
/// α([X,Y]) = −Y(α(X)) + X(α(Y)) on coordinate and random vector fields.
CompatReport check_bracket_compat(const OneForm& alpha, unsigned trials, std::uint64_t seed);

/// Δ² = 0, the bracket-generating relation, intertwining with d_dR, the
/// failure of the derivation law for Δ, and (informational) Δ vs d_α.
CheckReport check_bv(std::size_t n, unsigned trials, std::uint64_t seed);

}  // namespace dcrit
