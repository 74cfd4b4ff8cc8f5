#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcrit/poly.hpp"

namespace dcrit {

/// Subset of {0..m-1} of exterior generators, bit i set iff generator i occurs.
/// A set bit pattern is read as the wedge of its generators in increasing order.
using Mask = std::uint32_t;
inline constexpr std::size_t kMaxGenerators = 32;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Sign of e_S ∧ e_T = sign * e_{S∪T}: the parity of the permutation that
/// merges the two increasing index lists. Zero when S and T overlap. Every
/// Koszul sign in the library goes through this function.
int merge_sign(Mask s, Mask t);

/// Indices of the set bits, increasing.
std::vector<std::size_t> mask_indices(Mask m);

/// All subsets of {0..m-1} of the given size, in lexicographic order of
/// their sorted index lists.
std::vector<Mask> subsets_of_size(std::size_t m, std::size_t size);

/// Ring variables together with the named basis of the free module F.
struct ExtAmbient {
  VarList vars;
  std::vector<std::string> basis;

  std::size_t rank() const { return basis.size(); }
};
using AmbientPtr = std::shared_ptr<const ExtAmbient>;

AmbientPtr make_ambient(VarList vars, std::vector<std::string> basis);
bool same_ambient(const AmbientPtr& a, const AmbientPtr& b);

/// Element of R ⊗ ∧•F. The generator subset S sits in cohomological
/// degree -|S|.
class ExtElt {
 public:
  using TermMap = std::map<Mask, Poly>;

  explicit ExtElt(AmbientPtr ambient);

  static ExtElt scalar(AmbientPtr ambient, const Poly& p);
  static ExtElt generator(AmbientPtr ambient, std::size_t index);
  static ExtElt basis_element(AmbientPtr ambient, Mask s, const Poly& coeff);

  const AmbientPtr& ambient() const { return ambient_; }
  const VarList& vars() const { return ambient_->vars; }
  std::size_t rank() const { return ambient_->rank(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Poly coefficient(Mask s) const;
  void add(Mask s, const Poly& coeff);

  /// Degree if all terms share one; nullopt for zero or mixed elements.
  std::optional<int> homogeneous_degree() const;
  /// Homogeneous degree, treating zero as degree `fallback`. Throws on mixed input.
  int degree_or(int fallback) const;
  ExtElt component(int degree) const;

  ExtElt& operator+=(const ExtElt& other);
  ExtElt& operator-=(const ExtElt& other);
  ExtElt operator-() const;
  friend ExtElt operator+(ExtElt a, const ExtElt& b) { return a += b; }
  friend ExtElt operator-(ExtElt a, const ExtElt& b) { return a -= b; }
  friend ExtElt operator*(const Poly& p, const ExtElt& a);
  friend ExtElt operator*(const Rational& c, const ExtElt& a);
  friend bool operator==(const ExtElt& a, const ExtElt& b);

  /// Applies `f` to every coefficient.
  template <typename F>
  ExtElt map_coefficients(F&& f) const {
    ExtElt r(ambient_);
    for (const auto& [s, c] : terms_) r.add(s, f(c));
    return r;
  }

  std::string to_string() const;

 private:
  void check_compatible(const ExtElt& other) const;

  AmbientPtr ambient_;
  TermMap terms_;
};

ExtElt wedge(const ExtElt& a, const ExtElt& b);

/// s ∈ P ≅ R^m, coordinates in the basis dual to the ambient generators.
struct Section {
  std::vector<Poly> components;

  std::size_t size() const { return components.size(); }
  bool is_zero() const;
  std::string to_string() const;
};

void check_section(const Section& s, const ExtAmbient& ambient);

/// Koszul contraction along s:
///   β_1∧…∧β_q  ↦  Σ_k (-1)^k β_k(s) β_1∧…β̂_k…∧β_q   (k = 1..q),
/// extended R-linearly. Raises cohomological degree by one.
ExtElt contract(const Section& s, const ExtElt& a);

/// Left derivative with respect to generator i:
///   e_{i_1}∧…∧e_{i_q} ↦ (-1)^{k-1} e_{…î_k…} when i = i_k, else 0.
ExtElt odd_derivative(std::size_t i, const ExtElt& a);

/// Partial derivative of every coefficient in the ring variable `index`.
ExtElt diff(const ExtElt& a, std::size_t index);

/// Finite-dimensional slice: basis of the degree-p part of R ⊗ ∧•F whose
/// weighted total degree equals `weight`.
struct WeightSlice {
  int degree = 0;
  unsigned weight = 0;
  std::vector<std::pair<Exponents, Mask>> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// All exponent vectors of weighted degree exactly `weight`.
std::vector<Exponents> monomials_of_weight(std::span<const unsigned> weights, unsigned weight);

}  // namespace dcrit
