#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dcrit/exterior.hpp"
#include "dcrit/groebner.hpp"
#include "dcrit/poly_matrix.hpp"

namespace dcrit {

/// Free complex given by explicit matrices; differentials[i] maps degree
/// lowest_degree + i to lowest_degree + i + 1.
struct MatrixComplex {
  VarList vars;
  int lowest_degree = 0;
  std::vector<PolyMatrix> differentials;
};

bool check_d_squared(const MatrixComplex& c);

/// The Koszul cdga K(R,P;s) = (R ⊗ ∧•P∨, contraction along s) for a free
/// P of rank m. Degree p (−m ≤ p ≤ 0) has basis the subsets of size −p.
class KoszulComplex {
 public:
  static KoszulComplex build(VarList vars, std::size_t rank, Section s);

  const AmbientPtr& ambient() const { return ambient_; }
  const VarList& vars() const { return ambient_->vars; }
  const Section& section() const { return section_; }
  std::size_t rank() const { return ambient_->rank(); }
  int lowest_degree() const { return -static_cast<int>(rank()); }

  /// Basis of the degree-p component, lexicographic subsets.
  std::vector<Mask> basis(int degree) const;
  std::size_t component_rank(int degree) const;

  ExtElt differential(const ExtElt& a) const { return contract(section_, a); }

  /// Matrix of d: C^degree → C^{degree+1} in the `basis` ordering
  /// (rows index the target).
  PolyMatrix differential_matrix(int degree) const;
  MatrixComplex to_matrix_complex() const;

 private:
  KoszulComplex(AmbientPtr ambient, Section s) : ambient_(std::move(ambient)), section_(std::move(s)) {}

  AmbientPtr ambient_;
  Section section_;
};

KoszulComplex build_koszul(VarList vars, std::size_t rank, Section s);
bool check_d_squared(const KoszulComplex& c);

/// K(R;P) = S ⊗_R ∧•P∨ with S = R[ξ_1..ξ_m]. Its differential is the
/// Koszul contraction over S along the tautological section (ξ_1,…,ξ_m).
class FancyKoszul {
 public:
  static FancyKoszul build(VarList base_vars, std::size_t rank);

  const VarList& base_vars() const { return base_vars_; }
  const VarList& vars() const { return complex_.vars(); }
  std::size_t rank() const { return complex_.rank(); }
  std::size_t base_count() const { return base_vars_->size(); }
  /// Index of ξ_j in `vars()`.
  std::size_t fiber_index(std::size_t j) const { return base_count() + j; }

  const KoszulComplex& complex() const { return complex_; }

 private:
  FancyKoszul(VarList base, KoszulComplex c) : base_vars_(std::move(base)), complex_(std::move(c)) {}

  VarList base_vars_;
  KoszulComplex complex_;
};

FancyKoszul build_fancy_koszul(VarList base_vars, std::size_t rank);
bool check_d_squared(const FancyKoszul& c);

struct BaseChangeDiscrepancy {
  int degree = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string substituted;
  std::string direct;
};

struct BaseChangeReport {
  bool equal = true;
  std::optional<BaseChangeDiscrepancy> witness;
};

/// Substitutes ξ_j := s_j in the fancy differential matrices and compares
/// them entry by entry with those of build_koszul(base, m, s).
BaseChangeReport base_change_compare(const FancyKoszul& f, const Section& s);

/// The augmentation K(R,P;s) → R/(s_1,…,s_m).
struct Augmentation {
  std::vector<Poly> ideal_generators;
  GroebnerBasis target;
  /// The composite C^{-1} → C^0 → R/(s) vanishes.
  bool composite_vanishes = false;

  /// Degree-0 projection followed by reduction modulo the target ideal.
  Poly apply(const ExtElt& a) const;
};

Augmentation augmentation(const KoszulComplex& c);

}  // namespace dcrit
