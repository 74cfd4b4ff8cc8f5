#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dcrit/errors.hpp"
#include "dcrit/groebner.hpp"
#include "dcrit/koszul.hpp"
#include "dcrit/poly_matrix.hpp"
#include "dcrit/polyvector.hpp"

namespace dcrit {

/// Entry (i, j) = ∂²f/∂x_i∂x_j.
PolyMatrix hessian(const Poly& f);

/// Jacobian of a 1-form: entry (i, j) = ∂_j a_i.
PolyMatrix jacobian(const OneForm& alpha);

/// R^n → R^n in degrees 0 and 1.
struct TwoTermComplex {
  PolyMatrix differential;

  std::size_t rank() const { return differential.rows(); }
  /// rank(C^0) − rank(C^1).
  long euler_characteristic() const {
    return static_cast<long>(differential.cols()) - static_cast<long>(differential.rows());
  }
};

/// Tangent complex of Crit(f): differential = Hess(f).
TwoTermComplex tangent_complex(const Poly& f);

struct PairingReport {
  PolyMatrix hessian;
  bool symmetric = false;
  bool nondegenerate = false;
  std::string duality_map;
  /// First (i, j) with d_ij ≠ d_ji.
  std::optional<std::pair<std::size_t, std::size_t>> asymmetry;
};

/// Level-wise identity T → L[−1]; it is a chain map iff d = dᵀ.
PairingReport pairing_report(const TwoTermComplex& t);
PairingReport minus_one_pairing(const Poly& f);

/// Dimensions of the cohomology of the two-term complex tensored with R/J.
struct RestrictedCohomology {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
};

struct ObstructionData {
  TwoTermComplex restricted;  ///< differential entries in normal form mod J
  PolyMatrix form;            ///< symmetric bilinear form on the truncation
  GroebnerBasis truncation_ideal;
  QuotientDimension truncation_dimension;
  bool symmetric = false;
  /// Present when the truncation ring is finite-dimensional.
  std::optional<RestrictedCohomology> cohomology;
  /// Hess is invertible over R/J (only meaningful for finite truncations).
  std::optional<bool> hessian_invertible;
};

ObstructionData obstruction_theory(const Poly& f);

struct LagrangianIntersection {
  KoszulComplex complex;
  PairingReport pairing;
};

/// Thrown when an input of intersect_graph_lagrangians is not closed.
class NotClosedError : public DomainError {
 public:
  NotClosedError(const std::string& which, const ClosednessFailure& f, const VarList& vars);
  const std::string& form() const { return form_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::string form_;
  std::size_t i_;
  std::size_t j_;
};

/// L_α ×^h L_β in T*A^n: the Koszul complex of α − β together with the
/// pairing given by the Jacobian of α − β.
LagrangianIntersection intersect_graph_lagrangians(const OneForm& alpha, const OneForm& beta);

}  // namespace dcrit
