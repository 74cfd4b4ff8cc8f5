#include "dcrit/symplectic.hpp"

#include "dcrit/errors.hpp"
#include "dcrit/linalg.hpp"

namespace dcrit {

PolyMatrix hessian(const Poly& f) {
  const std::size_t n = f.nvars();
  PolyMatrix h(f.vars(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly fi = f.diff(i);
    for (std::size_t j = 0; j < n; ++j) h.at(i, j) = fi.diff(j);
  }
  return h;
}

PolyMatrix jacobian(const OneForm& alpha) {
  const std::size_t n = alpha.size();
  PolyMatrix m(alpha.vars(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = alpha.components[i].diff(j);
  return m;
}

TwoTermComplex tangent_complex(const Poly& f) { return TwoTermComplex{hessian(f)}; }

PairingReport pairing_report(const TwoTermComplex& t) {
  const auto& d = t.differential;
  PairingReport r{d, true, false, "", std::nullopt};
  if (d.rows() != d.cols()) throw DomainError("two-term complex must be square");
  for (std::size_t i = 0; i < d.rows() && r.symmetric; ++i)
    for (std::size_t j = i + 1; j < d.cols(); ++j)
      if (!(d.at(i, j) == d.at(j, i))) {
        r.symmetric = false;
        r.asymmetry = std::make_pair(i, j);
        break;
      }
  // The identity is invertible in each level, so it is a quasi-isomorphism
  // exactly when it is a chain map.
  r.nondegenerate = r.symmetric;
  r.duality_map = r.symmetric ? "identity in degrees 0 and 1 intertwines d with d^T"
                              : "identity in degrees 0 and 1 is not a chain map: d != d^T";
  return r;
}

PairingReport minus_one_pairing(const Poly& f) { return pairing_report(tangent_complex(f)); }

namespace {

std::size_t basis_position(const std::vector<Exponents>& basis, const Exponents& e) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == e) return i;
  throw DomainError("normal form left the standard-monomial basis");
}

}  // namespace

ObstructionData obstruction_theory(const Poly& f) {
  const auto vars = f.vars();
  const std::size_t n = f.nvars();
  auto gb = buchberger(vars, jacobian_ideal(f));
  const auto dim = quotient_dimension(gb);
  const auto hess = hessian(f);

  PolyMatrix reduced(vars, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reduced.at(i, j) = gb.normal_form(hess.at(i, j));

  ObstructionData data{TwoTermComplex{reduced}, reduced, gb, dim, true, std::nullopt, std::nullopt};
  data.symmetric = pairing_report(data.restricted).symmetric;

  if (!dim.is_infinite()) {
    // Hess ⊗ R/J as a Q-linear map on (R/J)^n, in the standard-monomial basis.
    const auto basis = gb.standard_monomials();
    const std::size_t mu = basis.size();
    SparseMatrix m(n * mu, n * mu);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t b = 0; b < mu; ++b) {
        const std::size_t col = j * mu + b;
        const Poly mono = Poly::monomial(vars, basis[b]);
        for (std::size_t i = 0; i < n; ++i) {
          const Poly image = gb.normal_form(hess.at(i, j) * mono);
          for (const auto& [e, c] : image.terms()) m.data[col].emplace_back(i * mu + basis_position(basis, e), c);
        }
      }
    m.normalize();
    const std::size_t r = exact_rank(m);
    data.cohomology = RestrictedCohomology{n * mu - r, n * mu - r};
    data.hessian_invertible = (r == n * mu);
  }
  return data;
}

NotClosedError::NotClosedError(const std::string& which, const ClosednessFailure& f, const VarList& vars)
    : DomainError("not closed: " + which + " has d_" + (*vars)[f.i] + "(a_" + (*vars)[f.j] +
                  ") = " + f.di_aj.to_string() + " != d_" + (*vars)[f.j] + "(a_" + (*vars)[f.i] +
                  ") = " + f.dj_ai.to_string() + " at (i, j) = (" + std::to_string(f.i + 1) + ", " +
                  std::to_string(f.j + 1) + ")"),
      form_(which),
      i_(f.i),
      j_(f.j) {}

LagrangianIntersection intersect_graph_lagrangians(const OneForm& alpha, const OneForm& beta) {
  if (alpha.size() != beta.size()) throw DomainError("one-forms over different dimensions");
  if (!same_vars(alpha.vars(), beta.vars())) throw DomainError("one-forms over different variable lists");
  if (auto w = closedness_failure(alpha)) throw NotClosedError("alpha", *w, alpha.vars());
  if (auto w = closedness_failure(beta)) throw NotClosedError("beta", *w, beta.vars());
  const OneForm diff = alpha - beta;
  auto complex = build_koszul(alpha.vars(), alpha.size(), diff.as_section());
  auto pairing = pairing_report(TwoTermComplex{jacobian(diff)});
  return LagrangianIntersection{std::move(complex), std::move(pairing)};
}

}  // namespace dcrit
