#include "dcrit/koszul.hpp"

#include <algorithm>

#include "dcrit/errors.hpp"

namespace dcrit {

bool check_d_squared(const MatrixComplex& c) {
  for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i) {
    const auto& first = c.differentials[i];
    const auto& second = c.differentials[i + 1];
    if (second.cols() != first.rows()) return false;
    if (!(second * first).is_zero()) return false;
  }
  return true;
}

KoszulComplex KoszulComplex::build(VarList vars, std::size_t rank, Section s) {
  std::vector<std::string> basis;
  for (std::size_t j = 0; j < rank; ++j) basis.push_back("e" + std::to_string(j + 1));
  auto ambient = make_ambient(std::move(vars), std::move(basis));
  check_section(s, *ambient);
  return KoszulComplex(std::move(ambient), std::move(s));
}

std::vector<Mask> KoszulComplex::basis(int degree) const {
  if (degree > 0 || degree < lowest_degree()) return {};
  return subsets_of_size(rank(), static_cast<std::size_t>(-degree));
}

std::size_t KoszulComplex::component_rank(int degree) const { return basis(degree).size(); }

PolyMatrix KoszulComplex::differential_matrix(int degree) const {
  const auto source = basis(degree);
  const auto target = basis(degree + 1);
  PolyMatrix m(vars(), target.size(), source.size());
  const auto one = Poly::constant(vars(), 1);
  for (std::size_t c = 0; c < source.size(); ++c) {
    const ExtElt image = differential(ExtElt::basis_element(ambient_, source[c], one));
    for (const auto& [mask, coeff] : image.terms()) {
      const auto r = static_cast<std::size_t>(std::find(target.begin(), target.end(), mask) - target.begin());
      m.at(r, c) = coeff;
    }
  }
  return m;
}

MatrixComplex KoszulComplex::to_matrix_complex() const {
  MatrixComplex mc{vars(), lowest_degree(), {}};
  for (int p = lowest_degree(); p < 0; ++p) mc.differentials.push_back(differential_matrix(p));
  return mc;
}

KoszulComplex build_koszul(VarList vars, std::size_t rank, Section s) {
  return KoszulComplex::build(std::move(vars), rank, std::move(s));
}

bool check_d_squared(const KoszulComplex& c) { return check_d_squared(c.to_matrix_complex()); }

FancyKoszul FancyKoszul::build(VarList base_vars, std::size_t rank) {
  if (rank == 0) throw DomainError("fancy Koszul complex needs rank >= 1");
  std::vector<std::string> names = *base_vars;
  for (std::size_t j = 0; j < rank; ++j) {
    std::string name = "xi" + std::to_string(j + 1);
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    names.push_back(std::move(name));
  }
  auto all = make_vars(std::move(names));
  Section tautological;
  for (std::size_t j = 0; j < rank; ++j) tautological.components.push_back(Poly::variable(all, base_vars->size() + j));
  return FancyKoszul(std::move(base_vars), KoszulComplex::build(all, rank, std::move(tautological)));
}

FancyKoszul build_fancy_koszul(VarList base_vars, std::size_t rank) {
  return FancyKoszul::build(std::move(base_vars), rank);
}

bool check_d_squared(const FancyKoszul& c) { return check_d_squared(c.complex()); }

BaseChangeReport base_change_compare(const FancyKoszul& f, const Section& s) {
  if (s.size() != f.rank())
    throw DomainError("section has " + std::to_string(s.size()) + " components, fancy complex has rank " +
                      std::to_string(f.rank()));
  for (const auto& c : s.components)
    if (!same_vars(c.vars(), f.base_vars())) throw DomainError("section is not over the base variables");

  // φ_s: x_i ↦ x_i, ξ_j ↦ s_j.
  std::vector<Poly> images;
  for (std::size_t i = 0; i < f.base_count(); ++i) images.push_back(Poly::variable(f.base_vars(), i));
  for (const auto& c : s.components) images.push_back(c);

  const auto direct = build_koszul(f.base_vars(), f.rank(), s);
  BaseChangeReport report;
  for (int p = f.complex().lowest_degree(); p < 0; ++p) {
    const auto fancy = f.complex().differential_matrix(p);
    const auto usual = direct.differential_matrix(p);
    if (fancy.rows() != usual.rows() || fancy.cols() != usual.cols())
      throw DomainError("differential shapes differ in degree " + std::to_string(p));
    for (std::size_t r = 0; r < fancy.rows(); ++r)
      for (std::size_t c = 0; c < fancy.cols(); ++c) {
        const Poly sub = fancy.at(r, c).substitute(f.base_vars(), images);
        if (!(sub == usual.at(r, c))) {
          report.equal = false;
          report.witness = BaseChangeDiscrepancy{p, r, c, sub.to_string(), usual.at(r, c).to_string()};
          return report;
        }
      }
  }
  return report;
}

Poly Augmentation::apply(const ExtElt& a) const { return target.normal_form(a.coefficient(0)); }

Augmentation augmentation(const KoszulComplex& c) {
  Augmentation aug{c.section().components, buchberger(c.vars(), c.section().components), false};
  bool vanishes = true;
  if (c.rank() > 0) {
    const auto d = c.differential_matrix(-1);
    for (std::size_t col = 0; col < d.cols(); ++col)
      if (!aug.target.contains(d.at(0, col))) vanishes = false;
  }
  aug.composite_vanishes = vanishes;
  return aug;
}

}  // namespace dcrit
