#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "dcrit/check.hpp"
#include "dcrit/exterior.hpp"
#include "dcrit/koszul.hpp"

namespace dcrit {

/// Element of the N-fold tensor power of R ⊗ ∧•F over R, keyed by the
/// generator subset in each factor.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Mask, N>;
  using TermMap = std::map<Key, Poly>;

  explicit Tensor(AmbientPtr ambient) : ambient_(std::move(ambient)) {}

  const AmbientPtr& ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return same_ambient(a.ambient_, b.ambient_) && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (std::size_t i = 0; i < N; ++i) {
        out += i == 0 ? " " : " # ";
        out += mask_name(k[i]);
      }
    }
    return out;
  }

 private:
  std::string mask_name(Mask m) const {
    if (m == 0) return "1";
    std::string s;
    for (auto i : mask_indices(m)) {
      if (!s.empty()) s += "/\\";
      s += ambient_->basis[i];
    }
    return s;
  }

  AmbientPtr ambient_;
  TermMap terms_;
};

using TensorElt = Tensor<2>;

/// Algebra map with primitive generators: e_S ↦ Σ_{A⊔B=S} sign(A,B) e_A ⊗ e_B.
TensorElt comultiply(const ExtElt& a);
/// Degree-0 projection.
Poly counit(const ExtElt& a);
/// e_S ↦ (−1)^{|S|} e_S.
ExtElt antipode(const ExtElt& a);

/// ρ: K(R,P;s) → K(R,P;s) ⊗ (∧•P∨, 0), same formula as comultiply.
TensorElt coaction(const KoszulComplex& k, const ExtElt& a);

/// (a⊗b)(c⊗d) = (−1)^{|b||c|} (a∧c)⊗(b∧d).
TensorElt multiply(const TensorElt& x, const TensorElt& y);
/// a⊗b ↦ (−1)^{|a||b|} b⊗a.
TensorElt flip(const TensorElt& x);
/// a⊗b ↦ a∧b.
ExtElt multiply_factors(const TensorElt& x);
/// (Δ⊗id) and (id⊗Δ).
Tensor<3> comultiply_left(const TensorElt& x);
Tensor<3> comultiply_right(const TensorElt& x);
/// (ε⊗id) and (id⊗ε).
ExtElt counit_left(const TensorElt& x);
ExtElt counit_right(const TensorElt& x);
/// (S⊗id) and (id⊗S).
TensorElt antipode_left(const TensorElt& x);
TensorElt antipode_right(const TensorElt& x);
/// (d_s⊗id).
TensorElt differential_left(const KoszulComplex& k, const TensorElt& x);

/// Coassociativity, counit, graded cocommutativity, antipode, algebra-map
/// and coaction chain-map laws on random elements of rank m, over Q[x,y].
CheckReport check_coalgebra(std::size_t m, unsigned trials, std::uint64_t seed);

}  // namespace dcrit
