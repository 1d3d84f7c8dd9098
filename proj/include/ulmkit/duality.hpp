#pragma once

// Pontryagin duality for finite modules. A functional on M is a row vector
// in M's coordinates; the dual action is (tau f)(m) = f(tau^{-1} m), so the
// dual module has sigma^ = (sigma^{-1})^T acting on f^T.

#include <cstddef>

#include "ulmkit/zmodule.hpp"

namespace ulmkit::duality {

class DualElement {
 public:
  DualElement(ZModule base, Vec coeffs);

  const ZModule& base() const noexcept { return base_; }
  const Vec& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return linalg::is_zero(coeffs_); }
  Scalar operator()(const Vec& v) const;

 private:
  ZModule base_;
  Vec coeffs_;
};

ZModule dualize(const ZModule& m);

// f*: dual(N) -> dual(M) for f: M -> N; the matrix is the transpose.
ZHom dual_hom(const ZHom& f);

// Whether f lies in I^k V_n^ for f on V_n (chain basis). Computed both by
// the dual filtration and by testing f(I^{n-k} V_n) = 0; disagreement throws
// InternalError. Throws DomainError when the base is not V_n.
bool basic_lemma_membership(const DualElement& f, std::size_t k);

// f generates V_n^ as an F_l[[Z]]-module.
bool generates_dual_cyclic(const DualElement& f);

struct CyclicEnvelope {
  std::size_t length = 0;  // m = dim F_l[[Z]] eta
  ZHom eta_star;           // M -> V_m, surjective
};

// The dual of the embedding V_m^ -> M^ sending the generator e_m^* to eta.
// eta_star(q) = sum_i eta(x^{m-i} q) e_i, so e_m^* o eta_star = eta.
CyclicEnvelope cyclic_envelope(const DualElement& eta);

// The functional e_m^* o phi attached to a module map phi: M -> V_m.
DualElement functional_of(const ZHom& phi);

}  // namespace ulmkit::duality
