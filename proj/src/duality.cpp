#include "ulmkit/duality.hpp"

#include <utility>

#include "ulmkit/error.hpp"

namespace ulmkit::duality {

DualElement::DualElement(ZModule base, Vec coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != base_.dim())
    throw DomainError("functional length does not match module dimension");
  for (auto& c : coeffs_) c %= base_.ell();
}

Scalar DualElement::operator()(const Vec& v) const {
  return linalg::dot(coeffs_, v, base_.ell());
}

ZModule dualize(const ZModule& m) {
  auto inv = linalg::inverse(m.sigma());
  if (!inv) throw InternalError("module sigma lost invertibility");
  return ZModule(inv->transpose(),
                 m.label().empty() ? std::string{} : m.label() + "^");
}

ZHom dual_hom(const ZHom& f) {
  return ZHom(dualize(f.dst()), dualize(f.src()), f.matrix().transpose());
}

namespace {

std::size_t cyclic_length(const ZModule& m) {
  std::size_t n = m.dim();
  if (!(m.sigma() == make_cyclic(m.ell(), static_cast<std::int64_t>(n)).sigma()))
    throw DomainError("base module is not V_n in its chain basis");
  return n;
}

}  // namespace

bool basic_lemma_membership(const DualElement& f, std::size_t k) {
  const ZModule& vn = f.base();
  const std::size_t n = cyclic_length(vn);

  const Height h = element_height(dualize(vn), f.coeffs());
  const bool by_filtration = h.is_infinite() || h.value() >= k;

  // f(I^{n-k} V_n) = 0 <=> f x^{n-k} = 0 as a row vector.
  const std::size_t j = k >= n ? 0 : n - k;
  const Vec restricted = linalg::left_multiply(f.coeffs(), vn.nilpotent().pow(j));
  const bool by_annihilation = linalg::is_zero(restricted);

  if (by_filtration != by_annihilation)
    throw InternalError("dual filtration and annihilation criterion disagree");
  return by_filtration;
}

bool generates_dual_cyclic(const DualElement& f) {
  return cyclic_envelope(f).length == f.base().dim();
}

CyclicEnvelope cyclic_envelope(const DualElement& eta) {
  const ZModule& m = eta.base();
  const FpMatrix& x = m.nilpotent();
  // eta, eta x, eta x^2, ... ; span{eta o sigma^i} is the same space.
  std::vector<Vec> powers;
  Vec f = eta.coeffs();
  while (!linalg::is_zero(f)) {
    powers.push_back(f);
    f = linalg::left_multiply(f, x);
  }
  const std::size_t len = powers.size();
  FpMatrix a(m.ell(), len, m.dim());
  for (std::size_t i = 1; i <= len; ++i)
    for (std::size_t c = 0; c < m.dim(); ++c) a.set(i - 1, c, powers[len - i][c]);
  ZHom map(m, make_cyclic(m.ell(), static_cast<std::int64_t>(len)), std::move(a));
  if (!map.is_surjective()) throw InternalError("cyclic envelope map is not onto");
  return {len, std::move(map)};
}

DualElement functional_of(const ZHom& phi) {
  const std::size_t mlen = phi.dst().dim();
  if (!(phi.dst() == make_cyclic(phi.dst().ell(), static_cast<std::int64_t>(mlen))))
    throw DomainError("target is not V_m in its chain basis");
  if (mlen == 0) return DualElement(phi.src(), Vec(phi.src().dim(), 0));
  return DualElement(phi.src(), phi.matrix().row(mlen - 1));
}

}  // namespace ulmkit::duality
