#include "ulmkit/embed.hpp"

#include <utility>

#include "ulmkit/error.hpp"

namespace ulmkit::embed {

namespace {

bool is_chain_cyclic(const ZModule& m) {
  return m == make_cyclic(m.ell(), static_cast<std::int64_t>(m.dim()));
}

// The module map M -> V_n determined by a functional g with g x^n = 0.
ZHom cyclic_map(const ZModule& m, const Vec& g, std::size_t n) {
  FpMatrix a(m.ell(), n, m.dim());
  Vec f = g;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < m.dim(); ++c) a.set(i, c, f[c]);
    f = linalg::left_multiply(f, m.nilpotent());
  }
  if (!linalg::is_zero(f)) throw InternalError("functional not killed by x^n");
  return ZHom(m, make_cyclic(m.ell(), static_cast<std::int64_t>(n)), std::move(a));
}

}  // namespace

ModuleEP::ModuleEP(ZHom phi, std::size_t n) : phi_(std::move(phi)), n_(n) {
  if (!is_chain_cyclic(phi_.dst()))
    throw DomainError("embedding problem target must be V_m in chain basis");
  if (!phi_.is_surjective()) throw DomainError("phi is not surjective");
  if (n_ < m()) throw DomainError("embedding problem needs n >= m");
}

std::optional<ZHom> solve_by_linear_system(const ZHom& phi, std::size_t n) {
  const ZModule& src = phi.src();
  const std::size_t d = src.dim(), mlen = phi.dst().dim();
  if (n < mlen) throw DomainError("lift target shorter than phi's target");
  const ZModule vn = make_cyclic(src.ell(), static_cast<std::int64_t>(n));
  const FpMatrix& sm = src.sigma();
  const FpMatrix& sn = vn.sigma();

  // Unknown psi (n x d), variable index r * d + c.
  const std::size_t vars = n * d;
  FpMatrix system(src.ell(), n * d + mlen * d, vars);
  Vec rhs(n * d + mlen * d, 0);
  std::size_t row = 0;
  // (psi sigma_M - sigma_n psi)(r, c) = 0.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c, ++row) {
      for (std::size_t k = 0; k < d; ++k)
        if (sm(k, c)) system.set(row, r * d + k, system(row, r * d + k) + sm(k, c));
      for (std::size_t k = 0; k < n; ++k)
        if (sn(r, k))
          system.set(row, k * d + c,
                     static_cast<std::int64_t>(system(row, k * d + c)) - sn(r, k));
    }
  }
  // pi_{n,m} psi = phi: the first m rows of psi.
  for (std::size_t r = 0; r < mlen; ++r) {
    for (std::size_t c = 0; c < d; ++c, ++row) {
      system.set(row, r * d + c, 1);
      rhs[row] = phi.matrix()(r, c);
    }
  }
  auto sol = linalg::solve(system, rhs);
  if (!sol) return std::nullopt;
  FpMatrix psi(src.ell(), n, d);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < d; ++c) psi.set(r, c, (*sol)[r * d + c]);
  return ZHom(src, vn, std::move(psi));
}

EmbedSolution solve_module_ep(const ModuleEP& ep) {
  const ZHom& phi = ep.phi();
  const ZModule& src = phi.src();
  const std::size_t k = ep.n() - ep.m();
  EmbedSolution out;

  std::optional<ZHom> witness;
  if (ep.m() == 0) {
    // phi is the zero map onto V_0; the zero map into V_n lifts it.
    witness = ZHom(src, make_cyclic(src.ell(), static_cast<std::int64_t>(ep.n())),
                   FpMatrix(src.ell(), ep.n(), src.dim()));
  } else {
    // eta in I^k M^ iff eta = eta_n x^k for some functional eta_n.
    const duality::DualElement eta = duality::functional_of(phi);
    auto lifted = linalg::solve(src.nilpotent().pow(k).transpose(), eta.coeffs());
    if (lifted) witness = cyclic_map(src, *lifted, ep.n());
  }
  out.by_height = witness.has_value();

  auto direct = solve_by_linear_system(phi, ep.n());
  out.by_linear_system = direct.has_value();
  if (out.by_height != out.by_linear_system)
    throw InternalError("height criterion and linear system disagree on solvability");

  if (witness) {
    const ZHom pi = natural_projection(src.ell(), static_cast<std::int64_t>(ep.n()),
                                       static_cast<std::int64_t>(ep.m()));
    if (!(compose(pi, *witness).matrix() == phi.matrix()))
      throw InternalError("lift does not commute with the projection");
    out.surjective = witness->is_surjective();
    out.psi = std::move(witness);
  }
  return out;
}

Height hom_height(const ZHom& phi) {
  const std::size_t mlen = phi.dst().dim();
  if (mlen == 0) throw DomainError("height needs a target V_m with m >= 1");
  if (!is_chain_cyclic(phi.dst())) throw DomainError("target is not V_m");
  if (!phi.is_surjective()) throw DomainError("phi is not surjective");
  // Solvability at n implies solvability at every n' in [m, n], so the first
  // failure determines the height.
  const std::size_t d = phi.src().dim();
  for (std::size_t k = 0; mlen + k <= d + 1; ++k)
    if (!solve_by_linear_system(phi, mlen + k)) {
      if (k == 0) throw InternalError("phi fails to lift to itself");
      return Height::finite(k - 1);
    }
  throw InternalError("height exceeds dim M - m");
}

ZModule free_group_algebra_module(Scalar ell, std::size_t r, std::size_t copies,
                                  std::size_t cap) {
  ZModule block = make_group_algebra(ell, static_cast<std::int64_t>(r), cap);
  if (copies != 0 && block.dim() > cap / copies)
    throw BudgetError("free module dimension exceeds cap");
  ZModule out(FpMatrix(ell, 0, 0));
  for (std::size_t i = 0; i < copies; ++i) out = direct_sum(out, block);
  return out;
}

FreeQuotient quotient_of_free(const ZModule& m, std::size_t cap) {
  const Scalar ell = m.ell();
  const std::size_t d = m.dim();
  const std::size_t r = sigma_order_exponent(m);

  // Generators: standard basis vectors completing IM, in index order.
  Subspace covered = aug_power(m, 1);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < d && covered.dim() < d; ++i) {
    Vec e = linalg::unit_vector(d, i);
    if (covered.contains(e)) continue;
    gens.push_back(e);
    covered = covered + Subspace::span(ell, d, {e});
  }
  const std::size_t mult = gens.size();
  if (mult != d - linalg::rank(m.nilpotent()))
    throw InternalError("generator count differs from dim M/IM");

  ZModule free = free_group_algebra_module(ell, r, mult, cap);
  std::vector<Vec> cols;
  for (const auto& g : gens) {
    Vec v = g;
    for (std::size_t i = 0; i < free.dim() / (mult ? mult : 1); ++i) {
      cols.push_back(v);
      v = m.sigma() * v;
    }
  }
  ZHom surj(free, m, FpMatrix::from_columns(ell, d, cols));
  if (!surj.is_surjective()) throw InternalError("free cover is not surjective");
  return {r, mult, std::move(surj)};
}

}  // namespace ulmkit::embed
