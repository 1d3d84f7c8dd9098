#include "ulmkit/zmodule.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "ulmkit/error.hpp"
#include "ulmkit/rng.hpp"

namespace ulmkit {

namespace {

FpMatrix minus_identity(const FpMatrix& sigma) {
  return sigma - FpMatrix::identity(sigma.ell(), sigma.rows());
}

std::size_t checked_size(std::int64_t n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(n);
}

}  // namespace

ZModule::ZModule(FpMatrix sigma, std::string label)
    : sigma_(std::move(sigma)), x_(sigma_.ell(), 0, 0), label_(std::move(label)) {
  if (!sigma_.is_square()) throw DomainError("sigma must be square");
  if (!linalg::inverse(sigma_)) throw DomainError("sigma is not invertible");
  x_ = minus_identity(sigma_);
  if (!x_.pow(dim()).is_zero())
    throw DomainError("sigma is not unipotent: (sigma - 1)^dim != 0");
}

ZHom::ZHom(ZModule src, ZModule dst, FpMatrix matrix)
    : src_(std::move(src)), dst_(std::move(dst)), matrix_(std::move(matrix)) {
  if (src_.ell() != dst_.ell() || matrix_.ell() != src_.ell())
    throw DomainError("modulus mismatch in homomorphism");
  if (matrix_.rows() != dst_.dim() || matrix_.cols() != src_.dim())
    throw DomainError("homomorphism matrix has the wrong shape");
  if (!(matrix_ * src_.sigma() == dst_.sigma() * matrix_))
    throw DomainError("matrix does not intertwine the sigma actions");
}

Subspace ZHom::kernel() const {
  return Subspace::span(src_.ell(), src_.dim(), linalg::kernel_basis(matrix_));
}

Subspace ZHom::image() const { return Subspace::column_space(matrix_); }

ZHom compose(const ZHom& g, const ZHom& f) {
  if (!(g.src() == f.dst())) throw DomainError("composition of incompatible maps");
  return ZHom(f.src(), g.dst(), g.matrix() * f.matrix());
}

ZHom identity_hom(const ZModule& m) {
  return ZHom(m, m, FpMatrix::identity(m.ell(), m.dim()));
}

FpMatrix unipotent_jordan_matrix(Scalar ell, const std::vector<std::size_t>& sizes) {
  std::size_t d = 0;
  for (auto s : sizes) d += s;
  FpMatrix sigma = FpMatrix::identity(ell, d);
  std::size_t offset = 0;
  for (auto s : sizes) {
    for (std::size_t i = 0; i + 1 < s; ++i) sigma.set(offset + i + 1, offset + i, 1);
    offset += s;
  }
  return sigma;
}

ZModule make_cyclic(Scalar ell, std::int64_t n) {
  std::size_t size = checked_size(n, "cyclic module length");
  return ZModule(unipotent_jordan_matrix(ell, {size}), "V" + std::to_string(n));
}

ZModule make_group_algebra(Scalar ell, std::int64_t k, std::size_t cap) {
  std::size_t exponent = checked_size(k, "group algebra exponent");
  linalg::require_prime_modulus(ell);
  std::size_t order = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (order > cap / ell)
      throw BudgetError("group algebra dimension exceeds cap " + std::to_string(cap));
    order *= ell;
  }
  FpMatrix sigma(ell, order, order);
  for (std::size_t i = 0; i < order; ++i) sigma.set((i + 1) % order, i, 1);
  return ZModule(std::move(sigma),
                 "F" + std::to_string(ell) + "[Z/" + std::to_string(ell) + "^" +
                     std::to_string(k) + "]");
}

ZModule direct_sum(const ZModule& a, const ZModule& b) {
  if (a.ell() != b.ell()) throw DomainError("modulus mismatch in direct sum");
  return ZModule(linalg::block_diagonal(a.sigma(), b.sigma()));
}

Subspace aug_power(const ZModule& m, std::size_t k) {
  if (k >= m.dim()) return Subspace(m.ell(), m.dim());
  return Subspace::column_space(m.nilpotent().pow(k));
}

Subspace fixed_part(const ZModule& m) {
  return Subspace::span(m.ell(), m.dim(), linalg::kernel_basis(m.nilpotent()));
}

Height element_height(const ZModule& m, const Vec& v) {
  if (v.size() != m.dim()) throw DomainError("element has the wrong dimension");
  if (linalg::is_zero(v)) return Height::infinite();
  // I^k M shrinks as k grows, so the first k that fails bounds the height.
  std::size_t k = 0;
  FpMatrix power = FpMatrix::identity(m.ell(), m.dim());
  while (true) {
    power = power * m.nilpotent();
    if (!Subspace::column_space(power).contains(v)) return Height::finite(k);
    ++k;
  }
}

ZHom natural_projection(Scalar ell, std::int64_t n, std::int64_t m) {
  checked_size(m, "projection target length");
  if (m > n) throw DomainError("natural projection needs m <= n");
  FpMatrix a(ell, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < m; ++i) a.set(i, i, 1);
  return ZHom(make_cyclic(ell, n), make_cyclic(ell, m), std::move(a));
}

std::size_t sigma_order_exponent(const ZModule& m) {
  const FpMatrix id = FpMatrix::identity(m.ell(), m.dim());
  FpMatrix power = m.sigma();
  std::size_t r = 0;
  while (!(power == id)) {
    power = power.pow(m.ell());
    ++r;
  }
  return r;
}

GeneratedModule random_module(Scalar ell, std::size_t dim, std::uint64_t seed,
                              std::size_t cap) {
  if (dim > cap) throw BudgetError("random module dimension exceeds cap");
  linalg::require_prime_modulus(ell);
  Rng rng(seed);

  std::vector<std::size_t> sizes;
  for (std::size_t left = dim; left > 0;) {
    std::size_t s = rng.between(1, left);
    sizes.push_back(s);
    left -= s;
  }
  FpMatrix jordan = unipotent_jordan_matrix(ell, sizes);

  FpMatrix p(ell, dim, dim);
  std::optional<FpMatrix> p_inv;
  do {
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        p.set(r, c, static_cast<std::int64_t>(rng.below(ell)));
    p_inv = linalg::inverse(p);
  } while (!p_inv);

  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return {ZModule(p * jordan * *p_inv, "random"), std::move(sizes)};
}

}  // namespace ulmkit
