#pragma once

// Finite modules over the mod-l Iwasawa algebra F_l[[Z]].
//
// A module is F_l^d with the action of a fixed topological generator sigma of
// Z given by an invertible unipotent matrix. Elements are column vectors and
// sigma acts on the left. The augmentation ideal I is generated by
// x = sigma - 1, so I^k M is the column space of x^k.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ulmkit/linalg.hpp"

namespace ulmkit {

using linalg::FpMatrix;
using linalg::Scalar;
using linalg::Subspace;
using linalg::Vec;

inline constexpr std::size_t kDefaultDimensionCap = 512;

// Depth in the augmentation filtration; infinite only for the zero element
// of a finite module.
class Height {
 public:
  static Height infinite() noexcept { return Height(true, 0); }
  static Height finite(std::size_t value) noexcept { return Height(false, value); }

  bool is_infinite() const noexcept { return infinite_; }
  // Meaningless for an infinite height.
  std::size_t value() const noexcept { return value_; }

  bool operator==(const Height&) const = default;
  std::strong_ordering operator<=>(const Height& other) const noexcept {
    if (infinite_ != other.infinite_)
      return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return infinite_ ? std::strong_ordering::equal : value_ <=> other.value_;
  }

  std::string to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

 private:
  Height(bool inf, std::size_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::size_t value_;
};

class ZModule {
 public:
  // Validates invertibility and unipotence of sigma.
  explicit ZModule(FpMatrix sigma, std::string label = {});

  Scalar ell() const noexcept { return sigma_.ell(); }
  std::size_t dim() const noexcept { return sigma_.rows(); }
  const FpMatrix& sigma() const noexcept { return sigma_; }
  // x = sigma - 1, the generator of the augmentation ideal.
  const FpMatrix& nilpotent() const noexcept { return x_; }
  const std::string& label() const noexcept { return label_; }

  // Exact equality of representations (labels ignored).
  bool operator==(const ZModule& other) const { return sigma_ == other.sigma_; }

 private:
  FpMatrix sigma_;
  FpMatrix x_;
  std::string label_;
};

// An F_l-linear map between modules commuting with sigma.
class ZHom {
 public:
  // `matrix` is dim(dst) x dim(src); intertwining is verified.
  ZHom(ZModule src, ZModule dst, FpMatrix matrix);

  const ZModule& src() const noexcept { return src_; }
  const ZModule& dst() const noexcept { return dst_; }
  const FpMatrix& matrix() const noexcept { return matrix_; }

  Vec operator()(const Vec& v) const { return matrix_ * v; }
  std::size_t rank() const { return linalg::rank(matrix_); }
  bool is_surjective() const { return rank() == dst_.dim(); }
  bool is_injective() const { return rank() == src_.dim(); }

  Subspace kernel() const;
  Subspace image() const;

 private:
  ZModule src_;
  ZModule dst_;
  FpMatrix matrix_;
};

// g after f.
ZHom compose(const ZHom& g, const ZHom& f);
ZHom identity_hom(const ZModule& m);

// V_n = F_l[[Z]]/I^n in the chain basis e_1..e_n with e_{i+1} = x e_i:
// sigma has ones on the diagonal and the subdiagonal.
ZModule make_cyclic(Scalar ell, std::int64_t n);

// F_l[Z/l^k Z] in the group basis 1, sigma, ..., sigma^{l^k - 1}; sigma is the
// cyclic shift. Throws when l^k exceeds `cap`.
ZModule make_group_algebra(Scalar ell, std::int64_t k,
                           std::size_t cap = kDefaultDimensionCap);

ZModule direct_sum(const ZModule& a, const ZModule& b);

// I^k M.
Subspace aug_power(const ZModule& m, std::size_t k);

// M^Z = ker(sigma - 1).
Subspace fixed_part(const ZModule& m);

// Largest k with v in I^k M; infinite iff v = 0.
Height element_height(const ZModule& m, const Vec& v);

// pi_{n,m}: V_n -> V_m, e_i -> e_i for i <= m and 0 otherwise.
ZHom natural_projection(Scalar ell, std::int64_t n, std::int64_t m);

// Least r with sigma^{l^r} = 1.
std::size_t sigma_order_exponent(const ZModule& m);

// Generator output: the module plus the Jordan block sizes it was built from
// (descending).
struct GeneratedModule {
  ZModule module;
  std::vector<std::size_t> hidden_type;
};

// Draws a random partition of `dim`, builds the block-diagonal unipotent
// matrix, and conjugates it by a random invertible matrix. Deterministic in
// `seed`.
GeneratedModule random_module(Scalar ell, std::size_t dim, std::uint64_t seed,
                              std::size_t cap = kDefaultDimensionCap);

// Jordan blocks x -> sigma = block diag of make_cyclic(sizes[i]).
FpMatrix unipotent_jordan_matrix(Scalar ell, const std::vector<std::size_t>& sizes);

}  // namespace ulmkit
