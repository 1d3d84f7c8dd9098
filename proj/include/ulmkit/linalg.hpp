#pragma once

// Dense exact linear algebra over the prime field F_l.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ulmkit::linalg {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

bool is_prime(std::uint64_t n);

// Throws DomainError unless `ell` is a prime below 2^31.
void require_prime_modulus(std::uint64_t ell);

Scalar mod_reduce(std::int64_t value, Scalar ell);
Scalar mod_inverse(Scalar a, Scalar ell);

class FpMatrix {
 public:
  FpMatrix(Scalar ell, std::size_t rows, std::size_t cols);
  // Entries are given row-major and reduced mod ell.
  FpMatrix(Scalar ell, std::size_t rows, std::size_t cols,
           std::span<const std::int64_t> entries);

  static FpMatrix identity(Scalar ell, std::size_t n);
  static FpMatrix from_rows(Scalar ell,
                            const std::vector<std::vector<std::int64_t>>& rows);
  // Columns of the result are the given vectors; `rows` fixes the height
  // when the list is empty.
  static FpMatrix from_columns(Scalar ell, std::size_t rows,
                               const std::vector<Vec>& columns);

  Scalar ell() const noexcept { return ell_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::int64_t value);

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> columns() const;
  std::span<const Scalar> data() const noexcept { return data_; }

  FpMatrix transpose() const;
  bool is_zero() const noexcept;

  FpMatrix operator+(const FpMatrix& other) const;
  FpMatrix operator-(const FpMatrix& other) const;
  FpMatrix operator*(const FpMatrix& other) const;
  Vec operator*(const Vec& v) const;
  FpMatrix scaled(Scalar c) const;
  FpMatrix pow(std::uint64_t e) const;

  // Submatrix with the given row and column ranges.
  FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                 std::size_t nc) const;

  bool operator==(const FpMatrix& other) const = default;

  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::string to_string() const;

 private:
  Scalar ell_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b);

struct RowEchelon {
  FpMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RowEchelon rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

// Basis of the right null space, one vector per free column of rref(m), in
// increasing free-column order.
std::vector<Vec> kernel_basis(const FpMatrix& m);

// Some x with m x = b, free variables set to zero; nullopt when inconsistent.
std::optional<Vec> solve(const FpMatrix& a, const Vec& b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

// Vector helpers; all arguments share one modulus.
Vec add(const Vec& a, const Vec& b, Scalar ell);
Vec sub(const Vec& a, const Vec& b, Scalar ell);
Vec scale(const Vec& a, Scalar c, Scalar ell);
Scalar dot(const Vec& a, const Vec& b, Scalar ell);
bool is_zero(const Vec& v) noexcept;
Vec unit_vector(std::size_t n, std::size_t i);
// Row vector times matrix.
Vec left_multiply(const Vec& row, const FpMatrix& m);

// A linear subspace of F_l^n, stored as the nonzero rows of a reduced row
// echelon basis. Equal subspaces have identical representations.
class Subspace {
 public:
  Subspace(Scalar ell, std::size_t ambient);  // zero subspace
  static Subspace span(Scalar ell, std::size_t ambient,
                       const std::vector<Vec>& vectors);
  static Subspace whole(Scalar ell, std::size_t ambient);
  static Subspace column_space(const FpMatrix& m);

  Scalar ell() const noexcept { return basis_.ell(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }

  std::vector<Vec> basis() const;
  // Basis vectors as the columns of an ambient x dim matrix.
  FpMatrix basis_matrix() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in basis(); nullopt when v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Image under a linear map with matching column count.
  Subspace image(const FpMatrix& m) const;

  bool operator==(const Subspace& other) const = default;

 private:
  explicit Subspace(FpMatrix basis) : basis_(std::move(basis)) {}
  FpMatrix basis_;
};

}  // namespace ulmkit::linalg
