#include "ulmkit/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ulmkit/error.hpp"

namespace ulmkit::linalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime_modulus(std::uint64_t ell) {
  if (ell >= (std::uint64_t{1} << 31) || !is_prime(ell))
    throw DomainError("modulus " + std::to_string(ell) +
                      " is not a prime below 2^31");
}

Scalar mod_reduce(std::int64_t value, Scalar ell) {
  std::int64_t r = value % static_cast<std::int64_t>(ell);
  if (r < 0) r += ell;
  return static_cast<Scalar>(r);
}

Scalar mod_inverse(Scalar a, Scalar ell) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = ell, new_r = a % ell;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("element is not invertible mod ell");
  return mod_reduce(t, ell);
}

namespace {

inline Scalar mul_mod(Scalar a, Scalar b, Scalar ell) {
  return static_cast<Scalar>(std::uint64_t{a} * b % ell);
}

inline Scalar add_mod(Scalar a, Scalar b, Scalar ell) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Scalar>(s >= ell ? s - ell : s);
}

inline Scalar sub_mod(Scalar a, Scalar b, Scalar ell) {
  return a >= b ? a - b : static_cast<Scalar>(std::uint64_t{a} + ell - b);
}

void require_same_modulus(Scalar a, Scalar b) {
  if (a != b) throw DomainError("modulus mismatch");
}

}  // namespace

FpMatrix::FpMatrix(Scalar ell, std::size_t rows, std::size_t cols)
    : ell_(ell), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime_modulus(ell);
}

FpMatrix::FpMatrix(Scalar ell, std::size_t rows, std::size_t cols,
                   std::span<const std::int64_t> entries)
    : FpMatrix(ell, rows, cols) {
  if (entries.size() != rows * cols)
    throw DomainError("entry count does not match matrix shape");
  for (std::size_t i = 0; i < entries.size(); ++i)
    data_[i] = mod_reduce(entries[i], ell);
}

FpMatrix FpMatrix::identity(Scalar ell, std::size_t n) {
  FpMatrix m(ell, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(
    Scalar ell, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.front().size();
  std::vector<std::int64_t> flat;
  flat.reserve(nr * nc);
  for (const auto& r : rows) {
    if (r.size() != nc) throw DomainError("ragged matrix rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FpMatrix(ell, nr, nc, flat);
}

FpMatrix FpMatrix::from_columns(Scalar ell, std::size_t rows,
                                const std::vector<Vec>& columns) {
  FpMatrix m(ell, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw DomainError("column length does not match matrix height");
    for (std::size_t r = 0; r < rows; ++r)
      m.data_[r * m.cols_ + c] = columns[c][r] % ell;
  }
  return m;
}

Scalar FpMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  return (*this)(r, c);
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  data_[r * cols_ + c] = mod_reduce(value, ell_);
}

Vec FpMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec FpMatrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> FpMatrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(ell_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

FpMatrix FpMatrix::operator+(const FpMatrix& other) const {
  require_same_modulus(ell_, other.ell_);
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("matrix shape mismatch in addition");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = add_mod(data_[i], other.data_[i], ell_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& other) const {
  require_same_modulus(ell_, other.ell_);
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("matrix shape mismatch in subtraction");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = sub_mod(data_[i], other.data_[i], ell_);
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
  require_same_modulus(ell_, other.ell_);
  if (cols_ != other.rows_) throw DomainError("matrix shape mismatch in product");
  FpMatrix out(ell_, rows_, other.cols_);
  std::vector<std::uint64_t> acc(other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      Scalar a = (*this)(r, k);
      if (a == 0) continue;
      const Scalar* brow = &other.data_[k * other.cols_];
      for (std::size_t c = 0; c < other.cols_; ++c)
        acc[c] = (acc[c] + std::uint64_t{a} * brow[c]) % ell_;
    }
    for (std::size_t c = 0; c < other.cols_; ++c)
      out.data_[r * other.cols_ + c] = static_cast<Scalar>(acc[c]);
  }
  return out;
}

Vec FpMatrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DomainError("vector length mismatch in product");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc = (acc + std::uint64_t{(*this)(r, c)} * (v[c] % ell_)) % ell_;
    out[r] = static_cast<Scalar>(acc);
  }
  return out;
}

FpMatrix FpMatrix::scaled(Scalar c) const {
  FpMatrix out = *this;
  for (auto& x : out.data_) x = mul_mod(x, c % ell_, ell_);
  return out;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
  if (!is_square()) throw DomainError("power of a non-square matrix");
  FpMatrix result = identity(ell_, rows_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                         std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw DomainError("block exceeds matrix bounds");
  FpMatrix out(ell_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      out.data_[r * nc + c] = (*this)(r0 + r, c0 + c);
  return out;
}

std::vector<std::vector<std::int64_t>> FpMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c));
  }
  return out;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c);
    }
    os << '\n';
  }
  return os.str();
}

FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b) {
  require_same_modulus(a.ell(), b.ell());
  FpMatrix out(a.ell(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out.set(a.rows() + r, a.cols() + c, b(r, c));
  return out;
}

RowEchelon rref(const FpMatrix& m) {
  const Scalar ell = m.ell();
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<Vec> rows;
  rows.reserve(nr);
  for (std::size_t r = 0; r < nr; ++r) rows.push_back(m.row(r));

  RowEchelon out{FpMatrix(ell, nr, nc), {}, 0};
  std::size_t lead = 0;
  for (std::size_t c = 0; c < nc && lead < nr; ++c) {
    std::size_t p = lead;
    while (p < nr && rows[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(rows[p], rows[lead]);
    Vec& pivot = rows[lead];
    Scalar inv = mod_inverse(pivot[c], ell);
    for (std::size_t k = c; k < nc; ++k) pivot[k] = mul_mod(pivot[k], inv, ell);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == lead || rows[r][c] == 0) continue;
      Scalar f = rows[r][c];
      for (std::size_t k = c; k < nc; ++k)
        rows[r][k] = sub_mod(rows[r][k], mul_mod(f, pivot[k], ell), ell);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = out.pivots.size();
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.reduced.set(r, c, rows[r][c]);
  return out;
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const FpMatrix& m) {
  const Scalar ell = m.ell();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i)
      v[e.pivots[i]] = sub_mod(0, e.reduced(i, free), ell);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const FpMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
  const Scalar ell = a.ell();
  FpMatrix aug(ell, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a(r, c));
    aug.set(r, a.cols(), b[r] % ell);
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FpMatrix aug(m.ell(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  RowEchelon e = rref(aug);
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Vec add(const Vec& a, const Vec& b, Scalar ell) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_mod(a[i], b[i], ell);
  return out;
}

Vec sub(const Vec& a, const Vec& b, Scalar ell) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub_mod(a[i], b[i], ell);
  return out;
}

Vec scale(const Vec& a, Scalar c, Scalar ell) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], c % ell, ell);
  return out;
}

Scalar dot(const Vec& a, const Vec& b, Scalar ell) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc = (acc + std::uint64_t{a[i]} * b[i]) % ell;
  return static_cast<Scalar>(acc);
}

bool is_zero(const Vec& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

Vec left_multiply(const Vec& row, const FpMatrix& m) {
  if (row.size() != m.rows()) throw DomainError("row vector length mismatch");
  const Scalar ell = m.ell();
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (row[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      acc[c] = (acc[c] + std::uint64_t{row[r]} * m(r, c)) % ell;
  }
  return Vec(acc.begin(), acc.end());
}

// ---------------------------------------------------------------------------

Subspace::Subspace(Scalar ell, std::size_t ambient)
    : basis_(ell, 0, ambient) {}

Subspace Subspace::span(Scalar ell, std::size_t ambient,
                        const std::vector<Vec>& vectors) {
  FpMatrix m(ell, vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient)
      throw DomainError("spanning vector has wrong length");
    for (std::size_t c = 0; c < ambient; ++c) m.set(r, c, vectors[r][c]);
  }
  RowEchelon e = rref(m);
  return Subspace(e.reduced.block(0, 0, e.rank, ambient));
}

Subspace Subspace::whole(Scalar ell, std::size_t ambient) {
  return Subspace(FpMatrix::identity(ell, ambient));
}

Subspace Subspace::column_space(const FpMatrix& m) {
  RowEchelon e = rref(m.transpose());
  return Subspace(e.reduced.block(0, 0, e.rank, m.rows()));
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

FpMatrix Subspace::basis_matrix() const { return basis_.transpose(); }

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_modulus(ell(), other.ell());
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient()) throw DomainError("vector length mismatch");
  // The basis is in reduced echelon form, so the coordinate on basis row i
  // is the entry of v at that row's pivot column.
  Vec coeffs(dim(), 0);
  Vec residue = v;
  for (auto& x : residue) x %= ell();
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t pivot = 0;
    while (basis_(r, pivot) == 0) ++pivot;
    coeffs[r] = residue[pivot];
  }
  for (std::size_t r = 0; r < dim(); ++r)
    if (coeffs[r] != 0) residue = sub(residue, scale(basis_.row(r), coeffs[r], ell()), ell());
  if (!linalg::is_zero(residue)) return std::nullopt;
  return coeffs;
}

Subspace Subspace::operator+(const Subspace& other) const {
  require_same_modulus(ell(), other.ell());
  if (ambient() != other.ambient()) throw DomainError("ambient dimension mismatch");
  std::vector<Vec> all = basis();
  for (auto& v : other.basis()) all.push_back(std::move(v));
  return span(ell(), ambient(), all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_modulus(ell(), other.ell());
  if (ambient() != other.ambient()) throw DomainError("ambient dimension mismatch");
  // Solve a_1 u_1 + ... + a_p u_p - b_1 w_1 - ... - b_q w_q = 0.
  const Scalar l = ell();
  const std::size_t p = dim(), q = other.dim(), n = ambient();
  FpMatrix m(l, n, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t r = 0; r < n; ++r) m.set(r, i, basis_(i, r));
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t r = 0; r < n; ++r)
      m.set(r, p + j, sub_mod(0, other.basis_(j, r), l));
  std::vector<Vec> vecs;
  for (const auto& k : kernel_basis(m)) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < p; ++i)
      if (k[i] != 0) v = add(v, scale(basis_.row(i), k[i], l), l);
    vecs.push_back(std::move(v));
  }
  return span(l, n, vecs);
}

Subspace Subspace::image(const FpMatrix& m) const {
  if (m.cols() != ambient()) throw DomainError("map does not act on this space");
  std::vector<Vec> vecs;
  vecs.reserve(dim());
  for (const auto& v : basis()) vecs.push_back(m * v);
  return span(ell(), m.rows(), vecs);
}

}  // namespace ulmkit::linalg
