#include <vector>

#include "doctest.h"
#include "ulmkit/error.hpp"
#include "ulmkit/linalg.hpp"
#include "ulmkit/rng.hpp"

using namespace ulmkit;
using namespace ulmkit::linalg;

namespace {

FpMatrix random_matrix(Rng& rng, Scalar ell, std::size_t r, std::size_t c) {
  FpMatrix m(ell, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, std::int64_t(rng.below(ell)));
  return m;
}

// Brute-force rank over F_2 for tiny matrices: log2 of the row-span size.
std::size_t rank_by_span(const FpMatrix& m) {
  std::vector<std::uint32_t> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) bits |= std::uint32_t(m(i, j)) << j;
    rows.push_back(bits);
  }
  std::vector<bool> seen(1u << m.cols(), false);
  for (std::uint32_t mask = 0; mask < (1u << rows.size()); ++mask) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (mask >> i & 1) v ^= rows[i];
    seen[v] = true;
  }
  std::size_t count = 0;
  for (bool b : seen) count += b;
  std::size_t r = 0;
  while ((std::size_t{1} << r) < count) ++r;
  return r;
}

}  // namespace

TEST_CASE("modulus must be prime") {
  CHECK_THROWS_AS(FpMatrix(4, 2, 2), DomainError);
  CHECK_THROWS_AS(FpMatrix(1, 2, 2), DomainError);
  CHECK_NOTHROW(FpMatrix(7, 2, 2));
}

TEST_CASE("entries are reduced") {
  FpMatrix m = FpMatrix::from_rows(5, {{7, -1}, {10, 4}});
  CHECK(m(0, 0) == 2);
  CHECK(m(0, 1) == 4);
  CHECK(m(1, 0) == 0);
}

TEST_CASE("rref of zero, identity, and a rank one matrix") {
  auto z = rref(FpMatrix(3, 2, 2));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(z.reduced == FpMatrix(3, 2, 2));

  auto id = rref(FpMatrix::identity(2, 3));
  CHECK(id.rank == 3);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.reduced == FpMatrix::identity(2, 3));

  auto r1 = rref(FpMatrix::from_rows(5, {{1, 2}, {2, 4}}));
  CHECK(r1.rank == 1);
  CHECK(r1.reduced == FpMatrix::from_rows(5, {{1, 2}, {0, 0}}));
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(FpMatrix::identity(3, 3)).empty());
  auto k = kernel_basis(FpMatrix(3, 2, 3));
  CHECK(k.size() == 3);
  auto k2 = kernel_basis(FpMatrix::from_rows(2, {{1, 1}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == Vec{1, 1});
}

TEST_CASE("solve follows the free-variables-zero convention") {
  auto x = solve(FpMatrix::identity(7, 3), Vec{1, 5, 6});
  REQUIRE(x);
  CHECK(*x == Vec{1, 5, 6});
  auto y = solve(FpMatrix::from_rows(2, {{1, 1}}), Vec{1});
  REQUIRE(y);
  CHECK(*y == Vec{1, 0});
  CHECK_FALSE(solve(FpMatrix(3, 2, 2), Vec{1, 0}));
  CHECK_THROWS_AS(solve(FpMatrix(3, 2, 2), Vec{1}), DomainError);
}

TEST_CASE("rank agrees with brute-force span size over F_2") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    auto m = random_matrix(rng, 2, rng.between(1, 5), rng.between(1, 6));
    CHECK(rank(m) == rank_by_span(m));
  }
}

TEST_CASE("property: rank-nullity, solve correctness, rref idempotence") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const Scalar ell = Scalar(std::vector<int>{2, 3, 5, 7, 101}[rng.below(5)]);
    auto m = random_matrix(rng, ell, rng.between(1, 8), rng.between(1, 8));
    CHECK(rank(m) + kernel_basis(m).size() == m.cols());
    for (const auto& v : kernel_basis(m)) CHECK(is_zero(m * v));
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    Vec b(m.rows());
    for (auto& x : b) x = Scalar(rng.below(ell));
    if (auto x = solve(m, b)) CHECK(m * *x == b);
    // A consistent right-hand side always has a solution.
    Vec x0(m.cols());
    for (auto& v : x0) v = Scalar(rng.below(ell));
    auto sol = solve(m, m * x0);
    REQUIRE(sol);
    CHECK(m * *sol == m * x0);
  }
}

TEST_CASE("inverse and subspace operations") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    auto m = random_matrix(rng, 5, 4, 4);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 4));
    if (inv) CHECK(*inv * m == FpMatrix::identity(5, 4));
  }
  auto a = Subspace::span(3, 3, {{1, 0, 0}, {0, 1, 0}});
  auto b = Subspace::span(3, 3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(a.intersect(b) == Subspace::span(3, 3, {{0, 2, 0}}));
  CHECK((a + b) == Subspace::whole(3, 3));
  CHECK(a.contains(Vec{2, 1, 0}));
  CHECK_FALSE(a.contains(Vec{0, 0, 1}));
  auto coords = a.coordinates(Vec{2, 1, 0});
  REQUIRE(coords);
  CHECK(*coords == Vec{2, 1});
}
