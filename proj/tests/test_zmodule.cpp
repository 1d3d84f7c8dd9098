#include "doctest.h"
#include "ulmkit/error.hpp"
#include "ulmkit/ulm.hpp"
#include "ulmkit/zmodule.hpp"

using namespace ulmkit;

TEST_CASE("make_cyclic") {
  CHECK(make_cyclic(3, 0).dim() == 0);
  CHECK(make_cyclic(2, 1).sigma() == FpMatrix::identity(2, 1));
  CHECK_THROWS_AS(make_cyclic(2, -1), DomainError);
  const ZModule v3 = make_cyclic(2, 3);
  const FpMatrix id = FpMatrix::identity(2, 3);
  CHECK(v3.sigma().pow(4) == id);
  CHECK_FALSE(v3.sigma().pow(2) == id);
  CHECK(v3.nilpotent().pow(3).is_zero());
  CHECK_FALSE(v3.nilpotent().pow(2).is_zero());
  // Chain basis: x e_1 = e_2, x e_2 = e_3, x e_3 = 0.
  CHECK(v3.nilpotent() * Vec{1, 0, 0} == Vec{0, 1, 0});
  CHECK(v3.nilpotent() * Vec{0, 0, 1} == Vec{0, 0, 0});
}

TEST_CASE("invalid sigma is rejected") {
  CHECK_THROWS_AS(ZModule(FpMatrix::from_rows(3, {{2, 0}, {0, 1}})), DomainError);
  CHECK_THROWS_AS(ZModule(FpMatrix(3, 2, 2)), DomainError);
  CHECK_THROWS_AS(ZModule(FpMatrix(3, 2, 3)), DomainError);
}

TEST_CASE("make_group_algebra") {
  CHECK(make_group_algebra(3, 0) == make_cyclic(3, 1));
  const ZModule a = make_group_algebra(3, 1);
  CHECK(a.dim() == 3);
  CHECK(a.sigma().pow(3) == FpMatrix::identity(3, 3));
  CHECK(ulm::jordan_multiplicities(make_group_algebra(2, 2)) == ulm::JordanType{{4, 1}});
  CHECK_THROWS_AS(make_group_algebra(2, 10), BudgetError);
}

TEST_CASE("direct_sum") {
  const ZModule v = make_cyclic(5, 2);
  CHECK(direct_sum(v, ZModule(FpMatrix(5, 0, 0))) == v);
  CHECK(direct_sum(make_cyclic(5, 1), make_cyclic(5, 1)).sigma() == FpMatrix::identity(5, 2));
  const ZModule s = direct_sum(make_cyclic(3, 2), make_cyclic(3, 3));
  CHECK(s.dim() == 5);
  CHECK(ulm::ulm_invariants(s) == std::vector<std::size_t>{0, 1, 1, 0, 0});
  CHECK_THROWS_AS(direct_sum(make_cyclic(2, 1), make_cyclic(3, 1)), DomainError);
}

TEST_CASE("augmentation filtration and fixed part") {
  CHECK(aug_power(make_cyclic(2, 3), 0).dim() == 3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(aug_power(make_cyclic(5, 3), k).dim() == 3 - k);
  const ZModule a = make_group_algebra(3, 1);
  CHECK(aug_power(a, 1).dim() == 2);
  CHECK(aug_power(a, 2).dim() == 1);
  CHECK(aug_power(a, 3).dim() == 0);

  CHECK(fixed_part(ZModule(FpMatrix::identity(3, 4))).dim() == 4);
  const auto f = fixed_part(make_cyclic(3, 4));
  CHECK(f.dim() == 1);
  CHECK(f.contains(Vec{0, 0, 0, 1}));
  CHECK(fixed_part(direct_sum(make_cyclic(2, 2), make_cyclic(2, 3))).dim() == 2);
}

TEST_CASE("element heights") {
  const ZModule v3 = make_cyclic(2, 3);
  CHECK(element_height(v3, Vec{0, 0, 0}).is_infinite());
  CHECK(element_height(v3, Vec{0, 0, 1}) == Height::finite(2));
  CHECK(element_height(v3, Vec{1, 0, 0}) == Height::finite(0));
  const ZModule s = direct_sum(make_cyclic(3, 2), make_cyclic(3, 3));
  // e_2 of V_2 plus e_3 of V_3.
  CHECK(element_height(s, Vec{0, 1, 0, 0, 1}) == Height::finite(1));
  CHECK_THROWS_AS(element_height(v3, Vec{1, 0}), DomainError);
}

TEST_CASE("natural projections") {
  const ZHom id = natural_projection(3, 4, 4);
  CHECK(id.matrix() == FpMatrix::identity(3, 4));
  CHECK(natural_projection(3, 4, 0).matrix().is_zero());
  CHECK(natural_projection(3, 3, 2).kernel() == aug_power(make_cyclic(3, 3), 2));
  CHECK_THROWS_AS(natural_projection(3, 2, 3), DomainError);
  // pi_{m,k} o pi_{n,m} = pi_{n,k}.
  CHECK(compose(natural_projection(2, 4, 2), natural_projection(2, 5, 4)).matrix() ==
        natural_projection(2, 5, 2).matrix());
}

TEST_CASE("ZHom intertwining is enforced") {
  const ZModule v2 = make_cyclic(3, 2);
  CHECK_THROWS_AS(ZHom(v2, v2, FpMatrix::from_rows(3, {{0, 1}, {0, 0}})), DomainError);
  CHECK_NOTHROW(ZHom(v2, v2, FpMatrix::from_rows(3, {{0, 0}, {1, 0}})));
}

TEST_CASE("random modules") {
  auto one = random_module(2, 1, 99);
  CHECK(one.module == make_cyclic(2, 1));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = random_module(3, 4 + seed % 7, seed);
    CHECK(ulm::jordan_type_of(g.hidden_type) == ulm::jordan_multiplicities(g.module));
    CHECK(random_module(3, 4 + seed % 7, seed).module == g.module);
  }
}

TEST_CASE("property: unipotence is l-power order; filtration and height growth") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Scalar ell = Scalar(std::vector<int>{2, 3, 5}[seed % 3]);
    const ZModule m = random_module(ell, 1 + seed % 9, seed).module;
    const std::size_t r = sigma_order_exponent(m);
    std::uint64_t lr = 1;
    for (std::size_t i = 0; i < r; ++i) lr *= ell;
    CHECK(m.sigma().pow(lr) == FpMatrix::identity(ell, m.dim()));
    std::size_t nil = 0;
    while (!m.nilpotent().pow(nil).is_zero()) ++nil;
    CHECK(lr >= nil);
    CHECK((lr == 1 || lr / ell < nil));
    for (std::size_t k = 0; k < m.dim(); ++k)
      CHECK(aug_power(m, k + 1).intersect(aug_power(m, k)) == aug_power(m, k + 1));
    Vec v(m.dim(), 0);
    v[seed % m.dim()] = 1;
    const Vec xv = m.nilpotent() * v;
    if (!linalg::is_zero(xv)) CHECK(element_height(m, xv) >= Height::finite(element_height(m, v).value() + 1));
  }
}
