#include "doctest.h"
#include "ulmkit/duality.hpp"
#include "ulmkit/embed.hpp"
#include "ulmkit/error.hpp"

using namespace ulmkit;
using embed::ModuleEP;

namespace {

// Brute force over every dim(V_n) x dim(M) matrix; usable while l^{nd} is small.
bool lift_brute(const ZHom& phi, std::size_t n) {
  const ZModule& m = phi.src();
  const Scalar ell = m.ell();
  const std::size_t d = m.dim(), cells = n * d;
  const ZModule vn = make_cyclic(ell, std::int64_t(n));
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= ell;
  REQUIRE(total <= (std::size_t{1} << 20));
  for (std::size_t code = 0; code < total; ++code) {
    FpMatrix a(ell, n, d);
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i, c /= ell) a.set(i / d, i % d, std::int64_t(c % ell));
    if (!(a * m.sigma() == vn.sigma() * a)) continue;
    if (a.block(0, 0, phi.dst().dim(), d) == phi.matrix()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("trivial and composed lifts") {
  const ZHom phi = natural_projection(3, 3, 1);
  auto same = embed::solve_module_ep(ModuleEP(phi, 1));
  REQUIRE(same.psi);
  CHECK(same.psi->matrix() == phi.matrix());
  auto two = embed::solve_module_ep(ModuleEP(phi, 2));
  REQUIRE(two.psi);
  CHECK(two.psi->matrix() == natural_projection(3, 3, 2).matrix());
  CHECK(two.surjective);
}

TEST_CASE("identity on V_2 does not lift to V_3") {
  const ZHom id = identity_hom(make_cyclic(2, 2));
  auto sol = embed::solve_module_ep(ModuleEP(id, 3));
  CHECK_FALSE(sol.psi);
  CHECK_FALSE(lift_brute(id, 3));
  CHECK(embed::hom_height(id) == Height::finite(0));
}

TEST_CASE("invalid problems") {
  CHECK_THROWS_AS(ModuleEP(natural_projection(2, 3, 2), 1), DomainError);
  const ZModule v2 = make_cyclic(2, 2);
  CHECK_THROWS_AS(ModuleEP(ZHom(v2, v2, FpMatrix(2, 2, 2)), 3), DomainError);
}

TEST_CASE("hom heights of projections") {
  CHECK(embed::hom_height(natural_projection(2, 3, 1)) == Height::finite(2));
  CHECK(embed::hom_height(natural_projection(3, 4, 2)) == Height::finite(2));
  CHECK(lift_brute(natural_projection(2, 3, 1), 3));
  CHECK_FALSE(lift_brute(natural_projection(2, 3, 1), 4));
}

TEST_CASE("property: both deciders and brute force agree, lifts are transitive") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ZModule m = random_module(2, 1 + seed % 4, seed).module;
    Vec eta(m.dim());
    for (std::size_t i = 0; i < eta.size(); ++i) eta[i] = Scalar((seed >> i) & 1);
    if (linalg::is_zero(eta)) eta[0] = 1;
    auto env = duality::cyclic_envelope(duality::DualElement(m, eta));
    const ZHom& phi = env.eta_star;
    const Height h = embed::hom_height(phi);
    CHECK(h.value() <= m.dim() - env.length);
    for (std::size_t n = env.length; n <= env.length + 2 && n * m.dim() <= 14; ++n) {
      auto sol = embed::solve_module_ep(ModuleEP(phi, n));
      CHECK(sol.psi.has_value() == lift_brute(phi, n));
      CHECK(sol.psi.has_value() == (n - env.length <= h.value()));
      if (sol.psi) {
        for (std::size_t k = env.length; k <= n; ++k) {
          const ZHom down =
              compose(natural_projection(2, std::int64_t(n), std::int64_t(k)), *sol.psi);
          CHECK(compose(natural_projection(2, std::int64_t(k), std::int64_t(env.length)), down)
                    .matrix() == phi.matrix());
        }
      }
    }
  }
}

TEST_CASE("quotients of free modules") {
  auto one = embed::quotient_of_free(make_cyclic(5, 1));
  CHECK(one.r == 0);
  CHECK(one.mult == 1);
  CHECK(one.surjection.matrix() == FpMatrix::identity(5, 1));

  auto ga = embed::quotient_of_free(make_group_algebra(2, 1));
  CHECK(ga.r == 1);
  CHECK(ga.mult == 1);
  CHECK(ga.surjection.matrix() == FpMatrix::identity(2, 2));

  auto v2 = embed::quotient_of_free(make_cyclic(3, 2));
  CHECK(v2.r == 1);
  CHECK(v2.mult == 1);
  CHECK(v2.surjection.src() == make_group_algebra(3, 1));
  // F_3[Z/3] -> V_2 sends 1 to e_1; compare with pi_{3,2} through V_3 = F_3[Z/3].
  CHECK(v2.surjection.is_surjective());
  CHECK(v2.surjection.matrix().col(0) == Vec{1, 0});

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ZModule m = random_module(3, 1 + seed % 8, seed).module;
    auto fq = embed::quotient_of_free(m);
    CHECK(fq.surjection.is_surjective());
    CHECK(fq.mult == m.dim() - linalg::rank(m.nilpotent()));
  }
}
