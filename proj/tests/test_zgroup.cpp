#include <algorithm>

#include "doctest.h"
#include "ulmkit/error.hpp"
#include "ulmkit/zgroup.hpp"

using namespace ulmkit;
using namespace ulmkit::group;

namespace {

Subset whole(const FinZGroup& g) {
  Subset s(g.order());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = Element(i);
  return s;
}

// Subgroup generated by `gens`, by repeated multiplication until stable.
Subset generated(const FinZGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < g.order(); ++a)
      if (in[a])
        for (auto s : gens)
          if (!in[g.mul(Element(a), s)]) in[g.mul(Element(a), s)] = grew = true;
  }
  Subset out;
  for (std::size_t a = 0; a < g.order(); ++a)
    if (in[a]) out.push_back(Element(a));
  return out;
}

// Classical Frattini of an l-group: generated by l-th powers and commutators.
Subset burnside_frattini(const FinZGroup& g) {
  std::vector<Element> gens;
  for (std::size_t a = 0; a < g.order(); ++a) {
    gens.push_back(g.pow(Element(a), g.ell()));
    for (std::size_t b = 0; b < g.order(); ++b)
      gens.push_back(g.commutator(Element(a), Element(b)));
  }
  return generated(g, gens);
}

std::size_t theta_exponent(const FinZGroup& g) {
  std::size_t r = 0;
  for (auto t = g.theta_order(); t > 1; t /= g.ell()) ++r;
  return r;
}

// Phi_Z(G) = G cap Phi(G x| <theta>).
Subset z_frattini_oracle(const GroupPtr& g) {
  auto s = semidirect_with_Z(g, theta_exponent(*g), 4096);
  const Subset phi = burnside_frattini(*s.group);
  Subset out;
  for (auto e : phi)
    if (e < g->order()) out.push_back(e);
  return out;
}

std::size_t center_order(const FinZGroup& g) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b)
      central = g.mul(Element(a), Element(b)) == g.mul(Element(b), Element(a));
    n += central;
  }
  return n;
}

std::vector<Element> identity_theta(std::size_t n) {
  std::vector<Element> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = Element(i);
  return t;
}

GroupPtr unipotent_plane(Scalar ell) {
  // theta(a,b) = (a+b, b): sigma = [[1,1],[0,1]] on column vectors.
  return group_from_module(ZModule(FpMatrix::from_rows(ell, {{1, 1}, {0, 1}})));
}

GroupPtr heisenberg() {
  GroupPtr h = semidirect_with_Z(unipotent_plane(3), 1).group;
  return with_theta(h, identity_theta(h->order()));
}

}  // namespace

TEST_CASE("table validation") {
  // Z/2 with a broken identity.
  CHECK_THROWS_AS(FinZGroup(2, {1, 0, 0, 1}, {0, 1}), DomainError);
  // Order 3 is not a power of 2.
  CHECK_THROWS_AS(FinZGroup(2, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 1, 2}), DomainError);
  // theta not a homomorphism.
  CHECK_THROWS_AS(FinZGroup(2, {0, 1, 1, 0}, {1, 0}), DomainError);
  // Z/3 with theta = inversion has order 2, not a power of 3.
  CHECK_THROWS_AS(FinZGroup(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 2, 1}), DomainError);
  CHECK_NOTHROW(FinZGroup(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 1, 2}));
  CHECK_THROWS_AS(cyclic_group(2, 11), BudgetError);
}

TEST_CASE("semidirect_with_Z examples") {
  auto c3 = cyclic_group(3, 1);
  auto s = semidirect_with_Z(c3, 1);
  CHECK(s.group->order() == 9);
  CHECK(s.group->is_abelian());
  for (std::size_t a = 0; a < 9; ++a) CHECK(s.group->pow(Element(a), 3) == 0);
  CHECK(s.projection.is_surjective());

  auto w = semidirect_with_Z(group_from_module(make_group_algebra(3, 1)), 1);
  CHECK(w.group->order() == 81);
  CHECK_FALSE(w.group->is_abelian());
  CHECK(center_order(*w.group) == 3);
  // G is normal with quotient Z/3.
  CHECK(is_normal(*w.group, w.embedding.image()));
  CHECK(w.projection.kernel() == w.embedding.image());

  auto c2 = semidirect_with_Z(cyclic_group(2, 1), 2);
  CHECK(c2.group->order() == 8);
  CHECK(c2.group->is_abelian());
  std::size_t involutions = 0, max_order = 0;
  for (std::size_t a = 0; a < 8; ++a) {
    involutions += c2.group->element_order(Element(a)) == 2;
    max_order = std::max(max_order, c2.group->element_order(Element(a)));
  }
  CHECK(involutions == 3);
  CHECK(max_order == 4);

  CHECK_THROWS_AS(semidirect_with_Z(cyclic_group(3, 2, 4), 0), DomainError);
}

TEST_CASE("z_frattini examples") {
  auto e = group_from_module(ZModule(FpMatrix::identity(3, 2)));
  CHECK(z_frattini(*e) == Subset{0});
  auto plane = unipotent_plane(3);
  auto phi = z_frattini(*plane);
  CHECK(phi.size() == 3);
  CHECK(burnside_frattini(*plane) == Subset{0});
  auto h = heisenberg();
  CHECK(h->order() == 27);
  CHECK_FALSE(h->is_abelian());
  auto zh = z_frattini(*h);
  CHECK(zh.size() == 3);
  CHECK(center_order(*h) == 3);
  auto trivial = cyclic_group(5, 0);
  CHECK(z_frattini(*trivial) == Subset{0});
}

TEST_CASE("property: z_frattini matches the semidirect Burnside oracle") {
  std::vector<GroupPtr> groups = {
      unipotent_plane(2), unipotent_plane(3), heisenberg(),
      cyclic_group(2, 3, 5), cyclic_group(3, 2, 4), cyclic_group(2, 4),
      group_from_module(make_group_algebra(2, 2)), group_from_module(make_cyclic(3, 3)),
      semidirect_with_Z(cyclic_group(2, 2, 3), 1).group};
  for (std::uint64_t seed = 0; seed < 8; ++seed)
    groups.push_back(group_from_module(random_module(seed % 2 ? 3 : 2, 2 + seed % 3, seed).module));
  for (const auto& g : groups) {
    CHECK(z_frattini(*g) == z_frattini_oracle(g));
    if (g->theta_order() == 1) CHECK(z_frattini(*g) == burnside_frattini(*g));
    auto ident = with_theta(g, identity_theta(g->order()));
    CHECK(z_frattini(*ident) == burnside_frattini(*ident));
    // Classical Frattini is contained in the Z-Frattini.
    const Subset classical = burnside_frattini(*g);
    const Subset zf = z_frattini(*g);
    CHECK(std::includes(zf.begin(), zf.end(), classical.begin(), classical.end()));
  }
}

TEST_CASE("subgroup lattice of F_3^2 with trivial theta") {
  auto e = group_from_module(ZModule(FpMatrix::identity(3, 2)));
  auto subs = theta_invariant_subgroups(*e);
  CHECK(subs.size() == 6);  // 1, four lines, the plane
  for (const auto& s : subs) {
    CHECK(is_subgroup(*e, s));
    CHECK(is_theta_invariant(*e, s));
  }
  auto plane = unipotent_plane(3);
  CHECK(theta_invariant_subgroups(*plane).size() == 3);
}

TEST_CASE("classify_ep examples") {
  auto gamma = cyclic_group(3, 1);
  auto k = cyclic_group(3, 1);
  auto g = direct_product(k, gamma);
  std::vector<Element> proj(g->order());
  for (std::size_t a = 0; a < proj.size(); ++a) proj[a] = Element(a / 3);
  GroupHom beta(g, gamma, proj);
  GroupEP ep(identity_hom(gamma), beta);
  auto c = classify_ep(ep);
  CHECK(c.split);
  CHECK_FALSE(c.frattini);
  REQUIRE(c.section);
  CHECK(compose(beta, *c.section).images() == identity_hom(gamma).images());

  for (Scalar ell : {Scalar(2), Scalar(3)}) {
    auto big = cyclic_group(ell, 2);
    auto small = cyclic_group(ell, 1);
    std::vector<Element> red(big->order());
    for (std::size_t a = 0; a < red.size(); ++a) red[a] = Element(a % ell);
    GroupHom pi(big, small, red);
    auto cls = classify_ep(GroupEP(identity_hom(small), pi));
    CHECK_FALSE(cls.split);
    CHECK(cls.frattini);
  }
}

TEST_CASE("frattini_solutions_proper examples") {
  for (Scalar ell : {Scalar(2), Scalar(3)}) {
    auto big = cyclic_group(ell, 2);
    auto small = cyclic_group(ell, 1);
    std::vector<Element> red(big->order());
    for (std::size_t a = 0; a < red.size(); ++a) red[a] = Element(a % ell);
    GroupHom pi(big, small, red);
    auto rep = frattini_solutions_proper(GroupEP(pi, pi));
    CHECK(rep.solutions == ell);  // x -> (1 + l j) x
    CHECK(rep.all_proper);
    auto none = frattini_solutions_proper(GroupEP(identity_hom(small), pi));
    CHECK(none.solutions == 0);
    CHECK(none.all_proper);
  }
  auto gamma = cyclic_group(2, 1);
  auto g = direct_product(cyclic_group(2, 1), gamma);
  GroupHom beta(g, gamma, {0, 0, 1, 1});
  CHECK_THROWS_AS(frattini_solutions_proper(GroupEP(beta, beta)), PreconditionError);
}

TEST_CASE("frattini_reduce examples") {
  auto big = cyclic_group(3, 2);
  auto small = cyclic_group(3, 1);
  std::vector<Element> red(9);
  for (std::size_t a = 0; a < 9; ++a) red[a] = Element(a % 3);
  GroupHom pi(big, small, red);
  auto r1 = frattini_reduce(GroupEP(pi, pi));
  CHECK(r1.u == Subset{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(r1.ep_u.beta().images() == pi.images());

  auto gamma = cyclic_group(3, 1);
  auto g = direct_product(cyclic_group(3, 1), gamma);
  std::vector<Element> proj(9);
  for (std::size_t a = 0; a < 9; ++a) proj[a] = Element(a / 3);
  GroupHom beta(g, gamma, proj);
  GroupEP ep(beta, beta);
  auto r2 = frattini_reduce(ep);
  CHECK(r2.u.size() == 3);
  CHECK(r2.kernel_by_u->order() == 9);
  CHECK(classify_ep(r2.ep_u).frattini);
  REQUIRE(r2.ep_split);
  CHECK(classify_ep(*r2.ep_split).split);
  std::size_t proper = 0;
  for (const auto& gp : enumerate_solutions(*r2.ep_split)) {
    if (!gp.is_surjective()) continue;
    ++proper;
    const GroupHom gamma_map = r2.combine(gp);
    CHECK(gamma_map.is_surjective());
    CHECK(compose(beta, gamma_map).images() == beta.images());
  }
  CHECK(proper > 0);
}

TEST_CASE("fiber_combine") {
  // One factor trivial: the fiber product is the other group.
  auto a = cyclic_group(3, 2);
  auto one = cyclic_group(3, 0);
  GroupHom to_one(a, one, std::vector<Element>(9, 0));
  auto fc = fiber_combine(identity_hom(a), to_one, to_one, identity_hom(one));
  CHECK(fc.fiber->order() == 9);
  CHECK(fc.combined.images() == identity_hom(a).images());
  CHECK(fc.surjective);
  CHECK(fc.kernel_identity);

  // Gamma = C_3, G = C_3 x C_3, H = G, psi2 = id, phi1 = second projection.
  auto gamma = cyclic_group(3, 1);
  auto g = direct_product(cyclic_group(3, 1), gamma);
  std::vector<Element> proj(9);
  for (std::size_t x = 0; x < 9; ++x) proj[x] = Element(x / 3);
  GroupHom beta(g, gamma, proj);
  auto fc2 = fiber_combine(identity_hom(g), beta, beta, identity_hom(gamma));
  CHECK(fc2.fiber->order() == 9);
  CHECK(fc2.surjective);
  CHECK(fc2.kernel_identity);
  CHECK(fc2.index_identity);

  // Both maps through the same quotient: not surjective onto G x_Gamma G.
  auto fc3 = fiber_combine(beta, beta, identity_hom(gamma), identity_hom(gamma));
  CHECK(fc3.fiber->order() == 3);
  CHECK(fc3.surjective);
  auto fc4 = fiber_combine(identity_hom(g), identity_hom(g), beta, beta);
  CHECK(fc4.fiber->order() == 27);
  CHECK_FALSE(fc4.surjective);
  CHECK_FALSE(fc4.kernel_identity);
  CHECK_FALSE(fc4.index_identity);

  CHECK_THROWS_AS(fiber_combine(identity_hom(g), identity_hom(g), beta, identity_hom(g)),
                  DomainError);
}

TEST_CASE("splitting lemma") {
  auto s = semidirect_with_Z(unipotent_plane(3), 1);
  const FinZGroup& g = *s.group;
  const Subset n = s.embedding.image();
  const Subset z = generated(g, {Element(9)});  // (0, 1)
  auto w = splitting_lemma_check(g, n, whole(g), z);
  CHECK(w.holds);
  CHECK(w.f == n);
  // N normal of order 9, P = a subgroup containing Z meeting N in order 3.
  const Subset line = generated(g, {Element(1)});
  Subset p = product_set(g, line, z);
  if (is_subgroup(g, p) && product_set(g, n, p).size() == g.order()) {
    auto w2 = splitting_lemma_check(g, n, p, z);
    CHECK(w2.holds);
  }
  try {
    splitting_lemma_check(g, Subset{0}, z, z);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "G != NP");
  }
}

TEST_CASE("quotients, products, and homomorphism checks") {
  auto h = heisenberg();
  const Subset center = z_frattini(*h);
  auto q = quotient(h, center);
  CHECK(q.group->order() == 9);
  CHECK(q.group->is_abelian());
  CHECK(q.projection.kernel() == center);
  auto c4 = cyclic_group(2, 2);
  CHECK_THROWS_AS(GroupHom(c4, c4, {0, 2, 1, 3}), DomainError);
  CHECK_THROWS_AS(quotient(h, Subset{0, 1}), DomainError);
}
