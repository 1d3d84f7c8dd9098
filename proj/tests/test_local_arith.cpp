#include <map>
#include <set>

#include "doctest.h"
#include "ulmkit/error.hpp"
#include "ulmkit/local_arith.hpp"

using namespace ulmkit;
using namespace ulmkit::arith;

namespace {

bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Largest k with p = 1 mod l^(k+1), by repeated division of p - 1.
std::size_t index_by_division(std::uint64_t p, std::uint64_t ell) {
  std::uint64_t q = p - 1;
  std::size_t v = 0;
  while (q % ell == 0) q /= ell, ++v;
  return v == 0 ? 0 : v - 1;
}

std::vector<std::uint64_t> pk_by_trial(std::uint64_t ell, std::size_t k, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (!prime_by_trial(p) || p == ell) continue;
    std::uint64_t q = p - 1;
    std::size_t v = 0;
    while (q % ell == 0) q /= ell, ++v;
    if (v == k + 1) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("context") {
  CHECK(CycloContext(3).s() == 1);
  CHECK_THROWS_AS(CycloContext(2), DomainError);
  CHECK_THROWS_AS(CycloContext(9), DomainError);
}

TEST_CASE("local_index examples") {
  const CycloContext c3(3);
  CHECK(local_index(7, c3) == 0);
  CHECK(local_index(19, c3) == 1);
  CHECK(local_index(109, c3) == 2);
  CHECK(local_index(2, c3) == 0);
  CHECK_THROWS_AS(local_index(3, c3), DomainError);
  CHECK_THROWS_AS(local_index(21, c3), DomainError);
}

TEST_CASE("sieve_Pk examples") {
  const CycloContext c3(3);
  CHECK(sieve_Pk(c3, 0, 20) == std::vector<std::uint64_t>{7, 13});
  CHECK(sieve_Pk(c3, 1, 200) == std::vector<std::uint64_t>{19, 37, 73, 127, 181, 199});
  CHECK(sieve_Pk(c3, 2, 120) == std::vector<std::uint64_t>{109});
}

TEST_CASE("local_height_interval examples") {
  const CycloContext c3(3);
  const auto unram = make_place(19, c3, false);
  CHECK(local_height_interval(unram, c3, 1).infinite);
  CHECK(local_height_interval(unram, c3, 4).infinite);
  const auto p19 = make_place(19, c3, true);
  auto a = local_height_interval(p19, c3, 1);
  CHECK(a.is_point());
  CHECK(a.lo == 2);
  auto b = local_height_interval(p19, c3, 2);
  CHECK(b.lo == 1);
  CHECK(b.hi == 2);
  auto c = local_height_interval(make_place(7, c3, true), c3, 3);
  CHECK(c.lo == 0);
  CHECK(c.hi == 0);
  CHECK_THROWS_AS(local_height_interval(p19, c3, 0), DomainError);
}

TEST_CASE("global_height examples") {
  const CycloContext c3(3);
  CHECK(global_height(CharacterSpec(c3, {19})).range.lo == 2);
  auto two = global_height(CharacterSpec(c3, {7, 19}));
  CHECK(two.exact);
  CHECK(two.range.is_point());
  CHECK(two.range.lo == 0);
  CHECK(two.attained_at == 7);
  CHECK(global_height(CharacterSpec(c3, {109})).range.lo == 8);
  auto bounds = global_height(CharacterSpec(c3, {19, 109}, 2));
  CHECK_FALSE(bounds.exact);
  CHECK(bounds.range.lo == 1);
  CHECK(bounds.range.hi == 2);
  CHECK_THROWS_AS(CharacterSpec(c3, {}), DomainError);
  CHECK_THROWS_AS(CharacterSpec(c3, {5}), DomainError);
  CHECK_THROWS_AS(CharacterSpec(c3, {19}, 0), DomainError);
}

TEST_CASE("ulm_spectrum examples") {
  const auto small = ulm_spectrum(CycloContext(3), 20);
  REQUIRE(small.size() == 2);
  CHECK(small[0].height == 0);
  CHECK(small[0].witness == 7);
  CHECK(small[1].height == 2);
  CHECK(small[1].witness == 19);

  std::map<std::uint64_t, std::uint64_t> got;
  for (const auto& e : ulm_spectrum(CycloContext(3), 10000)) got[e.height] = e.witness;
  // 2917 - 1 = 4 * 3^6, so 2917 lies in P_5 and 1459 - 1 = 2 * 3^6 comes first.
  CHECK(got == std::map<std::uint64_t, std::uint64_t>{
                   {0, 7}, {2, 19}, {8, 109}, {26, 163}, {80, 487}, {242, 1459}});

  std::set<std::uint64_t> h5;
  for (const auto& e : ulm_spectrum(CycloContext(5), 1000)) h5.insert(e.height);
  CHECK(h5 == std::set<std::uint64_t>{0, 4, 24});
}

TEST_CASE("property: sieves agree with trial division and partition the primes") {
  for (std::uint64_t ell : {3u, 5u, 7u, 11u}) {
    const CycloContext ctx(ell);
    const std::uint64_t bound = 5000;
    std::set<std::uint64_t> seen;
    for (std::size_t k = 0; ipow(ell, k + 1) <= bound; ++k) {
      const auto pk = sieve_Pk(ctx, k, bound);
      CHECK(pk == pk_by_trial(ell, k, bound));
      for (auto p : pk) {
        CHECK(seen.insert(p).second);
        CHECK(local_index(p, ctx) == k);
        CHECK(local_index(p, ctx) == index_by_division(p, ell));
      }
    }
    std::set<std::uint64_t> expected;
    for (std::uint64_t p = 2; p <= bound; ++p)
      if (prime_by_trial(p) && (p - 1) % ell == 0) expected.insert(p);
    CHECK(seen == expected);

    for (const auto& e : ulm_spectrum(ctx, bound)) {
      CHECK(e.height == ipow(ell, e.k) - 1);
      CHECK(e.witness == pk_by_trial(ell, e.k, bound).front());
      CHECK(e.count == pk_by_trial(ell, e.k, bound).size());
    }
  }
}

TEST_CASE("property: min rule monotonicity and point dichotomy") {
  const CycloContext c3(3);
  // Higher levels first so the t = 0 primes arrive last.
  std::vector<std::uint64_t> pool = sieve_Pk(c3, 2, 2000);
  for (std::size_t k : {1u, 0u}) {
    const auto pk = sieve_Pk(c3, k, 300);
    pool.insert(pool.end(), pk.begin(), pk.end());
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    std::set<std::uint64_t> ram;
    std::uint64_t prev_lo = ~std::uint64_t{0}, prev_hi = ~std::uint64_t{0};
    bool has_t0 = false;
    for (auto p : pool) {
      ram.insert(p);
      has_t0 = has_t0 || local_index(p, c3) == 0;
      const auto h = global_height(CharacterSpec(c3, ram, m));
      CHECK(h.range.lo <= prev_lo);
      CHECK(h.range.hi <= prev_hi);
      // A place with t = 0 pins the minimum to the point 0 for every m.
      CHECK(h.range.is_point() == (m == 1 || has_t0));
      if (m == 1) {
        // Realized heights are l^k - 1.
        std::uint64_t x = h.range.lo + 1;
        while (x % 3 == 0) x /= 3;
        CHECK(x == 1);
      }
      prev_lo = h.range.lo;
      prev_hi = h.range.hi;
    }
  }
  for (auto p : pool)
    for (std::size_t m = 1; m <= 4; ++m)
      CHECK(local_height_interval(make_place(p, c3, true), c3, m).is_point() == (m == 1 || local_index(p, c3) == 0));
}
