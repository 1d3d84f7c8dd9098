#include "ulmkit/local_arith.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ulmkit/error.hpp"

namespace ulmkit::arith {

namespace {

std::vector<bool> prime_table(std::uint64_t bound) {
  if (bound > (std::uint64_t{1} << 32))
    throw BudgetError("sieve bound exceeds 2^32");
  std::vector<bool> composite(bound + 1, false);
  composite[0] = true;
  if (bound >= 1) composite[1] = true;
  for (std::uint64_t i = 2; i * i <= bound; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  composite.flip();
  return composite;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t valuation(std::uint64_t n, std::uint64_t ell) {
  if (n == 0) throw DomainError("valuation of zero");
  std::size_t v = 0;
  while (n % ell == 0) {
    n /= ell;
    ++v;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t ell, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 62) / ell) throw BudgetError("l^k overflows 62 bits");
    r *= ell;
  }
  return r;
}

CycloContext::CycloContext(std::uint64_t ell) : ell_(ell) {
  if (ell == 2 || !is_prime(ell))
    throw DomainError("l must be an odd prime, got " + std::to_string(ell));
}

std::size_t local_index(std::uint64_t p, const CycloContext& ctx) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p == ctx.ell()) throw DomainError("wild place p = l is not supported");
  const std::size_t v = valuation(p - 1, ctx.ell());
  return v > ctx.s() ? v - ctx.s() : 0;
}

LocalPlace make_place(std::uint64_t p, const CycloContext& ctx, bool ramified) {
  return {p, local_index(p, ctx), ramified, true};
}

std::vector<std::uint64_t> sieve_Pk(const CycloContext& ctx, std::size_t k,
                                    std::uint64_t bound) {
  if (bound < 2) throw DomainError("sieve bound must be at least 2");
  const std::uint64_t lo = ipow(ctx.ell(), k + ctx.s());
  std::vector<std::uint64_t> out;
  if (lo >= bound) return out;
  const std::uint64_t hi = lo * ctx.ell();
  const auto primes = prime_table(bound);
  for (std::uint64_t p = lo + 1; p <= bound; p += lo)
    if (primes[p] && (p - 1) % hi != 0) out.push_back(p);
  return out;
}

HeightInterval local_height_interval(const LocalPlace& place, const CycloContext& ctx,
                                     std::size_t m) {
  if (m == 0) throw DomainError("local height needs m >= 1");
  if (place.p == ctx.ell() || !place.tame)
    throw DomainError("wild place p = l is not supported");
  if (!place.ramified) return {true, 0, 0};
  const std::uint64_t lt = ipow(ctx.ell(), place.t);
  return {false, lt > m ? lt - m : 0, lt - 1};
}

CharacterSpec::CharacterSpec(CycloContext ctx, std::set<std::uint64_t> ramified,
                             std::size_t m)
    : ctx_(ctx), ramified_(std::move(ramified)), m_(m) {
  if (ramified_.empty())
    throw DomainError("a nontrivial character of Gal(Q) must ramify somewhere");
  if (m_ == 0) throw DomainError("character length m must be at least 1");
  for (auto p : ramified_) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p == ctx_.ell()) throw DomainError("wild place p = l is not supported");
    if (p % ctx_.ell() != 1)
      throw DomainError("no order-l character is ramified only at " +
                        std::to_string(p) + " (p != 1 mod l)");
  }
}

GlobalHeight global_height(const CharacterSpec& spec) {
  GlobalHeight out;
  out.exact = spec.m() == 1;
  out.range.lo = std::numeric_limits<std::uint64_t>::max();
  out.range.hi = std::numeric_limits<std::uint64_t>::max();
  for (auto p : spec.ramified()) {
    const auto local =
        local_height_interval(make_place(p, spec.ctx(), true), spec.ctx(), spec.m());
    if (local.lo < out.range.lo) {
      out.range.lo = local.lo;
      out.attained_at = p;
    }
    out.range.hi = std::min(out.range.hi, local.hi);
  }
  if (out.exact && !out.range.is_point())
    throw InternalError("m = 1 local windows must be points");
  return out;
}

std::vector<SpectrumEntry> ulm_spectrum(const CycloContext& ctx, std::uint64_t bound) {
  if (bound < 2) throw DomainError("spectrum bound must be at least 2");
  const auto primes = prime_table(bound);
  std::map<std::size_t, SpectrumEntry> by_k;
  for (std::uint64_t p = ctx.ell() + 1; p <= bound; p += ctx.ell()) {
    if (!primes[p]) continue;
    const GlobalHeight h = global_height(CharacterSpec(ctx, {p}, 1));
    const std::size_t k = local_index(p, ctx);
    if (h.range.lo + 1 != ipow(ctx.ell(), k))
      throw InternalError("finite height outside the l^k - 1 family");
    auto [it, fresh] = by_k.try_emplace(k, SpectrumEntry{k, h.range.lo, p, 0});
    ++it->second.count;
  }
  std::vector<SpectrumEntry> out;
  for (auto& [k, e] : by_k) out.push_back(e);
  return out;
}

}  // namespace ulmkit::arith
