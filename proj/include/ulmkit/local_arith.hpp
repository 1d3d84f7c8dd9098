#pragma once

// Cyclotomic local indices over Q and the height simulator for F_l-characters
// of Gal(Q): local height windows, the min rule across places, and the
// realized spectrum of finite heights.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>


namespace ulmkit::arith {

// Base field Q, l odd; then l^s = #(l-power roots of unity in Q(mu_l)) with s = 1.
class CycloContext {
 public:
  explicit CycloContext(std::uint64_t ell);
  std::uint64_t ell() const noexcept { return ell_; }
  std::uint64_t s() const noexcept { return 1; }

 private:
  std::uint64_t ell_;
};

bool is_prime(std::uint64_t n);
// v_l(n) for n > 0.
std::size_t valuation(std::uint64_t n, std::uint64_t ell);
// l^k, throwing on overflow of 62 bits.
std::uint64_t ipow(std::uint64_t ell, std::size_t k);

struct LocalPlace {
  std::uint64_t p = 0;
  std::size_t t = 0;      // l^t = [Z : Z_p]
  bool ramified = false;
  bool tame = true;
};

// t = max(0, v_l(p - 1) - s).
std::size_t local_index(std::uint64_t p, const CycloContext& ctx);
LocalPlace make_place(std::uint64_t p, const CycloContext& ctx, bool ramified);

// Primes p <= bound with p = 1 mod l^{k+s} and p != 1 mod l^{k+s+1}.
std::vector<std::uint64_t> sieve_Pk(const CycloContext& ctx, std::size_t k,
                                    std::uint64_t bound);

// Closed interval of integers; `infinite` stands for the unbounded height.
struct HeightInterval {
  bool infinite = false;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool is_point() const { return !infinite && lo == hi; }
};

// Unramified: infinite. Tame nontrivial ramification: [max(0, l^t - m), l^t - 1].
HeightInterval local_height_interval(const LocalPlace& place, const CycloContext& ctx,
                                     std::size_t m);

class CharacterSpec {
 public:
  // Each ramified prime must be = 1 mod l; the set must be nonempty.
  CharacterSpec(CycloContext ctx, std::set<std::uint64_t> ramified, std::size_t m = 1);

  const CycloContext& ctx() const noexcept { return ctx_; }
  const std::set<std::uint64_t>& ramified() const noexcept { return ramified_; }
  std::size_t m() const noexcept { return m_; }

 private:
  CycloContext ctx_;
  std::set<std::uint64_t> ramified_;
  std::size_t m_;
};

struct GlobalHeight {
  HeightInterval range;    // a point when exact
  bool exact = false;      // m = 1
  std::uint64_t attained_at = 0;  // a ramified prime realizing the lower end
};

// Ht(phi) = min over places of Ht(phi_p); unramified places never attain it.
GlobalHeight global_height(const CharacterSpec& spec);

struct SpectrumEntry {
  std::size_t k = 0;
  std::uint64_t height = 0;   // l^k - 1
  std::uint64_t witness = 0;  // smallest prime in P_k
  std::size_t count = 0;      // |P_k cap [2, bound]|
};

// Realized finite heights of single-prime tame characters with conductor
// p <= bound, ascending in k.
std::vector<SpectrumEntry> ulm_spectrum(const CycloContext& ctx, std::uint64_t bound);

}  // namespace ulmkit::arith
