#include "ulmkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ulmkit/duality.hpp"
#include "ulmkit/embed.hpp"
#include "ulmkit/error.hpp"
#include "ulmkit/local_arith.hpp"
#include "ulmkit/parallel.hpp"
#include "ulmkit/presentation.hpp"
#include "ulmkit/rng.hpp"
#include "ulmkit/ulm.hpp"

namespace ulmkit::acceptance {

using group::Element;
using group::GroupEP;
using group::GroupHom;
using group::GroupPtr;
using group::Subset;

namespace {

// ---- thresholds -------------------------------------------------------------

constexpr std::uint64_t kSpectrumBound = 10000;
constexpr double kSpectrumSeconds = 1.0;
const std::map<std::uint64_t, std::uint64_t> kSpectrumGolden = {
    {0, 7}, {2, 19}, {8, 109}, {26, 163}, {80, 487}, {242, 1459}};

constexpr std::size_t kDecomposeTrials = 500;
constexpr std::size_t kDecomposeMaxDim = 40;
constexpr double kDecomposeSeconds = 10.0;

constexpr std::size_t kHeightTrials = 200;
constexpr std::size_t kHeightMaxDim = 6;
constexpr double kHeightSeconds = 60.0;

constexpr std::size_t kBasicLemmaMaxN = 5;

constexpr std::size_t kFrattiniMinEPs = 50;
constexpr std::size_t kFrattiniMaxOrder = 243;

constexpr std::size_t kReductionEPs = 100;
constexpr std::size_t kReductionMaxOrder = 81;
constexpr std::size_t kReductionSplitSolutions = 16;

constexpr std::size_t kDualityTrials = 200;
constexpr std::size_t kDualityMaxDim = 30;

constexpr std::size_t kPresentMaxLevel = 2;
constexpr std::size_t kPresentMaxMult = 3;
constexpr std::size_t kPresentMaxTrunc = 6;

constexpr std::size_t kFreeTrials = 100;
constexpr std::size_t kFreeMaxDim = 12;

const Scalar kPrimes[] = {2, 3, 5, 7};

// ---- small helpers ------------------------------------------------------------

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

// Every vector of F_l^d, in base-l order.
std::vector<Vec> all_vectors(Scalar ell, std::size_t d) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= ell;
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t x = 0; x < count; ++x) {
    Vec v(d);
    std::size_t y = x;
    for (std::size_t i = 0; i < d; ++i, y /= ell) v[i] = Scalar(y % ell);
    out.push_back(std::move(v));
  }
  return out;
}

// Brute force: does phi: M -> V_m lift to V_n? Each module map M -> V_n is
// q -> sum_i g(x^{n-i} q) e_i for a functional g with g x^n = 0, so it is
// enough to run over all l^d functionals.
bool lift_exists_brute(const ZHom& phi, std::size_t n) {
  const ZModule& m = phi.src();
  const std::size_t d = m.dim(), mlen = phi.dst().dim();
  const FpMatrix& x = m.nilpotent();
  for (const Vec& g : all_vectors(m.ell(), d)) {
    std::vector<Vec> rows(n);
    Vec f = g;
    for (std::size_t i = n; i-- > 0;) {
      rows[i] = f;
      f = linalg::left_multiply(f, x);
    }
    if (!linalg::is_zero(f)) continue;
    bool match = true;
    for (std::size_t r = 0; r < mlen && match; ++r)
      for (std::size_t c = 0; c < d && match; ++c)
        match = rows[r][c] == phi.matrix()(r, c);
    if (match) return true;
  }
  return false;
}

// theta-invariant normal subgroups of g, sorted by order.
std::vector<Subset> invariant_normal_subgroups(const group::FinZGroup& g) {
  std::vector<Subset> out;
  for (auto& s : group::theta_invariant_subgroups(g))
    if (group::is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

GroupHom first_projection(const GroupPtr& prod, const GroupPtr& a) {
  std::vector<Element> images(prod->order());
  for (std::size_t x = 0; x < prod->order(); ++x) images[x] = Element(x % a->order());
  return GroupHom(prod, a, std::move(images));
}

struct EPCase {
  GroupEP ep;
  GroupHom known_solution;
  std::string label;
};

// (alpha, beta) with beta: G -> G/K, and H = G (alpha = beta) or
// H = G x C_l (alpha = beta o pr_1). The known solution is id or pr_1.
std::vector<EPCase> cases_for(const GroupPtr& g, const Subset& k, std::size_t max_h) {
  std::vector<EPCase> out;
  group::Quotient q = group::quotient(g, k);
  const GroupHom& beta = q.projection;
  out.push_back({GroupEP(beta, beta), group::identity_hom(g), g->label() + "/K"});
  if (g->order() * g->ell() <= max_h) {
    GroupPtr h = group::direct_product(g, group::cyclic_group(g->ell(), 1));
    GroupHom pr = first_projection(h, g);
    out.push_back({GroupEP(group::compose(beta, pr), beta), pr, g->label() + "xC/K"});
  }
  return out;
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criteria -----------------------------------------------------------------

CriterionResult spectrum_shape(std::uint64_t) {
  CriterionResult r{1, "ulm-spectrum-shape", false, "", 0, kSpectrumSeconds};
  const arith::CycloContext ctx(3);
  const auto entries = arith::ulm_spectrum(ctx, kSpectrumBound);
  std::map<std::uint64_t, std::uint64_t> got;
  for (const auto& e : entries) got[e.height] = e.witness;

  // Oracle: trial division, height 3^{v_3(p-1) - 1} - 1 per prime p = 1 mod 3.
  std::map<std::uint64_t, std::uint64_t> oracle;
  for (std::uint64_t p = 2; p <= kSpectrumBound; ++p) {
    if (p % 3 != 1 || !is_prime_trial(p)) continue;
    std::uint64_t q = (p - 1) / 3, h = 1;
    while (q % 3 == 0) {
      q /= 3;
      h *= 3;
    }
    oracle.try_emplace(h - 1, p);
  }
  std::vector<std::string> issues;
  if (got != oracle) issues.push_back("library spectrum differs from trial-division oracle");
  if (got != kSpectrumGolden) issues.push_back("spectrum differs from golden heights/witnesses");
  std::ostringstream os;
  os << "heights{";
  for (const auto& [h, w] : got) os << h << ":" << w << (h == got.rbegin()->first ? "" : ",");
  os << "}";
  r.passed = issues.empty();
  r.detail = issues.empty() ? os.str() : os.str() + "; " + join(issues);
  return r;
}

CriterionResult decomposition_oracle(std::uint64_t seed) {
  CriterionResult r{2, "decompose-vs-oracle", false, "", 0, kDecomposeSeconds};
  auto failures = parallel_map<std::string>(kDecomposeTrials, [&](std::size_t i) -> std::string {
    Rng rng(mix(seed, i));
    const Scalar ell = kPrimes[rng.below(4)];
    const std::size_t dim = rng.between(1, kDecomposeMaxDim);
    const auto gen = random_module(ell, dim, rng.next());
    const auto dec = ulm::decompose(gen.module);
    const auto oracle = ulm::jordan_multiplicities(gen.module);
    if (dec.type() != oracle) return "decompose != rank oracle";
    if (ulm::jordan_type_of(gen.hidden_type) != oracle) return "hidden type != rank oracle";
    const FpMatrix conj = dec.change_of_basis * gen.module.sigma() * dec.chain_basis();
    if (!(conj == unipotent_jordan_matrix(ell, dec.block_sizes())))
      return "conjugated sigma is not block diagonal";
    return {};
  });
  std::size_t bad = 0;
  std::string first;
  for (const auto& f : failures)
    if (!f.empty()) {
      if (!bad) first = f;
      ++bad;
    }
  r.passed = bad == 0;
  r.detail = std::to_string(kDecomposeTrials) + " modules, " + std::to_string(bad) +
             " mismatches" + (bad ? " (" + first + ")" : "");
  return r;
}

CriterionResult height_duality(std::uint64_t seed) {
  CriterionResult r{3, "height-duality", false, "", 0, kHeightSeconds};
  struct Tally {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
  };
  auto tallies = parallel_map<Tally>(kHeightTrials, [&](std::size_t i) {
    Rng rng(mix(seed ^ 0x3, i));
    const std::size_t dim = rng.between(1, kHeightMaxDim);
    const ZModule m = random_module(2, dim, rng.next()).module;
    const ZModule dual = duality::dualize(m);
    Tally t;
    for (const Vec& eta : all_vectors(2, dim)) {
      if (linalg::is_zero(eta)) continue;
      ++t.checked;
      const Height h = element_height(dual, eta);
      const auto env = duality::cyclic_envelope(duality::DualElement(m, eta));
      const Height hh = embed::hom_height(env.eta_star);
      const std::size_t mlen = env.length;
      bool ok = !h.is_infinite() && h == hh;
      // Independent confirmation: a lift to V_{m+h} exists and to V_{m+h+1} does not.
      if (ok) {
        ok = lift_exists_brute(env.eta_star, mlen + h.value()) &&
             !lift_exists_brute(env.eta_star, mlen + h.value() + 1);
      }
      if (!ok) ++t.mismatches;
    }
    return t;
  });
  Tally total;
  for (const auto& t : tallies) {
    total.checked += t.checked;
    total.mismatches += t.mismatches;
  }
  r.passed = total.mismatches == 0;
  r.detail = std::to_string(kHeightTrials) + " modules, " + std::to_string(total.checked) +
             " dual elements, " + std::to_string(total.mismatches) + " mismatches";
  return r;
}

CriterionResult basic_lemma(std::uint64_t) {
  CriterionResult r{4, "basic-lemma-exhaustive", false, "", 0, 0};
  std::size_t checked = 0, mismatches = 0;
  for (Scalar ell : {Scalar(2), Scalar(3)}) {
    for (std::size_t n = 1; n <= kBasicLemmaMaxN; ++n) {
      const ZModule vn = make_cyclic(ell, std::int64_t(n));
      const ZModule dual = duality::dualize(vn);
      for (const Vec& f : all_vectors(ell, n)) {
        const duality::DualElement fe(vn, f);
        const Height h = element_height(dual, f);
        for (std::size_t k = 0; k <= n; ++k) {
          ++checked;
          const bool in_filtration = h.is_infinite() || h.value() >= k;
          // f(I^{n-k} V_n) = 0, evaluated on a basis of I^{n-k} V_n.
          bool annihilates = true;
          for (const auto& v : aug_power(vn, n - k).basis())
            if (fe(v) != 0) annihilates = false;
          if (in_filtration != annihilates) ++mismatches;
          if (duality::basic_lemma_membership(fe, k) != in_filtration) ++mismatches;
        }
        ++checked;
        // I^{n-1} V_n is spanned by e_n.
        const bool nonzero_on_socle = fe(linalg::unit_vector(n, n - 1)) != 0;
        if (duality::generates_dual_cyclic(fe) != nonzero_on_socle) ++mismatches;
      }
    }
  }
  r.passed = mismatches == 0;
  r.detail = std::to_string(checked) + " checks, " + std::to_string(mismatches) + " mismatches";
  return r;
}

CriterionResult group_algebra_invariants(std::uint64_t) {
  CriterionResult r{5, "group-algebra-invariants", false, "", 0, 0};
  std::vector<std::string> issues;
  std::size_t cases = 0;
  for (Scalar ell : {Scalar(2), Scalar(3), Scalar(5)}) {
    std::size_t size = 1;
    for (std::size_t k = 0; k <= 2 && size <= 25; ++k, size *= ell) {
      ++cases;
      const auto u = ulm::ulm_invariants(make_group_algebra(ell, std::int64_t(k)));
      std::vector<std::size_t> expect(size, 0);
      expect[size - 1] = 1;
      if (u != expect)
        issues.push_back("l=" + std::to_string(ell) + " k=" + std::to_string(k));
    }
  }
  r.passed = issues.empty();
  r.detail = std::to_string(cases) + " group algebras" + (issues.empty() ? "" : ": " + join(issues));
  return r;
}

CriterionResult frattini_properness(std::uint64_t seed) {
  CriterionResult r{6, "frattini-solutions-proper", false, "", 0, 0};
  std::size_t eps = 0, solutions = 0, counterexamples = 0, budget_skips = 0;
  for (Scalar ell : {Scalar(2), Scalar(3)}) {
    for (const auto& g : group_pool(ell, kFrattiniMaxOrder, seed)) {
      const Subset phi = group::z_frattini(*g);
      if (phi.size() == 1) continue;
      std::size_t used = 0;
      for (const auto& k : invariant_normal_subgroups(*g)) {
        if (k.size() == 1 || !std::includes(phi.begin(), phi.end(), k.begin(), k.end()))
          continue;
        if (used++ == 3) break;
        for (auto& c : cases_for(g, k, kFrattiniMaxOrder)) {
          try {
            const auto rep = group::frattini_solutions_proper(c.ep);
            ++eps;
            solutions += rep.solutions;
            if (!rep.all_proper) ++counterexamples;
          } catch (const BudgetError&) {
            ++budget_skips;
          }
        }
      }
    }
  }
  r.passed = eps >= kFrattiniMinEPs && counterexamples == 0 && solutions > 0;
  r.detail = std::to_string(eps) + " Frattini EPs (min " + std::to_string(kFrattiniMinEPs) +
             "), " + std::to_string(solutions) + " solutions, " +
             std::to_string(counterexamples) + " improper, " + std::to_string(budget_skips) +
             " over budget";
  return r;
}

CriterionResult reduction_round_trip(std::uint64_t seed) {
  CriterionResult r{7, "frattini-split-reduction", false, "", 0, 0};
  std::vector<EPCase> pool;
  for (Scalar ell : {Scalar(2), Scalar(3)})
    for (const auto& g : group_pool(ell, kReductionMaxOrder, seed))
      for (const auto& k : invariant_normal_subgroups(*g)) {
        if (k.size() == 1 || k.size() == g->order()) continue;
        for (auto& c : cases_for(g, k, 3 * kReductionMaxOrder)) pool.push_back(std::move(c));
      }

  Rng rng(mix(seed, 7));
  std::size_t reduced = 0, attempts = 0, with_proper = 0, combined_ok = 0;
  std::size_t fiber_runs = 0, fiber_surjective = 0;
  std::vector<std::string> issues;
  while (reduced < kReductionEPs && attempts < 20 * kReductionEPs && !pool.empty()) {
    ++attempts;
    const EPCase& c = pool[rng.below(pool.size())];
    const GroupEP& ep = c.ep;
    try {
      const auto red = group::frattini_reduce(ep);
      if (!group::classify_ep(red.ep_u).frattini) issues.push_back("ep_u not Frattini");
      if (red.ep_split) {
        if (!group::classify_ep(*red.ep_split).split) issues.push_back("ep_split not split");
        bool any = false;
        for (const auto& gp : group::enumerate_solutions(*red.ep_split, kReductionSplitSolutions)) {
          if (!gp.is_surjective()) continue;
          any = true;
          const GroupHom gamma = red.combine(gp);
          bool ok = gamma.is_surjective() && gamma.is_equivariant();
          for (std::size_t h = 0; h < ep.h()->order() && ok; ++h)
            ok = ep.beta()(gamma(Element(h))) == ep.alpha()(Element(h));
          if (ok)
            ++combined_ok;
          else
            issues.push_back("combined map fails on " + c.label);
        }
        if (any) ++with_proper;
      }
      ++reduced;
    } catch (const BudgetError&) {
      continue;
    }

    try {
      // Fiber product of G x| Z/l^r and Gamma x| Z/l^R over Gamma x| Z/l^r.
      const std::size_t rr = theta_exponent(*ep.g());
      const std::size_t big = std::max(rr + 1, theta_exponent(*ep.h()));
      const auto hz = group::semidirect_with_Z(ep.h(), big);
      const auto gz = group::semidirect_with_Z(ep.g(), rr);
      const auto cz_big = group::semidirect_with_Z(ep.gamma(), big);
      const auto cz = group::semidirect_with_Z(ep.gamma(), rr);
      const GroupHom psi2 = semidirect_map(c.known_solution, hz, gz);
      const GroupHom phi1 = semidirect_map(ep.alpha(), hz, cz_big);
      const GroupHom p = semidirect_map(ep.beta(), gz, cz);
      const GroupHom q = semidirect_map(group::identity_hom(ep.gamma()), cz_big, cz);
      const auto fc = group::fiber_combine(psi2, phi1, p, q);
      ++fiber_runs;
      if (fc.kernel_identity != fc.surjective || fc.index_identity != fc.surjective)
        issues.push_back("fiber bookkeeping disagrees on " + c.label);
      if (psi2.is_surjective() && phi1.is_surjective()) {
        ++fiber_surjective;
        if (!fc.kernel_identity) issues.push_back("kernel identity fails on " + c.label);
      }
    } catch (const BudgetError&) {
      continue;
    }
  }
  r.passed = reduced >= kReductionEPs && issues.empty() && with_proper > 0 &&
             fiber_surjective > 0;
  r.detail = std::to_string(reduced) + " EPs reduced (" + std::to_string(attempts) +
             " drawn), " + std::to_string(with_proper) + " with proper split solutions, " +
             std::to_string(combined_ok) + " combined maps verified, " +
             std::to_string(fiber_surjective) + "/" + std::to_string(fiber_runs) +
             " surjective fiber instances" + (issues.empty() ? "" : "; " + issues.front());
  return r;
}

CriterionResult duality_involution(std::uint64_t seed) {
  CriterionResult r{8, "duality-involution", false, "", 0, 0};
  auto bad = parallel_map<int>(kDualityTrials, [&](std::size_t i) {
    Rng rng(mix(seed ^ 0x8, i));
    const Scalar ell = kPrimes[rng.below(4)];
    const ZModule m = random_module(ell, rng.between(1, kDualityMaxDim), rng.next()).module;
    const ZModule d = duality::dualize(m);
    int fails = 0;
    if (!(duality::dualize(d).sigma() == m.sigma())) ++fails;
    if (ulm::ulm_invariants(d) != ulm::ulm_invariants(m)) ++fails;
    return fails;
  });
  const int fails = std::accumulate(bad.begin(), bad.end(), 0);
  r.passed = fails == 0;
  r.detail = std::to_string(kDualityTrials) + " modules, " + std::to_string(fails) + " failures";
  return r;
}

CriterionResult presentation_round_trip(std::uint64_t) {
  CriterionResult r{9, "presentation-round-trip", false, "", 0, 0};
  std::size_t budgets = 0, mismatched = 0;
  for (Scalar ell : {Scalar(2), Scalar(3)})
    for (std::size_t n = 0; n <= kPresentMaxLevel; ++n) {
      std::size_t combos = 1;
      for (std::size_t k = 0; k <= n; ++k) combos *= kPresentMaxMult + 1;
      for (std::size_t code = 0; code < combos; ++code)
        for (std::size_t fm = 0; fm <= kPresentMaxMult; ++fm)
          for (std::size_t t = 1; t <= kPresentMaxTrunc; ++t) {
            present::PresentationBudget b;
            b.ell = ell;
            b.max_level = n;
            std::size_t c = code;
            for (std::size_t k = 0; k <= n; ++k, c /= kPresentMaxMult + 1)
              b.mult[k] = c % (kPresentMaxMult + 1);
            b.free_mult = fm;
            b.trunc = t;
            ++budgets;
            if (!present::roundtrip_check(b).ok()) ++mismatched;
          }
    }
  r.passed = mismatched == 0;
  r.detail = std::to_string(budgets) + " budgets, " + std::to_string(mismatched) + " mismatches";
  return r;
}

CriterionResult free_quotient(std::uint64_t seed) {
  CriterionResult r{10, "free-quotient", false, "", 0, 0};
  std::size_t fails = 0;
  for (std::size_t i = 0; i < kFreeTrials; ++i) {
    Rng rng(mix(seed ^ 0xA, i));
    const Scalar ell = kPrimes[rng.below(4)];
    const ZModule m = random_module(ell, rng.between(1, kFreeMaxDim), rng.next()).module;
    const std::size_t d = m.dim();
    const auto fq = embed::quotient_of_free(m);
    bool ok = fq.surjection.is_surjective() && fq.surjection.dst() == m;
    // r is least with sigma^{l^r} = 1.
    std::uint64_t lr = 1;
    for (std::size_t k = 0; k < fq.r; ++k) lr *= ell;
    const FpMatrix id = FpMatrix::identity(ell, d);
    ok = ok && m.sigma().pow(lr) == id && (fq.r == 0 || !(m.sigma().pow(lr / ell) == id));
    // Minimality: the images of the copies' group identities, together with IM,
    // span M, while IM has codimension exactly mult; c < mult generators plus
    // IM span at most dim IM + c < d.
    const std::size_t rank_im = linalg::rank(m.nilpotent());
    ok = ok && rank_im + fq.mult == d;
    std::vector<Vec> cols = linalg::Subspace::column_space(m.nilpotent()).basis();
    const std::size_t block = fq.mult ? fq.surjection.src().dim() / fq.mult : 0;
    for (std::size_t c = 0; c < fq.mult; ++c) cols.push_back(fq.surjection.matrix().col(c * block));
    ok = ok && linalg::rank(FpMatrix::from_columns(ell, d, cols)) == d;
    if (!ok) ++fails;
  }
  r.passed = fails == 0;
  r.detail = std::to_string(kFreeTrials) + " modules, " + std::to_string(fails) + " failures";
  return r;
}

using Runner = CriterionResult (*)(std::uint64_t);
constexpr Runner kRunners[] = {spectrum_shape,          decomposition_oracle,
                               height_duality,          basic_lemma,
                               group_algebra_invariants, frattini_properness,
                               reduction_round_trip,    duality_involution,
                               presentation_round_trip, free_quotient};

}  // namespace

std::size_t theta_exponent(const group::FinZGroup& g) {
  std::size_t r = 0;
  for (std::uint64_t t = g.theta_order(); t > 1; t /= g.ell()) ++r;
  return r;
}

GroupHom semidirect_map(const GroupHom& f, const group::SemidirectZ& from,
                        const group::SemidirectZ& to) {
  const std::size_t nx = f.src()->order(), ny = f.dst()->order();
  const std::size_t zto = to.group->order() / ny;
  std::vector<Element> images(from.group->order());
  for (std::size_t a = 0; a < images.size(); ++a)
    images[a] = Element(f(Element(a % nx)) + ny * ((a / nx) % zto));
  return GroupHom(from.group, to.group, std::move(images));
}

std::vector<GroupPtr> group_pool(Scalar ell, std::size_t max_order, std::uint64_t seed) {
  std::vector<GroupPtr> pool;
  auto add = [&](const std::function<GroupPtr()>& make) {
    try {
      GroupPtr g = make();
      if (g->order() <= max_order) pool.push_back(std::move(g));
    } catch (const BudgetError&) {
    }
  };
  for (std::size_t k = 1; k <= 5; ++k) {
    add([&] { return group::cyclic_group(ell, k); });
    if (k >= 2) add([&] { return group::cyclic_group(ell, k, 1 + ell); });
  }
  for (std::size_t n = 2; n <= 5; ++n)
    add([&] { return group::group_from_module(make_cyclic(ell, std::int64_t(n))); });
  add([&] { return group::group_from_module(make_group_algebra(ell, 1)); });
  Rng rng(mix(seed, ell));
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t d = rng.between(2, 4);
    add([&] { return group::group_from_module(random_module(ell, d, rng.next()).module); });
  }
  add([&] {
    return group::direct_product(group::cyclic_group(ell, 2), group::cyclic_group(ell, 1));
  });
  // Nonabelian: V_2 x| Z/l (Heisenberg for l odd, D_8 for l = 2), with and
  // without the inherited theta.
  add([&] {
    return group::semidirect_with_Z(group::group_from_module(make_cyclic(ell, 2)), 1).group;
  });
  add([&] {
    GroupPtr h = group::semidirect_with_Z(group::group_from_module(make_cyclic(ell, 2)), 1).group;
    std::vector<Element> id(h->order());
    for (std::size_t a = 0; a < id.size(); ++a) id[a] = Element(a);
    return group::with_theta(h, std::move(id));
  });
  add([&] { return group::semidirect_with_Z(group::cyclic_group(ell, 2, 1 + ell), 1).group; });
  add([&] {
    return group::semidirect_with_Z(group::group_from_module(make_group_algebra(ell, 1)), 1).group;
  });
  add([&] {
    GroupPtr w =
        group::semidirect_with_Z(group::group_from_module(make_group_algebra(ell, 1)), 1).group;
    return group::direct_product(w, group::cyclic_group(ell, 1));
  });
  return pool;
}

CriterionResult run_one(int id, std::uint64_t seed) {
  if (id < 1 || id > 10) throw DomainError("criterion id must be in 1..10");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = kRunners[id - 1](seed);
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = elapsed(start);
  if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
    r.passed = false;
    r.detail += "; exceeded time limit";
  }
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_one(id, seed));
  return out;
}

void print(std::ostream& os, const CriterionResult& r) {
  os << (r.passed ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " " << r.name << ": "
     << r.detail << " [" << std::fixed << std::setprecision(2) << r.seconds << "s";
  if (r.limit_seconds > 0) os << " < " << r.limit_seconds << "s";
  os << "]\n";
}

}  // namespace ulmkit::acceptance
