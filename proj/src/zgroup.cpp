#include "ulmkit/zgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <map>
#include <set>
#include <utility>

#include "ulmkit/error.hpp"

namespace ulmkit::group {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t ell) {
  if (n == 0) return false;
  while (n % ell == 0) n /= ell;
  return n == 1;
}

std::vector<bool> bitmap(std::size_t n, const Subset& s) {
  std::vector<bool> out(n, false);
  for (auto e : s) out[e] = true;
  return out;
}

Subset from_bitmap(const std::vector<bool>& b) {
  Subset out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) out.push_back(static_cast<Element>(i));
  return out;
}

std::size_t index_in(const Subset& s, Element e) {
  auto it = std::lower_bound(s.begin(), s.end(), e);
  if (it == s.end() || *it != e) throw InternalError("element missing from subset");
  return static_cast<std::size_t>(it - s.begin());
}

}  // namespace

// ---- FinZGroup ---------------------------------------------------------------

FinZGroup::FinZGroup(Scalar ell, std::vector<Element> cayley,
                     std::vector<Element> theta, std::string label, std::size_t cap)
    : FinZGroup(ell, std::move(cayley), std::move(theta), std::move(label), cap, true) {}

FinZGroup FinZGroup::trusted(Scalar ell, std::vector<Element> cayley,
                             std::vector<Element> theta, std::string label,
                             std::size_t cap) {
  return FinZGroup(ell, std::move(cayley), std::move(theta), std::move(label), cap,
                   false);
}

FinZGroup::FinZGroup(Scalar ell, std::vector<Element> cayley,
                     std::vector<Element> theta, std::string label, std::size_t cap,
                     bool check_associativity)
    : ell_(ell), cayley_(std::move(cayley)), theta_(std::move(theta)),
      label_(std::move(label)) {
  linalg::require_prime_modulus(ell);
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(cayley_.size()))));
  if (n * n != cayley_.size() || n == 0)
    throw DomainError("Cayley table is not square");
  if (n > cap)
    throw BudgetError("group order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  if (!is_power_of(n, ell))
    throw DomainError("group order " + std::to_string(n) + " is not a power of " +
                      std::to_string(ell));
  for (auto e : cayley_)
    if (e >= n) throw DomainError("Cayley table entry out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (cayley_[a] != a || cayley_[a * n] != a)
      throw DomainError("element 0 is not the identity");

  inverse_.assign(n, 0);
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      Element c = cayley_[a * n + b];
      if (seen[c]) throw DomainError("Cayley table row is not a permutation");
      seen[c] = true;
      if (c == 0) {
        if (cayley_[b * n + a] != 0) throw DomainError("one-sided inverse in table");
        inverse_[a] = static_cast<Element>(b);
        found = true;
      }
    }
    if (!found) throw DomainError("element without inverse");
  }

  if (check_associativity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Element ab = cayley_[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (cayley_[ab * n + c] != cayley_[a * n + cayley_[b * n + c]])
            throw DomainError("Cayley table is not associative");
      }
  }

  if (theta_.size() != n) throw DomainError("theta has the wrong length");
  std::fill(seen.begin(), seen.end(), false);
  for (auto t : theta_) {
    if (t >= n || seen[t]) throw DomainError("theta is not a permutation");
    seen[t] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (theta_[cayley_[a * n + b]] != cayley_[theta_[a] * n + theta_[b]])
        throw DomainError("theta is not a homomorphism");

  // Order of theta = lcm of its cycle lengths.
  std::fill(seen.begin(), seen.end(), false);
  theta_order_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::uint64_t len = 0;
    for (Element e = static_cast<Element>(a); !seen[e]; e = theta_[e]) {
      seen[e] = true;
      ++len;
    }
    theta_order_ = std::lcm(theta_order_, len);
  }
  if (!is_power_of(theta_order_, ell))
    throw DomainError("theta does not have " + std::to_string(ell) + "-power order");
}

Element FinZGroup::theta_pow(Element a, std::uint64_t k) const {
  k %= theta_order_;
  for (std::uint64_t i = 0; i < k; ++i) a = theta_[a];
  return a;
}

Element FinZGroup::pow(Element a, std::uint64_t k) const {
  Element r = 0;
  for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Element FinZGroup::commutator(Element a, Element b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Element FinZGroup::conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }

std::size_t FinZGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element p = a; p != 0; p = mul(p, a)) ++k;
  return k;
}

bool FinZGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(Element(a), Element(b)) != mul(Element(b), Element(a))) return false;
  return true;
}

// ---- GroupHom ----------------------------------------------------------------

GroupHom::GroupHom(GroupPtr src, GroupPtr dst, std::vector<Element> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  if (!src_ || !dst_) throw DomainError("homomorphism with a null group");
  const std::size_t n = src_->order();
  if (images_.size() != n) throw DomainError("homomorphism has the wrong length");
  for (auto e : images_)
    if (e >= dst_->order()) throw DomainError("homomorphism image out of range");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (images_[src_->mul(Element(a), Element(b))] !=
          dst_->mul(images_[a], images_[b]))
        throw DomainError("map is not a homomorphism");
}

bool GroupHom::is_surjective() const { return image().size() == dst_->order(); }

bool GroupHom::is_equivariant() const {
  for (std::size_t a = 0; a < images_.size(); ++a)
    if (images_[src_->theta(Element(a))] != dst_->theta(images_[a])) return false;
  return true;
}

Subset GroupHom::kernel() const {
  Subset out;
  for (std::size_t a = 0; a < images_.size(); ++a)
    if (images_[a] == 0) out.push_back(Element(a));
  return out;
}

Subset GroupHom::image() const {
  Subset out(images_.begin(), images_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(*g.src() == *f.dst())) throw DomainError("composition of incompatible maps");
  std::vector<Element> images(f.images().size());
  for (std::size_t a = 0; a < images.size(); ++a) images[a] = g(f(Element(a)));
  return GroupHom(f.src(), g.dst(), std::move(images));
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Element> images(g->order());
  for (std::size_t a = 0; a < images.size(); ++a) images[a] = Element(a);
  return GroupHom(g, g, std::move(images));
}

// ---- subgroups ---------------------------------------------------------------

Subset closure(const FinZGroup& g, const std::vector<Element>& generators,
               bool theta_invariant) {
  std::vector<Element> gens;
  for (auto x : generators) {
    if (x >= g.order()) throw DomainError("generator out of range");
    Element y = x;
    do {
      gens.push_back(y);
      y = g.theta(y);
    } while (theta_invariant && y != x);
  }
  std::vector<bool> in(g.order(), false);
  std::vector<Element> queue{0};
  in[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto s : gens) {
      Element t = g.mul(queue[i], s);
      if (!in[t]) {
        in[t] = true;
        queue.push_back(t);
      }
    }
  return from_bitmap(in);
}

bool contains(const Subset& s, Element e) {
  return std::binary_search(s.begin(), s.end(), e);
}

bool is_subgroup(const FinZGroup& g, const Subset& s) {
  if (s.empty() || s.front() != 0) return false;
  if (!std::is_sorted(s.begin(), s.end())) return false;
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  if (s.back() >= g.order()) return false;
  auto in = bitmap(g.order(), s);
  for (auto a : s)
    for (auto b : s)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FinZGroup& g, const Subset& s) {
  auto in = bitmap(g.order(), s);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto a : s)
      if (!in[g.conj(Element(x), a)]) return false;
  return true;
}

bool is_theta_invariant(const FinZGroup& g, const Subset& s) {
  auto in = bitmap(g.order(), s);
  return std::all_of(s.begin(), s.end(), [&](Element a) { return in[g.theta(a)]; });
}

Subset intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset product_set(const FinZGroup& g, const Subset& a, const Subset& b) {
  std::vector<bool> in(g.order(), false);
  for (auto x : a)
    for (auto y : b) in[g.mul(x, y)] = true;
  return from_bitmap(in);
}

std::vector<Subset> theta_invariant_subgroups(const FinZGroup& g,
                                              const SearchBudget& budget) {
  const std::size_t n = g.order();
  std::set<Subset> seen{{0}};
  std::vector<Subset> all{{0}};
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const Subset s = all[idx];
    const auto in = bitmap(n, s);
    auto done = in;
    for (std::size_t gi = 0; gi < n; ++gi) {
      const Element x = Element(gi);
      if (done[x]) continue;
      if (!in[g.pow(x, g.ell())]) continue;
      bool normalizes = std::all_of(s.begin(), s.end(),
                                    [&](Element a) { return in[g.conj(x, a)]; });
      if (!normalizes) continue;
      // T = S u Sx u ... u Sx^{l-1}.
      std::vector<bool> t = in;
      Element power = 0;
      for (Scalar i = 1; i < g.ell(); ++i) {
        power = g.mul(power, x);
        for (auto a : s) t[g.mul(a, power)] = true;
      }
      if (!t[g.theta(x)]) continue;
      for (std::size_t e = 0; e < n; ++e)
        if (t[e]) done[e] = true;
      Subset ts = from_bitmap(t);
      if (seen.insert(ts).second) {
        all.push_back(std::move(ts));
        if (all.size() > budget.max_subgroups)
          throw BudgetError("theta-invariant subgroup count exceeds budget");
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return all;
}

Subset z_frattini(const FinZGroup& g, const SearchBudget& budget) {
  const std::size_t n = g.order();
  Subset whole(n);
  for (std::size_t i = 0; i < n; ++i) whole[i] = Element(i);
  if (n == 1) return whole;

  auto subs = theta_invariant_subgroups(g, budget);
  std::vector<std::vector<bool>> maps;
  maps.reserve(subs.size());
  for (const auto& s : subs) maps.push_back(bitmap(n, s));

  Subset result = whole;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].size() == n) continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < subs.size() && maximal; ++j) {
      if (subs[j].size() == n || subs[j].size() <= subs[i].size()) continue;
      if (std::all_of(subs[i].begin(), subs[i].end(),
                      [&](Element e) { return maps[j][e]; }))
        maximal = false;
    }
    if (maximal) result = intersect(result, subs[i]);
  }
  return result;
}

// ---- constructions -------------------------------------------------------------

Embedded subgroup(const GroupPtr& g, const Subset& s) {
  if (!is_subgroup(*g, s)) throw DomainError("subset is not a subgroup");
  if (!is_theta_invariant(*g, s)) throw DomainError("subgroup is not theta-invariant");
  const std::size_t k = s.size();
  std::vector<Element> table(k * k), theta(k), incl(s.begin(), s.end());
  for (std::size_t a = 0; a < k; ++a) {
    theta[a] = Element(index_in(s, g->theta(s[a])));
    for (std::size_t b = 0; b < k; ++b)
      table[a * k + b] = Element(index_in(s, g->mul(s[a], s[b])));
  }
  auto sub = std::make_shared<const FinZGroup>(
      FinZGroup::trusted(g->ell(), std::move(table), std::move(theta), "sub"));
  return {sub, GroupHom(sub, g, std::move(incl))};
}

Quotient quotient(const GroupPtr& g, const Subset& k) {
  if (!is_subgroup(*g, k)) throw DomainError("kernel is not a subgroup");
  if (!is_normal(*g, k)) throw DomainError("kernel is not normal");
  if (!is_theta_invariant(*g, k)) throw DomainError("kernel is not theta-invariant");
  const std::size_t n = g->order();
  std::vector<std::int64_t> coset(n, -1);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (auto a : k) coset[g->mul(Element(x), a)] = std::int64_t(reps.size());
    reps.push_back(Element(x));
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q), theta(q), proj(n);
  for (std::size_t a = 0; a < q; ++a) {
    theta[a] = Element(coset[g->theta(reps[a])]);
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = Element(coset[g->mul(reps[a], reps[b])]);
  }
  for (std::size_t x = 0; x < n; ++x) proj[x] = Element(coset[x]);
  auto grp = std::make_shared<const FinZGroup>(
      FinZGroup::trusted(g->ell(), std::move(table), std::move(theta), "quotient"));
  return {grp, GroupHom(g, grp, std::move(proj))};
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  if (a->ell() != b->ell()) throw DomainError("prime mismatch in direct product");
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  if (n > kDefaultOrderCap) throw BudgetError("direct product exceeds order cap");
  std::vector<Element> table(n * n), theta(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Element xa = Element(x % na), xb = Element(x / na);
    theta[x] = Element(a->theta(xa) + na * b->theta(xb));
    for (std::size_t y = 0; y < n; ++y) {
      const Element ya = Element(y % na), yb = Element(y / na);
      table[x * n + y] = Element(a->mul(xa, ya) + na * b->mul(xb, yb));
    }
  }
  return std::make_shared<const FinZGroup>(FinZGroup::trusted(
      a->ell(), std::move(table), std::move(theta), a->label() + "x" + b->label()));
}

GroupPtr group_from_module(const ZModule& m) {
  const Scalar ell = m.ell();
  const std::size_t d = m.dim();
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= ell;
    if (n > kDefaultOrderCap) throw BudgetError("module group exceeds order cap");
  }
  auto decode = [&](std::size_t x) {
    Vec v(d);
    for (std::size_t i = 0; i < d; ++i, x /= ell) v[i] = Scalar(x % ell);
    return v;
  };
  auto encode = [&](const Vec& v) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * ell + v[i];
    return Element(x);
  };
  std::vector<Element> table(n * n), theta(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Vec vx = decode(x);
    theta[x] = encode(m.sigma() * vx);
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = encode(linalg::add(vx, decode(y), ell));
  }
  return std::make_shared<const FinZGroup>(
      FinZGroup::trusted(ell, std::move(table), std::move(theta), "module"));
}

GroupPtr cyclic_group(Scalar ell, std::size_t k, std::uint64_t unit) {
  linalg::require_prime_modulus(ell);
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= ell;
    if (n > kDefaultOrderCap) throw BudgetError("cyclic group exceeds order cap");
  }
  if (unit % ell == 0) throw DomainError("theta multiplier is not a unit");
  std::vector<Element> table(n * n), theta(n);
  for (std::size_t x = 0; x < n; ++x) {
    theta[x] = Element((x * (unit % n)) % n);
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = Element((x + y) % n);
  }
  return std::make_shared<const FinZGroup>(FinZGroup::trusted(
      ell, std::move(table), std::move(theta), "C" + std::to_string(n)));
}

GroupPtr with_theta(const GroupPtr& g, std::vector<Element> theta) {
  return std::make_shared<const FinZGroup>(
      FinZGroup::trusted(g->ell(), g->cayley(), std::move(theta), g->label()));
}

SemidirectZ semidirect_with_Z(const GroupPtr& g, std::size_t r, std::size_t cap) {
  const Scalar ell = g->ell();
  std::size_t zr = 1;
  for (std::size_t i = 0; i < r; ++i) zr *= ell;
  if (zr % g->theta_order() != 0)
    throw DomainError("theta order does not divide l^r");
  const std::size_t ng = g->order(), n = ng * zr;
  if (n > cap) throw BudgetError("semidirect product exceeds order cap");

  // theta^u as lookup tables.
  std::vector<std::vector<Element>> tpow(zr, std::vector<Element>(ng));
  for (std::size_t x = 0; x < ng; ++x) tpow[0][x] = Element(x);
  for (std::size_t u = 1; u < zr; ++u)
    for (std::size_t x = 0; x < ng; ++x) tpow[u][x] = g->theta(tpow[u - 1][x]);

  std::vector<Element> table(n * n), theta(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t g1 = a % ng, u1 = a / ng;
    theta[a] = Element(g->theta(Element(g1)) + ng * u1);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t g2 = b % ng, u2 = b / ng;
      table[a * n + b] =
          Element(g->mul(Element(g1), tpow[u1][g2]) + ng * ((u1 + u2) % zr));
    }
  }
  auto prod = std::make_shared<const FinZGroup>(FinZGroup::trusted(
      ell, std::move(table), std::move(theta), g->label() + "xZ", cap));
  auto zgrp = cyclic_group(ell, r);
  std::vector<Element> proj(n), emb(ng);
  for (std::size_t a = 0; a < n; ++a) proj[a] = Element(a / ng);
  for (std::size_t x = 0; x < ng; ++x) emb[x] = Element(x);
  return {prod, GroupHom(prod, zgrp, std::move(proj)), GroupHom(g, prod, std::move(emb))};
}

GroupPtr semidirect(const GroupPtr& k, const GroupPtr& u,
                    const std::function<Element(Element, Element)>& action,
                    std::size_t cap) {
  if (k->ell() != u->ell()) throw DomainError("prime mismatch in semidirect product");
  const std::size_t nk = k->order(), nu = u->order(), n = nk * nu;
  if (n > cap) throw BudgetError("semidirect product exceeds order cap");
  std::vector<std::vector<Element>> act(nu, std::vector<Element>(nk));
  for (std::size_t y = 0; y < nu; ++y)
    for (std::size_t x = 0; x < nk; ++x) act[y][x] = action(Element(y), Element(x));
  std::vector<Element> table(n * n), theta(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t k1 = a % nk, u1 = a / nk;
    theta[a] = Element(k->theta(Element(k1)) + nk * u->theta(Element(u1)));
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t k2 = b % nk, u2 = b / nk;
      table[a * n + b] = Element(k->mul(Element(k1), act[u1][k2]) +
                                 nk * u->mul(Element(u1), Element(u2)));
    }
  }
  // `action` is caller-supplied, so the table gets the full associativity check.
  return std::make_shared<const FinZGroup>(
      FinZGroup(k->ell(), std::move(table), std::move(theta), "semidirect", cap));
}

// ---- embedding problems ------------------------------------------------------

GroupEP::GroupEP(GroupHom alpha, GroupHom beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!(*alpha_.dst() == *beta_.dst()))
    throw DomainError("alpha and beta have different targets");
  if (!alpha_.is_surjective()) throw DomainError("alpha is not surjective");
  if (!beta_.is_surjective()) throw DomainError("beta is not surjective");
  if (!alpha_.is_equivariant()) throw DomainError("alpha is not Z-equivariant");
  if (!beta_.is_equivariant()) throw DomainError("beta is not Z-equivariant");
}

namespace {

// Greedy Z-generating set of g in index order.
std::vector<Element> z_generators(const FinZGroup& g) {
  std::vector<Element> gens;
  Subset covered{0};
  for (std::size_t x = 0; x < g.order() && covered.size() < g.order(); ++x) {
    if (contains(covered, Element(x))) continue;
    gens.push_back(Element(x));
    covered = closure(g, gens, true);
  }
  return gens;
}

class SolutionSearch {
 public:
  SolutionSearch(const GroupEP& ep, std::size_t limit, const SearchBudget& budget)
      : ep_(ep), h_(*ep.h()), g_(*ep.g()), limit_(limit), budget_(budget),
        gens_(z_generators(h_)) {
    for (std::size_t y = 0; y < g_.order(); ++y) fibers_[ep.beta()(Element(y))];
    for (std::size_t y = 0; y < g_.order(); ++y)
      fibers_[ep.beta()(Element(y))].push_back(Element(y));
  }

  std::vector<GroupHom> run() {
    std::vector<Element> chosen;
    dfs(chosen);
    return std::move(found_);
  }

 private:
  bool done() const { return limit_ > 0 && found_.size() >= limit_; }

  // Extends the partial map over the subgroup generated by the theta-orbits
  // of the chosen generators. Returns false on an inconsistency.
  bool extend(const std::vector<Element>& chosen, std::vector<std::int64_t>& img) {
    std::vector<std::pair<Element, Element>> edges;  // h-generator -> image
    std::vector<std::int64_t> gen_img(h_.order(), -1);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      Element x = gens_[i], y = chosen[i];
      do {
        if (gen_img[x] >= 0) {
          if (gen_img[x] != y) return false;
        } else {
          gen_img[x] = y;
          edges.emplace_back(x, y);
        }
        x = h_.theta(x);
        y = g_.theta(y);
      } while (x != gens_[i]);
      if (y != chosen[i]) return false;  // theta-orbit lengths must be compatible
    }
    img.assign(h_.order(), -1);
    img[0] = 0;
    std::vector<Element> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Element a = queue[q];
      for (const auto& [s, t] : edges) {
        const Element b = h_.mul(a, s);
        const auto want = static_cast<std::int64_t>(g_.mul(Element(img[a]), t));
        if (img[b] < 0) {
          img[b] = want;
          queue.push_back(b);
        } else if (img[b] != want) {
          return false;
        }
      }
    }
    return true;
  }

  void dfs(std::vector<Element>& chosen) {
    if (done()) return;
    if (chosen.size() == gens_.size()) {
      std::vector<std::int64_t> img;
      if (!extend(chosen, img)) return;
      std::vector<Element> images(img.begin(), img.end());
      GroupHom gamma(ep_.h(), ep_.g(), std::move(images));
      if (!gamma.is_equivariant()) return;
      for (std::size_t x = 0; x < h_.order(); ++x)
        if (ep_.beta()(gamma(Element(x))) != ep_.alpha()(Element(x)))
          throw InternalError("solution search produced a non-lift");
      found_.push_back(std::move(gamma));
      return;
    }
    const Element target = ep_.alpha()(gens_[chosen.size()]);
    for (Element y : fibers_.at(target)) {
      if (++candidates_ > budget_.max_candidates)
        throw BudgetError("embedding problem search exceeds candidate budget");
      chosen.push_back(y);
      std::vector<std::int64_t> img;
      if (extend(chosen, img)) dfs(chosen);
      chosen.pop_back();
      if (done()) return;
    }
  }

  const GroupEP& ep_;
  const FinZGroup& h_;
  const FinZGroup& g_;
  std::size_t limit_;
  SearchBudget budget_;
  std::vector<Element> gens_;
  std::map<Element, std::vector<Element>> fibers_;
  std::uint64_t candidates_ = 0;
  std::vector<GroupHom> found_;
};

}  // namespace

std::vector<GroupHom> enumerate_solutions(const GroupEP& ep, std::size_t limit,
                                          const SearchBudget& budget) {
  return SolutionSearch(ep, limit, budget).run();
}

EPClassification classify_ep(const GroupEP& ep, const SearchBudget& budget) {
  EPClassification out;
  const Subset phi = z_frattini(*ep.g(), budget);
  const Subset ker = ep.beta().kernel();
  out.frattini = std::includes(phi.begin(), phi.end(), ker.begin(), ker.end());
  GroupEP sect(identity_hom(ep.gamma()), ep.beta());
  auto sols = enumerate_solutions(sect, 1, budget);
  out.split = !sols.empty();
  if (out.split) out.section = std::move(sols.front());
  return out;
}

GroupHom FrattiniReduction::combine(const GroupHom& gamma_prime) const {
  return compose(multiply, gamma_prime);
}

FrattiniReduction frattini_reduce(const GroupEP& ep, const SearchBudget& budget) {
  const GroupPtr& g = ep.g();
  const std::size_t gamma_order = ep.gamma()->order();

  Subset u;
  for (const auto& s : theta_invariant_subgroups(*g, budget)) {
    Subset img;
    for (auto e : s) img.push_back(ep.beta()(e));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img.size() == gamma_order) {
      u = s;
      break;
    }
  }
  if (u.empty()) throw InternalError("G itself should map onto Gamma");

  Embedded ue = subgroup(g, u);
  GroupEP ep_u(ep.alpha(), compose(ep.beta(), ue.inclusion));
  if (!classify_ep(ep_u, budget).frattini)
    throw InternalError("restriction to a minimal subgroup is not Frattini");

  const Subset k = ep.beta().kernel();
  Embedded ke = subgroup(g, k);
  auto action = [&](Element y, Element x) {
    return Element(index_in(k, g->conj(u[y], k[x])));
  };
  GroupPtr ku = semidirect(ke.group, ue.group, action);

  const std::size_t nk = k.size();
  std::vector<Element> proj(ku->order()), mult(ku->order());
  for (std::size_t a = 0; a < ku->order(); ++a) {
    proj[a] = Element(a / nk);
    mult[a] = g->mul(k[a % nk], u[a / nk]);
  }
  GroupHom split_projection(ku, ue.group, std::move(proj));
  GroupHom multiply(ku, g, std::move(mult));

  // u -> (1, u) is an equivariant section of beta'.
  std::vector<Element> sec(u.size());
  for (std::size_t y = 0; y < u.size(); ++y) sec[y] = Element(nk * y);
  GroupHom section(ue.group, ku, std::move(sec));
  if (!section.is_equivariant() ||
      !(compose(split_projection, section).images() == identity_hom(ue.group).images()))
    throw InternalError("ker(beta) x| U does not split over U");

  FrattiniReduction out{u,     ue.group, std::move(ep_u), ku, std::move(split_projection),
                        std::move(multiply), std::nullopt, std::nullopt};
  auto sols = enumerate_solutions(out.ep_u, 1, budget);
  if (!sols.empty()) {
    out.alpha_u = std::move(sols.front());
    out.ep_split.emplace(*out.alpha_u, out.split_projection);
  }
  return out;
}

FrattiniProperReport frattini_solutions_proper(const GroupEP& ep,
                                               const SearchBudget& budget) {
  const Subset phi = z_frattini(*ep.g(), budget);
  const Subset ker = ep.beta().kernel();
  if (!std::includes(phi.begin(), phi.end(), ker.begin(), ker.end()))
    throw PreconditionError("embedding problem is not Frattini");
  FrattiniProperReport out;
  for (const auto& gamma : enumerate_solutions(ep, 0, budget)) {
    ++out.solutions;
    if (!gamma.is_surjective()) out.all_proper = false;
  }
  return out;
}

// ---- fiber products ------------------------------------------------------------

FiberCombination fiber_combine(const GroupHom& psi2, const GroupHom& phi1,
                               const GroupHom& p, const GroupHom& q, std::size_t cap) {
  if (!(*psi2.src() == *phi1.src())) throw DomainError("psi2 and phi1 differ in source");
  if (!(*psi2.dst() == *p.src()) || !(*phi1.dst() == *q.src()) ||
      !(*p.dst() == *q.dst()))
    throw DomainError("fiber square maps are not composable");
  const GroupPtr& h = psi2.src();
  for (std::size_t x = 0; x < h->order(); ++x)
    if (p(psi2(Element(x))) != q(phi1(Element(x))))
      throw DomainError("p o psi2 differs from q o phi1");
  if (!p.is_equivariant() || !q.is_equivariant())
    throw DomainError("fiber product needs equivariant p and q");

  const GroupPtr& a = p.src();
  const GroupPtr& b = q.src();
  const std::size_t na = a->order(), nb = b->order();
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<std::int64_t> index(na * nb, -1);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      if (p(Element(x)) == q(Element(y))) {
        index[x * nb + y] = std::int64_t(pairs.size());
        pairs.emplace_back(Element(x), Element(y));
        if (pairs.size() > cap) throw BudgetError("fiber product exceeds order cap");
      }
  const std::size_t n = pairs.size();
  auto at = [&](Element x, Element y) { return Element(index[x * nb + y]); };
  std::vector<Element> table(n * n), theta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x1, y1] = pairs[i];
    theta[i] = at(a->theta(x1), b->theta(y1));
    for (std::size_t j = 0; j < n; ++j) {
      const auto [x2, y2] = pairs[j];
      table[i * n + j] = at(a->mul(x1, x2), b->mul(y1, y2));
    }
  }
  auto fiber = std::make_shared<const FinZGroup>(
      FinZGroup::trusted(a->ell(), std::move(table), std::move(theta), "fiber", cap));
  std::vector<Element> images(h->order());
  for (std::size_t x = 0; x < h->order(); ++x)
    images[x] = at(psi2(Element(x)), phi1(Element(x)));
  GroupHom combined(h, fiber, std::move(images));

  const Subset k1 = psi2.kernel(), k2 = phi1.kernel();
  const Subset k3 = compose(p, psi2).kernel();
  const Subset k12 = combined.kernel();
  FiberCombination out{fiber, std::move(combined), false, false, false};
  out.kernel_identity = product_set(*h, k1, k2) == k3;
  out.index_identity = k2.size() * k1.size() == k3.size() * k12.size();
  out.surjective = out.combined.is_surjective();
  return out;
}

// ---- splitting lemma -------------------------------------------------------------

SplittingWitness splitting_lemma_check(const FinZGroup& g, const Subset& n,
                                       const Subset& p, const Subset& zsub) {
  if (!is_subgroup(g, n)) throw PreconditionError("N is not a subgroup");
  if (!is_subgroup(g, p)) throw PreconditionError("P is not a subgroup");
  if (!is_subgroup(g, zsub)) throw PreconditionError("Zsub is not a subgroup");
  if (!is_normal(g, n)) throw PreconditionError("N is not normal in G");
  if (product_set(g, n, p).size() != g.order()) throw PreconditionError("G != NP");
  if (!std::includes(p.begin(), p.end(), zsub.begin(), zsub.end()))
    throw PreconditionError("Zsub is not contained in P");
  SplittingWitness out{intersect(n, p), false};
  const auto in_f = bitmap(g.order(), out.f);
  for (auto x : p)
    for (auto f : out.f)
      if (!in_f[g.conj(x, f)]) throw PreconditionError("N cap P is not normal in P");
  if (intersect(out.f, zsub).size() != 1)
    throw PreconditionError("N cap P meets Zsub nontrivially");
  if (product_set(g, out.f, zsub) != p) throw PreconditionError("P != (N cap P) Zsub");

  out.holds = intersect(n, zsub).size() == 1 && product_set(g, n, zsub).size() == g.order();
  if (!out.holds) throw InternalError("splitting conclusion failed under its hypotheses");
  return out;
}

}  // namespace ulmkit::group
