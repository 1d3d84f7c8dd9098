#pragma once

// Finite Z-groups: a finite l-group given by its Cayley table together with
// an automorphism theta of l-power order (the action of the chosen
// generator of Z). Element 0 is always the identity.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ulmkit/zmodule.hpp"

namespace ulmkit::group {

using Element = std::uint32_t;
// Sorted element indices.
using Subset = std::vector<Element>;

inline constexpr std::size_t kDefaultOrderCap = 1024;

class FinZGroup;
using GroupPtr = std::shared_ptr<const FinZGroup>;

class FinZGroup {
 public:
  // Full validation: l-power order, group axioms (associativity checked
  // exhaustively), theta an automorphism of l-power order.
  FinZGroup(Scalar ell, std::vector<Element> cayley, std::vector<Element> theta,
            std::string label = {}, std::size_t cap = kDefaultOrderCap);

  // For tables produced by the constructions below, which are associative by
  // construction: skips the cubic associativity scan but checks the rest.
  static FinZGroup trusted(Scalar ell, std::vector<Element> cayley,
                           std::vector<Element> theta, std::string label = {},
                           std::size_t cap = kDefaultOrderCap);

  Scalar ell() const noexcept { return ell_; }
  std::size_t order() const noexcept { return inverse_.size(); }
  const std::string& label() const noexcept { return label_; }

  Element mul(Element a, Element b) const { return cayley_[a * order() + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element theta(Element a) const { return theta_[a]; }
  Element theta_pow(Element a, std::uint64_t k) const;
  Element pow(Element a, std::uint64_t k) const;
  Element commutator(Element a, Element b) const;  // a^-1 b^-1 a b
  Element conj(Element g, Element x) const;        // g x g^-1
  std::size_t element_order(Element a) const;
  // Least l-power t with theta^t = id.
  std::uint64_t theta_order() const noexcept { return theta_order_; }
  bool is_abelian() const;

  const std::vector<Element>& cayley() const noexcept { return cayley_; }
  const std::vector<Element>& theta_map() const noexcept { return theta_; }

  bool operator==(const FinZGroup& other) const {
    return ell_ == other.ell_ && cayley_ == other.cayley_ && theta_ == other.theta_;
  }

 private:
  FinZGroup(Scalar ell, std::vector<Element> cayley, std::vector<Element> theta,
            std::string label, std::size_t cap, bool check_associativity);

  Scalar ell_;
  std::vector<Element> cayley_;
  std::vector<Element> theta_;
  std::vector<Element> inverse_;
  std::uint64_t theta_order_ = 1;
  std::string label_;
};

// A homomorphism of the underlying groups; Z-equivariance is queried
// separately because semidirect-product maps need not be equivariant.
class GroupHom {
 public:
  GroupHom(GroupPtr src, GroupPtr dst, std::vector<Element> images);

  const GroupPtr& src() const noexcept { return src_; }
  const GroupPtr& dst() const noexcept { return dst_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  Element operator()(Element a) const { return images_[a]; }

  bool is_surjective() const;
  bool is_equivariant() const;
  Subset kernel() const;
  Subset image() const;

 private:
  GroupPtr src_;
  GroupPtr dst_;
  std::vector<Element> images_;
};

GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom identity_hom(const GroupPtr& g);

// ---- subgroups -------------------------------------------------------------

Subset closure(const FinZGroup& g, const std::vector<Element>& generators,
               bool theta_invariant);
bool is_subgroup(const FinZGroup& g, const Subset& s);
bool is_normal(const FinZGroup& g, const Subset& s);
bool is_theta_invariant(const FinZGroup& g, const Subset& s);
Subset intersect(const Subset& a, const Subset& b);
// Set product {ab}.
Subset product_set(const FinZGroup& g, const Subset& a, const Subset& b);
bool contains(const Subset& s, Element e);

struct SearchBudget {
  std::size_t max_subgroups = 200000;
  std::uint64_t max_candidates = std::uint64_t{1} << 22;
};

// All theta-invariant subgroups, found by closing each known subgroup S
// under index-l extensions S<g> with g^l in S, g normalizing S and theta(g)
// in S<g>. Sorted by order, then lexicographically.
std::vector<Subset> theta_invariant_subgroups(const FinZGroup& g,
                                              const SearchBudget& budget = {});

// Phi_Z(G): intersection of the maximal proper theta-invariant subgroups; G
// itself when G is trivial.
Subset z_frattini(const FinZGroup& g, const SearchBudget& budget = {});

// ---- constructions ---------------------------------------------------------

// Sub-Z-group on a theta-invariant subgroup; elements keep their relative
// order, so index 0 is the identity. Also returns the inclusion.
struct Embedded {
  GroupPtr group;
  GroupHom inclusion;
};
Embedded subgroup(const GroupPtr& g, const Subset& s);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};
// G/K for a theta-invariant normal subgroup K; cosets ordered by their
// smallest element.
Quotient quotient(const GroupPtr& g, const Subset& k);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// Additive group of a module, theta = sigma.
GroupPtr group_from_module(const ZModule& m);

// Z/l^k with theta(x) = unit * x; unit must be a unit of l-power order.
GroupPtr cyclic_group(Scalar ell, std::size_t k, std::uint64_t unit = 1);

// Same group with theta replaced (validated).
GroupPtr with_theta(const GroupPtr& g, std::vector<Element> theta);

// G x| Z/l^r with (g1,u1)(g2,u2) = (g1 theta^{u1}(g2), u1 + u2) and Z-action
// (g,u) -> (theta g, u). Element (g,u) has index g + |G| u.
struct SemidirectZ {
  GroupPtr group;
  GroupHom projection;  // onto Z/l^r (trivial theta)
  GroupHom embedding;   // G -> G x| Z/l^r
};
SemidirectZ semidirect_with_Z(const GroupPtr& g, std::size_t r,
                              std::size_t cap = kDefaultOrderCap);

// K x| U for U acting on K through `action(u, k)`, with Z-action
// (k,u) -> (theta k, theta u). Element (k,u) has index k + |K| u.
GroupPtr semidirect(const GroupPtr& k, const GroupPtr& u,
                    const std::function<Element(Element, Element)>& action,
                    std::size_t cap = kDefaultOrderCap);

// ---- embedding problems ----------------------------------------------------

class GroupEP {
 public:
  // alpha: H -> Gamma and beta: G -> Gamma, both surjective and equivariant,
  // with a common target.
  GroupEP(GroupHom alpha, GroupHom beta);

  const GroupHom& alpha() const noexcept { return alpha_; }
  const GroupHom& beta() const noexcept { return beta_; }
  const GroupPtr& h() const noexcept { return alpha_.src(); }
  const GroupPtr& g() const noexcept { return beta_.src(); }
  const GroupPtr& gamma() const noexcept { return beta_.dst(); }

 private:
  GroupHom alpha_;
  GroupHom beta_;
};

// Every equivariant hom gamma: H -> G with beta o gamma = alpha, by depth
// first search over images of a Z-generating set of H with consistency
// pruning. Stops after `limit` solutions when limit > 0.
std::vector<GroupHom> enumerate_solutions(const GroupEP& ep, std::size_t limit = 0,
                                          const SearchBudget& budget = {});

struct EPClassification {
  bool split = false;
  bool frattini = false;
  std::optional<GroupHom> section;  // equivariant section of beta
};
EPClassification classify_ep(const GroupEP& ep, const SearchBudget& budget = {});

struct FrattiniReduction {
  Subset u;                        // minimal Z-subgroup of G onto Gamma
  GroupPtr u_group;
  GroupEP ep_u;                    // (alpha, beta|U), Frattini
  GroupPtr kernel_by_u;            // ker(beta) x| U
  GroupHom split_projection;       // beta': ker(beta) x| U -> U
  GroupHom multiply;               // (s,u) -> s u into G
  std::optional<GroupHom> alpha_u; // a solution of ep_u, when one exists
  std::optional<GroupEP> ep_split; // (alpha_u, beta'), when alpha_u exists

  // gamma'(h) = (s,u) gives gamma(h) = s u.
  GroupHom combine(const GroupHom& gamma_prime) const;
};
FrattiniReduction frattini_reduce(const GroupEP& ep, const SearchBudget& budget = {});

struct FrattiniProperReport {
  std::size_t solutions = 0;
  bool all_proper = true;
};
// Throws PreconditionError unless ep is Frattini.
FrattiniProperReport frattini_solutions_proper(const GroupEP& ep,
                                               const SearchBudget& budget = {});

// ---- fiber products ----------------------------------------------------------

struct FiberCombination {
  GroupPtr fiber;          // A x_C B, pairs (a,b) with p(a) = q(b)
  GroupHom combined;       // h -> (psi2(h), phi1(h))
  bool kernel_identity;    // ker psi2 . ker phi1 = ker (p o psi2)
  bool index_identity;     // [ker phi1 : ker combined] = [ker phi'' : ker psi2]
  bool surjective;
};
// psi2: H -> A, phi1: H -> B, p: A -> C, q: B -> C with p o psi2 = q o phi1.
FiberCombination fiber_combine(const GroupHom& psi2, const GroupHom& phi1,
                               const GroupHom& p, const GroupHom& q,
                               std::size_t cap = kDefaultOrderCap);

// ---- splitting lemma ---------------------------------------------------------

struct SplittingWitness {
  Subset f;  // N cap P
  bool holds = false;
};
// Hypotheses N normal, G = NP, P = F x| Zsub with F = N cap P. Each failure
// throws PreconditionError naming the hypothesis; on success verifies
// N cap Zsub = 1 and N Zsub = G.
SplittingWitness splitting_lemma_check(const FinZGroup& g, const Subset& n,
                                       const Subset& p, const Subset& zsub);

}  // namespace ulmkit::group
