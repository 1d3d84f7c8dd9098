#include "ulmkit/presentation.hpp"

#include <sstream>

#include "ulmkit/error.hpp"
#include "ulmkit/ulm.hpp"

namespace ulmkit::present {

namespace {

std::size_t level_size(Scalar ell, std::size_t k) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= ell;
    if (n > kDefaultDimensionCap) throw BudgetError("family size exceeds dimension cap");
  }
  return n;
}

}  // namespace

void PresentationBudget::validate() const {
  linalg::require_prime_modulus(ell);
  if (trunc == 0) throw DomainError("truncation length T must be at least 1");
  for (const auto& [k, m] : mult)
    if (k > max_level)
      throw DomainError("level " + std::to_string(k) + " exceeds N = " +
                        std::to_string(max_level));
}

Presentation emit(const PresentationBudget& budget) {
  budget.validate();
  Presentation pres;
  pres.ell = budget.ell;
  auto add_family = [&](FamilyKind kind, std::size_t level, std::size_t copy,
                        std::size_t size, std::string name) {
    Family f{kind, level, copy, pres.generators.size(), size, std::move(name)};
    for (std::size_t i = 0; i < size; ++i)
      pres.generators.push_back(f.name + ".x" + std::to_string(i));
    pres.families.push_back(f);
    return f;
  };

  for (const auto& [k, copies] : budget.mult) {
    const std::size_t size = level_size(budget.ell, k);
    for (std::size_t c = 0; c < copies; ++c) {
      const Family f = add_family(FamilyKind::Cyclic, k, c, size,
                                  "C" + std::to_string(k) + "_" + std::to_string(c));
      for (std::size_t i = 0; i < size; ++i)
        pres.relations.push_back({f.first + i, {f.first + (i + 1) % size}, false});
    }
  }
  for (std::size_t c = 0; c < budget.free_mult; ++c) {
    const Family f =
        add_family(FamilyKind::Free, budget.trunc, c, budget.trunc, "F_" + std::to_string(c));
    for (std::size_t i = 0; i + 1 < f.size; ++i)
      pres.relations.push_back({f.first + i, {f.first + i + 1, f.first + i}, false});
    pres.relations.push_back({f.first + f.size - 1, {}, true});
  }

  pres.metadata["ell"] = std::to_string(budget.ell);
  pres.metadata["N"] = std::to_string(budget.max_level);
  pres.metadata["truncation"] = std::to_string(budget.trunc);
  pres.metadata["countable"] = budget.countable ? "true" : "false";
  pres.metadata["opaque_high_families"] = std::to_string(budget.opaque_high);
  pres.metadata["correction_terms"] = "trivial";
  return pres;
}

std::string Presentation::listing() const {
  std::ostringstream os;
  for (const auto& f : families) {
    if (f.kind == FamilyKind::Cyclic)
      os << "family " << f.name << ": cyclic, level " << f.level << ", " << f.size
         << " generators\n";
    else
      os << "family " << f.name << ": free, truncated at T = " << f.level << "\n";
  }
  for (const auto& r : relations) {
    os << "  " << generators[r.lhs] << "^s = ";
    if (r.truncated) {
      os << "(truncated)\n";
      continue;
    }
    for (std::size_t i = 0; i < r.rhs.size(); ++i)
      os << (i ? " " : "") << generators[r.rhs[i]];
    os << "\n";
  }
  return os.str();
}

ZModule realize(const Presentation& pres) {
  const std::size_t d = pres.generators.size();
  std::vector<int> defined(d, 0);
  FpMatrix sigma(pres.ell, d, d);
  for (const auto& r : pres.relations) {
    if (r.lhs >= d) throw DomainError("relation for an unknown generator");
    if (defined[r.lhs]++) throw DomainError("generator " + pres.generators[r.lhs] +
                                            " has more than one relation");
    if (r.truncated) {
      if (!r.rhs.empty()) throw DomainError("truncation marker with a right-hand side");
      sigma.set(r.lhs, r.lhs, 1);
      continue;
    }
    if (r.rhs.empty()) throw DomainError("relation with an empty right-hand side");
    for (auto g : r.rhs) {
      if (g >= d) throw DomainError("relation mentions an unknown generator");
      sigma.set(g, r.lhs, std::int64_t(sigma(g, r.lhs)) + 1);
    }
  }
  for (std::size_t g = 0; g < d; ++g)
    if (!defined[g]) throw DomainError("generator " + pres.generators[g] + " has no relation");
  try {
    return ZModule(std::move(sigma), "presentation");
  } catch (const DomainError& e) {
    throw DomainError(std::string("relations do not define a module: ") + e.what());
  }
}

RoundtripReport roundtrip_check(const PresentationBudget& budget) {
  RoundtripReport rep;
  const Presentation pres = emit(budget);
  const ZModule m = realize(pres);
  rep.predicted.assign(m.dim(), 0);
  for (const auto& [k, copies] : budget.mult)
    if (copies) rep.predicted.at(level_size(budget.ell, k) - 1) += copies;
  if (budget.free_mult) rep.predicted.at(budget.trunc - 1) += budget.free_mult;
  rep.observed = ulm::ulm_invariants(m);
  if (rep.observed.size() != rep.predicted.size())
    rep.mismatches.push_back("invariant vector length differs");
  for (std::size_t n = 0; n < std::min(rep.observed.size(), rep.predicted.size()); ++n)
    if (rep.observed[n] != rep.predicted[n])
      rep.mismatches.push_back("U_" + std::to_string(n) + ": predicted " +
                               std::to_string(rep.predicted[n]) + ", observed " +
                               std::to_string(rep.observed[n]));
  return rep;
}

}  // namespace ulmkit::present
