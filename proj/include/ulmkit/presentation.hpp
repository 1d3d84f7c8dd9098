#pragma once

// Truncated generator/relation presentations of the cyclotomic decomposition
// at finite level: cyclic families x_i^s = x_{i+1} (indices mod l^k) and free
// families x_i^s = x_{i+1} x_i cut off at length T. All correction terms y_i
// are trivial. `realize` abelianizes mod l back into a module.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ulmkit/zmodule.hpp"

namespace ulmkit::present {

struct PresentationBudget {
  Scalar ell = 2;
  std::size_t max_level = 0;              // N
  std::map<std::size_t, std::size_t> mult;  // level k <= N -> copies of F_l[Z/l^k]
  std::size_t free_mult = 0;              // copies of the truncated free family
  std::size_t trunc = 1;                  // T
  bool countable = false;                 // metadata only
  std::size_t opaque_high = 0;            // families above level N, metadata only

  void validate() const;
};

enum class FamilyKind { Cyclic, Free };

struct Family {
  FamilyKind kind = FamilyKind::Cyclic;
  std::size_t level = 0;  // k for cyclic families, T for free ones
  std::size_t copy = 0;
  std::size_t first = 0;  // index of x_0 among all generators
  std::size_t size = 0;
  std::string name;
};

// lhs^sigma = product of rhs (left to right); a truncation marker has no rhs.
struct Relation {
  std::size_t lhs = 0;
  std::vector<std::size_t> rhs;
  bool truncated = false;
};

struct Presentation {
  Scalar ell = 2;
  std::vector<std::string> generators;
  std::vector<Family> families;
  std::vector<Relation> relations;
  std::map<std::string, std::string> metadata;

  std::string listing() const;
};

Presentation emit(const PresentationBudget& budget);

// Throws DomainError on malformed relations: a generator without exactly one
// defining relation, an index out of range, or a non-unipotent result.
ZModule realize(const Presentation& pres);

struct RoundtripReport {
  std::vector<std::size_t> predicted;
  std::vector<std::size_t> observed;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

RoundtripReport roundtrip_check(const PresentationBudget& budget);

}  // namespace ulmkit::present
