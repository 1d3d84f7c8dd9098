#pragma once

// The acceptance suite: one record per criterion, each with its own pinned
// thresholds and time limit. Used by the acceptance test binary and by the
// CLI `selftest` subcommand.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ulmkit/zgroup.hpp"

namespace ulmkit::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 = no limit
};

std::vector<CriterionResult> run_all(std::uint64_t seed = 20240601);
// Runs a single criterion (1..10).
CriterionResult run_one(int id, std::uint64_t seed = 20240601);

void print(std::ostream& os, const CriterionResult& r);

// Small finite Z-groups of l-power order used to build embedding problems.
std::vector<group::GroupPtr> group_pool(Scalar ell, std::size_t max_order,
                                        std::uint64_t seed);

// G x| Z/l^R -> G' x| Z/l^r, (g, z) -> (f(g), z mod l^r), for equivariant f.
group::GroupHom semidirect_map(const group::GroupHom& f, const group::SemidirectZ& from,
                               const group::SemidirectZ& to);

// Least r with theta^{l^r} = 1.
std::size_t theta_exponent(const group::FinZGroup& g);

}  // namespace ulmkit::acceptance
