#pragma once

// Ulm invariants and the constructive splitting of a finite module into
// cyclic summands V_n.

#include <cstddef>
#include <map>
#include <vector>

#include "ulmkit/zmodule.hpp"

namespace ulmkit::ulm {

// Block size n -> multiplicity, nonzero entries only.
using JordanType = std::map<std::size_t, std::size_t>;

// U_n = dim(I^n M cap M^Z) - dim(I^{n+1} M cap M^Z) for n = 0 .. dim M - 1.
std::vector<std::size_t> ulm_invariants(const ZModule& m);

// Independent oracle from ranks of powers of x = sigma - 1:
// mult(n) = rank x^{n-1} - 2 rank x^n + rank x^{n+1}.
JordanType jordan_multiplicities(const ZModule& m);

JordanType jordan_type_of(const std::vector<std::size_t>& block_sizes);

struct Chain {
  std::size_t size = 0;
  // p, x p, ..., x^{size-1} p.
  std::vector<Vec> vectors;
};

struct Decomposition {
  std::vector<Chain> parts;
  // B^{-1}, where the columns of B are the concatenated chains. Conjugating
  // sigma by it gives the block-diagonal unipotent Jordan matrix.
  FpMatrix change_of_basis;
  // Span of each stage's T, recorded for purity checks.
  std::vector<Subspace> stage_summands;

  JordanType type() const;
  std::vector<std::size_t> block_sizes() const;
  FpMatrix chain_basis() const;
};

// Stage N = 0, 1, ...: inside the current sigma-invariant complement Q,
// split Q^Z into elements of height > N and a complement U, lift a basis u_j
// of U to p_j with x^N p_j = u_j, and split off T = sum R p_j = V_{N+1}^{|U|}
// by a module retraction Q -> T. Every step is verified; a failed check
// throws InternalError.
Decomposition decompose(const ZModule& m);

// I^k E = I^k M cap E for all k. Throws DomainError if E is not
// sigma-invariant.
bool is_pure(const ZModule& m, const Subspace& e);

}  // namespace ulmkit::ulm
