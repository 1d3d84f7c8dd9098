#pragma once

// Module-level Z-embedding problems (phi: M -> V_m, pi_{n,m}), homomorphism
// heights, and presentations of finite modules as quotients of free
// group-algebra modules.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ulmkit/duality.hpp"
#include "ulmkit/zmodule.hpp"

namespace ulmkit::embed {

class ModuleEP {
 public:
  // phi must be a surjection onto V_m (chain basis) and n >= m.
  ModuleEP(ZHom phi, std::size_t n);

  const ZHom& phi() const noexcept { return phi_; }
  std::size_t m() const noexcept { return phi_.dst().dim(); }
  std::size_t n() const noexcept { return n_; }

 private:
  ZHom phi_;
  std::size_t n_;
};

struct EmbedSolution {
  std::optional<ZHom> psi;  // psi: M -> V_n with pi_{n,m} o psi = phi
  bool surjective = false;  // psi is a proper solution
  bool by_height = false;   // decided by the dual height criterion
  bool by_linear_system = false;
};

// Both deciders run; they must agree or InternalError is thrown. The witness
// comes from the height route: lift eta = e_m^* o phi to eta_n with
// eta_n x^{n-m} = eta and take its cyclic map into V_n.
EmbedSolution solve_module_ep(const ModuleEP& ep);

// Solvability by direct linear algebra: psi sigma_M = sigma_n psi together
// with the top m rows of psi equal to phi.
std::optional<ZHom> solve_by_linear_system(const ZHom& phi, std::size_t n);

// Largest k with (phi, pi_{m+k,m}) solvable, found by the linear-system
// decider. Finite for m >= 1 on a finite module, at most dim M - m.
Height hom_height(const ZHom& phi);

struct FreeQuotient {
  std::size_t r = 0;     // least r with sigma^{l^r} = 1
  std::size_t mult = 0;  // dim M / IM, the minimal generator count
  ZHom surjection;       // F_l[Z/l^r]^{mult} -> M
};

// A group-algebra free module F_l[Z/l^r Z]^{copies}.
ZModule free_group_algebra_module(Scalar ell, std::size_t r, std::size_t copies,
                                  std::size_t cap = kDefaultDimensionCap);

FreeQuotient quotient_of_free(const ZModule& m,
                              std::size_t cap = kDefaultDimensionCap);

}  // namespace ulmkit::embed
