/**
 * @file cohomology.hpp
 * @brief H^1(Gamma; A) for a finite group acting on A = (Z/p^l)^r.
 *
 * Every element g gets a value f(g); walking the Cayley graph from the identity
 * expresses each f(g) through the values on generators, and every edge that
 * closes a cycle contributes the equation f(gs) = f(g) + g.f(s). These edge
 * equations are equivalent to the full cocycle condition because every element
 * is a positive word in the generators.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "pfusion/permgroup.hpp"

namespace pfusion {

using ModMatrix = std::vector<std::int64_t>;  // r x r, row-major, acting on column vectors

inline constexpr std::uint64_t kMaxCohomologyGroup = 1000;
inline constexpr std::uint64_t kMaxCohomologyModule = 15625;  // 5^6

struct GModule {
  int p = 0;
  int ell = 1;
  int rank = 0;
  std::vector<std::vector<int>> table;  // table[g][h] = index of gh; element 0 is the identity
  std::vector<ModMatrix> action;        // action[g], a homomorphism into GL_r(Z/p^l)
  std::vector<int> generators;          // element indices generating Gamma
};

// Gamma is the matrix group generated by `gens`.
GModule module_from_matrices(int p, int ell, int rank, const std::vector<ModMatrix>& gens);
// Gamma = g, with gen_action[i] the matrix of g.generators()[i].
GModule module_from_group(const PermGroup& g, int p, int ell, int rank, const std::vector<ModMatrix>& gen_action);

struct H1Result {
  std::vector<std::uint64_t> invariants;  // invariant factors of H^1, ascending; empty when H^1 = 0
  std::uint64_t order = 1;
  std::uint64_t z1_order = 1;
  std::uint64_t b1_order = 1;
};

H1Result h1(const GModule& m);

}  // namespace pfusion
