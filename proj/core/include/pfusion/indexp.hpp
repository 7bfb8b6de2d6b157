/**
 * @file indexp.hpp
 * @brief Subsystems of index prime to p: O^{p'}_*(F), Aut_F^0(S), the quotient
 *        Gamma = Aut_F(S)/Aut_F^0(S), O^{p'}(F), the hyperfocal subgroup, the
 *        weakly-closed-subgroup shortcut and Gamma bounds, and a simplicity
 *        certificate.
 *
 * Automorphisms of S are permutations of the nonidentity positions of S, as in
 * FusionSystem::aut. Every system built here shares the lattice of F.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfusion/fusion.hpp"
#include "pfusion/tables.hpp"

namespace pfusion {

// Which F-conjugacy classes seed O^{p'}_*(F). Both give the same subsystem
// for saturated F; the centric family is kept as a cross-check.
enum class SeedFamily { CentricRadical, Centric };

// O^{p'}_*(F) as a system on the centric objects of F. Requires F saturated
// (checked for abstract systems; group systems are saturated).
FusionSystem op_prime_star(const FusionSystem& f, const FusionOptions& opts = {},
                           SeedFamily seeds = SeedFamily::CentricRadical);

// Aut_F^0(S): generated by the alpha in Aut_F(S) whose restriction to some
// centric P lies in e0.
PermGroup aut0_S(const FusionSystem& f, const FusionSystem& e0);

struct GammaReport {
  std::uint64_t order = 1;
  std::uint64_t aut_order = 1;   // |Aut_F(S)|
  std::uint64_t aut0_order = 1;  // |Aut_F^0(S)|
  std::vector<Perm> generators;  // of Aut_F(S)
  std::vector<int> labels;       // theta-coset label of each generator
  std::vector<Perm> aut0_generators;
  std::vector<Perm> coset_reps;               // label i -> representative; label 0 is trivial
  std::vector<std::vector<int>> table;        // labels: table[i][j] = label(rep_i * rep_j)
  bool abelian = true;
  std::vector<std::uint64_t> invariants;      // invariant factors when abelian
  int exponent = 1;
  std::string structure;                      // "1", "C2", "C2 x C4", or "order n, exponent e"
  // Aut_{O^{p'}(F)}(P) for each F-class of centric subgroups, keyed by representative.
  std::vector<std::pair<int, std::uint64_t>> op_prime_automizers;
};

struct PrimeIndexAnalysis {
  FusionSystem e0;        // O^{p'}_*(F)
  PermGroup aut_s;        // Aut_F(S)
  PermGroup aut0;         // Aut_F^0(S)
  GammaReport gamma;
  FusionSystem op_prime;  // O^{p'}(F)
};

PrimeIndexAnalysis analyze_index_prime(const FusionSystem& f, const FusionOptions& opts = {},
                                       SeedFamily seeds = SeedFamily::CentricRadical);
GammaReport gamma(const FusionSystem& f, const FusionOptions& opts = {});
FusionSystem op_prime_system(const FusionSystem& f, const FusionOptions& opts = {});

// The subsystem E_H = <theta^-1(H)> for a subgroup H of Gamma.
struct IndexPrimeSubsystem {
  std::vector<int> labels;  // the elements of H, ascending
  PermGroup automizer;      // Aut_{E_H}(S), the preimage of H
};
std::vector<IndexPrimeSubsystem> subsystems_of_index_prime_to_p(const PrimeIndexAnalysis& a);
FusionSystem build_subsystem(const PrimeIndexAnalysis& a, const IndexPrimeSubsystem& h,
                             const FusionOptions& opts = {});

// Lattice id of the subgroup generated by g^-1 alpha(g), alpha in O^p(Aut_F(P)).
int hyperfocal(const FusionSystem& f);

// Subgroups that are normal in S, F-centric and weakly closed; abelian only if asked.
std::vector<int> weakly_closed_centric(const FusionSystem& f, bool abelian_only);

struct ThetaReport {
  int a = 0;
  std::uint64_t aut_order = 0;     // |Aut_F(A)|
  std::uint64_t kernel_order = 0;  // |Aut_{O^{p'}(F)}(A)|
  std::uint64_t quotient_order = 0;
  bool fast_path = false;  // O^{p'}(Aut_F(A)) = Aut_F(A), so Gamma = 1
  // Restriction Aut_F(S) -> Aut_F(A) induces Gamma -> Aut_F(A)/kernel; these
  // record whether that map is well defined, injective and surjective.
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  GroupInvariants quotient;
};
ThetaReport theta_via_weakly_closed(const FusionSystem& f, int a, const FusionOptions& opts = {});

struct WeaklyClosedWitness {
  int a = 0;
  std::vector<Elem> x;  // {t in A : t^F subset of A}
  int z = 0;
  PermGroup k0;  // normal closure of Aut_{O^{p'}(C_F(Z))}(A)
  PermGroup k;   // normal closure of Aut_{C_F(Z)}(A)
};
struct GammaBounds {
  WeaklyClosedWitness witness;
  std::uint64_t lower = 0;  // |Aut_F(A) : K|
  std::uint64_t upper = 0;  // |Aut_F(A) : O^{p'}(Aut_F(A)) K_0|
};
// Group-backed F only. z < 0 picks Z = <X cap Z(S)>.
GammaBounds gamma_bounds(const FusionSystem& f, int a, int z = -1, const FusionOptions& opts = {});

enum class Simplicity { Simple, NotSimple, Inconclusive };
const char* to_string(Simplicity s);
struct SimplicityCertificate {
  Simplicity verdict = Simplicity::Inconclusive;
  std::string reason;
  std::vector<int> evidence;  // lattice ids
};
SimplicityCertificate simplicity_certificate(const FusionSystem& f, const PrimeIndexAnalysis& a);

// Group-backed F only: every morphism of O^{p'}(C_F(U)) lies in O^{p'}(F).
bool check_centralizer_containment(const FusionSystem& f, int u, const FusionOptions& opts = {});

}  // namespace pfusion
