/**
 * @file saturate.hpp
 * @brief Sylow and extension axioms for a fusion system, with counterexamples.
 *
 * The extension axiom is tested on one isomorphism per double coset
 * Aut_S(P) \ Iso_F(P,Q) / Aut_S(Q), with P running over S-class
 * representatives and Q over fully centralized members of each F-class, one
 * per S-class. Composing with conjugation by elements of S carries N_phi and
 * extensions along, so this covers every isomorphism.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfusion/fusion.hpp"

namespace pfusion {

struct SylowResult {
  int subgroup = 0;  // a fully normalized member
  bool fully_centralized = false;
  bool sylow_automizer = false;  // Aut_S(P) is Sylow in Aut_F(P)
  bool ok() const { return fully_centralized && sylow_automizer; }
};

struct ExtensionResult {
  Iso phi;        // P -> Q, Q fully centralized
  int n_phi = 0;  // lattice id of N_phi
  std::optional<Iso> extension;  // N_phi -> N' restricting to phi; absent on failure
  bool ok() const { return extension.has_value(); }
};

struct SaturationReport {
  bool saturated = true;
  int axiom = 0;  // 1 or 2 on failure
  std::vector<int> witnesses;  // failing subgroup ids (P, or P and Q)
  std::optional<Iso> morphism;  // failing phi for the extension axiom
  int n_phi = -1;
  std::string detail;
};

// One entry per fully normalized subgroup.
std::vector<SylowResult> check_sylow_axiom(const FusionSystem& f);
// One entry per double-coset representative; stops at the first failure
// when `stop_at_failure` is set.
std::vector<ExtensionResult> check_extension_axiom(const FusionSystem& f, bool stop_at_failure = false);
// Lattice id of N_phi = {g in N_S(P) : phi^-1 c_g phi in Aut_S(Q)}.
int n_phi(const FusionSystem& f, const Iso& phi);

SaturationReport is_saturated(const FusionSystem& f);

}  // namespace pfusion
