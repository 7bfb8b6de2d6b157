/**
 * @file classify.hpp
 * @brief Subgroup predicates of a fusion system and its canonical subgroups O_p(F), Z(F).
 *
 * The trivial subgroup carries no flags. Normality and centrality are decided
 * on automizers of the centric radical subgroups, which generate F when F is
 * saturated; on non-saturated input those two answers are not meaningful.
 */
#pragma once

#include <vector>

#include "pfusion/fusion.hpp"

namespace pfusion {

struct SubgroupFlags {
  bool fully_normalized = false;
  bool fully_centralized = false;
  bool centric = false;
  bool radical = false;
  bool weakly_closed = false;
  bool strongly_closed = false;
  bool normal_in_F = false;
  bool central_in_F = false;
};

struct ClassifiedLattice {
  std::vector<SubgroupFlags> flags;  // by lattice id
  std::vector<int> centric;          // F^c
  std::vector<int> centric_radical;  // F^cr
  int op = 0;                        // O_p(F)
  int center = 0;                    // Z(F)
};

bool is_fully_normalized(const FusionSystem& f, int id);
bool is_fully_centralized(const FusionSystem& f, int id);
bool is_centric(const FusionSystem& f, int id);
bool is_radical(const FusionSystem& f, int id);
bool is_weakly_closed(const FusionSystem& f, int id);
bool is_strongly_closed(const FusionSystem& f, int id);
bool is_normal_in_F(const FusionSystem& f, int id);
bool is_central_in_F(const FusionSystem& f, int id);

std::vector<int> centric_set(const FusionSystem& f);
std::vector<int> centric_radical_set(const FusionSystem& f);
int O_p_of_F(const FusionSystem& f);
int Z_of_F(const FusionSystem& f);

ClassifiedLattice classify(const FusionSystem& f);

}  // namespace pfusion
