/**
 * @file lattice.hpp
 * @brief Finite p-groups as indexed element sets and their complete subgroup lattices.
 *
 * Elements of S are numbered by the lexicographic order of their permutation
 * images, so index 0 is always the identity. A subgroup is identified by its
 * element set; ids are assigned after sorting by (order, sorted element list)
 * and therefore do not depend on how the subgroup was first generated.
 */
#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pfusion/permgroup.hpp"

namespace pfusion {

using Elem = std::uint16_t;

// Largest |S| any lattice can hold. The default working cap is lower.
constexpr int kLatticeHardCap = 1024;
constexpr std::uint64_t kDefaultLatticeCap = 256;

using ElemSet = std::bitset<kLatticeHardCap>;

class PGroup {
 public:
  PGroup() = default;
  // Throws PreconditionError if s is not a p-group, CapError above `cap`.
  PGroup(const PermGroup& s, int p, std::uint64_t cap = kDefaultLatticeCap);

  int p() const { return p_; }
  int order() const { return n_; }
  const PermGroup& group() const { return group_; }
  const Perm& perm(Elem x) const { return perms_[x]; }
  const std::vector<Perm>& perms() const { return perms_; }

  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  // a^s = s^-1 a s
  Elem conj(Elem a, Elem s) const { return mul(mul(inv_[s], a), s); }
  Elem pow(Elem a, long e) const;
  int elem_order(Elem a) const { return ord_[a]; }

  std::optional<Elem> find(const Perm& g) const;
  Elem index(const Perm& g) const;  // throws PreconditionError if g is not in S

  ElemSet closure(const std::vector<Elem>& gens) const;
  std::vector<Elem> members(const ElemSet& set) const;
  // Elements of S, as indices, generating S.
  const std::vector<Elem>& generators() const { return gens_; }

 private:
  int p_ = 0;
  int n_ = 0;
  PermGroup group_;
  std::vector<Perm> perms_;
  std::vector<Elem> mul_, inv_, gens_;
  std::vector<int> ord_;
  std::unordered_map<Perm, Elem, PermHash> index_;
};

struct Subgroup {
  int id = 0;
  int order = 1;
  ElemSet set;
  std::vector<Elem> elems;         // ascending, elems[0] == 0
  std::vector<Elem> gens;          // greedy generating sequence over ascending elements
  std::vector<int> maximal;        // ids of the subgroups of index p
  std::vector<int> covers;         // ids of the overgroups of index p
  int normalizer = 0;              // id of N_S(P)
  int centralizer = 0;             // id of C_S(P)
  int center = 0;                  // id of Z(P)
  int s_class = 0;
  bool abelian = false;
};

class SubgroupLattice {
 public:
  SubgroupLattice(PGroup s);

  const PGroup& s() const { return s_; }
  int p() const { return s_.p(); }
  int size() const { return static_cast<int>(subs_.size()); }
  const Subgroup& operator[](int id) const { return subs_[id]; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  int trivial() const { return 0; }
  int top() const { return size() - 1; }

  std::optional<int> find(const ElemSet& set) const;
  int id_of(const ElemSet& set) const;  // throws InternalError when the set is not a subgroup
  int generated(const std::vector<Elem>& gens) const { return id_of(s_.closure(gens)); }
  bool contains(int big, int small) const { return (subs_[small].set & ~subs_[big].set).none(); }

  // Position of x among the sorted elements of subgroup id, or -1.
  int local(int id, Elem x) const;
  // Image of P under conjugation by s.
  int conjugate(int id, Elem s) const;

  const std::vector<std::vector<int>>& s_classes() const { return s_classes_; }
  // For every member of the S-class of `id`'s class, an element s of S with rep^s = member,
  // where rep is the smallest id of the class.
  const std::vector<Elem>& s_class_conjugators(int cls) const { return s_class_conj_[cls]; }

 private:
  PGroup s_;
  std::vector<Subgroup> subs_;
  std::unordered_map<ElemSet, int> by_set_;
  std::vector<std::vector<int>> s_classes_;
  std::vector<std::vector<Elem>> s_class_conj_;
};

}  // namespace pfusion
