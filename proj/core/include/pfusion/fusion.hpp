/**
 * @file fusion.hpp
 * @brief Fusion systems over a p-group S: group-realized F_S(G) and systems
 *        generated by a set of morphisms.
 *
 * Both kinds share one representation. Subgroups are partitioned into
 * F-conjugacy classes; each class has a fully normalized representative R,
 * the automizer Aut_F(R), and for every member M one isomorphism R -> M.
 * Every isomorphism in F is then w_P^-1 * a * w_Q for a in Aut_F(R), and every
 * morphism is such an isomorphism followed by an inclusion.
 *
 * Isomorphisms between subgroups of equal order are permutations of the
 * nonidentity positions: position i of P is P.elems[i+1].
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfusion/lattice.hpp"
#include "pfusion/permgroup.hpp"

namespace pfusion {

struct FusionOptions {
  std::uint64_t lattice_cap = kDefaultLatticeCap;
  std::uint64_t closure_cap = 1000000;
  std::uint64_t seed = 0;
};

struct Iso {
  int dom = 0;
  int cod = 0;
  Perm map;
};

// Morphism keyed by the images of the domain's canonical generators.
struct FusionMorphism {
  int domain = 0;
  int codomain = 0;
  std::vector<Elem> images;
  bool operator==(const FusionMorphism&) const = default;
};

// ---- isomorphism helpers -----------------------------------------------------------

Elem iso_apply(const SubgroupLattice& lat, const Iso& f, Elem x);
Iso iso_compose(const Iso& a, const Iso& b);  // a first, then b
Iso iso_inverse(const Iso& a);
Iso iso_restrict(const SubgroupLattice& lat, const Iso& f, int sub);
Iso iso_identity(const SubgroupLattice& lat, int id);
// c_s restricted to P, as an isomorphism P -> P^s.
Iso iso_conjugation(const SubgroupLattice& lat, int id, Elem s);
// Builds an isomorphism from an element map given on all of P.
Iso iso_from_function(const SubgroupLattice& lat, int dom, const std::vector<Elem>& image_of_elems);
// Builds the homomorphism determined by generator images, or nullopt if the
// assignment does not extend to an injective homomorphism.
std::optional<Iso> iso_from_generators(const SubgroupLattice& lat, const std::vector<Elem>& gens,
                                       const std::vector<Elem>& images);

enum class Backend { Group, Abstract };

struct FClass {
  int rep = 0;
  std::vector<int> members;  // ascending
  PermGroup aut;             // Aut_F(rep) on the nonidentity positions of rep
};

class FusionSystem {
 public:
  FusionSystem() = default;
  // Assembles a system from classes rooted at members[0]. `witness[id]` maps
  // the root of id's class to id; `aut_gens[c]` generate the automizer of the
  // root of class c. Each class is re-rooted at a fully normalized member.
  // `objects[id] == 0` marks subgroups outside the object set.
  FusionSystem(std::shared_ptr<const SubgroupLattice> lat, Backend backend,
               const std::vector<std::vector<int>>& class_members, std::vector<Perm> witness,
               const std::vector<std::vector<Perm>>& aut_gens, std::vector<char> objects);

  int p() const { return lat_->p(); }
  const SubgroupLattice& lattice() const { return *lat_; }
  const std::shared_ptr<const SubgroupLattice>& lattice_ptr() const { return lat_; }
  const PGroup& s() const { return lat_->s(); }
  Backend backend() const { return backend_; }

  bool has_ambient() const { return ambient_.has_value(); }
  const PermGroup& ambient() const;  // throws PreconditionError for abstract systems
  void set_ambient(PermGroup g) { ambient_ = std::move(g); }

  bool is_object(int id) const { return objects_[id] != 0; }
  const std::vector<char>& objects() const { return objects_; }
  const std::vector<FClass>& classes() const { return classes_; }
  int class_of(int id) const { return class_of_[id]; }
  const FClass& fclass(int id) const { return classes_[class_of_[id]]; }
  const Perm& witness(int id) const { return witness_[id]; }  // rep -> id
  Iso witness_iso(int id) const { return {fclass(id).rep, id, witness_[id]}; }

  // Aut_F(P) on the nonidentity positions of P. P must be a nontrivial object.
  PermGroup aut(int id) const;
  std::vector<Perm> aut_generators(int id) const;
  std::uint64_t aut_order(int id) const { return fclass(id).aut.order(); }

  bool contains(const Iso& f) const;
  // All isomorphisms P -> Q in F (empty unless P, Q are F-conjugate).
  std::vector<Iso> isos(int from, int to) const;
  // Hom_F(P, Q): one entry per morphism, each an isomorphism onto a subgroup of Q.
  std::vector<FusionMorphism> hom(int from, int to) const;
  std::uint64_t hom_count(int from, int to) const;
  FusionMorphism to_morphism(const Iso& f, int codomain) const;
  Iso from_morphism(const FusionMorphism& m) const;  // throws InputError if invalid

  // F-class label of each element of S.
  const std::vector<int>& element_classes() const { return elem_class_; }
  // Sum over classes of |class|^2 * |Aut_F(rep)|, the number of isomorphisms.
  double iso_count() const;

  // Generating morphisms: automizer generators at representatives plus witnesses.
  std::vector<Iso> generating_isos() const;

 private:
  void compute_element_classes();

  std::shared_ptr<const SubgroupLattice> lat_;
  Backend backend_ = Backend::Abstract;
  std::optional<PermGroup> ambient_;
  std::vector<char> objects_;
  std::vector<FClass> classes_;
  std::vector<int> class_of_;
  std::vector<Perm> witness_;
  std::vector<int> elem_class_;
};

// ---- construction --------------------------------------------------------------------

// F_S(G) with S = sylow(G, p), or the given Sylow subgroup.
FusionSystem group_fusion(const PermGroup& g, int p, const FusionOptions& opts = {},
                          const PermGroup* s = nullptr);

// Least system containing Inn(S) and the seeds, closed under composition,
// restriction and inverses. Objects outside `objects` (if nonempty) are ignored,
// which gives the closure on an upward-closed object family.
FusionSystem close_morphisms(std::shared_ptr<const SubgroupLattice> lat, const std::vector<Iso>& seeds,
                             const FusionOptions& opts = {}, std::vector<char> objects = {});

// A seed given by generator images: domain generators in S and their images in S.
struct SeedMorphism {
  std::vector<Perm> domain;
  std::vector<Perm> images;
};
FusionSystem abstract_closure(const PermGroup& s, int p, const std::vector<SeedMorphism>& seeds,
                              const FusionOptions& opts = {});

// F_{C_S(U)}(C_G(U)) for a group-backed F and U abelian and fully centralized.
FusionSystem centralizer_system(const FusionSystem& f, int u, const FusionOptions& opts = {});

// F1 x F2 over S1 x S2 (S1 on the first degree(S1) points).
FusionSystem product(const FusionSystem& f1, const FusionSystem& f2, const FusionOptions& opts = {});
// F/Z over S/Z for Z central in F; S/Z acts regularly on the cosets of Z.
FusionSystem quotient_by_central(const FusionSystem& f, int z, const FusionOptions& opts = {});

// Same S required (identical element lists); compares class partitions,
// automizers on representatives and witnesses.
bool equal_systems(const FusionSystem& a, const FusionSystem& b);

// Isomorphism-invariant summary: per class (order, class size, number of
// S-classes, |Aut_F(rep)|), sorted.
struct Fingerprint {
  int classes = 0;
  std::vector<std::vector<std::uint64_t>> rows;
  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const FusionSystem& f);

// Maps subgroup ids of a system over T <= S into the lattice of S by element set.
std::vector<int> embed_lattice(const SubgroupLattice& small, const SubgroupLattice& big);
// Transports an isomorphism between lattices related by embed_lattice.
Iso embed_iso(const SubgroupLattice& small, const SubgroupLattice& big, const std::vector<int>& ids,
              const Iso& f);

// ---- text dump -------------------------------------------------------------------------

// JSON dump: S generators, generating morphisms, lattice table, class partition
// and automizer orders. Reading it back re-generates the system by closure.
std::string dump(const FusionSystem& f);
struct DumpInput {
  int p = 0;
  PermGroup s;
  std::vector<SeedMorphism> seeds;
};
DumpInput parse_dump(const std::string& text);

}  // namespace pfusion
