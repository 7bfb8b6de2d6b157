/**
 * @file catalog.hpp
 * @brief Named permutation groups: alternating, symmetric, cyclic, dihedral,
 *        classical matrix groups, Mathieu groups from a data file, monomial
 *        and wreath groups, direct products and central quotients.
 *
 * Labels: A7, S4, C6, D8 (dihedral of order 8), GL(n,q), SL(n,q), PSL(n,q),
 * SU(n,q), PSU(n,q), Sp(2m,q), PSp(2m,q), M11, M12, G(m,k,n,p,l) for the
 * monomial group over Z/p^l, Wr(m,n) for C_m wr S_n, and products joined by
 * 'x' such as S3xS3.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfusion/permgroup.hpp"

namespace pfusion {

enum class Family {
  Alt, Sym, Cyclic, Dihedral,
  GL, SL, PSL, SU, PSU, Sp, PSp,
  Mathieu, Monomial, Wreath, DirectProduct
};

struct GroupSpec {
  Family family = Family::Alt;
  int n = 0;  // Alt/Sym/Cyclic degree, dihedral order, matrix dimension, Mathieu index
  int q = 0;
  int m = 0, k = 0, p = 0, l = 1;  // Monomial / Wreath parameters
  std::vector<GroupSpec> factors;  // DirectProduct

  std::string label() const;
  static GroupSpec parse(const std::string& label);
};

struct CatalogEntry {
  std::string label;
  int degree = 0;
  std::vector<std::string> generators;
  std::string order;
};

class Catalog {
 public:
  static Catalog load(const std::string& path);
  static const std::string& default_path();
  const CatalogEntry* find(const std::string& label) const;
  // Builds the entry's group and throws InputError if its order differs from the file.
  PermGroup build(const std::string& label) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

// Closed-form order of the group named by `spec`, when the family has one.
std::optional<std::uint64_t> expected_order(const GroupSpec& spec);

// Every built group is checked against expected_order().
PermGroup build(const GroupSpec& spec, const Catalog* catalog = nullptr);
PermGroup build(const std::string& label, const Catalog* catalog = nullptr);

// Acts on the disjoint union of the two domains, G1 first.
PermGroup direct_product(const PermGroup& g1, const PermGroup& g2);
// Induced faithful action of G/Z; Z must be central in G.
PermGroup central_quotient(const PermGroup& g, const PermGroup& z);

}  // namespace pfusion
