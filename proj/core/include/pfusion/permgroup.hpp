/**
 * @file permgroup.hpp
 * @brief Permutation groups with a stabilizer-chain certificate.
 *
 * A PermGroup is immutable once constructed. Subgroups are plain PermGroups
 * of the same degree; there is no separate subgroup handle.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "pfusion/perm.hpp"

namespace pfusion {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;

struct ChainLevel {
  Point base = 0;
  std::vector<Perm> gens;       // strong generators fixing all earlier base points
  std::vector<Point> orbit;     // base^{G(i)} in discovery order
  std::vector<int> pos;         // point -> index in orbit, or -1
  std::vector<Perm> trans;      // trans[k] maps base to orbit[k]
  std::vector<Perm> trans_inv;
  std::vector<int> orbit_id;    // orbit label of every point under G(i)
};

struct ChainOptions {
  std::vector<Point> base_prefix;
  // When set, random Schreier-Sims runs until the chain reaches this order.
  std::optional<std::uint64_t> known_order;
  std::uint64_t seed = 0;
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> gens, const ChainOptions& opts = {});

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const;
  // Residue of g after sifting from `from_level`; identity iff g is in G(from_level).
  Perm sift(Perm g, int from_level = 0, int* fail_level = nullptr) const;

  std::vector<Point> base() const;
  const std::vector<ChainLevel>& levels() const { return levels_; }
  // Orbit ids of G(level) on all points; level == levels().size() is the trivial group.
  int orbit_id(int level, Point pt) const {
    return level < static_cast<int>(levels_.size()) ? levels_[level].orbit_id[pt] : pt;
  }

  // Uniformly random element (product of random transversal elements).
  Perm random(std::mt19937_64& rng) const;
  // All elements in a deterministic order; throws CapError above `cap`.
  std::vector<Perm> elements(std::uint64_t cap = 2000000) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool normalizes(const PermGroup& h) const;  // every generator of *this normalizes h

 private:
  void init_levels(const std::vector<Point>& prefix);
  void build_deterministic(const std::vector<Point>& prefix);
  void schreier_sims();
  void build_random(const std::vector<Point>& prefix, std::uint64_t target, std::uint64_t seed);
  void add_level(Point base);
  void extend_orbit(int level);
  void finish();

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<ChainLevel> levels_;
  std::uint64_t order_ = 1;
};

struct Orbit {
  std::vector<Point> points;
  std::vector<Perm> witnesses;  // witnesses[k] maps the start point to points[k]
};

Orbit orbit(const PermGroup& g, int point);
// Orbit ids for all points under an arbitrary generator list.
std::vector<int> orbit_partition(int degree, const std::vector<Perm>& gens);

// Random elements of <gens> by product replacement; used before a chain exists.
class ProductReplacement {
 public:
  ProductReplacement(int degree, const std::vector<Perm>& gens, std::uint64_t seed);
  Perm next();

 private:
  std::vector<Perm> state_;
  Perm acc_;
  std::mt19937_64 rng_;
};

// ---- backtrack-based searches -------------------------------------------------

// Constraints for a base-image search over G. A permutation g qualifies when
//   xs[i]^g == ys[i] for all i, every pair (d, z) in `fixed` has d^g == z,
//   colors agree (src_color[d] == dst_color[d^g]) when given, and leaf_ok(g).
// prefix_ok sees the base images chosen so far and may reject a subtree.
struct SearchSpec {
  std::vector<Perm> xs, ys;
  std::vector<std::pair<Point, Point>> fixed;
  std::vector<std::uint32_t> src_color, dst_color;
  std::function<bool(const std::vector<Point>& base_images)> prefix_ok;
  std::function<bool(const Perm&)> leaf_ok;
};

std::optional<Perm> search_one(const PermGroup& g, const SearchSpec& spec);
// The qualifying set must be a subgroup (xs == ys, predicates closed under products).
PermGroup search_subgroup(const PermGroup& g, const SearchSpec& spec,
                          const std::vector<Perm>& known = {});

std::optional<Perm> find_conjugator(const PermGroup& g, const std::vector<Perm>& xs,
                                    const std::vector<Perm>& ys);
PermGroup tuple_centralizer(const PermGroup& g, const std::vector<Perm>& xs);

PermGroup centralizer(const PermGroup& g, const PermGroup& h);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);
std::optional<Perm> transporter(const PermGroup& g, const PermGroup& h, const PermGroup& k);

// ---- structural operations ---------------------------------------------------

PermGroup subgroup(const PermGroup& ambient, std::vector<Perm> gens);
PermGroup intersection(const PermGroup& a, const PermGroup& b);
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& gens);
PermGroup conjugate(const PermGroup& h, const Perm& g);

PermGroup sylow(const PermGroup& g, int p, std::uint64_t seed = 0);
PermGroup p_core(const PermGroup& g, int p, std::uint64_t seed = 0);
PermGroup op_prime_residual(const PermGroup& g, int p, std::uint64_t seed = 0);
PermGroup op_residual(const PermGroup& g, int p, std::uint64_t seed = 0);

std::uint64_t p_part(std::uint64_t n, int p);
bool is_p_power(std::uint64_t n, int p);
bool is_prime(std::uint64_t n);
// g^(order/p-part): an element generating the p-part of <g>.
Perm p_part_of(const Perm& g, int p);
Perm p_prime_part_of(const Perm& g, int p);

}  // namespace pfusion
