/**
 * @file perm.hpp
 * @brief Permutations of {0..n-1} acting on the right.
 *
 * Convention: i^g = g[i], and (g*h)[i] = h[g[i]] (apply g first).
 * Conjugation is x^g = g^-1 x g.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pfusion {

using Point = std::uint16_t;

constexpr int kMaxDegree = 4096;

class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);
  explicit Perm(std::vector<Point> images);

  static Perm identity(int degree) { return Perm(degree); }

  // Parses disjoint-cycle notation, e.g. "(0 1 2)(3 4)"; "()" is the identity.
  static Perm parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  Point operator[](int i) const { return img_[i]; }
  Point& operator[](int i) { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& other) const;
  Perm& operator*=(const Perm& other);
  // x^g = g^-1 x g
  Perm conj(const Perm& g) const;
  Perm pow(long long e) const;
  long long order() const;
  // Sorted cycle lengths of nontrivial cycles.
  std::vector<int> cycle_type() const;
  int first_moved() const;
  Perm extended(int degree) const;

  std::string str() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::size_t hash() const;

 private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

// Writes a*b into out without allocating when out already has the degree.
void mul_into(const Perm& a, const Perm& b, Perm& out);

}  // namespace pfusion
