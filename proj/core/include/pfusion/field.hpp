/**
 * @file field.hpp
 * @brief Small finite fields GF(q) by lookup tables, and the permutation
 *        action of matrices on vectors or projective points.
 *
 * Elements are integers 0..q-1 whose base-p digits are polynomial
 * coefficients modulo a fixed irreducible polynomial.
 */
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pfusion/perm.hpp"

namespace pfusion {

class GF {
 public:
  explicit GF(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return e_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long long e) const;
  int frobenius(int a) const { return pow(a, p_); }
  // A generator of the multiplicative group.
  int primitive() const { return prim_; }
  // An F_p-basis of GF(q): 1, w, ..., w^(e-1) for the primitive element w.
  std::vector<int> prime_basis() const;

 private:
  int q_, p_, e_;
  std::vector<int> add_, mul_, neg_, inv_;
  int prim_ = 1;
};

using Matrix = std::vector<int>;  // row-major n x n

Matrix identity_matrix(const GF& f, int n);
Matrix mat_mul(const GF& f, int n, const Matrix& a, const Matrix& b);
int mat_det(const GF& f, int n, Matrix a);

// Points of the natural module: either all nonzero vectors or projective points
// (canonical representative has first nonzero coordinate 1).
class PointSet {
 public:
  PointSet(const GF& f, int n, bool projective);
  int size() const { return static_cast<int>(pts_.size()); }
  const std::vector<int>& point(int i) const { return pts_[i]; }
  int index(std::vector<int> v) const;  // v nonzero
  Perm act(const Matrix& m) const;     // v -> v*m
  bool projective() const { return projective_; }

 private:
  std::uint64_t code(const std::vector<int>& v) const;
  const GF& f_;
  int n_;
  bool projective_;
  std::vector<std::vector<int>> pts_;
  std::unordered_map<std::uint64_t, int> index_;
};

}  // namespace pfusion
