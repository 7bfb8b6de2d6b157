/**
 * @file tables.hpp
 * @brief Monomial groups G(m,k,n) over Z/p^l, wreath products, p-adic
 *        arithmetic helpers, classical-group parameter tables and the
 *        classification predictor.
 *
 * Nothing in the predictor computes a group; it is formula and table lookup.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfusion/permgroup.hpp"

namespace pfusion {

// ---- arithmetic -----------------------------------------------------------------

int v_p(std::int64_t x, int p);  // x != 0
// Multiplicative order of q modulo p (q taken mod p, must be a unit).
int ord_p(std::int64_t q, int p);
// p-adic valuation of a^e - b computed modulo a large power of p.
int v_p_pow_minus(std::int64_t a, std::int64_t e, std::int64_t b, int p);
// Smallest prime r != p with ord_p(r) = ord_p(-q) and v_p(r^(p-1)-1) = v_p(q^(p-1)-1).
std::int64_t find_dual_prime(int p, std::int64_t q, std::int64_t bound = 1000000);

// ---- order formulas as factor lists -----------------------------------------------

// |G| = q^q_power * prod (q^i - s) * scalar over factors (i, s), kept
// unexpanded so p-adic valuations never overflow.
struct OrderFormula {
  std::int64_t q = 0;
  std::int64_t q_power = 0;
  std::vector<std::pair<int, int>> factors;
  std::int64_t scalar = 1;
  int v(int p) const;
};

OrderFormula order_gl(int n, std::int64_t q);
OrderFormula order_sp(int n2, std::int64_t q);           // Sp_{2m}(q), n2 = 2m
OrderFormula order_so_odd(int n2p1, std::int64_t q);     // SO_{2n+1}(q), q odd
OrderFormula order_go_even(int n2, int eps, std::int64_t q);
OrderFormula order_so_even(int n2, int eps, std::int64_t q);

struct IndexIdentity {
  std::string name;
  int lhs = 0, rhs = 0;
};
// The five valuation identities for the subgroup inclusions GL_n <= GL_{n+1},
// Sp_2n <= GL_2n, SO_2n+1 <= GL_2n+1, GO_2n <= GL_2n, SO_2n-1 <= SO_2n.
std::vector<IndexIdentity> index_identities(int p, std::int64_t q, int n);

// ---- monomial groups -----------------------------------------------------------------

// Element e_i -> zeta^{exps[i]} e_{perm[i]} of G(m,k,n).
struct MonomialElement {
  std::vector<int> exps;
  std::vector<int> perm;
  bool operator<(const MonomialElement& o) const {
    return exps != o.exps ? exps < o.exps : perm < o.perm;
  }
  bool operator==(const MonomialElement& o) const { return exps == o.exps && perm == o.perm; }
};

class MonomialGroup {
 public:
  MonomialGroup(int m, int k, int n, int l, int p);

  int m() const { return m_; }
  int k() const { return k_; }
  int n() const { return n_; }
  std::uint64_t formula_order() const;  // m^n * n! / k
  const std::vector<MonomialElement>& generators() const { return gens_; }
  MonomialElement multiply(const MonomialElement& a, const MonomialElement& b) const;
  // Closure of the generators as matrices; throws CapError above `cap`.
  std::vector<MonomialElement> enumerate(std::uint64_t cap = 200000) const;
  // The n x n matrix over Z/p^l of an element (row-major).
  std::vector<std::int64_t> matrix(const MonomialElement& g) const;
  std::int64_t modulus() const { return modulus_; }
  std::int64_t zeta() const { return zeta_; }
  // Faithful action on (Z/p^l)^n minus zero.
  PermGroup action() const;

 private:
  int m_, k_, n_, l_, p_;
  std::int64_t modulus_, zeta_;
  std::vector<MonomialElement> gens_;
};

// C_m wr S_n acting imprimitively on m*n points.
PermGroup wreath_cyclic_symmetric(int m, int n);

// Invariant factors of a finite abelian group of order `order`, given the
// number of solutions of x^k = 1 for each k dividing the order.
std::vector<std::uint64_t> abelian_invariants(std::uint64_t order,
                                              const std::function<std::uint64_t(std::uint64_t)>& count_k);

// Heuristic isomorphism invariants used to compare small groups.
struct GroupInvariants {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> abelianization;  // invariant factors
  int derived_length = 0;
  bool operator==(const GroupInvariants&) const = default;
};
GroupInvariants group_invariants(const PermGroup& g);

// ---- parameter tables and predictor --------------------------------------------------

enum class ClassicalCase { A, B, C, D };

struct TableParams {
  ClassicalCase which = ClassicalCase::A;
  int p = 0;
  std::int64_t q = 0;
  int n = 0;
  int eps = 1;
  int m = 0, mu = 0;
  int theta_sign = 1;
  int kappa = 0;
  int ell = 0;        // v_p(q^mu - theta_sign), exactly as tabulated
  int ell_exp = 0;    // v_p((theta_sign*q)^mu - 1), the exponent actually realized
  bool exceptional_shape = false;  // case A with p | q - eps: rank/exponent bounds only
  std::string aut_f_a;        // e.g. "C_2 wr S_3"
  std::uint64_t aut_f_a_order = 0;
  std::string aut_op_a;       // e.g. "G(2,2,3)"
  std::uint64_t aut_op_a_order = 0;
};

// `n` is the table's n: the linear/unitary dimension, or half the symplectic or
// orthogonal dimension.
TableParams table_params(ClassicalCase c, int p, std::int64_t q, int n, int eps = 1);

struct PredictQuery {
  std::string family;  // A, M11, M12, PSL, PSU, PSp, Omega, POmega, G2
  int n = 0;
  std::int64_t q = 0;
  int p = 0;
  int eps = 1;  // POmega sign
};

struct Prediction {
  std::string group;
  int p = 0;
  std::string theorem_case;          // "S normal", "G2", "exotic", "realizable"
  bool s_normal = false;             // S normal in F (includes S abelian)
  bool s_abelian = false;
  std::optional<std::uint64_t> gamma_order;
  std::string gamma_structure;
  std::optional<bool> simple;        // F itself simple
  bool op_simple = false;            // O^{p'}(F) simple
  bool exotic = false;
  std::string realized_by;
  std::optional<TableParams> table;
  std::string note;
};

Prediction predict(const PredictQuery& q);
// Maps a catalog label such as "A11", "M12", "Sp(6,2)", "PSU(4,2)" to a query.
std::optional<PredictQuery> query_for_label(const std::string& label, int p);

}  // namespace pfusion
