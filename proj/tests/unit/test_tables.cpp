#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "oracle.hpp"
#include "pfusion/catalog.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/tables.hpp"

using namespace pfusion;

namespace {

// Every monomial element with entries zeta^e (e < m) whose exponent sum is
// divisible by k, visited directly.
std::set<MonomialElement> monomial_by_definition(int m, int k, int n) {
  std::set<MonomialElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  do {
    for (int c = 0; c < total; ++c) {
      MonomialElement e;
      e.perm = perm;
      int x = c, sum = 0;
      for (int i = 0; i < n; ++i, x /= m) {
        e.exps.push_back(x % m);
        sum += x % m;
      }
      if (sum % k == 0) out.insert(e);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int brute_ord(long q, int p) {
  long r = ((q % p) + p) % p;
  long x = r;
  for (int o = 1; o <= p; ++o, x = x * r % p)
    if (x == 1) return o;
  return -1;
}

}  // namespace

TEST(Arithmetic, Examples) {
  EXPECT_EQ(ord_p(2, 3), 2);
  EXPECT_EQ(ord_p(2, 5), 4);
  EXPECT_EQ(v_p(80, 5), 1);
  EXPECT_EQ(v_p(81, 3), 4);
  EXPECT_EQ(v_p_pow_minus(2, 4, 1, 5), 1);
  EXPECT_EQ(v_p_pow_minus(-2, 2, 1, 3), 1);
  EXPECT_THROW(ord_p(6, 3), PreconditionError);
}

TEST(Arithmetic, OrdMatchesBruteForce) {
  for (int p : {3, 5, 7, 11, 13})
    for (long q = -20; q <= 40; ++q)
      if (q % p) EXPECT_EQ(ord_p(q, p), brute_ord(q, p)) << q << " mod " << p;
}

TEST(Arithmetic, DualPrime) {
  EXPECT_EQ(find_dual_prime(5, 3), 2);
  EXPECT_EQ(find_dual_prime(3, 2), 7);
  EXPECT_EQ(find_dual_prime(5, 7), 7);
  for (int p : {3, 5, 7})
    for (long q : {2, 3, 4, 5, 7, 8, 9, 11})
      if (q % p) {
        long r = find_dual_prime(p, q);
        EXPECT_EQ(ord_p(r, p), ord_p(-q, p));
        EXPECT_EQ(v_p_pow_minus(r, p - 1, 1, p), v_p_pow_minus(q, p - 1, 1, p));
      }
  EXPECT_THROW(find_dual_prime(2, 3), PreconditionError);
  EXPECT_THROW(find_dual_prime(3, 9), PreconditionError);
}

TEST(Arithmetic, IndexIdentitiesOverCatalogRange) {
  int checked = 0;
  for (int p : {3, 5, 7})
    for (long q : {2, 3, 4, 5, 7, 8, 9})
      for (int n = 1; n <= 4; ++n) {
        if (q % p == 0) continue;
        for (const auto& id : index_identities(p, q, n)) {
          EXPECT_EQ(id.lhs, id.rhs) << id.name << " p=" << p << " q=" << q << " n=" << n;
          ++checked;
        }
      }
  EXPECT_GT(checked, 300);
}

TEST(Arithmetic, OrderFormulaValuationsMatchExactOrders) {
  // |GL_3(2)| = 168, |Sp_4(3)| = 51840
  EXPECT_EQ(order_gl(3, 2).v(7), 1);
  EXPECT_EQ(order_gl(3, 2).v(3), 1);
  EXPECT_EQ(order_sp(4, 3).v(3), 4);
  EXPECT_EQ(order_sp(4, 3).v(5), 1);
  EXPECT_EQ(order_sp(6, 2).v(3), 4);
}

TEST(Monomial, OrdersMatchEnumeration) {
  const int prime_for_m[] = {0, 2, 3, 7, 5};
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= m; ++k) {
      if (m % k) continue;
      for (int n = 1; n <= 3; ++n)
        for (int l = 1; l <= 2; ++l) {
          MonomialGroup g(m, k, n, l, prime_for_m[m]);
          auto els = g.enumerate();
          auto ref = monomial_by_definition(m, k, n);
          EXPECT_EQ(els.size(), g.formula_order()) << m << "," << k << "," << n;
          EXPECT_EQ(std::set<MonomialElement>(els.begin(), els.end()), ref) << m << "," << k << "," << n;
        }
    }
  EXPECT_EQ(MonomialGroup(4, 2, 3, 1, 5).formula_order(), 192u);
  EXPECT_EQ(MonomialGroup(2, 2, 3, 1, 3).formula_order(), 24u);
  EXPECT_THROW(MonomialGroup(4, 3, 2, 1, 5), InputError);
  EXPECT_THROW(MonomialGroup(3, 1, 2, 1, 5), InputError);
}

TEST(Monomial, MatricesHaveRootOfUnityEntries) {
  MonomialGroup g(4, 2, 2, 2, 5);
  EXPECT_EQ(g.modulus(), 25);
  for (const auto& e : g.enumerate()) {
    auto mat = g.matrix(e);
    for (auto x : mat) {
      if (!x) continue;
      long y = 1;
      for (int i = 0; i < 4; ++i) y = y * x % 25;
      EXPECT_EQ(y, 1);
    }
  }
}

TEST(Monomial, ActionIsFaithful) {
  for (auto [m, k, n, l, p] : std::vector<std::array<int, 5>>{{2, 2, 3, 1, 3}, {4, 4, 2, 1, 5}, {2, 1, 2, 2, 3}}) {
    MonomialGroup g(m, k, n, l, p);
    auto a = g.action();
    EXPECT_EQ(a.order(), g.formula_order());
    EXPECT_EQ(oracle::closure(a.degree(), a.generators()).size(), g.formula_order());
  }
}

TEST(Monomial, WreathMatchesG_m1n) {
  for (auto [m, n, p] : std::vector<std::array<int, 3>>{{2, 3, 3}, {3, 2, 7}, {4, 2, 5}, {2, 2, 5}}) {
    auto w = wreath_cyclic_symmetric(m, n);
    auto g = MonomialGroup(m, 1, n, 1, p).action();
    EXPECT_EQ(w.order(), g.order());
    EXPECT_EQ(group_invariants(w), group_invariants(g)) << m << "," << n;
  }
}

TEST(Invariants, AbelianizationAndDerivedLength) {
  auto s4 = group_invariants(build("S4"));
  EXPECT_EQ(s4.abelianization, std::vector<std::uint64_t>{2});
  EXPECT_EQ(s4.derived_length, 3);
  auto a5 = group_invariants(build("A5"));
  EXPECT_TRUE(a5.abelianization.empty());
  EXPECT_EQ(a5.derived_length, -1);
  auto c = group_invariants(build("C4xC2xC3"));
  EXPECT_EQ(c.abelianization, (std::vector<std::uint64_t>{2, 12}));
  EXPECT_EQ(c.derived_length, 1);
}

TEST(TableParams, Examples) {
  auto b = table_params(ClassicalCase::B, 3, 2, 3);
  EXPECT_EQ(b.m, 2);
  EXPECT_EQ(b.mu, 2);
  EXPECT_EQ(b.theta_sign, -1);
  EXPECT_EQ(b.kappa, 3);
  EXPECT_EQ(b.ell, 0);  // v_3(2^2 + 1) = v_3(5)
  EXPECT_EQ(b.ell_exp, 1);
  EXPECT_EQ(b.aut_f_a_order, 48u);
  EXPECT_EQ(b.aut_op_a_order, 24u);
  EXPECT_EQ(b.aut_op_a, "G(2,2,3)");

  auto a = table_params(ClassicalCase::A, 3, 4, 6, 1);
  EXPECT_EQ(a.m, 1);
  EXPECT_EQ(a.kappa, 6);
  EXPECT_TRUE(a.exceptional_shape);

  auto a2 = table_params(ClassicalCase::A, 5, 2, 10, 1);
  EXPECT_EQ(a2.m, 4);
  EXPECT_EQ(a2.kappa, 2);
  EXPECT_EQ(a2.ell, 1);

  auto d = table_params(ClassicalCase::D, 3, 2, 3, 1);
  EXPECT_EQ(d.aut_f_a, "G(2,2,3)");
  EXPECT_EQ(d.aut_f_a_order, 24u);
}

TEST(Predict, PaperExamples) {
  auto a11 = predict({"A", 11, 0, 3, 1});
  EXPECT_EQ(a11.gamma_order, 2u);
  EXPECT_EQ(a11.realized_by, "A9");
  auto a9 = predict({"A", 9, 0, 3, 1});
  EXPECT_EQ(a9.gamma_order, 1u);
  EXPECT_EQ(a9.simple, true);

  auto sp = predict(*query_for_label("Sp(6,2)", 3));
  EXPECT_EQ(sp.gamma_order, 2u);
  EXPECT_EQ(sp.gamma_structure, "cyclic of order 2");
  ASSERT_TRUE(sp.table);
  EXPECT_EQ(sp.table->kappa, 3);

  for (long q : {2, 3, 7, 8}) {
    auto ex = predict({"PSp", 2, q, 5, 1});
    if (ord_p(q, 5) == 4) {
      // kappa = 1 < 5 here, so S is abelian and the exotic branch is not reached.
      EXPECT_TRUE(ex.s_abelian);
    }
  }
  auto big = predict({"PSp", 10, 2, 5, 1});
  EXPECT_TRUE(big.exotic);

  auto m12 = predict({"M12", 0, 0, 3, 1});
  EXPECT_EQ(m12.simple, true);
  EXPECT_EQ(m12.gamma_order, 1u);
  auto m11 = predict({"M11", 0, 0, 3, 1});
  EXPECT_TRUE(m11.s_abelian);

  auto g2 = predict({"G2", 0, 8, 3, 1});
  EXPECT_EQ(g2.gamma_order, 2u);
  EXPECT_EQ(g2.realized_by, "SL3^-(8)");
}

TEST(Predict, AbelianAlternatingUsesNormalizerQuotient) {
  EXPECT_EQ(predict({"A", 7, 0, 3, 1}).gamma_order, 4u);
  EXPECT_EQ(predict({"A", 8, 0, 3, 1}).gamma_order, 8u);
  EXPECT_TRUE(predict({"A", 8, 0, 3, 1}).s_abelian);
  EXPECT_FALSE(predict({"A", 6, 0, 2, 1}).s_abelian);
  EXPECT_EQ(predict({"A", 6, 0, 2, 1}).gamma_order, 1u);
}

TEST(Predict, DefiningAndCrossCharacteristic) {
  auto psp = predict(*query_for_label("PSp(4,3)", 3));
  EXPECT_EQ(psp.gamma_order, 1u);
  auto psu = predict(*query_for_label("PSU(4,2)", 3));
  EXPECT_EQ(psu.gamma_order, 1u);
  ASSERT_TRUE(psu.table);
  EXPECT_EQ(psu.table->kappa, 4);
  auto psl33 = predict({"PSL", 3, 4, 3, 1});
  EXPECT_TRUE(psl33.s_abelian);  // |S| = 9
  auto psl2 = predict(*query_for_label("PSL(2,9)", 2));
  EXPECT_EQ(psl2.simple, true);
  EXPECT_TRUE(predict(*query_for_label("PSL(2,5)", 2)).s_abelian);
  EXPECT_FALSE(query_for_label("S4", 2).has_value());
}
