#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "pfusion/catalog.hpp"
#include "pfusion/cohomology.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/tables.hpp"

using namespace pfusion;

namespace {

using Vec = std::vector<std::int64_t>;

struct Brute {
  std::uint64_t z1 = 0, b1 = 0;
};

// Enumerates generator values, extends along the Cayley graph and checks the
// cocycle identity on every pair (g, h).
Brute brute_h1(const GModule& m) {
  std::int64_t q = 1;
  for (int i = 0; i < m.ell; ++i) q *= m.p;
  const int r = m.rank;
  const std::size_t n = m.table.size();
  auto act = [&](int g, const Vec& a) {
    Vec out(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out[i] = (out[i] + m.action[g][i * r + j] * a[j]) % q;
    return out;
  };
  auto add = [&](Vec a, const Vec& b) {
    for (int i = 0; i < r; ++i) a[i] = ((a[i] + b[i]) % q + q) % q;
    return a;
  };
  std::uint64_t asize = 1;
  for (int i = 0; i < r; ++i) asize *= static_cast<std::uint64_t>(q);
  auto vec_of = [&](std::uint64_t code) {
    Vec a(r);
    for (int i = 0; i < r; ++i) {
      a[i] = static_cast<std::int64_t>(code % q);
      code /= q;
    }
    return a;
  };
  const std::size_t nx = m.generators.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nx; ++i) total *= asize;
  Brute out;
  std::set<std::vector<Vec>> cob;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Vec> gv;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < nx; ++i) {
      gv.push_back(vec_of(c % asize));
      c /= asize;
    }
    std::vector<Vec> f(n);
    std::vector<char> seen(n, 0);
    f[0] = Vec(r, 0);
    seen[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t j = 0; j < nx; ++j) {
        int t = m.table[queue[h]][m.generators[j]];
        if (seen[t]) continue;
        seen[t] = 1;
        f[t] = add(f[queue[h]], act(queue[h], gv[j]));
        queue.push_back(t);
      }
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      for (std::size_t h = 0; h < n && ok; ++h)
        ok = f[m.table[g][h]] == add(f[g], act(static_cast<int>(g), f[h]));
    if (ok) ++out.z1;
  }
  for (std::uint64_t code = 0; code < asize; ++code) {
    Vec a = vec_of(code), neg(r);
    for (int i = 0; i < r; ++i) neg[i] = (q - a[i]) % q;
    std::vector<Vec> f;
    for (std::size_t g = 0; g < n; ++g) f.push_back(add(act(static_cast<int>(g), a), neg));
    cob.insert(f);
  }
  out.b1 = cob.size();
  return out;
}

std::vector<ModMatrix> monomial_matrices(const MonomialGroup& g) {
  std::vector<ModMatrix> out;
  for (const auto& x : g.generators()) out.push_back(g.matrix(x));
  return out;
}

}  // namespace

TEST(Cohomology, TrivialCases) {
  auto triv = module_from_matrices(3, 1, 1, {});
  EXPECT_EQ(triv.table.size(), 1u);
  EXPECT_EQ(h1(triv).order, 1u);

  auto inv = module_from_matrices(3, 1, 1, {{2}});
  EXPECT_EQ(inv.table.size(), 2u);
  EXPECT_EQ(h1(inv).order, 1u);

  auto c3 = module_from_group(build("C3"), 3, 1, 1, {{1}});
  auto r = h1(c3);
  EXPECT_EQ(r.invariants, std::vector<std::uint64_t>{3});
  EXPECT_EQ(r.z1_order, 3u);
  EXPECT_EQ(r.b1_order, 1u);
}

TEST(Cohomology, MonomialModuleOverFiveVanishes) {
  MonomialGroup g(4, 4, 2, 1, 5);
  auto m = module_from_matrices(5, 1, 2, monomial_matrices(g));
  EXPECT_EQ(m.table.size(), 8u);
  auto r = h1(m);
  EXPECT_EQ(r.order, 1u);
  auto b = brute_h1(m);
  EXPECT_EQ(b.z1, r.z1_order);
  EXPECT_EQ(b.b1, r.b1_order);
}

TEST(Cohomology, MatchesBruteForce) {
  std::vector<GModule> mods;
  mods.push_back(module_from_group(build("C3"), 3, 1, 1, {{1}}));
  mods.push_back(module_from_group(build("C3"), 3, 2, 1, {{1}}));
  mods.push_back(module_from_group(build("C3"), 3, 1, 2, {{1, 1, 0, 1}}));
  mods.push_back(module_from_group(build("C2"), 2, 2, 1, {{1}}));
  mods.push_back(module_from_group(build("C2"), 2, 2, 1, {{3}}));
  mods.push_back(module_from_group(build("C4"), 2, 1, 2, {{0, 1, 1, 0}}));
  mods.push_back(module_from_group(build("C2"), 3, 2, 1, {{8}}));
  mods.push_back(module_from_group(build("C2xC2"), 2, 1, 2, {{0, 1, 1, 0}, {1, 0, 0, 1}}));
  mods.push_back(module_from_matrices(3, 1, 3, monomial_matrices(MonomialGroup(2, 2, 3, 1, 3))));
  mods.push_back(module_from_matrices(3, 1, 2, {{0, 1, 1, 0}, {2, 0, 0, 1}}));
  for (const auto& m : mods) {
    auto r = h1(m);
    auto b = brute_h1(m);
    EXPECT_EQ(r.z1_order, b.z1) << "p=" << m.p << " |G|=" << m.table.size();
    EXPECT_EQ(r.b1_order, b.b1) << "p=" << m.p << " |G|=" << m.table.size();
    EXPECT_EQ(r.order * r.b1_order, r.z1_order);
  }
}

TEST(Cohomology, SymplecticKernelModule) {
  // G(2,2,3) acting on (C_3)^3, the automizer kernel for Sp_6(2) at p = 3.
  MonomialGroup g(2, 2, 3, 1, 3);
  auto m = module_from_matrices(3, 1, 3, monomial_matrices(g));
  EXPECT_EQ(m.table.size(), 24u);
  EXPECT_EQ(h1(m).order, 1u);
}

TEST(Cohomology, CoprimeOrdersVanish) {
  std::mt19937_64 rng(20261016);
  int done = 0;
  while (done < 50) {
    const int primes[] = {3, 5, 7};
    int p = primes[rng() % 3];
    int ell = 1 + static_cast<int>(rng() % 2);
    int q = ell == 1 ? p : p * p;
    int rank = 1 + static_cast<int>(rng() % static_cast<unsigned>(p - 1));
    std::uint64_t size = 1;
    for (int i = 0; i < rank; ++i) size *= static_cast<std::uint64_t>(q);
    if (size > kMaxCohomologyModule) continue;
    // Monomial generators with (p-1)-th roots of unity: rank < p keeps |Gamma| prime to p.
    std::vector<ModMatrix> gens;
    int ngens = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < ngens; ++k) {
      std::vector<int> perm(rank);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      ModMatrix mat(static_cast<std::size_t>(rank) * rank, 0);
      for (int i = 0; i < rank; ++i) {
        std::int64_t u = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(q - 1));
        if (u % p == 0) u = 1;
        std::int64_t t = 1;
        for (int e = 0; e < q / p; ++e) t = t * u % q;  // Teichmuller lift: order divides p - 1
        mat[perm[i] * rank + i] = t;
      }
      gens.push_back(std::move(mat));
    }
    GModule m;
    try {
      m = module_from_matrices(p, ell, rank, gens);
    } catch (const CapError&) {
      continue;
    }
    ASSERT_NE(m.table.size() % static_cast<std::size_t>(p), 0u);
    EXPECT_EQ(h1(m).order, 1u);
    ++done;
  }
}

TEST(Cohomology, RejectsBadInput) {
  EXPECT_THROW(module_from_matrices(4, 1, 1, {}), InputError);
  EXPECT_THROW(module_from_matrices(5, 2, 4, {}), CapError);
  EXPECT_THROW(module_from_group(build("C3"), 3, 1, 1, {{2}}), InputError);  // not a homomorphism
}
