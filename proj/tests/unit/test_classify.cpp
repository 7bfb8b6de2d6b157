#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pfusion/catalog.hpp"
#include "pfusion/classify.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/indexp.hpp"

using namespace pfusion;

namespace {

struct Case {
  const char* group;
  int p;
};

// Small enough for the quadratic-in-|G| normality oracle.
const Case kSmall[] = {{"S4", 2},     {"A4", 2},      {"S4", 3},      {"GL(2,3)", 2}, {"SL(2,3)", 2},
                       {"A4xS3", 2},  {"S3xS3", 3},   {"A5", 2},      {"PSL(3,2)", 2}, {"D8", 2},
                       {"S3xC3", 3},  {"A4xS3", 3}};

std::vector<Perm> elems_of(const SubgroupLattice& lat, int id) {
  std::vector<Perm> out;
  for (Elem x : lat[id].elems) out.push_back(lat.s().perm(x));
  return out;
}

// Q normal (central) in F_S(G) by definition: every conjugation c_g: P -> S
// extends to c_h on PQ with Q^h = Q (h centralizing Q) and (PQ)^h <= S.
bool normal_oracle(const PermGroup& g, const SubgroupLattice& lat, int q, bool central) {
  auto all = g.elements();
  auto s = lat.s().group().elements();
  auto qe = elems_of(lat, q);
  for (int p = 0; p < lat.size(); ++p) {
    auto pe = elems_of(lat, p);
    std::vector<Perm> pq_gens = pe;
    pq_gens.insert(pq_gens.end(), qe.begin(), qe.end());
    auto pq = oracle::closure(g.degree(), pq_gens);
    for (const Perm& x : all) {
      bool into = true;
      for (const Perm& y : pe) into = into && oracle::in(s, y.conj(x));
      if (!into) continue;
      bool extends = false;
      for (const Perm& h : all) {
        bool ok = true;
        for (const Perm& y : pe) ok = ok && y.conj(h) == y.conj(x);
        for (const Perm& y : qe) ok = ok && (central ? y.conj(h) == y : oracle::in(qe, y.conj(h)));
        for (const Perm& y : pq) ok = ok && oracle::in(s, y.conj(h));
        if (ok) {
          extends = true;
          break;
        }
      }
      if (!extends) return false;
    }
  }
  return true;
}

// O_p of a permutation group as the intersection of its Sylow p-subgroups.
std::uint64_t op_oracle(const PermGroup& a, int p) {
  auto syl = sylow(a, p).elements();
  std::sort(syl.begin(), syl.end());
  std::vector<Perm> core = syl;
  for (const Perm& x : a.elements()) {
    std::vector<Perm> keep;
    for (const Perm& y : core)
      if (oracle::in(syl, y.conj(x))) keep.push_back(y);
    core = std::move(keep);
  }
  return core.size();
}

}  // namespace

TEST(Classify, FlagsMatchDefinitions) {
  for (const auto& c : kSmall) {
    auto g = build(c.group);
    auto f = group_fusion(g, c.p);
    const auto& lat = f.lattice();
    auto cl = classify(f);
    auto all = g.elements();
    auto s = lat.s().group().elements();
    SCOPED_TRACE(std::string(c.group) + " p=" + std::to_string(c.p));
    for (int id = 1; id < lat.size(); ++id) {
      const auto& fl = cl.flags[id];
      auto pe = elems_of(lat, id);
      // Centric: C_S(P^g) <= P^g for every conjugate inside S.
      bool centric = true, strongly = true;
      for (const Perm& x : all) {
        std::vector<Perm> img;
        for (const Perm& y : pe) img.push_back(y.conj(x));
        std::sort(img.begin(), img.end());
        bool inside = std::all_of(img.begin(), img.end(), [&](const Perm& y) { return oracle::in(s, y); });
        for (const Perm& y : pe)
          if (oracle::in(s, y.conj(x)) && !oracle::in(pe, y.conj(x))) strongly = false;
        if (!inside) continue;
        for (const Perm& z : oracle::centralizer(s, img))
          if (!oracle::in(img, z)) centric = false;
      }
      EXPECT_EQ(fl.centric, centric) << id;
      EXPECT_EQ(fl.strongly_closed, strongly) << id;
      // Radical: O_p(Aut_F(P)) = Inn(P).
      auto inn = static_cast<std::uint64_t>(lat[id].order / lat[lat[id].center].order);
      EXPECT_EQ(fl.radical, op_oracle(f.aut(id), c.p) == inn) << id;
      EXPECT_EQ(fl.weakly_closed, f.fclass(id).members.size() == 1) << id;
      EXPECT_EQ(fl.normal_in_F, normal_oracle(g, lat, id, false)) << id;
      EXPECT_EQ(fl.central_in_F, normal_oracle(g, lat, id, true)) << id;
    }
  }
}

TEST(Classify, CanonicalSubgroups) {
  auto s4 = group_fusion(build("S4"), 2);
  const auto& lat = s4.lattice();
  EXPECT_EQ(lat[O_p_of_F(s4)].order, 4);
  EXPECT_EQ(Z_of_F(s4), lat.trivial());
  auto d8 = group_fusion(build("D8"), 2);
  EXPECT_EQ(O_p_of_F(d8), d8.lattice().top());
  EXPECT_EQ(Z_of_F(d8), d8.lattice()[d8.lattice().top()].center);
  EXPECT_EQ(centric_radical_set(d8), std::vector<int>{d8.lattice().top()});
  auto sl = group_fusion(build("SL(2,3)"), 2);
  EXPECT_EQ(sl.lattice()[Z_of_F(sl)].order, 2);
  EXPECT_EQ(O_p_of_F(sl), sl.lattice().top());
  auto a6 = group_fusion(build("A6"), 2);
  EXPECT_EQ(O_p_of_F(a6), a6.lattice().trivial());
}

TEST(Classify, FlagsAreClassInvariant) {
  for (const auto& c : kSmall) {
    auto f = group_fusion(build(c.group), c.p);
    auto cl = classify(f);
    for (const auto& fc : f.classes())
      for (int m : fc.members) {
        if (m == 0) continue;
        EXPECT_EQ(cl.flags[m].centric, cl.flags[fc.rep].centric);
        EXPECT_EQ(cl.flags[m].radical, cl.flags[fc.rep].radical);
        EXPECT_TRUE(cl.flags[fc.rep].fully_normalized);
      }
  }
}

TEST(Classify, AlperinGeneration) {
  for (auto [label, p] : std::vector<std::pair<const char*, int>>{
           {"S4", 2}, {"A6", 2}, {"A6", 3}, {"GL(2,3)", 2}, {"M11", 2}, {"M12", 3}, {"A9", 3}, {"Sp(6,2)", 3},
           {"PSU(4,2)", 3}, {"M12", 2}, {"A8", 2}}) {
    auto f = group_fusion(build(label), p);
    std::vector<Iso> seeds;
    for (int r : centric_radical_set(f))
      for (const Perm& a : f.aut_generators(r)) seeds.push_back({r, r, a});
    auto g = close_morphisms(f.lattice_ptr(), seeds);
    EXPECT_TRUE(equal_systems(f, g)) << label << " p=" << p;
  }
}

TEST(Classify, RequiresFullSystem) {
  auto f = group_fusion(build("S4"), 2);
  auto e0 = op_prime_star(f);
  EXPECT_THROW(classify(e0), PreconditionError);
  EXPECT_FALSE(is_centric(f, f.lattice().trivial()));
}
