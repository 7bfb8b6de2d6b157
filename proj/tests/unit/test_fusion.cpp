#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracle.hpp"
#include "pfusion/catalog.hpp"
#include "pfusion/classify.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/fusion.hpp"

using namespace pfusion;

namespace {

std::vector<Perm> sub_perms(const SubgroupLattice& lat, int id) {
  std::vector<Perm> out;
  for (Elem x : lat[id].elems) out.push_back(lat.s().perm(x));
  return out;
}

std::map<std::vector<Perm>, int> ids_by_perms(const SubgroupLattice& lat) {
  std::map<std::vector<Perm>, int> out;
  for (int id = 0; id < lat.size(); ++id) out.emplace(sub_perms(lat, id), id);
  return out;
}

struct Case {
  const char* group;
  int p;
};

const Case kSmallCases[] = {{"S4", 2},     {"S4", 3},      {"A5", 2},       {"A5", 3},
                            {"A5", 5},     {"A6", 2},      {"A6", 3},       {"GL(2,3)", 2},
                            {"PSL(3,2)", 2}, {"SL(2,3)", 2}, {"A4xS3", 2},    {"S3xS3", 3},
                            {"M11", 3},    {"M11", 2},     {"D8", 2}};

PermGroup sylow_of(const char* label, int p) { return sylow(build(label), p); }

}  // namespace

TEST(Lattice, SubgroupCountsMatchOracle) {
  struct Row {
    PermGroup s;
    int p;
    int expected;  // -1: only compare with the oracle
  };
  std::vector<Row> rows = {
      {sylow_of("A4", 2), 2, 5},       {build("D8"), 2, 10},         {build("C9"), 3, 3},
      {sylow_of("A6", 3), 3, 6},       {sylow_of("SL(2,3)", 2), 2, 6}, {sylow_of("M11", 2), 2, -1},
      {sylow_of("GL(2,3)", 2), 2, -1}, {build("C4xC2"), 2, -1},     {sylow_of("S6", 2), 2, -1},
      {sylow_of("A7", 3), 3, -1},
  };
  for (const auto& r : rows) {
    SubgroupLattice lat(PGroup(r.s, r.p));
    auto ref = oracle::all_subgroups(r.s.degree(), r.s.elements());
    EXPECT_EQ(static_cast<std::size_t>(lat.size()), ref.size());
    if (r.expected >= 0) EXPECT_EQ(lat.size(), r.expected);
    for (int id = 0; id < lat.size(); ++id) EXPECT_TRUE(ref.count(sub_perms(lat, id)));
  }
}

TEST(Lattice, StructureMatchesOracle) {
  for (auto [label, p] : std::vector<std::pair<const char*, int>>{{"S6", 2}, {"A7", 3}, {"M11", 2}}) {
    PermGroup s = sylow_of(label, p);
    SubgroupLattice lat(PGroup(s, p));
    auto all = s.elements();
    for (int id = 0; id < lat.size(); ++id) {
      auto h = sub_perms(lat, id);
      EXPECT_EQ(sub_perms(lat, lat[id].normalizer), oracle::normalizer(all, h));
      EXPECT_EQ(sub_perms(lat, lat[id].centralizer), oracle::centralizer(all, h));
      for (int m : lat[id].maximal) {
        EXPECT_EQ(lat[m].order * p, lat[id].order);
        EXPECT_TRUE(lat.contains(id, m));
      }
      // The generating sequence is greedy over ascending elements.
      auto gens = lat[id].gens;
      EXPECT_EQ(lat.generated(gens), id);
    }
    // Every subgroup of index p is recorded as maximal.
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b)
        if (lat[a].order == lat[b].order * p && lat.contains(a, b)) {
          const auto& mx = lat[a].maximal;
          EXPECT_NE(std::find(mx.begin(), mx.end(), b), mx.end());
        }
  }
}

TEST(Lattice, IdsIndependentOfGeneratorOrder) {
  PermGroup s = sylow_of("S6", 2);
  auto gens = s.generators();
  std::reverse(gens.begin(), gens.end());
  gens.push_back(gens.front() * gens.back());
  PermGroup t(s.degree(), gens);
  SubgroupLattice a(PGroup(s, 2)), b(PGroup(t, 2));
  ASSERT_EQ(a.size(), b.size());
  for (int id = 0; id < a.size(); ++id) EXPECT_EQ(sub_perms(a, id), sub_perms(b, id));
}

TEST(Lattice, Caps) {
  EXPECT_THROW(PGroup(build("S3"), 2), PreconditionError);
  EXPECT_THROW(PGroup(sylow_of("A12", 3), 3, 81), CapError);
}

TEST(GroupFusion, ClassesAndAutomizersMatchBruteForce) {
  for (const auto& c : kSmallCases) {
    auto g = build(c.group);
    auto f = group_fusion(g, c.p);
    const auto& lat = f.lattice();
    auto ids = ids_by_perms(lat);
    auto all = g.elements();
    std::vector<std::set<int>> ref(lat.size());
    for (int id = 0; id < lat.size(); ++id) {
      auto h = sub_perms(lat, id);
      for (const Perm& x : all) {
        auto it = ids.find(oracle::conjugate_set(h, x));
        if (it != ids.end()) ref[id].insert(it->second);
      }
      std::set<int> got(f.fclass(id).members.begin(), f.fclass(id).members.end());
      EXPECT_EQ(got, ref[id]) << c.group << " p=" << c.p << " id=" << id;
      if (id == lat.trivial()) continue;
      auto n = oracle::normalizer(all, h).size();
      std::vector<Perm> hg;
      for (Elem x : lat[id].gens) hg.push_back(lat.s().perm(x));
      auto cz = oracle::centralizer(all, hg).size();
      EXPECT_EQ(f.aut_order(id), n / cz) << c.group << " p=" << c.p << " id=" << id;
      EXPECT_EQ(f.aut(id).order(), n / cz);
    }
  }
}

TEST(GroupFusion, Examples) {
  auto s4 = group_fusion(build("S4"), 2);
  const auto& lat = s4.lattice();
  int v4 = -1;
  for (int id = 0; id < lat.size(); ++id)
    if (lat[id].order == 4 && lat[id].gens.size() == 2 &&
        std::all_of(lat[id].elems.begin() + 1, lat[id].elems.end(),
                    [&](Elem x) {
                      const Perm& g = lat.s().perm(x);
                      if (g.order() != 2) return false;
                      for (int i = 0; i < g.degree(); ++i)
                        if (g[i] == i) return false;
                      return true;
                    }))
      v4 = id;  // the double transpositions
  ASSERT_GE(v4, 0);
  EXPECT_EQ(s4.aut_order(v4), 6u);

  auto a6 = group_fusion(build("A6"), 2);
  const auto& s = a6.lattice();
  EXPECT_EQ(s.s().order(), 8);
  EXPECT_FALSE(s[s.top()].abelian);
  int involutions = 0;
  for (int x = 1; x < 8; ++x) involutions += s.s().elem_order(static_cast<Elem>(x)) == 2;
  EXPECT_EQ(involutions, 5);  // dihedral, not quaternion
  EXPECT_THROW(group_fusion(build("A5"), 7), PreconditionError);
  EXPECT_THROW(s4.aut(lat.trivial()), PreconditionError);
}

TEST(GroupFusion, InnerSystemHasInnerAutomizers) {
  for (auto [label, p] : std::vector<std::pair<const char*, int>>{{"D8", 2}, {"A7", 3}, {"M11", 2}}) {
    PermGroup s = sylow_of(label, p);
    auto f = group_fusion(s, p);
    const auto& lat = f.lattice();
    for (int id = 1; id < lat.size(); ++id)
      EXPECT_EQ(f.aut_order(id), static_cast<std::uint64_t>(lat[lat[id].normalizer].order /
                                                            lat[lat[id].centralizer].order));
    for (const auto& c : f.classes()) {
      std::set<int> sc;
      for (int m : c.members) sc.insert(lat[m].s_class);
      EXPECT_EQ(sc.size(), 1u);
    }
  }
}

TEST(GroupFusion, HomSetsMatchBruteForce) {
  for (auto [label, p] : std::vector<std::pair<const char*, int>>{{"S4", 2}, {"A6", 3}, {"GL(2,3)", 2}}) {
    auto g = build(label);
    auto f = group_fusion(g, p);
    const auto& lat = f.lattice();
    auto all = g.elements();
    for (int a = 1; a < lat.size(); ++a)
      for (int b = 1; b < lat.size(); ++b) {
        std::set<std::vector<Elem>> ref;
        auto sb = sub_perms(lat, b);
        for (const Perm& x : all) {
          std::vector<Elem> imgs;
          bool ok = true;
          for (Elem y : lat[a].gens) {
            Perm z = lat.s().perm(y).conj(x);
            if (!oracle::in(sb, z)) {
              ok = false;
              break;
            }
            imgs.push_back(lat.s().index(z));
          }
          if (ok) ref.insert(imgs);
        }
        auto hom = f.hom(a, b);
        std::set<std::vector<Elem>> got;
        for (const auto& m : hom) got.insert(m.images);
        EXPECT_EQ(got.size(), hom.size());  // duplicate-free
        EXPECT_EQ(got, ref) << label << " " << a << " -> " << b;
        EXPECT_EQ(f.hom_count(a, b), ref.size());
      }
  }
}

TEST(AbstractClosure, Examples) {
  PermGroup d8 = build("D8");
  auto inner = abstract_closure(d8, 2, {});
  auto grp = group_fusion(d8, 2);
  EXPECT_TRUE(equal_systems(inner, grp));

  PermGroup c3 = build("C3");
  Perm x = c3.generators()[0];
  auto inv = abstract_closure(c3, 3, {{{x}, {x.inverse()}}});
  EXPECT_EQ(inv.aut_order(inv.lattice().top()), 2u);
  EXPECT_EQ(inv.hom(inv.lattice().top(), inv.lattice().top()).size(), 2u);

  auto a4 = build("A4");
  PermGroup v4 = sylow(a4, 2);
  Perm t;
  for (const Perm& y : a4.elements())
    if (y.order() == 3) {
      t = y;
      break;
    }
  SeedMorphism seed;
  for (const Perm& y : v4.generators()) {
    seed.domain.push_back(y);
    seed.images.push_back(y.conj(t));
  }
  auto abs = abstract_closure(v4, 2, {seed});
  EXPECT_EQ(abs.aut_order(abs.lattice().top()), 3u);
  auto ga4 = group_fusion(a4, 2, {}, &v4);
  EXPECT_TRUE(equal_systems(abs, ga4));
  EXPECT_FALSE(equal_systems(abs, group_fusion(v4, 2)));

  SeedMorphism bad{{v4.generators()[0]}, {Perm(v4.degree())}};
  EXPECT_THROW(abstract_closure(v4, 2, {bad}), InputError);
}

TEST(AbstractClosure, CapIsEnforced) {
  FusionOptions o;
  o.closure_cap = 10;
  EXPECT_THROW(abstract_closure(sylow_of("S6", 2), 2, {}, o), CapError);
}

TEST(AbstractClosure, IdempotentOnClosedSystems) {
  for (const auto& c : kSmallCases) {
    auto f = group_fusion(build(c.group), c.p);
    auto g = close_morphisms(f.lattice_ptr(), f.generating_isos());
    EXPECT_TRUE(equal_systems(f, g)) << c.group << " p=" << c.p;
    auto h = close_morphisms(g.lattice_ptr(), g.generating_isos());
    EXPECT_TRUE(equal_systems(g, h));
  }
}

TEST(FusionSystem, MorphismRoundTripAndInverses) {
  auto f = group_fusion(build("GL(2,3)"), 2);
  const auto& lat = f.lattice();
  for (int a = 1; a < lat.size(); ++a)
    for (int b : f.fclass(a).members)
      for (const Iso& phi : f.isos(a, b)) {
        EXPECT_TRUE(f.contains(iso_inverse(phi)));
        auto m = f.to_morphism(phi, lat.top());
        Iso back = f.from_morphism(m);
        EXPECT_EQ(back.cod, phi.cod);
        EXPECT_EQ(back.map, phi.map);
        for (int sub : lat[a].maximal) EXPECT_TRUE(f.contains(iso_restrict(lat, phi, sub)));
      }
}

TEST(FusionSystem, DivisibilityAndIsomorphismInvariants) {
  for (const auto& c : kSmallCases) {
    auto f = group_fusion(build(c.group), c.p);
    const auto& lat = f.lattice();
    for (int id = 1; id < lat.size(); ++id) {
      auto inner = static_cast<std::uint64_t>(lat[lat[id].normalizer].order / lat[lat[id].centralizer].order);
      EXPECT_EQ(f.aut_order(id) % inner, 0u);
      std::multiset<int> orders;
      for (Elem x : lat[id].elems) orders.insert(lat.s().elem_order(x));
      for (int m : f.fclass(id).members) {
        std::multiset<int> om;
        for (Elem x : lat[m].elems) om.insert(lat.s().elem_order(x));
        EXPECT_EQ(om, orders);
      }
    }
  }
}

TEST(CentralizerSystem, Examples) {
  auto s4 = group_fusion(build("S4"), 2);
  int z = s4.lattice()[s4.lattice().top()].center;
  auto c = centralizer_system(s4, z);
  EXPECT_EQ(c.ambient().order(), 8u);
  EXPECT_TRUE(equal_systems(c, group_fusion(s4.s().group(), 2)));
  auto a6 = group_fusion(build("A6"), 2);
  auto ca = centralizer_system(a6, a6.lattice()[a6.lattice().top()].center);
  EXPECT_EQ(ca.ambient().order(), 8u);
  auto whole = centralizer_system(a6, a6.lattice().trivial());
  EXPECT_TRUE(equal_systems(whole, a6));
}

TEST(Product, MatchesDirectProductGroup) {
  for (auto [a, b, p] : std::vector<std::tuple<const char*, const char*, int>>{
           {"S3", "S3", 3}, {"A4", "S3", 2}, {"A4", "S3", 3}, {"S4", "C1", 2}}) {
    auto g1 = build(a), g2 = build(b);
    if (g2.order() % p != 0 && std::string(b) != "C1") continue;
    auto f1 = group_fusion(g1, p);
    if (std::string(b) == "C1") {
      // F x (system over the trivial group) is F.
      auto t = abstract_closure(PermGroup::trivial(1), p, {});
      auto prod = product(f1, t);
      EXPECT_EQ(fingerprint(prod), fingerprint(f1));
      continue;
    }
    auto f2 = group_fusion(g2, p);
    auto prod = product(f1, f2);
    auto g = direct_product(g1, g2);
    PermGroup s = prod.s().group();
    auto direct = group_fusion(g, p, {}, &s);
    EXPECT_TRUE(equal_systems(prod, direct)) << a << "x" << b << " p=" << p;
  }
}

TEST(Quotient, CentralQuotientsMatchProjectiveGroups) {
  for (auto [big, small] : std::vector<std::pair<const char*, const char*>>{{"SL(2,3)", "PSL(2,3)"},
                                                                          {"SL(2,9)", "PSL(2,9)"}}) {
    auto f = group_fusion(build(big), 2);
    int z = Z_of_F(f);
    EXPECT_EQ(f.lattice()[z].order, 2);
    auto q = quotient_by_central(f, z);
    auto ref = group_fusion(build(small), 2);
    EXPECT_EQ(fingerprint(q), fingerprint(ref)) << big;
  }
  auto a6 = group_fusion(build("A6"), 2);
  EXPECT_THROW(quotient_by_central(a6, a6.lattice()[a6.lattice().top()].center), PreconditionError);
}

TEST(Dump, RoundTripsThroughClosure) {
  for (const auto& c : kSmallCases) {
    auto f = group_fusion(build(c.group), c.p);
    auto in = parse_dump(dump(f));
    auto g = abstract_closure(in.s, in.p, in.seeds);
    EXPECT_TRUE(equal_systems(f, g)) << c.group;
  }
  EXPECT_THROW(parse_dump("{"), InputError);
  EXPECT_THROW(parse_dump("{\"p\":2}"), InputError);
}

TEST(GroupFusion, ElementClassesMatchBruteForce) {
  for (const auto& c : kSmallCases) {
    auto g = build(c.group);
    auto f = group_fusion(g, c.p);
    const PGroup& s = f.s();
    auto all = g.elements();
    const auto& ec = f.element_classes();
    for (int x = 0; x < s.order(); ++x)
      for (int y = x + 1; y < s.order(); ++y) {
        bool fused = false;
        for (const Perm& t : all)
          if (s.perm(static_cast<Elem>(x)).conj(t) == s.perm(static_cast<Elem>(y))) {
            fused = true;
            break;
          }
        EXPECT_EQ(ec[x] == ec[y], fused) << c.group << " p=" << c.p << " " << x << " " << y;
      }
  }
}
