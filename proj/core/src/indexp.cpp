#include "pfusion/indexp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pfusion/classify.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/saturate.hpp"

namespace pfusion {

namespace {

void require_full(const FusionSystem& f) {
  for (char o : f.objects())
    if (!o) throw PreconditionError("indexp", "system is restricted to a subfamily of subgroups");
}

void require_saturated(const FusionSystem& f) {
  require_full(f);
  if (f.backend() == Backend::Group) return;
  auto rep = is_saturated(f);
  if (!rep.saturated) throw PreconditionError("indexp", "fusion system is not saturated: " + rep.detail);
}

void require_group(const FusionSystem& f) {
  if (!f.has_ambient()) throw PreconditionError("indexp", "needs a group-backed fusion system");
}

// Moves generators of a subgroup of Aut_F(rep) to every member of the class.
void transport(const FusionSystem& f, const FClass& c, const std::vector<Perm>& gens, std::vector<Iso>& out) {
  for (int m : c.members) {
    const Perm& w = f.witness(m);
    for (const Perm& g : gens) out.push_back({m, m, g.conj(w)});
  }
}

// Right cosets of a normal subgroup h in a, found by BFS over generators of a.
struct Cosets {
  const PermGroup* h = nullptr;
  std::vector<Perm> reps;
  int label(const Perm& x) const {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (h->contains(x * reps[i].inverse())) return static_cast<int>(i);
    return -1;
  }
};

Cosets cosets(const PermGroup& a, const PermGroup& h) {
  for (const Perm& x : a.generators())
    for (const Perm& y : h.generators())
      if (!h.contains(y.conj(x))) throw InternalError("indexp", "quotient by a subgroup that is not normal");
  Cosets c;
  c.h = &h;
  c.reps.push_back(Perm(a.degree()));
  for (std::size_t i = 0; i < c.reps.size(); ++i)
    for (const Perm& g : a.generators()) {
      Perm x = c.reps[i] * g;
      if (c.label(x) < 0) c.reps.push_back(std::move(x));
    }
  if (c.reps.size() != a.order() / h.order()) throw InternalError("indexp", "coset enumeration is incomplete");
  return c;
}

// The quotient acting regularly on its cosets.
PermGroup regular_quotient(const PermGroup& a, const Cosets& c) {
  const int n = static_cast<int>(c.reps.size());
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<Point> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<Point>(c.label(c.reps[i] * g));
    Perm x(std::move(img));
    if (!x.is_identity()) gens.push_back(std::move(x));
  }
  ChainOptions co;
  co.known_order = static_cast<std::uint64_t>(n);
  return PermGroup(n, gens, co);
}

void describe(GammaReport& g, const PermGroup& q) {
  auto inv = group_invariants(q);
  std::uint64_t ab = 1;
  for (auto d : inv.abelianization) ab *= d;
  g.abelian = ab == q.order();
  g.exponent = 1;
  for (const Perm& x : q.elements()) g.exponent = std::lcm(g.exponent, static_cast<int>(x.order()));
  if (g.abelian) g.invariants = inv.abelianization;
  if (q.order() == 1) {
    g.structure = "1";
  } else if (g.abelian) {
    g.structure.clear();
    for (std::size_t i = 0; i < g.invariants.size(); ++i)
      g.structure += (i ? " x C" : "C") + std::to_string(g.invariants[i]);
  } else {
    g.structure = "order " + std::to_string(q.order()) + ", exponent " + std::to_string(g.exponent);
  }
}

std::vector<Iso> embedded_generators(const FusionSystem& small, const SubgroupLattice& big,
                                     const std::vector<int>& ids) {
  std::vector<Iso> out;
  for (const Iso& phi : small.generating_isos()) out.push_back(embed_iso(small.lattice(), big, ids, phi));
  return out;
}

int small_id(const std::vector<int>& ids, int big) {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == big) return static_cast<int>(i);
  throw InternalError("indexp", "subgroup missing from the centralizer lattice");
}

std::vector<Perm> automizer_in(const FusionSystem& small, const SubgroupLattice& big, const std::vector<int>& ids,
                               int a) {
  int sa = small_id(ids, a);
  std::vector<Perm> out;
  for (const Perm& g : small.aut_generators(sa)) out.push_back(embed_iso(small.lattice(), big, ids, {sa, sa, g}).map);
  return out;
}

}  // namespace

FusionSystem op_prime_star(const FusionSystem& f, const FusionOptions& opts, SeedFamily seeds) {
  require_saturated(f);
  const auto& lat = f.lattice();
  std::vector<char> mask(lat.size(), 0);
  for (int id : centric_set(f)) mask[id] = 1;
  std::vector<Iso> s;
  for (const auto& c : f.classes()) {
    if (!mask[c.rep]) continue;
    if (seeds == SeedFamily::CentricRadical && !is_radical(f, c.rep)) continue;
    transport(f, c, op_prime_residual(c.aut, f.p(), opts.seed).generators(), s);
  }
  return close_morphisms(f.lattice_ptr(), s, opts, std::move(mask));
}

PermGroup aut0_S(const FusionSystem& f, const FusionSystem& e0) {
  const auto& lat = f.lattice();
  const int top = lat.top();
  PermGroup a = f.aut(top);
  PermGroup h = e0.aut(top);
  std::vector<int> centric;  // decreasing order; larger subgroups decide fastest
  for (int id = top - 1; id > 0; --id)
    if (e0.is_object(id)) centric.push_back(id);
  std::vector<Perm> gens = h.generators();
  for (const Perm& alpha : a.elements()) {
    if (h.contains(alpha)) continue;
    Iso full{top, top, alpha};
    for (int p : centric)
      if (e0.contains(iso_restrict(lat, full, p))) {
        gens.push_back(alpha);
        h = subgroup(a, gens);
        break;
      }
  }
  return h;
}

PrimeIndexAnalysis analyze_index_prime(const FusionSystem& f, const FusionOptions& opts, SeedFamily seeds) {
  PrimeIndexAnalysis out;
  const auto& lat = f.lattice();
  const int top = lat.top();
  out.e0 = op_prime_star(f, opts, seeds);
  out.aut_s = f.aut(top);
  out.aut0 = aut0_S(f, out.e0);

  GammaReport& g = out.gamma;
  Cosets c = cosets(out.aut_s, out.aut0);
  g.aut_order = out.aut_s.order();
  g.aut0_order = out.aut0.order();
  g.order = c.reps.size();
  g.generators = out.aut_s.generators();
  for (const Perm& x : g.generators) g.labels.push_back(c.label(x));
  g.aut0_generators = out.aut0.generators();
  g.coset_reps = c.reps;
  g.table.assign(g.order, std::vector<int>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j) g.table[i][j] = c.label(c.reps[i] * c.reps[j]);
  describe(g, regular_quotient(out.aut_s, c));

  std::vector<Iso> seeds_all = out.e0.generating_isos();
  for (const Perm& x : g.aut0_generators) seeds_all.push_back({top, top, x});
  out.op_prime = close_morphisms(f.lattice_ptr(), seeds_all, opts);
  for (const auto& cl : f.classes())
    if (out.e0.is_object(cl.rep)) g.op_prime_automizers.emplace_back(cl.rep, out.op_prime.aut_order(cl.rep));
  return out;
}

GammaReport gamma(const FusionSystem& f, const FusionOptions& opts) { return analyze_index_prime(f, opts).gamma; }

FusionSystem op_prime_system(const FusionSystem& f, const FusionOptions& opts) {
  return analyze_index_prime(f, opts).op_prime;
}

std::vector<IndexPrimeSubsystem> subsystems_of_index_prime_to_p(const PrimeIndexAnalysis& a) {
  const auto& t = a.gamma.table;
  const std::size_t n = t.size();
  auto close = [&](std::vector<char> set) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (set[i] && set[j] && !set[t[i][j]]) {
            set[t[i][j]] = 1;
            grew = true;
          }
    }
    return set;
  };
  std::vector<std::vector<char>> found;
  std::vector<char> one(n, 0);
  one[0] = 1;
  found.push_back(one);
  for (std::size_t k = 0; k < found.size(); ++k)
    for (std::size_t x = 0; x < n; ++x) {
      if (found[k][x]) continue;
      auto bigger = found[k];
      bigger[x] = 1;
      bigger = close(bigger);
      if (std::find(found.begin(), found.end(), bigger) == found.end()) found.push_back(bigger);
    }
  std::vector<IndexPrimeSubsystem> out;
  for (const auto& set : found) {
    IndexPrimeSubsystem h;
    std::vector<Perm> gens = a.aut0.generators();
    for (std::size_t i = 0; i < n; ++i)
      if (set[i]) {
        h.labels.push_back(static_cast<int>(i));
        if (i) gens.push_back(a.gamma.coset_reps[i]);
      }
    h.automizer = subgroup(a.aut_s, gens);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::make_pair(x.labels.size(), x.labels) < std::make_pair(y.labels.size(), y.labels);
  });
  return out;
}

FusionSystem build_subsystem(const PrimeIndexAnalysis& a, const IndexPrimeSubsystem& h, const FusionOptions& opts) {
  const auto& lat = a.e0.lattice();
  std::vector<Iso> seeds = a.e0.generating_isos();
  for (const Perm& x : h.automizer.generators()) seeds.push_back({lat.top(), lat.top(), x});
  return close_morphisms(a.e0.lattice_ptr(), seeds, opts);
}

int hyperfocal(const FusionSystem& f) {
  require_full(f);
  const auto& lat = f.lattice();
  const PGroup& s = lat.s();
  std::vector<Elem> gens;
  std::vector<char> seen(s.order(), 0);
  seen[0] = 1;
  for (const auto& c : f.classes()) {
    if (c.rep == lat.trivial()) continue;
    std::vector<Iso> autos;
    transport(f, c, op_residual(c.aut, f.p()).generators(), autos);
    for (const Iso& phi : autos)
      for (Elem x : lat[phi.dom].elems) {
        Elem d = s.mul(s.inv(x), iso_apply(lat, phi, x));
        if (!seen[d]) {
          seen[d] = 1;
          gens.push_back(d);
        }
      }
  }
  return lat.generated(gens);
}

std::vector<int> weakly_closed_centric(const FusionSystem& f, bool abelian_only) {
  const auto& lat = f.lattice();
  std::vector<int> out;
  for (int id = 1; id < lat.size(); ++id)
    if (lat[id].normalizer == lat.top() && (!abelian_only || lat[id].abelian) && is_weakly_closed(f, id) &&
        is_centric(f, id))
      out.push_back(id);
  return out;
}

ThetaReport theta_via_weakly_closed(const FusionSystem& f, int a, const FusionOptions& opts) {
  require_saturated(f);
  const auto& lat = f.lattice();
  if (a == lat.trivial() || lat[a].normalizer != lat.top() || !is_weakly_closed(f, a) || !is_centric(f, a))
    throw PreconditionError("indexp", "A must be normal in S, F-centric and weakly closed");
  ThetaReport r;
  r.a = a;
  PermGroup aut_a = f.aut(a);
  r.aut_order = aut_a.order();
  if (op_prime_residual(aut_a, f.p(), opts.seed).order() == aut_a.order()) {
    r.fast_path = true;
    r.kernel_order = r.aut_order;
    r.quotient_order = 1;
    r.well_defined = r.injective = r.surjective = true;
    r.quotient = group_invariants(PermGroup::trivial(1));
    return r;
  }
  auto an = analyze_index_prime(f, opts);
  PermGroup k = an.op_prime.aut(a);
  r.kernel_order = k.order();
  Cosets q = cosets(aut_a, k);
  r.quotient_order = q.reps.size();
  r.quotient = group_invariants(regular_quotient(aut_a, q));
  auto restrict_label = [&](const Perm& alpha) {
    return q.label(iso_restrict(lat, {lat.top(), lat.top(), alpha}, a).map);
  };
  r.well_defined = true;
  for (const Perm& x : an.gamma.aut0_generators) r.well_defined = r.well_defined && restrict_label(x) == 0;
  std::vector<int> image;
  for (const Perm& rep : an.gamma.coset_reps) image.push_back(restrict_label(rep));
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  r.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  r.surjective = sorted.size() == q.reps.size();
  return r;
}

GammaBounds gamma_bounds(const FusionSystem& f, int a, int z, const FusionOptions& opts) {
  require_group(f);
  require_full(f);
  const auto& lat = f.lattice();
  if (a == lat.trivial() || lat[a].normalizer != lat.top() || !lat[a].abelian || !is_weakly_closed(f, a) ||
      !is_centric(f, a))
    throw PreconditionError("indexp", "A must be abelian, normal in S, F-centric and weakly closed");
  GammaBounds out;
  WeaklyClosedWitness& w = out.witness;
  w.a = a;
  const auto& ec = f.element_classes();
  std::vector<char> inside(lat.s().order(), 1);
  for (int x = 0; x < lat.s().order(); ++x)
    if (!lat[a].set.test(x)) inside[ec[x]] = 0;
  std::vector<Elem> xz;
  const auto& center = lat[lat[lat.top()].center].set;
  for (Elem t : lat[a].elems)
    if (inside[ec[t]]) {
      w.x.push_back(t);
      if (center.test(t)) xz.push_back(t);
    }
  int zx = lat.generated(xz);
  if (zx == lat.trivial()) throw PreconditionError("indexp", "X meets Z(S) trivially");
  if (z < 0) z = zx;
  if (z == lat.trivial() || !lat.contains(zx, z))
    throw PreconditionError("indexp", "Z must be a nontrivial subgroup of <X cap Z(S)>");
  w.z = z;

  FusionSystem c = centralizer_system(f, z, opts);
  auto ids = embed_lattice(c.lattice(), lat);
  FusionSystem oc = op_prime_system(c, opts);
  PermGroup aut_a = f.aut(a);
  w.k = normal_closure(aut_a, automizer_in(c, lat, ids, a));
  w.k0 = normal_closure(aut_a, automizer_in(oc, lat, ids, a));
  out.lower = aut_a.order() / w.k.order();
  std::vector<Perm> gens = op_prime_residual(aut_a, f.p(), opts.seed).generators();
  for (const Perm& x : w.k0.generators()) gens.push_back(x);
  out.upper = aut_a.order() / subgroup(aut_a, gens).order();
  return out;
}

const char* to_string(Simplicity s) {
  switch (s) {
    case Simplicity::Simple:
      return "simple";
    case Simplicity::NotSimple:
      return "not simple";
    case Simplicity::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

SimplicityCertificate simplicity_certificate(const FusionSystem& f, const PrimeIndexAnalysis& a) {
  const auto& lat = f.lattice();
  SimplicityCertificate out;
  if (a.gamma.order != 1) {
    out.verdict = Simplicity::NotSimple;
    out.reason = "O^{p'}(F) is a proper normal subsystem of index " + std::to_string(a.gamma.order);
    return out;
  }
  auto cl = classify(f);
  if (cl.op != lat.trivial()) {
    out.verdict = Simplicity::NotSimple;
    out.reason = "O_p(F) is nontrivial";
    out.evidence = {cl.op};
    return out;
  }
  int h = hyperfocal(f);
  if (h != lat.top()) {
    out.verdict = Simplicity::NotSimple;
    out.reason = "the hyperfocal subgroup is proper, so O^p(F) is a proper normal subsystem";
    out.evidence = {h};
    return out;
  }
  std::vector<int> sc;
  for (int id = 1; id < lat.top(); ++id)
    if (cl.flags[id].strongly_closed) sc.push_back(id);
  if (sc.empty()) {
    out.verdict = Simplicity::Simple;
    out.reason = "F = O^{p'}(F) and no proper nontrivial subgroup of S is strongly closed";
    return out;
  }
  const PGroup& s = lat.s();
  for (std::size_t i = 0; i < sc.size(); ++i)
    for (std::size_t j = i + 1; j < sc.size(); ++j) {
      const auto& t1 = lat[sc[i]];
      const auto& t2 = lat[sc[j]];
      if ((t1.set & t2.set).count() != 1 || t1.order * t2.order != s.order()) continue;
      bool commute = true;
      for (Elem x : t1.gens)
        for (Elem y : t2.gens) commute = commute && s.mul(x, y) == s.mul(y, x);
      if (!commute) continue;
      out.verdict = Simplicity::NotSimple;
      out.reason = "S is the direct product of two strongly closed subgroups";
      out.evidence = {sc[i], sc[j]};
      return out;
    }
  out.verdict = Simplicity::Inconclusive;
  out.reason = "proper strongly closed subgroups exist but give no factorization";
  out.evidence = sc;
  return out;
}

bool check_centralizer_containment(const FusionSystem& f, int u, const FusionOptions& opts) {
  require_group(f);
  const auto& lat = f.lattice();
  FusionSystem c = centralizer_system(f, u, opts);
  auto ids = embed_lattice(c.lattice(), lat);
  FusionSystem oc = op_prime_system(c, opts);
  FusionSystem o = op_prime_system(f, opts);
  for (const Iso& phi : embedded_generators(oc, lat, ids))
    if (phi.dom != lat.trivial() && !o.contains(phi)) return false;
  return true;
}

}  // namespace pfusion
