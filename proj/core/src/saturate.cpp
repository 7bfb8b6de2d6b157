#include "pfusion/saturate.hpp"

#include <algorithm>
#include <unordered_set>

#include "pfusion/errors.hpp"

namespace pfusion {

namespace {

void require_full(const FusionSystem& f) {
  for (char o : f.objects())
    if (!o) throw PreconditionError("saturate", "system is restricted to a subfamily of subgroups");
}

// Aut_S(P) as maps on the positions of P.
std::unordered_set<Perm, PermHash> aut_s(const SubgroupLattice& lat, int id) {
  std::unordered_set<Perm, PermHash> out;
  for (Elem g : lat[lat[id].normalizer].elems) out.insert(iso_conjugation(lat, id, g).map);
  return out;
}

std::vector<Iso> aut_s_gens(const SubgroupLattice& lat, int id) {
  std::vector<Iso> out;
  for (Elem g : lat[lat[id].normalizer].gens) out.push_back(iso_conjugation(lat, id, g));
  return out;
}

int n_phi_with(const SubgroupLattice& lat, const Iso& phi, const std::unordered_set<Perm, PermHash>& aut_q) {
  Iso inv = iso_inverse(phi);
  ElemSet set;
  for (Elem g : lat[lat[phi.dom].normalizer].elems) {
    Iso c = iso_compose(iso_compose(inv, iso_conjugation(lat, phi.dom, g)), phi);
    if (aut_q.count(c.map)) set.set(g);
  }
  return lat.id_of(set);
}

std::optional<Iso> find_extension(const FusionSystem& f, const Iso& phi, int n) {
  const auto& lat = f.lattice();
  if (n == phi.dom) return phi;
  const auto& gens = lat[phi.dom].gens;
  std::vector<Elem> want;
  for (Elem x : gens) want.push_back(iso_apply(lat, phi, x));
  for (int target : f.fclass(n).members) {
    if (!lat.contains(target, phi.cod)) continue;
    for (const Iso& psi : f.isos(n, target)) {
      bool ok = true;
      for (std::size_t i = 0; i < gens.size() && ok; ++i) ok = iso_apply(lat, psi, gens[i]) == want[i];
      if (ok) return psi;
    }
  }
  return std::nullopt;
}

}  // namespace

int n_phi(const FusionSystem& f, const Iso& phi) { return n_phi_with(f.lattice(), phi, aut_s(f.lattice(), phi.cod)); }

std::vector<SylowResult> check_sylow_axiom(const FusionSystem& f) {
  require_full(f);
  const auto& lat = f.lattice();
  std::vector<SylowResult> out;
  for (const auto& c : f.classes()) {
    if (c.rep == lat.trivial()) continue;
    int nmax = 0, cmax = 0;
    for (int m : c.members) {
      nmax = std::max(nmax, lat[lat[m].normalizer].order);
      cmax = std::max(cmax, lat[lat[m].centralizer].order);
    }
    const std::uint64_t sylow_order = p_part(c.aut.order(), f.p());
    for (int m : c.members) {
      if (lat[lat[m].normalizer].order != nmax) continue;
      SylowResult r;
      r.subgroup = m;
      r.fully_centralized = lat[lat[m].centralizer].order == cmax;
      r.sylow_automizer =
          static_cast<std::uint64_t>(lat[lat[m].normalizer].order / lat[lat[m].centralizer].order) == sylow_order;
      out.push_back(r);
    }
  }
  return out;
}

std::vector<ExtensionResult> check_extension_axiom(const FusionSystem& f, bool stop_at_failure) {
  require_full(f);
  const auto& lat = f.lattice();
  std::vector<ExtensionResult> out;
  for (const auto& c : f.classes()) {
    if (c.rep == lat.trivial()) continue;
    int cmax = 0;
    for (int m : c.members) cmax = std::max(cmax, lat[lat[m].centralizer].order);
    std::vector<int> sources, targets;
    std::vector<char> seen_src(lat.size(), 0), seen_tgt(lat.size(), 0);
    for (int m : c.members) {
      // One source and one target per S-class.
      int sc = lat[m].s_class;
      if (!seen_src[sc]) {
        seen_src[sc] = 1;
        sources.push_back(m);
      }
      if (lat[lat[m].centralizer].order == cmax && !seen_tgt[sc]) {
        seen_tgt[sc] = 1;
        targets.push_back(m);
      }
    }
    for (int p : sources) {
      auto gp = aut_s_gens(lat, p);
      for (int q : targets) {
        auto gq = aut_s_gens(lat, q);
        auto aut_q = aut_s(lat, q);
        std::unordered_set<Perm, PermHash> done;
        for (const Iso& phi : f.isos(p, q)) {
          if (done.count(phi.map)) continue;
          // Mark the double coset Aut_S(P) phi Aut_S(Q).
          std::vector<Iso> stack{phi};
          done.insert(phi.map);
          while (!stack.empty()) {
            Iso x = stack.back();
            stack.pop_back();
            auto push = [&](Iso y) {
              if (done.insert(y.map).second) stack.push_back(std::move(y));
            };
            for (const Iso& a : gp) push(iso_compose(a, x));
            for (const Iso& b : gq) push(iso_compose(x, b));
          }
          ExtensionResult r;
          r.phi = phi;
          r.n_phi = n_phi_with(lat, phi, aut_q);
          r.extension = find_extension(f, phi, r.n_phi);
          out.push_back(r);
          if (stop_at_failure && !out.back().ok()) return out;
        }
      }
    }
  }
  return out;
}

SaturationReport is_saturated(const FusionSystem& f) {
  SaturationReport rep;
  for (const auto& r : check_sylow_axiom(f)) {
    if (r.ok()) continue;
    rep.saturated = false;
    rep.axiom = 1;
    rep.witnesses = {r.subgroup};
    rep.detail = r.fully_centralized ? "Aut_S(P) is not a Sylow subgroup of Aut_F(P)"
                                     : "fully normalized P is not fully centralized";
    return rep;
  }
  for (const auto& r : check_extension_axiom(f, true)) {
    if (r.ok()) continue;
    rep.saturated = false;
    rep.axiom = 2;
    rep.witnesses = {r.phi.dom, r.phi.cod};
    rep.morphism = r.phi;
    rep.n_phi = r.n_phi;
    rep.detail = "phi does not extend to N_phi";
    return rep;
  }
  return rep;
}

}  // namespace pfusion
