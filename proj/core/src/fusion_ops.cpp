// Central quotients and the JSON dump of fusion systems.

#include <string>

#include "json.hpp"
#include "pfusion/classify.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/fusion.hpp"

namespace pfusion {

FusionSystem quotient_by_central(const FusionSystem& f, int z, const FusionOptions& opts) {
  const auto& lat = f.lattice();
  const PGroup& s = f.s();
  if (z != lat.trivial() && !is_central_in_F(f, z))
    throw PreconditionError("fusion", "subgroup is not central in F");
  const int n = s.order();
  std::vector<int> coset(n, -1);
  std::vector<Elem> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (Elem y : lat[z].elems) coset[s.mul(static_cast<Elem>(x), y)] = static_cast<int>(reps.size());
    reps.push_back(static_cast<Elem>(x));
  }
  const int m = static_cast<int>(reps.size());
  auto act = [&](Elem x) {
    std::vector<Point> img(m);
    for (int c = 0; c < m; ++c) img[c] = static_cast<Point>(coset[s.mul(reps[c], x)]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (Elem g : s.generators()) gens.push_back(act(g));
  ChainOptions co;
  co.known_order = static_cast<std::uint64_t>(m);
  PermGroup q(m, gens, co);
  auto qlat = std::make_shared<const SubgroupLattice>(PGroup(q, f.p(), opts.lattice_cap));
  std::vector<Elem> bar(n);
  for (int x = 0; x < n; ++x) bar[x] = qlat->s().index(act(static_cast<Elem>(x)));

  std::vector<Iso> seeds;
  for (const Iso& phi : f.generating_isos()) {
    if (!lat.contains(phi.dom, z)) continue;
    ElemSet dset;
    std::vector<int> pre(qlat->s().order(), -1);
    for (Elem x : lat[phi.dom].elems) {
      dset.set(bar[x]);
      pre[bar[x]] = x;
    }
    int d = qlat->id_of(dset);
    const auto& e = (*qlat)[d].elems;
    std::vector<Elem> img(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      img[i] = bar[iso_apply(lat, phi, static_cast<Elem>(pre[e[i]]))];
    seeds.push_back(iso_from_function(*qlat, d, img));
  }
  return close_morphisms(qlat, seeds, opts);
}

std::string dump(const FusionSystem& f) {
  using nlohmann::json;
  const auto& lat = f.lattice();
  const PGroup& s = f.s();
  json j;
  j["format"] = "pfusion-fusion";
  j["version"] = 1;
  j["p"] = f.p();
  j["degree"] = s.group().degree();
  j["backend"] = f.backend() == Backend::Group ? "group" : "abstract";
  json sg = json::array();
  for (const Perm& g : s.group().generators()) sg.push_back(g.str());
  j["s_generators"] = sg;
  json mor = json::array();
  for (const Iso& phi : f.generating_isos()) {
    json d = json::array(), im = json::array();
    for (Elem x : lat[phi.dom].gens) {
      d.push_back(s.perm(x).str());
      im.push_back(s.perm(iso_apply(lat, phi, x)).str());
    }
    mor.push_back({{"domain", d}, {"images", im}});
  }
  j["morphisms"] = mor;
  json lt = json::array();
  for (const auto& sub : lat.subgroups()) {
    json g = json::array();
    for (Elem x : sub.gens) g.push_back(s.perm(x).str());
    lt.push_back({{"id", sub.id},
                  {"order", sub.order},
                  {"generators", g},
                  {"s_class", sub.s_class},
                  {"f_class", f.is_object(sub.id) ? f.class_of(sub.id) : -1}});
  }
  j["lattice"] = lt;
  json cl = json::array();
  for (const auto& c : f.classes())
    cl.push_back({{"rep", c.rep}, {"members", c.members}, {"aut_order", std::to_string(c.aut.order())}});
  j["classes"] = cl;
  return j.dump(1);
}

DumpInput parse_dump(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError("fusion", std::string("malformed dump: ") + e.what());
  }
  try {
    DumpInput in;
    in.p = j.at("p").get<int>();
    int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& g : j.at("s_generators")) gens.push_back(Perm::parse(g.get<std::string>(), degree));
    in.s = PermGroup(degree, gens);
    for (const auto& m : j.value("morphisms", json::array())) {
      SeedMorphism sd;
      for (const auto& x : m.at("domain")) sd.domain.push_back(Perm::parse(x.get<std::string>(), degree));
      for (const auto& x : m.at("images")) sd.images.push_back(Perm::parse(x.get<std::string>(), degree));
      in.seeds.push_back(std::move(sd));
    }
    return in;
  } catch (const json::exception& e) {
    throw InputError("fusion", std::string("malformed dump: ") + e.what());
  }
}

}  // namespace pfusion
