#include "pfusion/fusion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "pfusion/errors.hpp"

namespace pfusion {

// ---- isomorphism helpers -----------------------------------------------------------

Elem iso_apply(const SubgroupLattice& lat, const Iso& f, Elem x) {
  int i = lat.local(f.dom, x);
  if (i < 0) throw InternalError("fusion", "element outside the domain of a morphism");
  if (i == 0) return 0;
  return lat[f.cod].elems[f.map[i - 1] + 1];
}

Iso iso_compose(const Iso& a, const Iso& b) {
  if (a.cod != b.dom) throw InternalError("fusion", "composing morphisms with mismatched ends");
  return {a.dom, b.cod, a.map * b.map};
}

Iso iso_inverse(const Iso& a) { return {a.cod, a.dom, a.map.inverse()}; }

Iso iso_identity(const SubgroupLattice& lat, int id) { return {id, id, Perm(lat[id].order - 1)}; }

Iso iso_from_function(const SubgroupLattice& lat, int dom, const std::vector<Elem>& img) {
  ElemSet set;
  for (Elem x : img) set.set(x);
  int cod = lat.id_of(set);
  const int n = lat[dom].order;
  if (lat[cod].order != n) throw InternalError("fusion", "element map is not injective");
  std::vector<Point> m(n - 1);
  for (int i = 1; i < n; ++i) m[i - 1] = static_cast<Point>(lat.local(cod, img[i]) - 1);
  return {dom, cod, Perm(std::move(m))};
}

Iso iso_restrict(const SubgroupLattice& lat, const Iso& f, int sub) {
  const auto& e = lat[sub].elems;
  std::vector<Elem> img(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) img[i] = iso_apply(lat, f, e[i]);
  return iso_from_function(lat, sub, img);
}

Iso iso_conjugation(const SubgroupLattice& lat, int id, Elem s) {
  const auto& e = lat[id].elems;
  std::vector<Elem> img(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) img[i] = lat.s().conj(e[i], s);
  return iso_from_function(lat, id, img);
}

namespace {

// Extends generator images to a map on <gens>; returns false if inconsistent or
// not injective. `fwd`/`bwd` are scratch arrays of size |S| filled with -1 and
// restored before returning; on success `out` lists the mapped domain elements.
bool extend_map(const PGroup& s, const std::vector<Elem>& gens, const std::vector<Elem>& images,
                std::vector<int>& fwd, std::vector<int>& bwd, std::vector<Elem>& out,
                const std::vector<int>* label = nullptr) {
  out.clear();
  out.push_back(0);
  fwd[0] = 0;
  bwd[0] = 0;
  bool ok = true;
  for (std::size_t h = 0; h < out.size() && ok; ++h) {
    Elem y = out[h];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem z = s.mul(y, gens[j]);
      Elem w = s.mul(static_cast<Elem>(fwd[y]), images[j]);
      if (fwd[z] >= 0) {
        if (fwd[z] != w) {
          ok = false;
          break;
        }
        continue;
      }
      if (bwd[w] >= 0 || (label && (*label)[z] != (*label)[w])) {
        ok = false;
        break;
      }
      fwd[z] = w;
      bwd[w] = z;
      out.push_back(z);
    }
  }
  if (!ok) {
    for (Elem x : out) {
      if (fwd[x] >= 0) bwd[fwd[x]] = -1;
      fwd[x] = -1;
    }
    out.clear();
  }
  return ok;
}

void reset_map(const std::vector<Elem>& dom, std::vector<int>& fwd, std::vector<int>& bwd) {
  for (Elem x : dom) {
    if (fwd[x] >= 0) bwd[fwd[x]] = -1;
    fwd[x] = -1;
  }
}

}  // namespace

std::optional<Iso> iso_from_generators(const SubgroupLattice& lat, const std::vector<Elem>& gens,
                                       const std::vector<Elem>& images) {
  if (gens.size() != images.size()) throw InputError("fusion", "generator/image count mismatch");
  const PGroup& s = lat.s();
  std::vector<int> fwd(s.order(), -1), bwd(s.order(), -1);
  std::vector<Elem> dom;
  if (!extend_map(s, gens, images, fwd, bwd, dom)) return std::nullopt;
  int d = lat.id_of(s.closure(gens));
  const auto& e = lat[d].elems;
  std::vector<Elem> img(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) img[i] = static_cast<Elem>(fwd[e[i]]);
  return iso_from_function(lat, d, img);
}

// ---- FusionSystem -----------------------------------------------------------------

FusionSystem::FusionSystem(std::shared_ptr<const SubgroupLattice> lat, Backend backend,
                           const std::vector<std::vector<int>>& class_members, std::vector<Perm> witness,
                           const std::vector<std::vector<Perm>>& aut_gens, std::vector<char> objects)
    : lat_(std::move(lat)), backend_(backend), objects_(std::move(objects)), witness_(std::move(witness)) {
  const int n = lat_->size();
  if (objects_.empty()) objects_.assign(n, 1);
  witness_.resize(n);
  class_of_.assign(n, -1);
  for (std::size_t c = 0; c < class_members.size(); ++c) {
    const auto& mem = class_members[c];
    int rep = mem[0];
    for (int m : mem) {
      int nm = (*lat_)[(*lat_)[m].normalizer].order, nr = (*lat_)[(*lat_)[rep].normalizer].order;
      if (nm > nr || (nm == nr && m < rep)) rep = m;
    }
    Perm wr_inv = witness_[rep].inverse();
    Perm wr = witness_[rep];
    for (int m : mem) witness_[m] = wr_inv * witness_[m];
    std::vector<Perm> gens;
    for (const Perm& a : aut_gens[c]) {
      Perm b = wr_inv * a * wr;
      if (!b.is_identity()) gens.push_back(std::move(b));
    }
    FClass fc;
    fc.rep = rep;
    fc.members = mem;
    std::sort(fc.members.begin(), fc.members.end());
    fc.aut = PermGroup((*lat_)[rep].order - 1, std::move(gens));
    for (int m : fc.members) class_of_[m] = static_cast<int>(classes_.size());
    classes_.push_back(std::move(fc));
  }
  for (int id = 0; id < n; ++id)
    if (objects_[id] && class_of_[id] < 0)
      throw InternalError("fusion", "object without an F-class");
  compute_element_classes();
}

const PermGroup& FusionSystem::ambient() const {
  if (!ambient_) throw PreconditionError("fusion", "system has no ambient group");
  return *ambient_;
}

std::vector<Perm> FusionSystem::aut_generators(int id) const {
  if (!is_object(id)) throw PreconditionError("fusion", "subgroup is not an object of the system");
  const auto& fc = fclass(id);
  const Perm& w = witness_[id];
  Perm winv = w.inverse();
  std::vector<Perm> gens;
  for (const Perm& a : fc.aut.generators()) gens.push_back(winv * a * w);
  return gens;
}

PermGroup FusionSystem::aut(int id) const {
  if (id == lat_->trivial())
    throw PreconditionError("fusion", "automizer of the trivial subgroup is not defined");
  ChainOptions opts;
  opts.known_order = fclass(id).aut.order();
  if (id == fclass(id).rep) return fclass(id).aut;
  return PermGroup((*lat_)[id].order - 1, aut_generators(id), opts);
}

bool FusionSystem::contains(const Iso& f) const {
  if (!is_object(f.dom) || !is_object(f.cod)) return false;
  if (class_of_[f.dom] != class_of_[f.cod]) return false;
  if (f.dom == lat_->trivial()) return true;
  return fclass(f.dom).aut.contains(witness_[f.dom] * f.map * witness_[f.cod].inverse());
}

std::vector<Iso> FusionSystem::isos(int from, int to) const {
  std::vector<Iso> out;
  if (!is_object(from) || !is_object(to) || class_of_[from] != class_of_[to]) return out;
  Perm winv = witness_[from].inverse();
  for (const Perm& a : fclass(from).aut.elements()) out.push_back({from, to, winv * a * witness_[to]});
  return out;
}

std::vector<FusionMorphism> FusionSystem::hom(int from, int to) const {
  std::vector<FusionMorphism> out;
  if (!is_object(from)) return out;
  for (int m : fclass(from).members)
    if (lat_->contains(to, m))
      for (const Iso& f : isos(from, m)) out.push_back(to_morphism(f, to));
  return out;
}

std::uint64_t FusionSystem::hom_count(int from, int to) const {
  if (!is_object(from)) return 0;
  std::uint64_t k = 0;
  for (int m : fclass(from).members)
    if (lat_->contains(to, m)) ++k;
  return k * fclass(from).aut.order();
}

FusionMorphism FusionSystem::to_morphism(const Iso& f, int codomain) const {
  FusionMorphism m;
  m.domain = f.dom;
  m.codomain = codomain;
  for (Elem g : (*lat_)[f.dom].gens) m.images.push_back(iso_apply(*lat_, f, g));
  return m;
}

Iso FusionSystem::from_morphism(const FusionMorphism& m) const {
  auto f = iso_from_generators(*lat_, (*lat_)[m.domain].gens, m.images);
  if (!f || f->dom != m.domain || !lat_->contains(m.codomain, f->cod))
    throw InputError("fusion", "generator images do not define a morphism into the codomain");
  return *f;
}

double FusionSystem::iso_count() const {
  double total = 0;
  for (const auto& c : classes_)
    total += static_cast<double>(c.members.size()) * static_cast<double>(c.members.size()) *
             static_cast<double>(c.aut.order());
  return total;
}

std::vector<Iso> FusionSystem::generating_isos() const {
  std::vector<Iso> out;
  for (const auto& c : classes_) {
    if (c.rep == lat_->trivial()) continue;
    for (const Perm& a : c.aut.generators()) out.push_back({c.rep, c.rep, a});
    for (int m : c.members)
      if (m != c.rep) out.push_back({c.rep, m, witness_[m]});
  }
  return out;
}

void FusionSystem::compute_element_classes() {
  const PGroup& s = lat_->s();
  std::vector<int> parent(s.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& c : classes_) {
    const auto& r = (*lat_)[c.rep];
    // Greedy generating sets of cyclic groups can be longer than one element.
    bool cyclic = std::any_of(r.elems.begin(), r.elems.end(),
                              [&](Elem x) { return s.elem_order(x) == r.order; });
    if (!cyclic || !is_object(c.rep)) continue;
    for (const Perm& a : c.aut.generators())
      for (int i = 1; i < r.order; ++i) unite(r.elems[i], r.elems[a[i - 1] + 1]);
    for (int m : c.members)
      for (int i = 1; i < r.order; ++i) unite(r.elems[i], (*lat_)[m].elems[witness_[m][i - 1] + 1]);
  }
  // Elements whose cyclic subgroup is not an object keep S-conjugacy only.
  for (int x = 0; x < s.order(); ++x)
    for (Elem g : s.generators()) unite(x, s.conj(static_cast<Elem>(x), g));
  std::map<int, int> relabel;
  elem_class_.assign(s.order(), 0);
  for (int x = 0; x < s.order(); ++x) {
    auto [it, fresh] = relabel.emplace(find(x), static_cast<int>(relabel.size()));
    elem_class_[x] = it->second;
  }
}

// ---- closure --------------------------------------------------------------------------

namespace {

class Closure {
 public:
  Closure(std::shared_ptr<const SubgroupLattice> lat, std::vector<char> objects, std::uint64_t cap)
      : lat_(std::move(lat)), objects_(std::move(objects)), cap_(cap) {
    const int n = lat_->size();
    if (objects_.empty()) objects_.assign(n, 1);
    cls_.assign(n, -1);
    w_.resize(n);
    for (int id = 0; id < n; ++id) {
      if (!objects_[id]) continue;
      cls_[id] = static_cast<int>(classes_.size());
      w_[id] = Perm((*lat_)[id].order - 1);
      classes_.push_back({id, {id}, {}, PermGroup::trivial((*lat_)[id].order - 1), true});
    }
    total_ = static_cast<double>(classes_.size());
  }

  void add(const Iso& f) {
    work_.push_back(f);
    drain();
  }

  FusionSystem finish(Backend backend) {
    std::vector<std::vector<int>> members;
    std::vector<std::vector<Perm>> gens;
    for (auto& c : classes_) {
      if (!c.alive) continue;
      members.push_back(c.members);
      gens.push_back(c.gens);
    }
    return FusionSystem(lat_, backend, members, w_, gens, objects_);
  }

 private:
  struct Cls {
    int root;
    std::vector<int> members;
    std::vector<Perm> gens;
    PermGroup aut;
    bool alive;
  };

  double weight(const Cls& c) const {
    double m = static_cast<double>(c.members.size());
    return m * m * static_cast<double>(c.aut.order());
  }

  void rebuild(Cls& c) {
    c.aut = PermGroup((*lat_)[c.root].order - 1, c.gens);
  }

  bool absorb(const Iso& f) {
    if (f.dom == lat_->trivial() || !objects_[f.dom] || !objects_[f.cod]) return false;
    int a = cls_[f.dom], b = cls_[f.cod];
    if (a == b) {
      Cls& c = classes_[a];
      Perm alpha = w_[f.dom] * f.map * w_[f.cod].inverse();
      if (c.aut.contains(alpha)) return false;
      total_ -= weight(c);
      c.gens.push_back(std::move(alpha));
      rebuild(c);
      total_ += weight(c);
      check_cap();
      return true;
    }
    // Merge the smaller class into the larger along tau: root_a -> root_b.
    Iso g = f;
    if (classes_[a].members.size() < classes_[b].members.size()) {
      g = iso_inverse(f);
      std::swap(a, b);
    }
    Cls& ca = classes_[a];
    Cls& cb = classes_[b];
    Perm tau = w_[g.dom] * g.map * w_[g.cod].inverse();
    Perm tau_inv = tau.inverse();
    total_ -= weight(ca) + weight(cb);
    for (int m : cb.members) {
      w_[m] = tau * w_[m];
      cls_[m] = a;
      ca.members.push_back(m);
    }
    for (const Perm& beta : cb.gens) {
      Perm t = tau * beta * tau_inv;
      if (ca.aut.contains(t)) continue;
      ca.gens.push_back(std::move(t));
      rebuild(ca);
    }
    cb.alive = false;
    cb.members.clear();
    cb.gens.clear();
    total_ += weight(ca);
    check_cap();
    return true;
  }

  void check_cap() {
    if (total_ > static_cast<double>(cap_))
      throw CapError("fusion", "closure exceeds the cap of " + std::to_string(cap_) + " morphisms");
  }

  void drain() {
    while (!work_.empty()) {
      Iso f = std::move(work_.back());
      work_.pop_back();
      if (!absorb(f)) continue;
      for (int m : (*lat_)[f.dom].maximal)
        if (m != lat_->trivial() && objects_[m]) work_.push_back(iso_restrict(*lat_, f, m));
    }
  }

  std::shared_ptr<const SubgroupLattice> lat_;
  std::vector<char> objects_;
  std::uint64_t cap_;
  std::vector<int> cls_;
  std::vector<Perm> w_;
  std::vector<Cls> classes_;
  std::vector<Iso> work_;
  double total_ = 0;
};

}  // namespace

FusionSystem close_morphisms(std::shared_ptr<const SubgroupLattice> lat, const std::vector<Iso>& seeds,
                             const FusionOptions& opts, std::vector<char> objects) {
  Closure cl(lat, objects, opts.closure_cap);
  for (Elem g : lat->s().generators()) cl.add(iso_conjugation(*lat, lat->top(), g));
  for (const Iso& f : seeds) cl.add(f);
  return cl.finish(Backend::Abstract);
}

FusionSystem abstract_closure(const PermGroup& s, int p, const std::vector<SeedMorphism>& seeds,
                              const FusionOptions& opts) {
  auto lat = std::make_shared<const SubgroupLattice>(PGroup(s, p, opts.lattice_cap));
  std::vector<Iso> isos;
  for (const auto& sd : seeds) {
    std::vector<Elem> g, im;
    for (const Perm& x : sd.domain) g.push_back(lat->s().index(x));
    for (const Perm& x : sd.images) im.push_back(lat->s().index(x));
    auto f = iso_from_generators(*lat, g, im);
    if (!f) throw InputError("fusion", "seed is not an injective homomorphism");
    isos.push_back(*f);
  }
  return close_morphisms(lat, isos, opts);
}

// ---- group-backed systems ------------------------------------------------------------

namespace {

// G-conjugacy class label of each element of S.
std::vector<int> element_labels(const PermGroup& g, const PGroup& s) {
  const int n = s.order();
  std::vector<int> orbit_of(n, -1);
  std::vector<Elem> reps;
  for (int x = 0; x < n; ++x) {
    if (orbit_of[x] >= 0) continue;
    int o = static_cast<int>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    std::vector<Elem> st{static_cast<Elem>(x)};
    orbit_of[x] = o;
    while (!st.empty()) {
      Elem y = st.back();
      st.pop_back();
      for (Elem t : s.generators()) {
        Elem z = s.conj(y, t);
        if (orbit_of[z] < 0) {
          orbit_of[z] = o;
          st.push_back(z);
        }
      }
    }
  }
  std::vector<int> rep_label(reps.size(), -1);
  std::vector<std::pair<std::vector<int>, Elem>> classes;  // (cycle type, representative)
  std::vector<int> class_ids;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    auto ct = s.perm(reps[r]).cycle_type();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].first != ct) continue;
      if (find_conjugator(g, {s.perm(reps[r])}, {s.perm(classes[c].second)})) {
        rep_label[r] = static_cast<int>(c);
        break;
      }
    }
    if (rep_label[r] < 0) {
      rep_label[r] = static_cast<int>(classes.size());
      classes.emplace_back(std::move(ct), reps[r]);
    }
  }
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) label[x] = rep_label[orbit_of[x]];
  return label;
}

// Visits every isomorphism P -> Q preserving `label`; stops when visit returns false.
void for_each_label_iso(const SubgroupLattice& lat, int from, int to, const std::vector<int>& label,
                        const std::function<bool(const Perm&)>& visit) {
  const PGroup& s = lat.s();
  const auto& gens = lat[from].gens;
  const auto& qe = lat[to].elems;
  const int k = static_cast<int>(gens.size());
  std::vector<std::vector<Elem>> cand(k);
  for (int j = 0; j < k; ++j)
    for (Elem y : qe)
      if (label[y] == label[gens[j]]) cand[j].push_back(y);
  std::vector<int> fwd(s.order(), -1), bwd(s.order(), -1);
  std::vector<Elem> images;
  std::vector<Elem> dom;
  const auto& pe = lat[from].elems;
  bool stop = false;
  std::function<void(int)> rec = [&](int j) {
    if (stop) return;
    if (j == k) {
      // fwd is currently filled for the full domain.
      std::vector<Point> m(pe.size() - 1);
      for (std::size_t i = 1; i < pe.size(); ++i)
        m[i - 1] = static_cast<Point>(lat.local(to, static_cast<Elem>(fwd[pe[i]])) - 1);
      if (!visit(Perm(std::move(m)))) stop = true;
      return;
    }
    std::vector<Elem> prefix(gens.begin(), gens.begin() + j + 1);
    for (Elem y : cand[j]) {
      images.push_back(y);
      std::vector<Elem> d;
      if (extend_map(s, prefix, images, fwd, bwd, d, &label)) {
        rec(j + 1);
        reset_map(d, fwd, bwd);
      }
      images.pop_back();
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<Perm> perms_of(const PGroup& s, const std::vector<Elem>& xs) {
  std::vector<Perm> out;
  for (Elem x : xs) out.push_back(s.perm(x));
  return out;
}

// Aut_G(P): label-preserving automorphisms confirmed by tuple conjugation in G.
std::vector<Perm> group_automizer_gens(const PermGroup& g, const SubgroupLattice& lat, int id,
                                       const std::vector<int>& label) {
  const PGroup& s = lat.s();
  const int deg = lat[id].order - 1;
  std::vector<Perm> gens;
  for (Elem t : lat[lat[id].normalizer].gens) {
    Perm c = iso_conjugation(lat, id, t).map;
    if (!c.is_identity()) gens.push_back(c);
  }
  PermGroup a(deg, gens);
  std::unordered_set<Perm, PermHash> failed;
  auto xs = perms_of(s, lat[id].gens);
  for_each_label_iso(lat, id, id, label, [&](const Perm& alpha) {
    if (failed.count(alpha) || a.contains(alpha)) return true;
    std::vector<Perm> ys;
    for (Elem x : lat[id].gens) ys.push_back(s.perm(iso_apply(lat, {id, id, alpha}, x)));
    if (find_conjugator(g, xs, ys)) {
      gens.push_back(alpha);
      a = PermGroup(deg, gens);
    } else {
      for (const Perm& b : a.elements()) failed.insert(b * alpha);
    }
    return true;
  });
  return gens;
}

// An isomorphism from `from` to `to` induced by G, given Aut_G(from).
std::optional<Perm> group_iso(const PermGroup& g, const SubgroupLattice& lat, int from, int to,
                              const std::vector<int>& label, const PermGroup& aut_from) {
  const PGroup& s = lat.s();
  std::unordered_set<Perm, PermHash> failed;
  std::optional<Perm> found;
  auto elems = aut_from.elements();
  auto xs = perms_of(s, lat[from].gens);
  for_each_label_iso(lat, from, to, label, [&](const Perm& psi) {
    if (failed.count(psi)) return true;
    std::vector<Perm> ys;
    for (Elem x : lat[from].gens) ys.push_back(s.perm(iso_apply(lat, {from, to, psi}, x)));
    if (find_conjugator(g, xs, ys)) {
      found = psi;
      return false;
    }
    for (const Perm& b : elems) failed.insert(b * psi);
    return true;
  });
  return found;
}

}  // namespace

FusionSystem group_fusion(const PermGroup& g, int p, const FusionOptions& opts, const PermGroup* given) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("fusion", std::to_string(p) + " is not a prime");
  if (g.order() % static_cast<std::uint64_t>(p) != 0)
    throw PreconditionError("fusion", std::to_string(p) + " does not divide |G| = " + std::to_string(g.order()));
  PermGroup s;
  if (given) {
    if (given->order() != p_part(g.order(), p) || !given->is_subgroup_of(g))
      throw PreconditionError("fusion", "given subgroup is not a Sylow subgroup of G");
    s = *given;
  } else {
    s = sylow(g, p, opts.seed);
  }
  auto lat = std::make_shared<const SubgroupLattice>(PGroup(s, p, opts.lattice_cap));
  const PGroup& sp = lat->s();
  auto label = element_labels(g, sp);

  const int n = lat->size();
  std::vector<Perm> witness(n);
  std::vector<std::vector<int>> members;
  std::vector<std::vector<Perm>> aut_gens;
  std::vector<PermGroup> anchor_aut;
  std::vector<int> anchor;
  std::map<std::vector<int>, std::vector<int>> bucket;  // label multiset -> class indices

  for (std::size_t sc = 0; sc < lat->s_classes().size(); ++sc) {
    const auto& cls = lat->s_classes()[sc];
    int r = cls[0];
    std::vector<int> key;
    for (Elem x : (*lat)[r].elems) key.push_back(label[x]);
    std::sort(key.begin(), key.end());
    int fc = -1;
    Perm w;
    if (r == lat->trivial()) {
      fc = static_cast<int>(members.size());
      members.push_back({});
      aut_gens.push_back({});
      anchor.push_back(r);
      anchor_aut.push_back(PermGroup::trivial(0));
      w = Perm(0);
    } else {
      for (int c : bucket[key]) {
        auto psi = group_iso(g, *lat, anchor[c], r, label, anchor_aut[c]);
        if (psi) {
          fc = c;
          w = *psi;
          break;
        }
      }
      if (fc < 0) {
        fc = static_cast<int>(members.size());
        bucket[key].push_back(fc);
        members.push_back({});
        aut_gens.push_back(group_automizer_gens(g, *lat, r, label));
        anchor.push_back(r);
        anchor_aut.push_back(PermGroup((*lat)[r].order - 1, aut_gens.back()));
        w = Perm((*lat)[r].order - 1);
      }
    }
    const auto& conj = lat->s_class_conjugators(static_cast<int>(sc));
    for (std::size_t i = 0; i < cls.size(); ++i) {
      int m = cls[i];
      witness[m] = r == lat->trivial() ? w : w * iso_conjugation(*lat, r, conj[i]).map;
      members[fc].push_back(m);
    }
  }
  FusionSystem f(lat, Backend::Group, members, std::move(witness), aut_gens, {});
  f.set_ambient(g);
  return f;
}

FusionSystem centralizer_system(const FusionSystem& f, int u, const FusionOptions& opts) {
  const auto& lat = f.lattice();
  if (!lat[u].abelian) throw PreconditionError("fusion", "U must be abelian");
  int best = 0;
  for (int m : f.fclass(u).members) best = std::max(best, lat[lat[m].centralizer].order);
  if (lat[lat[u].centralizer].order != best)
    throw PreconditionError("fusion", "U is not fully centralized");
  const PermGroup& g = f.ambient();
  PermGroup c = tuple_centralizer(g, perms_of(lat.s(), lat[u].gens));
  PermGroup t(lat.s().group().degree(), perms_of(lat.s(), lat[lat[u].centralizer].gens));
  return group_fusion(c, f.p(), opts, &t);
}

// ---- products and lattice embeddings ---------------------------------------------------

std::vector<int> embed_lattice(const SubgroupLattice& small, const SubgroupLattice& big) {
  std::vector<Elem> to_big(small.s().order());
  for (int x = 0; x < small.s().order(); ++x) to_big[x] = big.s().index(small.s().perm(static_cast<Elem>(x)));
  std::vector<int> ids(small.size());
  for (int i = 0; i < small.size(); ++i) {
    ElemSet set;
    for (Elem x : small[i].elems) set.set(to_big[x]);
    ids[i] = big.id_of(set);
  }
  return ids;
}

Iso embed_iso(const SubgroupLattice& small, const SubgroupLattice& big, const std::vector<int>& ids,
              const Iso& f) {
  int d = ids[f.dom];
  const auto& e = big[d].elems;
  std::vector<Elem> img(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    Elem xs = small.s().index(big.s().perm(e[i]));
    img[i] = big.s().index(small.s().perm(iso_apply(small, f, xs)));
  }
  return iso_from_function(big, d, img);
}

namespace {

Perm place(const Perm& x, int offset, int degree) {
  Perm out(degree);
  for (int i = 0; i < x.degree(); ++i) out[offset + i] = static_cast<Point>(offset + x[i]);
  return out;
}

Perm slice(const Perm& x, int offset, int len) {
  std::vector<Point> m(len);
  for (int i = 0; i < len; ++i) m[i] = static_cast<Point>(x[offset + i] - offset);
  return Perm(std::move(m));
}

}  // namespace

FusionSystem product(const FusionSystem& f1, const FusionSystem& f2, const FusionOptions& opts) {
  if (f1.p() != f2.p()) throw PreconditionError("fusion", "product of systems at different primes");
  const PGroup& s1 = f1.s();
  const PGroup& s2 = f2.s();
  const int d1 = s1.group().degree(), d2 = s2.group().degree(), d = d1 + d2;
  std::vector<Perm> gens;
  for (const Perm& x : s1.group().generators()) gens.push_back(place(x, 0, d));
  for (const Perm& x : s2.group().generators()) gens.push_back(place(x, d1, d));
  ChainOptions co;
  co.known_order = s1.group().order() * s2.group().order();
  PermGroup s(d, gens, co);
  auto lat = std::make_shared<const SubgroupLattice>(PGroup(s, f1.p(), opts.lattice_cap));
  const PGroup& sp = lat->s();

  auto lift = [&](const FusionSystem& fi, const Iso& phi, bool first) {
    const auto& li = fi.lattice();
    const PGroup& si = fi.s();
    const PGroup& other = first ? s2 : s1;
    std::vector<Elem> dg;
    for (Elem x : li[phi.dom].gens) dg.push_back(sp.index(place(si.perm(x), first ? 0 : d1, d)));
    for (Elem x : other.generators()) dg.push_back(sp.index(place(other.perm(x), first ? d1 : 0, d)));
    int dom = lat->id_of(sp.closure(dg));
    const auto& e = (*lat)[dom].elems;
    std::vector<Elem> img(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Perm& z = sp.perm(e[i]);
      Perm a = slice(z, 0, d1), b = slice(z, d1, d2);
      if (first) a = s1.perm(iso_apply(li, phi, s1.index(a)));
      else b = s2.perm(iso_apply(li, phi, s2.index(b)));
      img[i] = sp.index(place(a, 0, d) * place(b, d1, d));
    }
    return iso_from_function(*lat, dom, img);
  };
  std::vector<Iso> seeds;
  for (const Iso& phi : f1.generating_isos()) seeds.push_back(lift(f1, phi, true));
  for (const Iso& phi : f2.generating_isos()) seeds.push_back(lift(f2, phi, false));
  return close_morphisms(lat, seeds, opts);
}

// ---- comparison --------------------------------------------------------------------------

bool equal_systems(const FusionSystem& a, const FusionSystem& b) {
  if (a.s().perms() != b.s().perms())
    throw PreconditionError("fusion", "systems are not over the same p-group");
  if (a.objects() != b.objects()) return false;
  if (a.classes().size() != b.classes().size()) return false;
  for (const auto& c : a.classes()) {
    if (b.fclass(c.rep).members != c.members) return false;
    if (c.rep == a.lattice().trivial()) continue;
    if (b.aut_order(c.rep) != c.aut.order()) return false;
    for (const Perm& x : c.aut.generators())
      if (!b.contains({c.rep, c.rep, x})) return false;
    for (int m : c.members)
      if (!b.contains(a.witness_iso(m))) return false;
  }
  return true;
}

Fingerprint fingerprint(const FusionSystem& f) {
  Fingerprint fp;
  const auto& lat = f.lattice();
  for (const auto& c : f.classes()) {
    std::vector<int> sc;
    for (int m : c.members) sc.push_back(lat[m].s_class);
    std::sort(sc.begin(), sc.end());
    sc.erase(std::unique(sc.begin(), sc.end()), sc.end());
    fp.rows.push_back({static_cast<std::uint64_t>(lat[c.rep].order), c.members.size(), sc.size(),
                       c.aut.order()});
  }
  std::sort(fp.rows.begin(), fp.rows.end());
  fp.classes = static_cast<int>(fp.rows.size());
  return fp;
}

}  // namespace pfusion
