#include "pfusion/classify.hpp"

#include <algorithm>

#include "pfusion/errors.hpp"

namespace pfusion {

namespace {

void require_full(const FusionSystem& f) {
  for (char o : f.objects())
    if (!o) throw PreconditionError("classify", "system is restricted to a subfamily of subgroups");
}

int max_over_class(const FusionSystem& f, int id, int Subgroup::*field) {
  const auto& lat = f.lattice();
  int best = 0;
  for (int m : f.fclass(id).members) best = std::max(best, lat[lat[m].*field].order);
  return best;
}

// Q normal (central) in F iff Q <= R and Aut_F(R) leaves Q invariant (fixes Q)
// for every F-centric radical R.
bool normal_test(const FusionSystem& f, const std::vector<int>& cr, int q, bool central) {
  const auto& lat = f.lattice();
  if (q == lat.trivial()) return true;
  for (int r : cr) {
    if (!lat.contains(r, q)) return false;
    for (const Perm& a : f.aut_generators(r)) {
      Iso alpha{r, r, a};
      for (Elem x : lat[q].gens) {
        Elem y = iso_apply(lat, alpha, x);
        if (central ? y != x : !lat[q].set.test(y)) return false;
      }
    }
  }
  return true;
}

std::vector<int> all_members(const FusionSystem& f, const std::vector<int>& reps) {
  std::vector<int> out;
  for (int r : reps)
    for (int m : f.fclass(r).members) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

int maximal_flagged(const FusionSystem& f, const std::vector<char>& flagged, const char* what) {
  const auto& lat = f.lattice();
  int best = lat.trivial();
  for (int id = lat.size() - 1; id >= 0; --id)
    if (flagged[id]) {
      best = id;
      break;
    }
  for (int id = 0; id < lat.size(); ++id)
    if (flagged[id] && !lat.contains(best, id))
      throw InternalError("classify", std::string("two incomparable maximal ") + what + " subgroups");
  return best;
}

}  // namespace

bool is_fully_normalized(const FusionSystem& f, int id) {
  const auto& lat = f.lattice();
  if (id == lat.trivial()) return false;
  return lat[lat[id].normalizer].order == max_over_class(f, id, &Subgroup::normalizer);
}

bool is_fully_centralized(const FusionSystem& f, int id) {
  const auto& lat = f.lattice();
  if (id == lat.trivial()) return false;
  return lat[lat[id].centralizer].order == max_over_class(f, id, &Subgroup::centralizer);
}

bool is_centric(const FusionSystem& f, int id) {
  const auto& lat = f.lattice();
  if (id == lat.trivial()) return false;
  for (int m : f.fclass(id).members)
    if (!lat.contains(m, lat[m].centralizer)) return false;
  return true;
}

bool is_radical(const FusionSystem& f, int id) {
  const auto& lat = f.lattice();
  if (id == lat.trivial()) return false;
  // Inn(P) is a normal p-subgroup of Aut_F(P), so O_p(Out_F(P)) = 1 iff O_p(Aut_F(P)) = Inn(P).
  const auto& fc = f.fclass(id);
  std::uint64_t inn = static_cast<std::uint64_t>(lat[fc.rep].order / lat[lat[fc.rep].center].order);
  return p_core(fc.aut, f.p()).order() == inn;
}

bool is_weakly_closed(const FusionSystem& f, int id) {
  if (id == f.lattice().trivial()) return false;
  return f.fclass(id).members.size() == 1;
}

bool is_strongly_closed(const FusionSystem& f, int id) {
  const auto& lat = f.lattice();
  if (id == lat.trivial()) return false;
  const auto& ec = f.element_classes();
  std::vector<char> inside(lat.s().order(), 1);
  for (int x = 0; x < lat.s().order(); ++x)
    if (!lat[id].set.test(x)) inside[ec[x]] = 0;
  for (Elem x : lat[id].elems)
    if (!inside[ec[x]]) return false;
  return true;
}

std::vector<int> centric_set(const FusionSystem& f) {
  require_full(f);
  std::vector<int> reps;
  for (const auto& c : f.classes())
    if (is_centric(f, c.rep)) reps.push_back(c.rep);
  return all_members(f, reps);
}

std::vector<int> centric_radical_set(const FusionSystem& f) {
  require_full(f);
  std::vector<int> reps;
  for (const auto& c : f.classes())
    if (is_centric(f, c.rep) && is_radical(f, c.rep)) reps.push_back(c.rep);
  return all_members(f, reps);
}

bool is_normal_in_F(const FusionSystem& f, int id) {
  if (id == f.lattice().trivial()) return false;
  return normal_test(f, centric_radical_set(f), id, false);
}

bool is_central_in_F(const FusionSystem& f, int id) {
  if (id == f.lattice().trivial()) return false;
  return normal_test(f, centric_radical_set(f), id, true);
}

int O_p_of_F(const FusionSystem& f) { return classify(f).op; }
int Z_of_F(const FusionSystem& f) { return classify(f).center; }

ClassifiedLattice classify(const FusionSystem& f) {
  require_full(f);
  const auto& lat = f.lattice();
  ClassifiedLattice out;
  out.flags.resize(lat.size());
  std::vector<char> cen(f.classes().size()), rad(f.classes().size());
  for (std::size_t c = 0; c < f.classes().size(); ++c) {
    int r = f.classes()[c].rep;
    cen[c] = is_centric(f, r);
    rad[c] = is_radical(f, r);
  }
  for (int id = 1; id < lat.size(); ++id) {
    auto& fl = out.flags[id];
    int c = f.class_of(id);
    fl.fully_normalized = is_fully_normalized(f, id);
    fl.fully_centralized = is_fully_centralized(f, id);
    fl.centric = cen[c];
    fl.radical = rad[c];
    fl.weakly_closed = is_weakly_closed(f, id);
    fl.strongly_closed = is_strongly_closed(f, id);
    if (fl.centric) out.centric.push_back(id);
    if (fl.centric && fl.radical) out.centric_radical.push_back(id);
  }
  std::vector<char> normal(lat.size(), 0), central(lat.size(), 0);
  for (int id = 1; id < lat.size(); ++id) {
    // Normal subgroups of F are strongly closed and normal in S.
    if (!out.flags[id].strongly_closed || lat[id].normalizer != lat.top()) continue;
    auto& fl = out.flags[id];
    fl.normal_in_F = normal_test(f, out.centric_radical, id, false);
    fl.central_in_F = fl.normal_in_F && normal_test(f, out.centric_radical, id, true);
    normal[id] = fl.normal_in_F;
    central[id] = fl.central_in_F;
  }
  out.op = maximal_flagged(f, normal, "normal");
  out.center = maximal_flagged(f, central, "central");
  return out;
}

}  // namespace pfusion
