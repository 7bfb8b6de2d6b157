#include "pfusion/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pfusion/errors.hpp"

namespace pfusion {

PGroup::PGroup(const PermGroup& s, int p, std::uint64_t cap) : p_(p), group_(s) {
  if (!is_prime(static_cast<std::uint64_t>(p)) || !is_p_power(s.order(), p))
    throw PreconditionError("fusion", "group of order " + std::to_string(s.order()) + " is not a " +
                                          std::to_string(p) + "-group");
  cap = std::min<std::uint64_t>(cap, kLatticeHardCap);
  if (s.order() > cap)
    throw CapError("fusion", "|S| = " + std::to_string(s.order()) + " exceeds the lattice cap " +
                                 std::to_string(cap));
  perms_ = s.elements();
  std::sort(perms_.begin(), perms_.end());
  n_ = static_cast<int>(perms_.size());
  for (int i = 0; i < n_; ++i) index_.emplace(perms_[i], static_cast<Elem>(i));

  mul_.resize(static_cast<std::size_t>(n_) * n_);
  Perm tmp;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      mul_into(perms_[a], perms_[b], tmp);
      mul_[static_cast<std::size_t>(a) * n_ + b] = index_.at(tmp);
    }
  inv_.resize(n_);
  ord_.resize(n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = static_cast<Elem>(b);
    int o = 1;
    for (Elem x = static_cast<Elem>(a); x != 0; x = mul(x, a)) ++o;
    ord_[a] = a == 0 ? 1 : o;
  }
  for (const auto& g : s.generators())
    if (!g.is_identity()) gens_.push_back(index_.at(g));
}

Elem PGroup::pow(Elem a, long e) const {
  e %= ord_[a];
  if (e < 0) e += ord_[a];
  Elem r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::optional<Elem> PGroup::find(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem PGroup::index(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw PreconditionError("fusion", "element " + g.str() + " is not in S");
  return it->second;
}

ElemSet PGroup::closure(const std::vector<Elem>& gens) const {
  ElemSet set;
  set.set(0);
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem g : gens) {
      Elem y = mul(queue[i], g);
      if (!set.test(y)) {
        set.set(y);
        queue.push_back(y);
      }
    }
  return set;
}

std::vector<Elem> PGroup::members(const ElemSet& set) const {
  std::vector<Elem> out;
  for (int i = 0; i < n_; ++i)
    if (set.test(i)) out.push_back(static_cast<Elem>(i));
  return out;
}

namespace {

struct Raw {
  ElemSet set;
  std::vector<std::size_t> maximal;  // raw indices
};

}  // namespace

SubgroupLattice::SubgroupLattice(PGroup s) : s_(std::move(s)) {
  const int n = s_.order();
  const int p = s_.p();

  // Bottom-up: every subgroup of order p^(k+1) is <H, x> for some H of order p^k
  // normal in it, with x normalizing H and x^p in H.
  std::vector<Raw> raw;
  std::unordered_map<ElemSet, std::size_t> index;
  ElemSet one;
  one.set(0);
  raw.push_back({one, {}});
  index.emplace(one, 0);
  std::size_t level_begin = 0;
  while (level_begin < raw.size()) {
    std::size_t level_end = raw.size();
    for (std::size_t h = level_begin; h < level_end; ++h) {
      const ElemSet hset = raw[h].set;
      auto helems = s_.members(hset);
      ElemSet done = hset;
      for (int x = 1; x < n; ++x) {
        if (done.test(x)) continue;
        if (!hset.test(s_.pow(static_cast<Elem>(x), p))) continue;
        bool normalizes = true;
        for (Elem y : helems)
          if (!hset.test(s_.conj(y, static_cast<Elem>(x)))) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        ElemSet k = hset;
        Elem xi = static_cast<Elem>(x);
        for (int i = 1; i < p; ++i, xi = s_.mul(xi, static_cast<Elem>(x)))
          for (Elem y : helems) k.set(s_.mul(y, xi));
        done |= k;
        auto [it, fresh] = index.emplace(k, raw.size());
        if (fresh) raw.push_back({k, {}});
        raw[it->second].maximal.push_back(h);
      }
    }
    level_begin = level_end;
  }

  // Canonical ids: sort by (order, ascending element list).
  std::vector<std::vector<Elem>> elems(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) elems[i] = s_.members(raw[i].set);
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (elems[a].size() != elems[b].size()) return elems[a].size() < elems[b].size();
    return elems[a] < elems[b];
  });
  std::vector<int> new_id(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);

  subs_.resize(raw.size());
  for (std::size_t r = 0; r < raw.size(); ++r) {
    auto& sub = subs_[new_id[r]];
    sub.id = new_id[r];
    sub.set = raw[r].set;
    sub.elems = std::move(elems[r]);
    sub.order = static_cast<int>(sub.elems.size());
    for (auto m : raw[r].maximal) sub.maximal.push_back(new_id[m]);
    std::sort(sub.maximal.begin(), sub.maximal.end());
    by_set_.emplace(sub.set, sub.id);
  }
  for (auto& sub : subs_)
    for (int m : sub.maximal) subs_[m].covers.push_back(sub.id);

  for (auto& sub : subs_) {
    ElemSet cur;
    cur.set(0);
    for (Elem x : sub.elems) {
      if (cur.test(x)) continue;
      sub.gens.push_back(x);
      cur = s_.closure(sub.gens);
    }
    ElemSet norm, cent, center;
    for (int x = 0; x < n; ++x) {
      bool nor = true, cen = true;
      for (Elem g : sub.gens) {
        Elem c = s_.conj(g, static_cast<Elem>(x));
        if (c != g) cen = false;
        if (!sub.set.test(c)) {
          nor = false;
          break;
        }
      }
      if (nor) norm.set(x);
      if (cen) cent.set(x);
      if (cen && sub.set.test(x)) center.set(x);
    }
    sub.normalizer = by_set_.at(norm);
    sub.centralizer = by_set_.at(cent);
    sub.center = by_set_.at(center);
    sub.abelian = sub.center == sub.id;
  }

  // S-classes by conjugation under the generators of S, with conjugating elements.
  std::vector<int> cls(subs_.size(), -1);
  for (auto& sub : subs_) {
    if (cls[sub.id] >= 0) continue;
    int c = static_cast<int>(s_classes_.size());
    s_classes_.push_back({sub.id});
    s_class_conj_.push_back({0});
    cls[sub.id] = c;
    for (std::size_t i = 0; i < s_classes_[c].size(); ++i) {
      int cur = s_classes_[c][i];
      Elem w = s_class_conj_[c][i];
      for (Elem g : s_.generators()) {
        int img = conjugate(cur, g);
        if (cls[img] >= 0) continue;
        cls[img] = c;
        s_classes_[c].push_back(img);
        s_class_conj_[c].push_back(s_.mul(w, g));
      }
    }
  }
  for (auto& sub : subs_) sub.s_class = cls[sub.id];
}

std::optional<int> SubgroupLattice::find(const ElemSet& set) const {
  auto it = by_set_.find(set);
  if (it == by_set_.end()) return std::nullopt;
  return it->second;
}

int SubgroupLattice::id_of(const ElemSet& set) const {
  auto it = by_set_.find(set);
  if (it == by_set_.end()) throw InternalError("fusion", "element set is not a subgroup of S");
  return it->second;
}

int SubgroupLattice::local(int id, Elem x) const {
  const auto& e = subs_[id].elems;
  auto it = std::lower_bound(e.begin(), e.end(), x);
  if (it == e.end() || *it != x) return -1;
  return static_cast<int>(it - e.begin());
}

int SubgroupLattice::conjugate(int id, Elem s) const {
  ElemSet out;
  for (Elem x : subs_[id].elems) out.set(s_.conj(x, s));
  return by_set_.at(out);
}

}  // namespace pfusion
