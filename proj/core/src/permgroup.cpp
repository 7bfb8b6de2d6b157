#include "pfusion/permgroup.hpp"

#include <algorithm>
#include <numeric>

#include "pfusion/errors.hpp"

namespace pfusion {

namespace {

using u128 = unsigned __int128;

bool fixes_all(const Perm& g, const std::vector<ChainLevel>& levels, std::size_t upto) {
  for (std::size_t l = 0; l < upto; ++l)
    if (g[levels[l].base] != levels[l].base) return false;
  return true;
}

}  // namespace

// ---- construction --------------------------------------------------------------

PermGroup::PermGroup(int degree, std::vector<Perm> gens, const ChainOptions& opts)
    : degree_(degree), gens_(std::move(gens)) {
  if (degree < 0 || degree > kMaxDegree)
    throw CapError("permgroup", "degree " + std::to_string(degree) + " exceeds cap " +
                                    std::to_string(kMaxDegree));
  for (const auto& g : gens_)
    if (g.degree() != degree) throw InputError("permgroup", "generator degree mismatch");
  for (Point b : opts.base_prefix)
    if (b >= degree) throw InputError("permgroup", "base point out of range");
  if (opts.known_order)
    build_random(opts.base_prefix, *opts.known_order, opts.seed);
  else
    build_deterministic(opts.base_prefix);
  finish();
}

void PermGroup::add_level(Point b) {
  ChainLevel lv;
  lv.base = b;
  lv.pos.assign(degree_, -1);
  lv.orbit = {b};
  lv.pos[b] = 0;
  lv.trans.emplace_back(degree_);
  lv.trans_inv.emplace_back(degree_);
  levels_.push_back(std::move(lv));
}

void PermGroup::extend_orbit(int l) {
  ChainLevel& lv = levels_[l];
  for (std::size_t a = 0; a < lv.orbit.size(); ++a) {
    for (const Perm& s : lv.gens) {
      Point img = s[lv.orbit[a]];
      if (lv.pos[img] >= 0) continue;
      lv.pos[img] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(img);
      Perm t = lv.trans[a] * s;
      lv.trans_inv.push_back(t.inverse());
      lv.trans.push_back(std::move(t));
    }
  }
}

Perm PermGroup::sift(Perm g, int from_level, int* fail_level) const {
  for (int l = from_level; l < static_cast<int>(levels_.size()); ++l) {
    const ChainLevel& lv = levels_[l];
    int k = lv.pos[g[lv.base]];
    if (k < 0) {
      if (fail_level) *fail_level = l;
      return g;
    }
    g *= lv.trans_inv[k];
  }
  if (fail_level) *fail_level = static_cast<int>(levels_.size());
  return g;
}

void PermGroup::init_levels(const std::vector<Point>& prefix) {
  for (Point b : prefix)
    if (std::none_of(levels_.begin(), levels_.end(), [&](const ChainLevel& l) { return l.base == b; }))
      add_level(b);
  for (const Perm& g : gens_) {
    if (g.is_identity()) continue;
    if (fixes_all(g, levels_, levels_.size())) add_level(static_cast<Point>(g.first_moved()));
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      if (!fixes_all(g, levels_, l)) break;
      levels_[l].gens.push_back(g);
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) extend_orbit(static_cast<int>(l));
}

void PermGroup::build_deterministic(const std::vector<Point>& prefix) {
  init_levels(prefix);
  schreier_sims();
}

void PermGroup::schreier_sims() {
  // checked[l][a][s]: Schreier generator for orbit point a and generator s already sifted.
  // Transversal entries never change once assigned, so a checked pair stays valid.
  std::vector<std::vector<std::vector<char>>> checked(levels_.size());
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool added = false;
    for (std::size_t a = 0; !added && a < levels_[i].orbit.size(); ++a) {
      auto& ck = checked[i];
      if (ck.size() <= a) ck.resize(a + 1);
      for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
        if (ck[a].size() < levels_[i].gens.size()) ck[a].resize(levels_[i].gens.size(), 0);
        if (ck[a][s]) continue;
        ck[a][s] = 1;
        const ChainLevel& lv = levels_[i];
        Point img = lv.gens[s][lv.orbit[a]];
        Perm sg = lv.trans[a] * lv.gens[s];
        sg *= lv.trans_inv[lv.pos[img]];
        int j = 0;
        Perm h = sift(std::move(sg), i + 1, &j);
        if (h.is_identity()) continue;
        if (j == static_cast<int>(levels_.size())) {
          add_level(static_cast<Point>(h.first_moved()));
          checked.resize(levels_.size());
        }
        for (int l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          extend_orbit(l);
        }
        i = j;
        added = true;
        break;
      }
    }
    if (!added) --i;
  }
}

void PermGroup::build_random(const std::vector<Point>& prefix, std::uint64_t target,
                             std::uint64_t seed) {
  init_levels(prefix);

  auto current = [&]() {
    u128 o = 1;
    for (const auto& lv : levels_) {
      o *= lv.orbit.size();
      if (o > target) break;
    }
    return o;
  };
  ProductReplacement pr(degree_, gens_, seed);
  int misses = 0;
  while (current() < target && misses < 64) {
    Perm g = pr.next();
    int j = 0;
    Perm h = sift(std::move(g), 0, &j);
    if (h.is_identity()) {
      ++misses;
      continue;
    }
    misses = 0;
    if (j == static_cast<int>(levels_.size())) add_level(static_cast<Point>(h.first_moved()));
    for (int l = 1; l <= j; ++l) {
      levels_[l].gens.push_back(h);
      extend_orbit(l);
    }
  }
  // Fall back to a full verification when the claimed order was not reached exactly.
  if (current() != target) schreier_sims();
}

void PermGroup::finish() {
  u128 o = 1;
  for (auto& lv : levels_) {
    o *= lv.orbit.size();
    if (o > kMaxOrder)
      throw CapError("permgroup", "group order exceeds cap 2^40");
    lv.orbit_id = orbit_partition(degree_, lv.gens);
  }
  order_ = static_cast<std::uint64_t>(o);
}

// ---- queries ------------------------------------------------------------------

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base);
  return b;
}

Perm PermGroup::random(std::mt19937_64& rng) const {
  Perm g(degree_);
  for (int l = static_cast<int>(levels_.size()) - 1; l >= 0; --l) {
    const auto& lv = levels_[l];
    std::uniform_int_distribution<std::size_t> d(0, lv.trans.size() - 1);
    g *= lv.trans[d(rng)];
  }
  return g;
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap)
    throw CapError("permgroup", "element enumeration of a group of order " +
                                    std::to_string(order_) + " exceeds cap");
  std::vector<Perm> out{Perm(degree_)};
  for (int l = static_cast<int>(levels_.size()) - 1; l >= 0; --l) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[l].trans.size());
    for (const Perm& g : out)
      for (const Perm& t : levels_[l].trans) next.push_back(g * t);
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const Perm& g) { return other.contains(g); });
}

bool PermGroup::normalizes(const PermGroup& h) const {
  for (const Perm& g : gens_)
    for (const Perm& x : h.generators())
      if (!h.contains(x.conj(g))) return false;
  return true;
}

Orbit orbit(const PermGroup& g, int point) {
  if (point < 0 || point >= g.degree())
    throw InputError("permgroup", "point " + std::to_string(point) + " out of range");
  Orbit o;
  std::vector<int> pos(g.degree(), -1);
  o.points.push_back(static_cast<Point>(point));
  o.witnesses.emplace_back(g.degree());
  pos[point] = 0;
  for (std::size_t a = 0; a < o.points.size(); ++a) {
    for (const Perm& s : g.generators()) {
      Point img = s[o.points[a]];
      if (pos[img] >= 0) continue;
      pos[img] = static_cast<int>(o.points.size());
      o.points.push_back(img);
      o.witnesses.push_back(o.witnesses[a] * s);
    }
  }
  return o;
}

std::vector<int> orbit_partition(int degree, const std::vector<Perm>& gens) {
  std::vector<int> id(degree, -1);
  int next = 0;
  std::vector<Point> stack;
  for (int s = 0; s < degree; ++s) {
    if (id[s] >= 0) continue;
    id[s] = next;
    stack.assign(1, static_cast<Point>(s));
    while (!stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      for (const Perm& g : gens) {
        Point y = g[x];
        if (id[y] < 0) {
          id[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return id;
}

ProductReplacement::ProductReplacement(int degree, const std::vector<Perm>& gens,
                                       std::uint64_t seed)
    : acc_(degree), rng_(seed) {
  for (const Perm& g : gens)
    if (!g.is_identity()) state_.push_back(g);
  if (state_.empty()) return;
  std::size_t base = state_.size();
  while (state_.size() < 10) state_.push_back(state_[state_.size() % base]);
  for (int i = 0; i < 50; ++i) next();
}

Perm ProductReplacement::next() {
  if (state_.empty()) return acc_;
  std::uniform_int_distribution<std::size_t> d(0, state_.size() - 1);
  std::size_t i = d(rng_), j = d(rng_);
  while (j == i) j = d(rng_);
  bool left = rng_() & 1, inv = rng_() & 1;
  Perm other = inv ? state_[j].inverse() : state_[j];
  state_[i] = left ? other * state_[i] : state_[i] * other;
  acc_ *= state_[i];
  return acc_;
}

// ---- backtrack search -----------------------------------------------------------

namespace {

std::vector<int> cycle_len_per_point(const Perm& g) {
  std::vector<int> len(g.degree(), 0);
  for (int i = 0; i < g.degree(); ++i) {
    if (len[i]) continue;
    int l = 0;
    int j = i;
    do {
      ++l;
      j = g[j];
    } while (j != i);
    j = i;
    do {
      len[j] = l;
      j = g[j];
    } while (j != i);
  }
  return len;
}

std::vector<std::uint32_t> cycle_colors(int degree, const std::vector<Perm>& xs) {
  std::vector<std::uint32_t> c(degree, 2166136261u);
  for (const Perm& x : xs) {
    auto len = cycle_len_per_point(x);
    for (int i = 0; i < degree; ++i) c[i] = (c[i] ^ static_cast<std::uint32_t>(len[i])) * 16777619u;
  }
  return c;
}

class Searcher {
 public:
  Searcher(const PermGroup& g, const SearchSpec& spec)
      : g_(g), spec_(spec), n_(g.degree()), img_(n_, -1), pre_(n_, -1) {
    for (const Perm& x : spec.xs) xinv_.push_back(x.inverse());
    for (const Perm& y : spec.ys) yinv_.push_back(y.inverse());
  }

  std::optional<Perm> run() {
    for (auto [d, z] : spec_.fixed)
      if (!assign(d, z)) return std::nullopt;
    Perm id(n_);
    if (!consistent(0, id)) return std::nullopt;
    if (rec(0, id, id)) return result_;
    return std::nullopt;
  }

 private:
  bool assign(Point d, Point z) {
    queue_.clear();
    queue_.emplace_back(d, z);
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      auto [a, b] = queue_[h];
      if (img_[a] == b) continue;
      if (img_[a] >= 0 || pre_[b] >= 0) return false;
      if (!spec_.src_color.empty() && spec_.src_color[a] != spec_.dst_color[b]) return false;
      img_[a] = b;
      pre_[b] = a;
      trail_.push_back(a);
      for (std::size_t i = 0; i < spec_.xs.size(); ++i) {
        queue_.emplace_back(spec_.xs[i][a], spec_.ys[i][b]);
        queue_.emplace_back(xinv_[i][a], yinv_[i][b]);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Point a = trail_.back();
      trail_.pop_back();
      pre_[img_[a]] = -1;
      img_[a] = -1;
    }
  }

  // A forced pair d -> z survives at depth k iff d and z^{c^-1} share a G(k)-orbit.
  bool consistent(int level, const Perm& cinv) const {
    for (Point a : trail_)
      if (g_.orbit_id(level, a) != g_.orbit_id(level, cinv[img_[a]])) return false;
    return true;
  }

  bool rec(int k, const Perm& c, const Perm& cinv) {
    const auto& levels = g_.levels();
    if (k == static_cast<int>(levels.size())) {
      for (std::size_t i = 0; i < spec_.xs.size(); ++i)
        if (spec_.xs[i].conj(c) != spec_.ys[i]) return false;
      if (spec_.leaf_ok && !spec_.leaf_ok(c)) return false;
      result_ = c;
      return true;
    }
    const ChainLevel& lv = levels[k];
    std::vector<Point> cand;
    if (img_[lv.base] >= 0) {
      cand.push_back(static_cast<Point>(img_[lv.base]));
    } else {
      cand.reserve(lv.orbit.size());
      for (Point gm : lv.orbit) cand.push_back(c[gm]);
      std::sort(cand.begin(), cand.end());
    }
    for (Point z : cand) {
      int a = lv.pos[cinv[z]];
      if (a < 0) continue;
      std::size_t mark = trail_.size();
      if (!assign(lv.base, z)) {
        undo(mark);
        continue;
      }
      Perm c2 = lv.trans[a] * c;
      Perm c2inv = cinv * lv.trans_inv[a];
      bool ok = consistent(k + 1, c2inv);
      if (ok) {
        images_.push_back(z);
        if (!spec_.prefix_ok || spec_.prefix_ok(images_)) {
          if (rec(k + 1, c2, c2inv)) return true;
        }
        images_.pop_back();
      }
      undo(mark);
    }
    return false;
  }

  const PermGroup& g_;
  const SearchSpec& spec_;
  int n_;
  std::vector<int> img_, pre_;
  std::vector<Point> trail_;
  std::vector<std::pair<Point, Point>> queue_;
  std::vector<Perm> xinv_, yinv_;
  std::vector<Point> images_;
  std::optional<Perm> result_;
};

std::vector<std::uint32_t> orbit_length_colors(const PermGroup& h) {
  auto id = orbit_partition(h.degree(), h.generators());
  std::vector<std::uint32_t> size(h.degree(), 0), c(h.degree());
  for (int x : id) ++size[x];
  for (int i = 0; i < h.degree(); ++i) c[i] = size[id[i]];
  return c;
}

}  // namespace

std::optional<Perm> search_one(const PermGroup& g, const SearchSpec& spec) {
  if (spec.xs.size() != spec.ys.size())
    throw InputError("permgroup", "tuple length mismatch in search");
  for (std::size_t i = 0; i < spec.xs.size(); ++i)
    if (spec.xs[i].cycle_type() != spec.ys[i].cycle_type()) return std::nullopt;
  Searcher s(g, spec);
  return s.run();
}

PermGroup search_subgroup(const PermGroup& g, const SearchSpec& spec, const std::vector<Perm>& known) {
  const int n = g.degree();
  const auto& levels = g.levels();
  const int L = static_cast<int>(levels.size());
  std::vector<Perm> kgens;
  for (const Perm& k : known)
    if (!k.is_identity()) kgens.push_back(k);
  u128 order = 1;
  for (int i = L - 1; i >= 0; --i) {
    const Point beta = levels[i].base;
    auto fixes_prefix = [&](const Perm& x, int upto) {
      for (int j = 0; j < upto; ++j)
        if (x[levels[j].base] != levels[j].base) return false;
      return true;
    };
    std::vector<Perm> ki, ki1;
    for (const Perm& x : kgens)
      if (fixes_prefix(x, i)) {
        ki.push_back(x);
        if (x[beta] == beta) ki1.push_back(x);
      }
    auto part1 = orbit_partition(n, ki1);
    auto in_orbit = [&]() {
      std::vector<char> o(n, 0);
      std::vector<Point> st{beta};
      o[beta] = 1;
      while (!st.empty()) {
        Point x = st.back();
        st.pop_back();
        for (const Perm& s : ki)
          if (!o[s[x]]) {
            o[s[x]] = 1;
            st.push_back(s[x]);
          }
      }
      return o;
    };
    std::vector<char> orb = in_orbit();
    std::vector<char> failed(n, 0);
    std::vector<Point> cand = levels[i].orbit;
    std::sort(cand.begin(), cand.end());
    for (Point gm : cand) {
      if (gm == beta || orb[gm] || failed[gm]) continue;
      SearchSpec s2 = spec;
      for (int j = 0; j < i; ++j) s2.fixed.emplace_back(levels[j].base, levels[j].base);
      s2.fixed.emplace_back(beta, gm);
      auto r = search_one(g, s2);
      if (r) {
        kgens.push_back(*r);
        ki.push_back(*r);
        orb = in_orbit();
      } else {
        // Every point in the K(i+1)-orbit of a failed image fails as well.
        for (int x = 0; x < n; ++x)
          if (part1[x] == part1[gm]) failed[x] = 1;
      }
    }
    order *= static_cast<std::uint64_t>(std::count(orb.begin(), orb.end(), 1));
  }
  if (order > kMaxOrder) throw CapError("permgroup", "group order exceeds cap 2^40");
  ChainOptions opts;
  opts.known_order = static_cast<std::uint64_t>(order);
  return PermGroup(n, std::move(kgens), opts);
}

std::optional<Perm> find_conjugator(const PermGroup& g, const std::vector<Perm>& xs,
                                    const std::vector<Perm>& ys) {
  if (xs.size() != ys.size()) return std::nullopt;
  SearchSpec spec;
  spec.xs = xs;
  spec.ys = ys;
  spec.src_color = cycle_colors(g.degree(), xs);
  spec.dst_color = cycle_colors(g.degree(), ys);
  return search_one(g, spec);
}

PermGroup tuple_centralizer(const PermGroup& g, const std::vector<Perm>& xs) {
  SearchSpec spec;
  for (const Perm& x : xs)
    if (!x.is_identity()) spec.xs.push_back(x);
  spec.ys = spec.xs;
  spec.src_color = cycle_colors(g.degree(), spec.xs);
  spec.dst_color = spec.src_color;
  if (spec.xs.empty()) return g;
  return search_subgroup(g, spec);
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h) {
  return tuple_centralizer(g, h.generators());
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (h.is_trivial()) return g;
  SearchSpec spec;
  spec.src_color = orbit_length_colors(h);
  spec.dst_color = spec.src_color;
  spec.leaf_ok = [&h](const Perm& x) {
    for (const Perm& y : h.generators())
      if (!h.contains(y.conj(x))) return false;
    return true;
  };
  std::vector<Perm> known;
  for (const Perm& y : h.generators())
    if (g.contains(y)) known.push_back(y);
  return search_subgroup(g, spec, known);
}

std::optional<Perm> transporter(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  if (h.order() != k.order()) return std::nullopt;
  if (h.is_trivial()) return Perm(g.degree());
  SearchSpec spec;
  spec.src_color = orbit_length_colors(h);
  spec.dst_color = orbit_length_colors(k);
  spec.leaf_ok = [&h, &k](const Perm& x) {
    for (const Perm& y : h.generators())
      if (!k.contains(y.conj(x))) return false;
    return true;
  };
  return search_one(g, spec);
}

// ---- structure -------------------------------------------------------------------

PermGroup subgroup(const PermGroup& ambient, std::vector<Perm> gens) {
  return PermGroup(ambient.degree(), std::move(gens));
}

PermGroup conjugate(const PermGroup& h, const Perm& g) {
  std::vector<Perm> gens;
  for (const Perm& x : h.generators()) gens.push_back(x.conj(g));
  ChainOptions opts;
  opts.known_order = h.order();
  return PermGroup(h.degree(), std::move(gens), opts);
}

PermGroup intersection(const PermGroup& a0, const PermGroup& b0) {
  const PermGroup& a = a0.order() <= b0.order() ? a0 : b0;
  const PermGroup& b = a0.order() <= b0.order() ? b0 : a0;
  if (a.order() <= 200000) {
    std::vector<Perm> gens;
    PermGroup k = PermGroup::trivial(a.degree());
    for (const Perm& e : a.elements()) {
      if (k.contains(e) || !b.contains(e)) continue;
      gens.push_back(e);
      k = PermGroup(a.degree(), gens);
    }
    return k;
  }
  SearchSpec spec;
  spec.leaf_ok = [&b](const Perm& x) { return b.contains(x); };
  return search_subgroup(a, spec);
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& gens0) {
  std::vector<Perm> gens;
  for (const Perm& x : gens0)
    if (!x.is_identity()) gens.push_back(x);
  PermGroup n(g.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (const Perm& s : g.generators()) {
        Perm c = gens[i].conj(s);
        if (n.contains(c)) continue;
        gens.push_back(c);
        n = PermGroup(g.degree(), gens);
        changed = true;
      }
    }
  }
  return n;
}

std::uint64_t p_part(std::uint64_t n, int p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(std::uint64_t n, int p) { return n >= 1 && p_part(n, p) == n; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Perm p_part_of(const Perm& g, int p) {
  auto o = static_cast<std::uint64_t>(g.order());
  return g.pow(static_cast<long long>(o / p_part(o, p)));
}

Perm p_prime_part_of(const Perm& g, int p) {
  auto o = static_cast<std::uint64_t>(g.order());
  return g.pow(static_cast<long long>(p_part(o, p)));
}

namespace {

PermGroup sylow_ascent(const PermGroup& h, int p, std::mt19937_64& rng) {
  const std::uint64_t target = p_part(h.order(), p);
  PermGroup P = PermGroup::trivial(h.degree());
  while (P.order() < target) {
    PermGroup N = P.is_trivial() ? h : normalizer(h, P);
    // P is not Sylow in N, so N/P has elements of order p; random draws find one.
    for (int tries = 0;; ++tries) {
      if (tries > 10000) throw InternalError("permgroup", "Sylow ascent made no progress");
      Perm y = p_part_of(N.random(rng), p);
      if (P.contains(y)) continue;
      auto gens = P.generators();
      gens.push_back(y);
      P = PermGroup(h.degree(), gens);
      break;
    }
  }
  return P;
}

}  // namespace

PermGroup sylow(const PermGroup& g, int p, std::uint64_t seed) {
  if (!is_prime(p)) throw InputError("permgroup", "p = " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return PermGroup::trivial(g.degree());
  std::mt19937_64 rng(seed);
  PermGroup h = g;
  // Descend through centralizers of order-p elements that keep the full p-part,
  // then ascend inside the normalizer chain of the remaining group.
  while (h.order() != target) {
    bool shrunk = false;
    for (int tries = 0; tries < 64 && !shrunk; ++tries) {
      Perm x = h.random(rng);
      auto o = static_cast<std::uint64_t>(x.order());
      if (o % p) continue;
      Perm z = x.pow(static_cast<long long>(o / p));
      PermGroup c = tuple_centralizer(h, {z});
      if (c.order() < h.order() && p_part(c.order(), p) == target) {
        h = std::move(c);
        shrunk = true;
      }
    }
    if (!shrunk) {
      h = sylow_ascent(h, p, rng);
      break;
    }
  }
  if (h.order() != target) throw InternalError("permgroup", "Sylow subgroup has wrong order");
  return h;
}

PermGroup p_core(const PermGroup& g, int p, std::uint64_t seed) {
  PermGroup t = sylow(g, p, seed);
  bool changed = true;
  while (changed && !t.is_trivial()) {
    changed = false;
    for (const Perm& h : g.generators()) {
      PermGroup u = intersection(t, conjugate(t, h));
      if (u.order() < t.order()) {
        t = std::move(u);
        changed = true;
      }
    }
  }
  return t;
}

PermGroup op_prime_residual(const PermGroup& g, int p, std::uint64_t seed) {
  return normal_closure(g, sylow(g, p, seed).generators());
}

PermGroup op_residual(const PermGroup& g, int p, std::uint64_t seed) {
  std::vector<Perm> gens;
  for (const Perm& x : g.generators()) gens.push_back(p_prime_part_of(x, p));
  PermGroup n = normal_closure(g, gens);
  std::mt19937_64 rng(seed);
  while (!is_p_power(g.order() / n.order(), p)) {
    Perm y = p_prime_part_of(g.random(rng), p);
    if (n.contains(y)) continue;
    auto ng = n.generators();
    ng.push_back(y);
    n = normal_closure(g, ng);
  }
  return n;
}

}  // namespace pfusion
