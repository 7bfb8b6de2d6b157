#include "pfusion/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "pfusion/errors.hpp"

namespace pfusion {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Arithmetic in the local ring Z/p^l.
struct Ring {
  int p, ell;
  std::int64_t q;
  Ring(int p_, int ell_) : p(p_), ell(ell_), q(ipow(p_, ell_)) {}
  std::int64_t red(std::int64_t x) const { return ((x % q) + q) % q; }
  int val(std::int64_t x) const {
    x = red(x);
    if (x == 0) return ell;
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  }
  std::int64_t inv_unit(std::int64_t a) const {
    std::int64_t g = q, x = 0, x1 = 1, r = red(a);
    while (r) {
      std::int64_t t = g / r;
      std::tie(g, r) = std::make_pair(r, g - t * r);
      std::tie(x, x1) = std::make_pair(x1, x - t * x1);
    }
    return red(x);
  }
};

ModMatrix mat_mul(const Ring& z, int r, const ModMatrix& a, const ModMatrix& b) {
  ModMatrix c(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      std::int64_t x = a[i * r + k];
      if (!x) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] = z.red(c[i * r + j] + x * b[k * r + j]);
    }
  return c;
}

ModMatrix identity(int r) {
  ModMatrix m(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

void check_caps(int p, int ell, int rank) {
  if (!is_prime(p) || ell < 1 || rank < 0) throw InputError("cohomology", "module needs a prime p, l >= 1, r >= 0");
  std::uint64_t size = 1;
  for (int i = 0; i < ell * rank; ++i) {
    size *= static_cast<std::uint64_t>(p);
    if (size > kMaxCohomologyModule) throw CapError("cohomology", "module larger than 5^6");
  }
}

void validate(const Ring& z, const GModule& m) {
  const std::size_t n = m.table.size();
  if (n == 0 || m.action.size() != n) throw InputError("cohomology", "action table does not match the group");
  if (n > kMaxCohomologyGroup) throw CapError("cohomology", "group larger than 1000 elements");
  for (std::size_t g = 0; g < n; ++g)
    for (int s : m.generators)
      if (mat_mul(z, m.rank, m.action[g], m.action[s]) != m.action[m.table[g][s]])
        throw InputError("cohomology", "action is not a homomorphism");
}

// Smith form over Z/p^l: rows are reduced in place; v and vinv track the column
// transform V and its inverse. Returns the valuation of each diagonal entry,
// one per column, with l standing for zero.
std::vector<int> smith(const Ring& z, std::vector<Row>& a, int cols, std::vector<Row>* v, std::vector<Row>* vinv) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> out(cols, z.ell);
  for (int t = 0; t < std::min(rows, cols); ++t) {
    int bi = -1, bj = -1, best = z.ell;
    for (int i = t; i < rows && best > 0; ++i)
      for (int j = t; j < cols; ++j) {
        int w = z.val(a[i][j]);
        if (w < best) {
          best = w;
          bi = i;
          bj = j;
          if (w == 0) break;
        }
      }
    if (bi < 0) break;
    std::swap(a[t], a[bi]);
    if (bj != t) {
      for (auto& row : a) std::swap(row[t], row[bj]);
      if (v) {
        for (auto& row : *v) std::swap(row[t], row[bj]);
        std::swap((*vinv)[t], (*vinv)[bj]);
      }
    }
    const std::int64_t pk = ipow(z.p, best);
    const std::int64_t u = z.inv_unit(z.red(a[t][t]) / pk);
    for (auto& x : a[t]) x = z.red(x * u);
    for (int i = 0; i < rows; ++i) {
      if (i == t || z.red(a[i][t]) == 0) continue;
      std::int64_t f = z.red(a[i][t]) / pk;
      for (int j = t; j < cols; ++j) a[i][j] = z.red(a[i][j] - f * a[t][j]);
    }
    for (int j = t + 1; j < cols; ++j) {
      if (z.red(a[t][j]) == 0) continue;
      std::int64_t f = z.red(a[t][j]) / pk;
      a[t][j] = 0;
      if (v) {
        for (auto& row : *v) row[j] = z.red(row[j] - f * row[t]);
        for (int c = 0; c < cols; ++c) (*vinv)[t][c] = z.red((*vinv)[t][c] + f * (*vinv)[j][c]);
      }
    }
    out[t] = best;
  }
  return out;
}

}  // namespace

GModule module_from_matrices(int p, int ell, int rank, const std::vector<ModMatrix>& gens) {
  check_caps(p, ell, rank);
  Ring z(p, ell);
  GModule m;
  m.p = p;
  m.ell = ell;
  m.rank = rank;
  std::map<ModMatrix, int> index;
  std::vector<ModMatrix> gen_red;
  for (const auto& g : gens) {
    if (g.size() != static_cast<std::size_t>(rank) * rank) throw InputError("cohomology", "matrix of wrong size");
    ModMatrix h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = z.red(g[i]);
    gen_red.push_back(std::move(h));
  }
  m.action.push_back(identity(rank));
  index[m.action[0]] = 0;
  for (std::size_t i = 0; i < m.action.size(); ++i)
    for (const auto& g : gen_red) {
      ModMatrix x = mat_mul(z, rank, m.action[i], g);
      if (index.emplace(x, static_cast<int>(m.action.size())).second) {
        m.action.push_back(std::move(x));
        if (m.action.size() > kMaxCohomologyGroup) throw CapError("cohomology", "group larger than 1000 elements");
      }
    }
  for (const auto& g : gen_red) {
    int s = index.at(g);
    if (s != 0 && std::find(m.generators.begin(), m.generators.end(), s) == m.generators.end())
      m.generators.push_back(s);
  }
  const std::size_t n = m.action.size();
  m.table.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table[a][b] = index.at(mat_mul(z, rank, m.action[a], m.action[b]));
  return m;
}

GModule module_from_group(const PermGroup& g, int p, int ell, int rank, const std::vector<ModMatrix>& gen_action) {
  check_caps(p, ell, rank);
  if (g.order() > kMaxCohomologyGroup) throw CapError("cohomology", "group larger than 1000 elements");
  const auto& gens = g.generators();
  if (gens.size() != gen_action.size()) throw InputError("cohomology", "one matrix per generator expected");
  Ring z(p, ell);
  GModule m;
  m.p = p;
  m.ell = ell;
  m.rank = rank;
  std::unordered_map<Perm, int, PermHash> index;
  std::vector<Perm> elems{Perm(g.degree())};
  index[elems[0]] = 0;
  m.action.push_back(identity(rank));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm x = elems[i] * gens[k];
      if (index.emplace(x, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(x));
        m.action.push_back(mat_mul(z, rank, m.action[i], gen_action[k]));
      }
    }
  for (const Perm& s : gens) {
    int i = index.at(s);
    if (i != 0 && std::find(m.generators.begin(), m.generators.end(), i) == m.generators.end())
      m.generators.push_back(i);
  }
  const std::size_t n = elems.size();
  m.table.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table[a][b] = index.at(elems[a] * elems[b]);
  validate(z, m);
  return m;
}

H1Result h1(const GModule& m) {
  check_caps(m.p, m.ell, m.rank);
  Ring z(m.p, m.ell);
  validate(z, m);
  const int r = m.rank;
  const int nx = static_cast<int>(m.generators.size());
  const int cols = nx * r;
  const std::size_t n = m.table.size();
  H1Result out;
  if (cols == 0) return out;

  // expr[g] (r x cols) gives f(g) in terms of the generator values.
  std::vector<std::vector<Row>> expr(n);
  std::vector<char> seen(n, 0);
  std::vector<Row> eqs;
  expr[0].assign(r, Row(cols, 0));
  seen[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int g = queue[h];
    for (int j = 0; j < nx; ++j) {
      int t = m.table[g][m.generators[j]];
      std::vector<Row> e = expr[g];
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) e[a][j * r + b] = z.red(e[a][j * r + b] + m.action[g][a * r + b]);
      if (!seen[t]) {
        seen[t] = 1;
        expr[t] = std::move(e);
        queue.push_back(t);
        continue;
      }
      for (int a = 0; a < r; ++a) {
        Row row(cols);
        for (int c = 0; c < cols; ++c) row[c] = z.red(expr[t][a][c] - e[a][c]);
        if (std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x != 0; })) eqs.push_back(std::move(row));
      }
    }
  }
  if (queue.size() != n) throw InputError("cohomology", "generators do not generate the group");

  std::vector<Row> v(cols, Row(cols, 0)), vinv(cols, Row(cols, 0));
  for (int i = 0; i < cols; ++i) v[i][i] = vinv[i][i] = 1;
  std::vector<int> k = smith(z, eqs, cols, &v, &vinv);
  // Z^1 is generated by p^{l-k_i} V e_i, of order p^{k_i}.
  std::vector<int> live;
  for (int i = 0; i < cols; ++i)
    if (k[i] > 0) {
      live.push_back(i);
      out.z1_order *= static_cast<std::uint64_t>(ipow(m.p, k[i]));
    }
  if (live.empty()) return out;

  std::vector<Row> rel;
  for (std::size_t c = 0; c < live.size(); ++c) {
    Row row(live.size(), 0);
    row[c] = z.red(ipow(m.p, k[live[c]]));
    rel.push_back(std::move(row));
  }
  // Coboundaries of the basis vectors of A: f(s) = s.a - a.
  for (int a = 0; a < r; ++a) {
    Row b(cols);
    for (int j = 0; j < nx; ++j)
      for (int i = 0; i < r; ++i) b[j * r + i] = z.red(m.action[m.generators[j]][i * r + a] - (i == a ? 1 : 0));
    Row row(live.size(), 0);
    for (std::size_t c = 0; c < live.size(); ++c) {
      int i = live[c];
      std::int64_t y = 0;
      for (int t = 0; t < cols; ++t) y = z.red(y + vinv[i][t] * b[t]);
      std::int64_t scale = ipow(m.p, m.ell - k[i]);
      if (y % scale != 0) throw InternalError("cohomology", "coboundary outside the cocycle module");
      row[c] = y / scale;
    }
    rel.push_back(std::move(row));
  }
  for (int w : smith(z, rel, static_cast<int>(live.size()), nullptr, nullptr))
    if (w > 0) {
      out.invariants.push_back(static_cast<std::uint64_t>(ipow(m.p, w)));
      out.order *= out.invariants.back();
    }
  std::sort(out.invariants.begin(), out.invariants.end());
  out.b1_order = out.z1_order / out.order;
  return out;
}

}  // namespace pfusion
