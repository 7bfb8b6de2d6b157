#include "pfusion/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pfusion/catalog.hpp"
#include "pfusion/errors.hpp"

namespace pfusion {

namespace {

using i128 = __int128;

std::int64_t mod_norm(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t n) {
  std::int64_t r = 1 % n;
  a = mod_norm(a, n);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<i128>(r) * a % n);
    a = static_cast<std::int64_t>(static_cast<i128>(a) * a % n);
    e >>= 1;
  }
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

int prime_of_power(std::int64_t q) {
  for (std::int64_t d = 2; d <= q; ++d)
    if (q % d == 0) return static_cast<int>(d);
  return 0;
}

}  // namespace

// ---- arithmetic -----------------------------------------------------------------

int v_p(std::int64_t x, int p) {
  if (x == 0) throw PreconditionError("tables", "v_p(0) is undefined");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int ord_p(std::int64_t q, int p) {
  std::int64_t r = mod_norm(q, p);
  if (r == 0) throw PreconditionError("tables", "ord_p: q is divisible by p");
  int o = 1;
  for (std::int64_t x = r; x != 1; x = x * r % p) ++o;
  return o;
}

int v_p_pow_minus(std::int64_t a, std::int64_t e, std::int64_t b, int p) {
  // Work modulo p^K with p^K < 2^62.
  std::int64_t mod = 1;
  int k = 0;
  while (mod <= (std::int64_t{1} << 62) / p) {
    mod *= p;
    ++k;
  }
  std::int64_t r = mod_norm(pow_mod(a, e, mod) - b, mod);
  if (r == 0) throw CapError("tables", "valuation exceeds working precision");
  return v_p(r, p);
}

std::int64_t find_dual_prime(int p, std::int64_t q, std::int64_t bound) {
  if (p == 2 || !is_prime(p)) throw PreconditionError("tables", "find_dual_prime needs an odd prime p");
  if (q % p == 0) throw PreconditionError("tables", "find_dual_prime needs p not dividing q");
  int target_ord = ord_p(-q, p);
  int target_v = v_p_pow_minus(q, p - 1, 1, p);
  for (std::int64_t r = 2; r <= bound; ++r) {
    if (r == p || !is_prime(static_cast<std::uint64_t>(r))) continue;
    if (ord_p(r, p) == target_ord && v_p_pow_minus(r, p - 1, 1, p) == target_v) return r;
  }
  throw CapError("tables", "no dual prime below " + std::to_string(bound));
}

// ---- order formulas ---------------------------------------------------------------

int OrderFormula::v(int p) const {
  int total = q % p == 0 ? static_cast<int>(q_power) * v_p(q, p) : 0;
  for (auto [i, s] : factors) total += v_p_pow_minus(q, i, s, p);
  return total + v_p(scalar, p);
}

OrderFormula order_gl(int n, std::int64_t q) {
  OrderFormula f{q, static_cast<std::int64_t>(n) * (n - 1) / 2, {}, 1};
  for (int i = 1; i <= n; ++i) f.factors.emplace_back(i, 1);
  return f;
}

OrderFormula order_sp(int n2, std::int64_t q) {
  int m = n2 / 2;
  OrderFormula f{q, static_cast<std::int64_t>(m) * m, {}, 1};
  for (int i = 1; i <= m; ++i) f.factors.emplace_back(2 * i, 1);
  return f;
}

OrderFormula order_so_odd(int n2p1, std::int64_t q) {
  int n = (n2p1 - 1) / 2;
  OrderFormula f{q, static_cast<std::int64_t>(n) * n, {}, 1};
  for (int i = 1; i <= n; ++i) f.factors.emplace_back(2 * i, 1);
  return f;
}

OrderFormula order_go_even(int n2, int eps, std::int64_t q) {
  OrderFormula f = order_so_even(n2, eps, q);
  f.scalar = 2;
  return f;
}

OrderFormula order_so_even(int n2, int eps, std::int64_t q) {
  int n = n2 / 2;
  OrderFormula f{q, static_cast<std::int64_t>(n) * (n - 1), {{n, eps}}, 1};
  for (int i = 1; i < n; ++i) f.factors.emplace_back(2 * i, 1);
  return f;
}

std::vector<IndexIdentity> index_identities(int p, std::int64_t q, int n) {
  if (p == 2 || !is_prime(p) || q % p == 0)
    throw PreconditionError("tables", "index identities need an odd prime p not dividing q");
  std::vector<IndexIdentity> out;
  auto odd_sum = [&](int upto) {
    int s = 0;
    for (int i = 1; i <= upto; ++i) s += v_p_pow_minus(q, 2 * i - 1, 1, p);
    return s;
  };
  out.push_back({"GL_n <= GL_{n+1}", order_gl(n + 1, q).v(p) - order_gl(n, q).v(p),
                 v_p_pow_minus(q, n + 1, 1, p)});
  out.push_back({"Sp_2n <= GL_2n", order_gl(2 * n, q).v(p) - order_sp(2 * n, q).v(p), odd_sum(n)});
  out.push_back({"SO_2n+1 <= GL_2n+1", order_gl(2 * n + 1, q).v(p) - order_so_odd(2 * n + 1, q).v(p),
                 odd_sum(n + 1)});
  for (int eps : {1, -1}) {
    std::string sign = eps > 0 ? "+" : "-";
    out.push_back({"GO^" + sign + "_2n <= GL_2n",
                   order_gl(2 * n, q).v(p) - order_go_even(2 * n, eps, q).v(p),
                   v_p_pow_minus(q, n, -eps, p) + odd_sum(n)});
  }
  if (n >= 2)
    for (int eps : {1, -1}) {
      std::string sign = eps > 0 ? "+" : "-";
      out.push_back({"SO_2n-1 <= SO^" + sign + "_2n",
                     order_so_even(2 * n, eps, q).v(p) - order_so_odd(2 * n - 1, q).v(p),
                     v_p_pow_minus(q, n, eps, p)});
    }
  return out;
}

// ---- monomial groups -----------------------------------------------------------------

MonomialGroup::MonomialGroup(int m, int k, int n, int l, int p)
    : m_(m), k_(k), n_(n), l_(l), p_(p) {
  if (!is_prime(p)) throw InputError("tables", "G(m,k,n): p must be prime");
  if (m < 1 || k < 1 || m % k != 0 || (p - 1) % m != 0)
    throw InputError("tables", "G(m,k,n) needs k | m | p-1");
  if (n < 1 || l < 1) throw InputError("tables", "G(m,k,n) needs n >= 1 and l >= 1");
  modulus_ = 1;
  for (int i = 0; i < l; ++i) modulus_ *= p;
  zeta_ = 1;
  // An element of exact order m in (Z/p^l)^*.
  for (std::int64_t g = 2; m > 1 && g < modulus_; ++g) {
    if (g % p == 0) continue;
    int o = 1;
    for (std::int64_t x = g; x != 1; x = x * g % modulus_) ++o;
    if (o == m) {
      zeta_ = g;
      break;
    }
  }
  auto id = [&] {
    MonomialElement e;
    e.exps.assign(n, 0);
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    return e;
  };
  if (m > 1 && n >= 2) {
    auto g = id();
    g.exps[0] = 1;
    g.exps[1] = m - 1;
    gens_.push_back(g);
  }
  if (k < m) {
    auto g = id();
    g.exps[0] = k;
    gens_.push_back(g);
  }
  if (n >= 2) {
    auto g = id();
    std::swap(g.perm[0], g.perm[1]);
    gens_.push_back(g);
  }
  if (n >= 3) {
    auto g = id();
    for (int i = 0; i < n; ++i) g.perm[i] = (i + 1) % n;
    gens_.push_back(g);
  }
}

std::uint64_t MonomialGroup::formula_order() const {
  return ipow(static_cast<std::uint64_t>(m_), n_) * factorial(n_) / static_cast<std::uint64_t>(k_);
}

MonomialElement MonomialGroup::multiply(const MonomialElement& a, const MonomialElement& b) const {
  MonomialElement c;
  c.exps.resize(n_);
  c.perm.resize(n_);
  for (int i = 0; i < n_; ++i) {
    int j = a.perm[i];
    c.exps[i] = (a.exps[i] + b.exps[j]) % m_;
    c.perm[i] = b.perm[j];
  }
  return c;
}

std::vector<MonomialElement> MonomialGroup::enumerate(std::uint64_t cap) const {
  MonomialElement e;
  e.exps.assign(n_, 0);
  e.perm.resize(n_);
  std::iota(e.perm.begin(), e.perm.end(), 0);
  std::set<MonomialElement> seen{e};
  std::vector<MonomialElement> out{e};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens_) {
      auto h = multiply(out[i], g);
      if (seen.insert(h).second) {
        if (out.size() >= cap) throw CapError("tables", "monomial group enumeration exceeds cap");
        out.push_back(std::move(h));
      }
    }
  return out;
}

std::vector<std::int64_t> MonomialGroup::matrix(const MonomialElement& g) const {
  std::vector<std::int64_t> mat(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) mat[i * n_ + g.perm[i]] = pow_mod(zeta_, g.exps[i], modulus_);
  return mat;
}

PermGroup MonomialGroup::action() const {
  std::uint64_t total = ipow(static_cast<std::uint64_t>(modulus_), n_);
  if (total - 1 > static_cast<std::uint64_t>(kMaxDegree))
    throw CapError("tables", "monomial action degree exceeds cap");
  int deg = static_cast<int>(total - 1);
  // Point c-1 is the vector with base-N digits of c.
  std::vector<Perm> gens;
  for (const auto& g : gens_) {
    std::vector<Point> img(deg);
    std::vector<std::int64_t> v(n_), w(n_);
    for (std::uint64_t c = 1; c < total; ++c) {
      std::uint64_t x = c;
      for (int i = 0; i < n_; ++i, x /= modulus_) v[i] = static_cast<std::int64_t>(x % modulus_);
      for (int i = 0; i < n_; ++i) w[g.perm[i]] = v[i] * pow_mod(zeta_, g.exps[i], modulus_) % modulus_;
      std::uint64_t d = 0;
      for (int i = n_ - 1; i >= 0; --i) d = d * modulus_ + static_cast<std::uint64_t>(w[i]);
      img[c - 1] = static_cast<Point>(d - 1);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(deg, std::move(gens), {.base_prefix = {}, .known_order = formula_order(), .seed = 0});
}

PermGroup wreath_cyclic_symmetric(int m, int n) {
  if (m < 1 || n < 1) throw InputError("tables", "wreath product needs m, n >= 1");
  int deg = m * n;
  std::vector<Perm> gens;
  if (m > 1) {
    Perm g(deg);
    for (int r = 0; r < m; ++r) g[r] = static_cast<Point>((r + 1) % m);
    gens.push_back(g);
  }
  if (n >= 2) {
    Perm g(deg);
    for (int r = 0; r < m; ++r) {
      g[r] = static_cast<Point>(m + r);
      g[m + r] = static_cast<Point>(r);
    }
    gens.push_back(g);
  }
  if (n >= 3) {
    Perm g(deg);
    for (int b = 0; b < n; ++b)
      for (int r = 0; r < m; ++r) g[b * m + r] = static_cast<Point>(((b + 1) % n) * m + r);
    gens.push_back(g);
  }
  return PermGroup(deg, std::move(gens));
}

std::vector<std::uint64_t> abelian_invariants(std::uint64_t order,
                                              const std::function<std::uint64_t(std::uint64_t)>& count_k) {
  // per_prime[r] = exponents of the cyclic r-factors, largest first
  std::vector<std::vector<std::uint64_t>> columns;
  for (std::uint64_t r : prime_factors(order)) {
    int e = v_p(static_cast<std::int64_t>(order), static_cast<int>(r));
    std::vector<int> c(e + 1, 0);
    std::uint64_t rj = 1;
    for (int j = 1; j <= e; ++j) {
      rj *= r;
      std::uint64_t cnt = count_k(rj);
      int lg = 0;
      while (cnt > 1) {
        cnt /= r;
        ++lg;
      }
      c[j] = lg;
    }
    // Factors of order >= r^j: c[j] - c[j-1].
    int factors = e > 0 ? c[1] : 0;
    std::vector<std::uint64_t> col(factors, 1);
    for (int j = 1; j <= e; ++j)
      for (int i = 0; i < c[j] - c[j - 1]; ++i) col[i] *= r;
    columns.push_back(std::move(col));
  }
  std::size_t len = 0;
  for (const auto& c : columns) len = std::max(len, c.size());
  std::vector<std::uint64_t> inv(len, 1);
  for (const auto& c : columns)
    for (std::size_t i = 0; i < c.size(); ++i) inv[i] *= c[i];
  std::sort(inv.begin(), inv.end());
  return inv;
}

namespace {

PermGroup derived_subgroup(const PermGroup& h) {
  std::vector<Perm> comms;
  const auto& g = h.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Perm c = g[i].inverse() * g[j].inverse() * g[i] * g[j];
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(h, comms);
}

}  // namespace

GroupInvariants group_invariants(const PermGroup& g) {
  GroupInvariants inv;
  inv.order = g.order();
  PermGroup d = derived_subgroup(g);
  std::uint64_t ab = g.order() / d.order();
  if (ab > 1) {
    auto elems = g.elements(200000);
    inv.abelianization = abelian_invariants(ab, [&](std::uint64_t k) {
      std::uint64_t cnt = 0;
      for (const auto& x : elems)
        if (d.contains(x.pow(static_cast<long long>(k)))) ++cnt;
      return cnt / d.order();
    });
  }
  PermGroup cur = g;
  inv.derived_length = 0;
  while (!cur.is_trivial()) {
    PermGroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) {
      inv.derived_length = -1;  // not solvable
      break;
    }
    cur = std::move(next);
    ++inv.derived_length;
  }
  return inv;
}

// ---- parameter tables ------------------------------------------------------------------

TableParams table_params(ClassicalCase c, int p, std::int64_t q, int n, int eps) {
  if (p == 2 || !is_prime(p)) throw PreconditionError("tables", "table parameters need an odd prime p");
  if (q % p == 0) throw PreconditionError("tables", "table parameters need p not dividing q");
  TableParams t;
  t.which = c;
  t.p = p;
  t.q = q;
  t.n = n;
  t.eps = eps;
  if (c == ClassicalCase::A) {
    t.m = ord_p(eps * q, p);
    t.mu = t.m;
    t.theta_sign = eps;
    t.kappa = n / t.mu;
    t.exceptional_shape = mod_norm(q - eps, p) == 0;
  } else {
    t.m = ord_p(q, p);
    t.mu = std::lcm(2, t.m);
    t.theta_sign = t.m % 2 ? 1 : -1;
    t.kappa = (c == ClassicalCase::C ? 2 * (n - 1) : 2 * n) / t.mu;
  }
  std::int64_t qmu_minus = 0;
  {
    // q^mu - theta may vanish modulo p; valuation only when it is nonzero.
    std::int64_t big = 1;
    bool fits = true;
    for (int i = 0; i < t.mu && fits; ++i) {
      if (big > (std::int64_t{1} << 62) / q) fits = false;
      big *= q;
    }
    qmu_minus = fits ? big - t.theta_sign : 1;
  }
  t.ell = (qmu_minus % p == 0) ? v_p_pow_minus(q, t.mu, t.theta_sign, p) : 0;
  t.ell_exp = v_p_pow_minus(t.theta_sign * q, t.mu, 1, p);
  std::uint64_t mu = static_cast<std::uint64_t>(t.mu);
  std::uint64_t wr = ipow(mu, t.kappa) * factorial(t.kappa);
  std::string ms = std::to_string(t.mu), ks = std::to_string(t.kappa);
  if (c == ClassicalCase::D) {
    t.aut_f_a = "G(" + ms + ",2," + ks + ")";
    t.aut_f_a_order = wr / 2;
  } else {
    t.aut_f_a = "C_" + ms + " wr S_" + ks;
    t.aut_f_a_order = wr;
  }
  t.aut_op_a = "G(" + ms + "," + ms + "," + ks + ")";
  t.aut_op_a_order = wr / mu;
  return t;
}

// ---- predictor --------------------------------------------------------------------------

namespace {

const std::map<std::string, std::map<int, std::string>>& mathieu_table() {
  static const std::map<std::string, std::map<int, std::string>> t = {
      {"M11", {{2, "simple"}, {3, "ab"}, {5, "ab"}, {11, "ab"}}},
      {"M12", {{2, "simple"}, {3, "simple"}, {5, "ab"}, {11, "ab"}}},
  };
  return t;
}

void set_gamma(Prediction& r, std::uint64_t g) {
  r.gamma_order = g;
  r.gamma_structure = g == 1 ? "trivial" : "cyclic of order " + std::to_string(g);
  r.simple = g == 1;
}

void predict_alternating(const PredictQuery& q, Prediction& r) {
  int n = q.n, p = q.p;
  if (n < 3 || n < p || (p == 2 && n < 4))
    throw PreconditionError("tables", "p does not divide |A_" + std::to_string(n) + "|");
  r.group = "A" + std::to_string(n);
  bool abelian = p == 2 ? n < 6 : n < p * p;
  if (abelian) {
    r.s_abelian = r.s_normal = true;
    r.theorem_case = "S normal";
    r.simple = false;
    if (p == 2) {
      // S = V_4; A_4 and A_5 induce the order-3 automorphism.
      set_gamma(r, 3);
      r.simple = false;
      r.gamma_structure = "cyclic of order 3";
    } else {
      // Burnside: F = F_S(N_G(S)), Gamma = Aut_F(S) = N/C. In S_n this is
      // C_{p-1} wr S_k; A_n sees all of it exactly when two points are free.
      int k = n / p;
      std::uint64_t full = ipow(static_cast<std::uint64_t>(p - 1), k) * factorial(k);
      std::uint64_t g = (n - k * p >= 2) ? full : full / 2;
      r.gamma_order = g;
      r.gamma_structure = g == 1 ? "trivial" : "order " + std::to_string(g);
      r.simple = false;
    }
    r.note = "Sylow subgroup abelian, so S is normal in F and Gamma = Aut_F(S)";
    return;
  }
  std::uint64_t g = (n % p == 0 || n % p == 1) ? 1 : 2;
  set_gamma(r, g);
  r.theorem_case = "realizable";
  r.op_simple = true;
  r.realized_by = "A" + std::to_string(p * (n / p));
}

void predict_mathieu(const PredictQuery& q, Prediction& r) {
  r.group = q.family;
  const auto& row = mathieu_table().at(q.family);
  auto it = row.find(q.p);
  if (it == row.end()) throw PreconditionError("tables", "p does not divide |" + q.family + "|");
  if (it->second == "ab") {
    r.s_abelian = r.s_normal = true;
    r.theorem_case = "S normal";
    r.simple = false;
    r.note = "Sylow subgroup abelian";
  } else {
    set_gamma(r, 1);
    r.theorem_case = "realizable";
    r.op_simple = true;
    r.realized_by = q.family;
  }
}

void predict_g2(const PredictQuery& q, Prediction& r) {
  r.group = "G2(" + std::to_string(q.q) + ")";
  std::int64_t m9 = mod_norm(q.q, 9);
  if (q.p == 3 && (m9 == 1 || m9 == 8)) {
    set_gamma(r, 2);
    r.theorem_case = "G2";
    r.op_simple = true;
    r.realized_by = std::string("SL3^") + (m9 == 1 ? "+" : "-") + "(" + std::to_string(q.q) + ")";
    return;
  }
  r.theorem_case = "unsupported";
  r.note = "only p = 3 with q = +-1 (mod 9) is tabulated for G2(q)";
}

void predict_classical(const PredictQuery& q, Prediction& r) {
  int p = q.p;
  int r_char = prime_of_power(q.q);
  std::string qs = std::to_string(q.q);
  int rank = 0;
  ClassicalCase c = ClassicalCase::A;
  int eps = 1, n_table = q.n;
  if (q.family == "PSL") {
    r.group = "PSL(" + std::to_string(q.n) + "," + qs + ")";
    rank = q.n - 1;
  } else if (q.family == "PSU") {
    r.group = "PSU(" + std::to_string(q.n) + "," + qs + ")";
    rank = q.n / 2;
    eps = -1;
  } else if (q.family == "PSp") {
    r.group = "PSp(" + std::to_string(2 * q.n) + "," + qs + ")";
    rank = q.n;
    c = ClassicalCase::B;
  } else if (q.family == "Omega") {
    r.group = "Omega(" + std::to_string(2 * q.n + 1) + "," + qs + ")";
    rank = q.n;
    c = ClassicalCase::B;
  } else {
    r.group = std::string("POmega") + (q.eps > 0 ? "+" : "-") + "(" + std::to_string(2 * q.n) + "," + qs + ")";
    rank = q.eps > 0 ? q.n : q.n - 1;
    eps = q.eps;
    // Case C when q^n != eps (mod p), else case D.
    c = mod_norm(pow_mod(q.q, q.n, p) - eps, p) == 0 ? ClassicalCase::D : ClassicalCase::C;
  }
  if (r_char == p) {
    if (rank <= 1) {
      r.s_normal = true;
      r.theorem_case = "S normal";
      r.simple = false;
      r.note = "Lie rank 1 in defining characteristic";
      return;
    }
    set_gamma(r, 1);
    r.theorem_case = "realizable";
    r.op_simple = true;
    r.realized_by = r.group;
    r.note = "defining characteristic";
    return;
  }
  if (p == 2) {
    if (q.family == "PSL" && q.n == 2 && (mod_norm(q.q, 8) == 3 || mod_norm(q.q, 8) == 5)) {
      r.s_abelian = r.s_normal = true;
      r.theorem_case = "S normal";
      r.simple = false;
      r.note = "Sylow 2-subgroup is a four-group";
      return;
    }
    set_gamma(r, 1);
    r.theorem_case = "realizable";
    r.op_simple = true;
    r.realized_by = r.group;
    r.note = "p = 2 in odd characteristic";
    return;
  }
  TableParams t = table_params(c, p, q.q, n_table, eps);
  r.table = t;
  bool abelian = t.kappa < p;
  if (c == ClassicalCase::A && t.m == 1 && q.n == p && t.ell_exp == 1) abelian = true;
  if (abelian) {
    r.s_abelian = r.s_normal = true;
    r.theorem_case = "S normal";
    r.simple = false;
    r.note = "kappa < p: Sylow subgroup abelian";
    return;
  }
  std::uint64_t g = 0;
  if (c == ClassicalCase::A)
    g = static_cast<std::uint64_t>(t.m);
  else if (c == ClassicalCase::D)
    g = static_cast<std::uint64_t>(std::lcm(2, t.m) / 2);
  else
    g = static_cast<std::uint64_t>(std::lcm(2, t.m));
  set_gamma(r, g);
  r.op_simple = true;
  std::int64_t qm = mod_norm(q.q, p);
  if (p >= 5 && qm != 1 && qm != p - 1 && rank >= 2) {
    r.exotic = true;
    r.theorem_case = "exotic";
    r.note = "O^{p'}(F) is simple and exotic";
  } else {
    r.theorem_case = "realizable";
    if (g == 1) r.realized_by = r.group;
  }
}

}  // namespace

Prediction predict(const PredictQuery& q) {
  if (!is_prime(static_cast<std::uint64_t>(q.p))) throw InputError("tables", "p must be prime");
  Prediction r;
  r.p = q.p;
  if (q.family == "A")
    predict_alternating(q, r);
  else if (q.family == "M11" || q.family == "M12")
    predict_mathieu(q, r);
  else if (q.family == "G2")
    predict_g2(q, r);
  else if (q.family == "PSL" || q.family == "PSU" || q.family == "PSp" || q.family == "Omega" ||
           q.family == "POmega")
    predict_classical(q, r);
  else
    throw InputError("tables", "unknown family '" + q.family + "'");
  return r;
}

std::optional<PredictQuery> query_for_label(const std::string& label, int p) {
  GroupSpec s;
  try {
    s = GroupSpec::parse(label);
  } catch (const Error&) {
    return std::nullopt;
  }
  PredictQuery q;
  q.p = p;
  q.q = s.q;
  q.n = s.n;
  switch (s.family) {
    case Family::Alt:
      q.family = "A";
      return q;
    case Family::Mathieu:
      q.family = "M" + std::to_string(s.n);
      return q;
    case Family::PSL:
      q.family = "PSL";
      return q;
    case Family::SL:
      if (std::gcd(s.n, s.q - 1) != 1) return std::nullopt;
      q.family = "PSL";
      return q;
    case Family::PSU:
      q.family = "PSU";
      return q;
    case Family::SU:
      if (std::gcd(s.n, s.q + 1) != 1) return std::nullopt;
      q.family = "PSU";
      return q;
    case Family::PSp:
      q.family = "PSp";
      q.n = s.n / 2;
      return q;
    case Family::Sp:
      if (s.q % 2 != 0) return std::nullopt;
      q.family = "PSp";
      q.n = s.n / 2;
      return q;
    default:
      return std::nullopt;
  }
}

}  // namespace pfusion
