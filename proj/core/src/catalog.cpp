#include "pfusion/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>

#include "json.hpp"

#include "pfusion/errors.hpp"
#include "pfusion/field.hpp"
#include "pfusion/tables.hpp"

namespace pfusion {

namespace {

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

std::uint64_t gl_order(int n, std::uint64_t q) {
  std::uint64_t r = ipow(q, n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) r *= ipow(q, i) - 1;
  return r;
}

std::uint64_t sp_order(int m, std::uint64_t q) {
  std::uint64_t r = ipow(q, m * m);
  for (int i = 1; i <= m; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

std::uint64_t su_order(int n, std::uint64_t q) {
  std::uint64_t r = ipow(q, n * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) r *= i % 2 ? ipow(q, i) + 1 : ipow(q, i) - 1;
  return r;
}

const char* family_prefix(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::PSL: return "PSL";
    case Family::SU: return "SU";
    case Family::PSU: return "PSU";
    case Family::Sp: return "Sp";
    case Family::PSp: return "PSp";
    default: return "";
  }
}

std::vector<std::string> split_product(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

void check_bounds(const GroupSpec& s) {
  auto fail = [&](const std::string& why) { throw InputError("catalog", s.label() + ": " + why); };
  switch (s.family) {
    case Family::Alt:
    case Family::Sym:
      if (s.n < 1 || s.n > 13) fail("degree must be in 1..13");
      break;
    case Family::Cyclic:
      if (s.n < 1 || s.n > kMaxDegree) fail("order out of range");
      break;
    case Family::Dihedral:
      if (s.n < 4 || s.n % 2 || s.n / 2 > kMaxDegree) fail("dihedral order must be even and >= 4");
      break;
    case Family::GL:
    case Family::SL:
    case Family::PSL:
    case Family::SU:
    case Family::PSU:
      if (s.n < 2 || s.n > 4) fail("dimension must be in 2..4");
      // q = 9 is admitted in dimension 2 so that SL(2,9) and PSL(2,9) are available.
      if (s.q < 2 || s.q > (s.n == 2 ? 9 : 5)) fail("field size out of range");
      break;
    case Family::Sp:
    case Family::PSp:
      if (s.n < 2 || s.n > 6 || s.n % 2) fail("symplectic dimension must be 2, 4 or 6");
      if (s.q < 2 || s.q > 3) fail("field size must be 2 or 3");
      break;
    case Family::Mathieu:
      if (s.n != 11 && s.n != 12) fail("only M11 and M12 are available");
      break;
    default:
      break;
  }
}

// Greedy generator selection: keep each candidate that enlarges the group until
// the order formula is met.
PermGroup greedy_group(const PointSet& ps, const std::vector<Matrix>& cands, std::uint64_t target,
                       const std::string& label) {
  std::vector<Perm> gens;
  PermGroup g = PermGroup::trivial(ps.size());
  if (target == 1) return g;
  for (const auto& m : cands) {
    Perm x = ps.act(m);
    if (x.is_identity() || g.contains(x)) continue;
    gens.push_back(std::move(x));
    g = PermGroup(ps.size(), gens);
    if (g.order() == target) return g;
    if (g.order() > target)
      throw InternalError("catalog", label + ": generated group exceeds the expected order");
  }
  throw InternalError("catalog", label + ": candidate generators fall short of the expected order");
}

std::vector<Matrix> elementary_transvections(const GF& f, int n) {
  std::vector<Matrix> out;
  for (int a : f.prime_basis())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Matrix m = identity_matrix(f, n);
        m[i * n + j] = a;
        out.push_back(std::move(m));
      }
  return out;
}

// x -> x + a B(x,v) v for the alternating form with antidiagonal Gram matrix.
std::vector<Matrix> symplectic_transvections(const GF& f, int n) {
  int m = n / 2;
  std::vector<std::vector<int>> vs;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = 1;
    vs.push_back(v);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> v(n, 0);
      v[i] = v[j] = 1;
      vs.push_back(v);
    }
  std::vector<Matrix> out;
  for (int a : f.prime_basis())
    for (const auto& v : vs) {
      Matrix mat = identity_matrix(f, n);
      for (int i = 0; i < n; ++i) {
        int b = i < m ? v[n - 1 - i] : f.neg(v[n - 1 - i]);
        int c = f.mul(a, b);
        for (int j = 0; j < n; ++j) mat[i * n + j] = f.add(mat[i * n + j], f.mul(c, v[j]));
      }
      out.push_back(std::move(mat));
    }
  return out;
}

// Unitary transvections x -> x + a (x,v) v over GF(q^2), (x,y) = sum x_i y_{n-1-i}^q,
// with v isotropic and a of trace zero.
std::vector<Matrix> unitary_transvections(const GF& f, int n, int q) {
  auto conj = [&](int x) { return f.pow(x, q); };
  std::vector<int> trace_zero;
  for (int a = 1; a < f.q(); ++a)
    if (f.add(a, conj(a)) == 0) trace_zero.push_back(a);
  std::vector<Matrix> out;
  std::uint64_t total = ipow(static_cast<std::uint64_t>(f.q()), n);
  std::vector<int> v(n);
  for (std::uint64_t c = 1; c < total; ++c) {
    std::uint64_t x = c;
    for (int i = 0; i < n; ++i, x /= f.q()) v[i] = static_cast<int>(x % f.q());
    int lead = 0;
    for (int i = 0; i < n && !lead; ++i) lead = v[i];
    if (lead != 1) continue;
    int form = 0;
    for (int i = 0; i < n; ++i) form = f.add(form, f.mul(v[i], conj(v[n - 1 - i])));
    if (form != 0) continue;
    for (int a : trace_zero) {
      Matrix mat = identity_matrix(f, n);
      for (int i = 0; i < n; ++i) {
        int coeff = f.mul(a, conj(v[n - 1 - i]));
        for (int j = 0; j < n; ++j) mat[i * n + j] = f.add(mat[i * n + j], f.mul(coeff, v[j]));
      }
      out.push_back(std::move(mat));
    }
  }
  // SU_3(2) is not generated by its transvections. When the matrix space is
  // small, every unitary matrix of determinant 1 is appended as a fallback.
  if (ipow(static_cast<std::uint64_t>(f.q()), n * n) <= (std::uint64_t{1} << 20)) {
    Matrix j(n * n, 0);
    for (int i = 0; i < n; ++i) j[i * n + n - 1 - i] = 1;
    Matrix m(n * n, 0), mbar_t(n * n);
    std::uint64_t space = ipow(static_cast<std::uint64_t>(f.q()), n * n);
    for (std::uint64_t c = 0; c < space; ++c) {
      std::uint64_t x = c;
      for (int i = 0; i < n * n; ++i, x /= f.q()) m[i] = static_cast<int>(x % f.q());
      if (mat_det(f, n, m) != 1) continue;
      for (int r = 0; r < n; ++r)
        for (int s2 = 0; s2 < n; ++s2) mbar_t[s2 * n + r] = conj(m[r * n + s2]);
      if (mat_mul(f, n, mat_mul(f, n, m, j), mbar_t) == j) out.push_back(m);
    }
  }
  return out;
}

PermGroup build_classical(const GroupSpec& s, std::uint64_t target) {
  const int n = s.n, q = s.q;
  const std::string label = s.label();
  switch (s.family) {
    case Family::GL: {
      GF f(q);
      PointSet ps(f, n, q == 2);
      auto cands = elementary_transvections(f, n);
      Matrix d = identity_matrix(f, n);
      d[0] = f.primitive();
      cands.insert(cands.begin(), d);
      return greedy_group(ps, cands, target, label);
    }
    case Family::SL:
    case Family::PSL: {
      GF f(q);
      bool proj = s.family == Family::PSL || std::gcd(n, q - 1) == 1;
      PointSet ps(f, n, proj);
      return greedy_group(ps, elementary_transvections(f, n), target, label);
    }
    case Family::SU:
    case Family::PSU: {
      GF f(q * q);
      bool proj = s.family == Family::PSU || std::gcd(n, q + 1) == 1;
      PointSet ps(f, n, proj);
      return greedy_group(ps, unitary_transvections(f, n, q), target, label);
    }
    case Family::Sp:
    case Family::PSp: {
      GF f(q);
      bool proj = s.family == Family::PSp || q % 2 == 0;
      PointSet ps(f, n, proj);
      return greedy_group(ps, symplectic_transvections(f, n), target, label);
    }
    default:
      throw InternalError("catalog", "not a classical family");
  }
}

PermGroup dihedral(int order) {
  int k = order / 2;
  if (k == 2) return PermGroup(4, {Perm::parse("(0 1)", 4), Perm::parse("(2 3)", 4)});
  Perm rot(k), refl(k);
  for (int i = 0; i < k; ++i) {
    rot[i] = static_cast<Point>((i + 1) % k);
    refl[i] = static_cast<Point>((k - i) % k);
  }
  return PermGroup(k, {rot, refl});
}

PermGroup alternating(int n, bool symmetric) {
  if (n <= 1 || (!symmetric && n <= 2)) return PermGroup::trivial(std::max(n, 1));
  std::vector<Perm> gens;
  if (symmetric) {
    Perm t(n), c(n);
    t[0] = 1;
    t[1] = 0;
    for (int i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
    gens = {t, c};
  } else {
    Perm t(n);
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
    gens.push_back(t);
    if (n >= 4) {
      Perm c(n);
      // Odd n: the n-cycle; even n: the (n-1)-cycle on 1..n-1.
      if (n % 2) {
        for (int i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
      } else {
        for (int i = 1; i < n; ++i) c[i] = static_cast<Point>(i + 1 < n ? i + 1 : 1);
      }
      gens.push_back(c);
    }
  }
  return PermGroup(n, std::move(gens), {.base_prefix = {}, .known_order = symmetric ? factorial(n) : factorial(n) / 2, .seed = 0});
}

const Catalog& default_catalog() {
  static std::once_flag once;
  static Catalog cat;
  std::call_once(once, [] { cat = Catalog::load(Catalog::default_path()); });
  return cat;
}

}  // namespace

// ---- GroupSpec ------------------------------------------------------------------

std::string GroupSpec::label() const {
  switch (family) {
    case Family::Alt: return "A" + std::to_string(n);
    case Family::Sym: return "S" + std::to_string(n);
    case Family::Cyclic: return "C" + std::to_string(n);
    case Family::Dihedral: return "D" + std::to_string(n);
    case Family::Mathieu: return "M" + std::to_string(n);
    case Family::Monomial:
      return "G(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(n) + "," +
             std::to_string(p) + "," + std::to_string(l) + ")";
    case Family::Wreath: return "Wr(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::DirectProduct: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].label();
      return s;
    }
    default:
      return std::string(family_prefix(family)) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  }
}

GroupSpec GroupSpec::parse(const std::string& label0) {
  std::string label;
  for (char c : label0)
    if (!std::isspace(static_cast<unsigned char>(c))) label += c;
  auto parts = split_product(label);
  GroupSpec s;
  if (parts.size() > 1) {
    s.family = Family::DirectProduct;
    for (const auto& part : parts) s.factors.push_back(parse(part));
    return s;
  }
  static const std::regex simple(R"(([ASCDM])(\d+))");
  static const std::regex matrix(R"((GL|SL|PSL|SU|PSU|Sp|PSp)\((\d+),(\d+)\))");
  static const std::regex mono(R"(G\((\d+),(\d+),(\d+),(\d+)(?:,(\d+))?\))");
  static const std::regex wreath(R"(Wr\((\d+),(\d+)\))");
  std::smatch mt;
  auto num = [&](int i) { return std::stoi(mt[i].str()); };
  try {
    if (std::regex_match(label, mt, simple)) {
      static const std::map<char, Family> fam = {{'A', Family::Alt}, {'S', Family::Sym}, {'C', Family::Cyclic},
                                                 {'D', Family::Dihedral}, {'M', Family::Mathieu}};
      s.family = fam.at(mt[1].str()[0]);
      s.n = num(2);
      return s;
    }
    if (std::regex_match(label, mt, matrix)) {
      static const std::map<std::string, Family> fam = {
          {"GL", Family::GL}, {"SL", Family::SL}, {"PSL", Family::PSL}, {"SU", Family::SU},
          {"PSU", Family::PSU}, {"Sp", Family::Sp}, {"PSp", Family::PSp}};
      s.family = fam.at(mt[1].str());
      s.n = num(2);
      s.q = num(3);
      return s;
    }
    if (std::regex_match(label, mt, mono)) {
      s.family = Family::Monomial;
      s.m = num(1);
      s.k = num(2);
      s.n = num(3);
      s.p = num(4);
      s.l = mt[5].matched ? num(5) : 1;
      return s;
    }
    if (std::regex_match(label, mt, wreath)) {
      s.family = Family::Wreath;
      s.m = num(1);
      s.n = num(2);
      return s;
    }
  } catch (const std::out_of_range&) {
    throw InputError("catalog", "number out of range in group label '" + label0 + "'");
  }
  throw InputError("catalog", "unknown group label '" + label0 + "'");
}

// ---- catalog file -----------------------------------------------------------------

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("catalog", "cannot open catalog file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("catalog", path + ": " + e.what());
  }
  Catalog c;
  try {
    for (const auto& e : j.at("groups")) {
      CatalogEntry entry;
      entry.label = e.at("label").get<std::string>();
      entry.degree = e.at("degree").get<int>();
      entry.generators = e.at("generators").get<std::vector<std::string>>();
      entry.order = e.at("order").get<std::string>();
      c.entries_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("catalog", path + ": " + e.what());
  }
  return c;
}

const std::string& Catalog::default_path() {
  static const std::string path = [] {
    if (const char* env = std::getenv("PFUSION_CATALOG")) return std::string(env);
    std::string in_tree = std::string(PFUSION_DATA_DIR) + "/catalog.json";
    if (std::filesystem::exists(in_tree)) return in_tree;
    return std::string(PFUSION_INSTALL_DATA_DIR) + "/catalog.json";
  }();
  return path;
}

const CatalogEntry* Catalog::find(const std::string& label) const {
  for (const auto& e : entries_)
    if (e.label == label) return &e;
  return nullptr;
}

PermGroup Catalog::build(const std::string& label) const {
  const CatalogEntry* e = find(label);
  if (!e) throw InputError("catalog", "no catalog entry '" + label + "'");
  std::vector<Perm> gens;
  for (const auto& s : e->generators) gens.push_back(Perm::parse(s, e->degree));
  std::uint64_t expected = std::stoull(e->order);
  PermGroup g(e->degree, std::move(gens));
  if (g.order() != expected)
    throw InputError("catalog", label + ": generators give order " + std::to_string(g.order()) +
                                    ", file documents " + e->order);
  return g;
}

// ---- builders --------------------------------------------------------------------

std::optional<std::uint64_t> expected_order(const GroupSpec& s) {
  std::uint64_t q = static_cast<std::uint64_t>(s.q);
  switch (s.family) {
    case Family::Alt: return s.n <= 1 ? 1 : factorial(s.n) / 2;
    case Family::Sym: return factorial(s.n);
    case Family::Cyclic:
    case Family::Dihedral: return static_cast<std::uint64_t>(s.n);
    case Family::GL: return gl_order(s.n, q);
    case Family::SL: return gl_order(s.n, q) / (q - 1);
    case Family::PSL: return gl_order(s.n, q) / (q - 1) / std::gcd<std::uint64_t>(s.n, q - 1);
    case Family::SU: return su_order(s.n, q);
    case Family::PSU: return su_order(s.n, q) / std::gcd<std::uint64_t>(s.n, q + 1);
    case Family::Sp: return sp_order(s.n / 2, q);
    case Family::PSp: return sp_order(s.n / 2, q) / std::gcd<std::uint64_t>(2, q - 1);
    case Family::Mathieu:
      if (s.n == 11) return 7920;
      if (s.n == 12) return 95040;
      return std::nullopt;
    case Family::Monomial:
      return ipow(static_cast<std::uint64_t>(s.m), s.n) * factorial(s.n) / static_cast<std::uint64_t>(s.k);
    case Family::Wreath: return ipow(static_cast<std::uint64_t>(s.m), s.n) * factorial(s.n);
    case Family::DirectProduct: {
      std::uint64_t r = 1;
      for (const auto& f : s.factors) {
        auto o = expected_order(f);
        if (!o) return std::nullopt;
        r *= *o;
      }
      return r;
    }
  }
  return std::nullopt;
}

PermGroup build(const GroupSpec& s, const Catalog* catalog) {
  check_bounds(s);
  auto expected = expected_order(s);
  PermGroup g;
  switch (s.family) {
    case Family::Alt: g = alternating(s.n, false); break;
    case Family::Sym: g = alternating(s.n, true); break;
    case Family::Cyclic: {
      Perm c(s.n);
      for (int i = 0; i < s.n; ++i) c[i] = static_cast<Point>((i + 1) % s.n);
      g = PermGroup(s.n, {c});
      break;
    }
    case Family::Dihedral: g = dihedral(s.n); break;
    case Family::Mathieu:
      g = (catalog ? *catalog : default_catalog()).build(s.label());
      break;
    case Family::Monomial: g = MonomialGroup(s.m, s.k, s.n, s.l, s.p).action(); break;
    case Family::Wreath: g = wreath_cyclic_symmetric(s.m, s.n); break;
    case Family::DirectProduct: {
      if (s.factors.empty()) throw InputError("catalog", "empty direct product");
      g = build(s.factors[0], catalog);
      for (std::size_t i = 1; i < s.factors.size(); ++i) g = direct_product(g, build(s.factors[i], catalog));
      break;
    }
    default: g = build_classical(s, *expected); break;
  }
  if (expected && g.order() != *expected)
    throw InternalError("catalog", s.label() + ": built order " + std::to_string(g.order()) +
                                       " differs from formula " + std::to_string(*expected));
  return g;
}

PermGroup build(const std::string& label, const Catalog* catalog) {
  return build(GroupSpec::parse(label), catalog);
}

PermGroup direct_product(const PermGroup& g1, const PermGroup& g2) {
  int d1 = g1.degree(), d2 = g2.degree(), d = d1 + d2;
  std::vector<Perm> gens;
  for (const auto& x : g1.generators()) gens.push_back(x.extended(d));
  for (const auto& y : g2.generators()) {
    Perm z(d);
    for (int i = 0; i < d2; ++i) z[d1 + i] = static_cast<Point>(d1 + y[i]);
    gens.push_back(std::move(z));
  }
  return PermGroup(d, std::move(gens), {.base_prefix = {}, .known_order = g1.order() * g2.order(), .seed = 0});
}

PermGroup central_quotient(const PermGroup& g, const PermGroup& z) {
  for (const auto& x : z.generators())
    if (!g.contains(x)) throw PreconditionError("catalog", "Z is not a subgroup of G");
  for (const auto& x : z.generators())
    for (const auto& y : g.generators())
      if (x * y != y * x) throw PreconditionError("catalog", "Z is not central in G");
  std::uint64_t target = g.order() / z.order();
  if (z.is_trivial()) return g;
  // First try the action on Z-orbits; Z is normal so they form blocks.
  auto ids = orbit_partition(g.degree(), z.generators());
  std::map<int, int> relabel;
  for (int id : ids) relabel.emplace(id, static_cast<int>(relabel.size()));
  int nb = static_cast<int>(relabel.size());
  std::vector<int> block(g.degree());
  std::vector<int> rep(nb, -1);
  for (int i = 0; i < g.degree(); ++i) {
    block[i] = relabel[ids[i]];
    if (rep[block[i]] < 0) rep[block[i]] = i;
  }
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) {
    Perm y(nb);
    for (int b = 0; b < nb; ++b) y[b] = static_cast<Point>(block[x[rep[b]]]);
    gens.push_back(std::move(y));
  }
  PermGroup h(nb, gens);
  if (h.order() == target) return h;
  // Fall back to right multiplication on the cosets of Z.
  if (target > static_cast<std::uint64_t>(kMaxDegree))
    throw CapError("catalog", "coset action of the central quotient exceeds the degree cap");
  auto elems = g.elements();
  std::map<Perm, int> coset;
  auto zel = z.elements();
  int nc = 0;
  for (const auto& e : elems) {
    if (coset.count(e)) continue;
    for (const auto& c : zel) coset[c * e] = nc;
    ++nc;
  }
  std::vector<Perm> reps(nc);
  for (const auto& [e, c] : coset) reps[c] = e;
  gens.clear();
  for (const auto& x : g.generators()) {
    Perm y(nc);
    for (int c = 0; c < nc; ++c) y[c] = static_cast<Point>(coset.at(reps[c] * x));
    gens.push_back(std::move(y));
  }
  return PermGroup(nc, std::move(gens), {.base_prefix = {}, .known_order = target, .seed = 0});
}

}  // namespace pfusion
