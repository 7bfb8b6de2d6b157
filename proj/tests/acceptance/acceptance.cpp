// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock
// limit. `--expect-fail` lists criteria whose failure is known and analyzed;
// they still print FAIL but do not change the exit code.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfusion/catalog.hpp"
#include "pfusion/classify.hpp"
#include "pfusion/cohomology.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/fusion.hpp"
#include "pfusion/indexp.hpp"
#include "pfusion/saturate.hpp"
#include "pfusion/tables.hpp"
#include "report.hpp"

using namespace pfusion;

namespace {

struct Log {
  bool ok = true;
  std::vector<std::string> lines;
  void check(bool cond, const std::string& what) {
    if (!cond) ok = false;
    lines.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { lines.push_back("     " + what); }
};

std::string str(std::uint64_t x) { return std::to_string(x); }

FusionSystem fusion_of(const std::string& label, int p) { return group_fusion(build(label), p); }

struct Sys {
  const char* group;
  int p;
};

// Group-realized systems used by the saturation and structural criteria.
const std::vector<Sys>& catalog_systems() {
  static const std::vector<Sys> v = {
      {"S4", 2},      {"S4", 3},       {"A4", 2},      {"D8", 2},        {"A5", 2},      {"A5", 3},
      {"A5", 5},      {"A6", 2},       {"A6", 3},      {"GL(2,3)", 2},   {"SL(2,3)", 2}, {"PSL(3,2)", 2},
      {"PSL(3,2)", 7}, {"SL(2,9)", 2}, {"S3xS3", 2},   {"S3xS3", 3},     {"A4xS3", 2},   {"A4xS3", 3},
      {"A7", 3},      {"A8", 2},       {"A8", 3},      {"A9", 3},        {"A10", 3},     {"A11", 3},
      {"A12", 3},     {"M11", 2},      {"M11", 3},     {"M12", 2},       {"M12", 3},     {"Sp(6,2)", 3},
      {"PSU(4,2)", 3}, {"PSp(4,3)", 3}};
  return v;
}

// ---- criteria --------------------------------------------------------------------------

void alternating(Log& log) {
  for (int n = 7; n <= 12; ++n) {
    auto g = gamma(fusion_of("A" + std::to_string(n), 3));
    std::uint64_t want = (n % 3 == 0 || n % 3 == 1) ? 1 : 2;
    log.check(g.order == want, "A" + std::to_string(n) + ": |Gamma| = " + str(g.order) + ", expected " + str(want));
    if (g.order != want && n < 9)
      log.note("Sylow 3-subgroup of A" + std::to_string(n) + " is C3 x C3 (abelian), so Gamma = Aut_F(S) = N/C of order " +
               str(g.aut_order));
  }
  PermGroup a11 = build("A11"), a9 = build("A9");
  std::vector<Perm> gens;
  for (const Perm& x : a9.generators()) gens.push_back(x.extended(11));
  PermGroup a9e(11, gens);
  PermGroup s = sylow(a9e, 3);
  auto f11 = group_fusion(a11, 3, {}, &s);
  auto f9 = group_fusion(a9e, 3, {}, &s);
  log.check(equal_systems(op_prime_system(f11), f9), "O^{3'}(F(A11,3)) = F(A9,3) over a shared Sylow subgroup");
}

void mathieu(Log& log) {
  for (auto [label, p] : std::vector<std::pair<const char*, int>>{{"M11", 2}, {"M12", 2}, {"M12", 3}}) {
    auto f = fusion_of(label, p);
    auto a = analyze_index_prime(f);
    auto cert = simplicity_certificate(f, a);
    std::string name = std::string(label) + " p=" + std::to_string(p);
    log.check(a.gamma.order == 1, name + ": |Gamma| = " + str(a.gamma.order));
    log.check(cert.verdict == Simplicity::Simple, name + ": certificate " + to_string(cert.verdict) + " (" + cert.reason + ")");
  }
  auto f = fusion_of("M11", 3);
  log.check(f.lattice()[f.lattice().top()].abelian && f.s().order() == 9, "M11 p=3: Sylow subgroup abelian of order 9");
  auto pr = predict(*query_for_label("M11", 3));
  log.check(pr.s_abelian, "M11 p=3: predictor reports S abelian");
  log.note("p = 11 is not attempted: the predictor marks it abelian and no computation is needed");
}

void classical(Log& log) {
  auto f = fusion_of("Sp(6,2)", 3);
  const auto& lat = f.lattice();
  auto a = analyze_index_prime(f);
  log.check(a.gamma.order == 2, "|Gamma| = " + str(a.gamma.order));
  int aid = -1;
  for (int id : weakly_closed_centric(f, true))
    if (lat[id].order == 27) {
      bool elementary = true;
      for (Elem x : lat[id].elems) elementary = elementary && (x == 0 || f.s().elem_order(x) == 3);
      if (elementary) aid = id;
    }
  log.check(aid >= 0, "A = (C3)^3 found among the abelian weakly closed centric subgroups");
  if (aid < 0) return;
  log.check(is_weakly_closed(f, aid) && is_centric(f, aid), "A weakly closed and centric");
  log.check(f.aut_order(aid) == 48, "|Aut_F(A)| = " + str(f.aut_order(aid)));
  std::uint64_t kernel = a.op_prime.aut_order(aid);
  std::uint64_t g223 = MonomialGroup(2, 2, 3, 1, 3).enumerate().size();
  log.check(kernel == 24 && g223 == 24, "|Aut_{O^{3'}(F)}(A)| = " + str(kernel) + ", |G(2,2,3)| = " + str(g223));
  auto b = gamma_bounds(f, aid);
  log.check(b.lower <= 2 && 2 <= b.upper, "gamma_bounds bracket 2: [" + str(b.lower) + ", " + str(b.upper) + "]");
  auto th = theta_via_weakly_closed(f, aid);
  log.check(th.quotient_order == 2 && th.well_defined && th.injective && th.surjective,
            "theta_via_weakly_closed: quotient " + str(th.quotient_order) + ", bijective");
}

void defining_char(Log& log) {
  auto f1 = fusion_of("PSU(4,2)", 3), f2 = fusion_of("PSp(4,3)", 3);
  auto g1 = gamma(f1).order, g2 = gamma(f2).order;
  log.check(g1 == 1, "PSU(4,2) p=3: |Gamma| = " + str(g1));
  log.check(g2 == 1, "PSp(4,3) p=3: |Gamma| = " + str(g2));
  auto p1 = fingerprint(f1), p2 = fingerprint(f2);
  log.check(p1 == p2, "fingerprints agree (" + std::to_string(p1.classes) + " vs " + std::to_string(p2.classes) + " classes)");
}

void a6_at_2(Log& log) {
  auto f = fusion_of("A6", 2);
  auto a = analyze_index_prime(f);
  auto cert = simplicity_certificate(f, a);
  log.check(a.gamma.order == 1, "|Gamma| = " + str(a.gamma.order));
  log.check(cert.verdict == Simplicity::Simple, std::string("certificate ") + to_string(cert.verdict));
}

void saturation(Log& log) {
  int ok = 0;
  for (const auto& c : catalog_systems()) {
    auto r = is_saturated(fusion_of(c.group, c.p));
    if (r.saturated)
      ++ok;
    else
      log.check(false, std::string(c.group) + " p=" + std::to_string(c.p) + ": " + r.detail);
  }
  log.check(ok == static_cast<int>(catalog_systems().size()),
            std::to_string(ok) + "/" + std::to_string(catalog_systems().size()) + " group systems saturated");
  auto load = [] {
    std::ifstream in(std::string(PFUSION_FIXTURES) + "/c3xc3_central_inversion.json");
    std::stringstream text;
    text << in.rdbuf();
    DumpInput d = parse_dump(text.str());
    return abstract_closure(d.s, d.p, d.seeds);
  };
  auto f = load();
  auto r1 = is_saturated(f), r2 = is_saturated(load());
  log.check(!r1.saturated && r1.axiom == 2, "C3 x C3 with a central factor inverted fails the extension axiom");
  bool same = r1.witnesses == r2.witnesses && r1.n_phi == r2.n_phi && r1.morphism && r2.morphism &&
              r1.morphism->map == r2.morphism->map;
  log.check(same && r1.n_phi == f.lattice().top(), "witness reproducible, N_phi = S");
}

void structural(Log& log) {
  int pdiv = 0, cent = 0, idem = 0, hyp = 0, hyp_total = 0, alp = 0, alp_total = 0;
  const int total = static_cast<int>(catalog_systems().size());
  for (const auto& c : catalog_systems()) {
    PermGroup g = build(c.group);
    auto f = group_fusion(g, c.p);
    auto a = analyze_index_prime(f);
    std::string name = std::string(c.group) + " p=" + std::to_string(c.p);
    if (a.gamma.order % c.p != 0) ++pdiv; else log.check(false, name + ": p divides |Gamma|");
    auto cf = classify(f), co = classify(a.op_prime);
    if (cf.centric == co.centric && cf.centric_radical == co.centric_radical) ++cent;
    else log.check(false, name + ": centric or centric radical sets differ");
    if (equal_systems(op_prime_system(a.op_prime), a.op_prime)) ++idem;
    else log.check(false, name + ": O^{p'} not idempotent");
    if (f.s().order() > 81) continue;
    ++hyp_total;
    const auto& lat = f.lattice();
    PermGroup sg = lat.s().group();
    PermGroup inter = intersection(sg, op_residual(g, c.p));
    std::vector<Elem> gens;
    for (const Perm& x : inter.generators()) gens.push_back(lat.s().index(x));
    if (hyperfocal(f) == lat.generated(gens)) ++hyp;
    else log.check(false, name + ": hyperfocal differs from S cap O^p(G)");
    ++alp_total;
    std::vector<Iso> seeds;
    for (int r : centric_radical_set(f))
      for (const Perm& x : f.aut_generators(r)) seeds.push_back({r, r, x});
    if (equal_systems(f, close_morphisms(f.lattice_ptr(), seeds))) ++alp;
    else log.check(false, name + ": not generated by centric radical automizers");
  }
  auto frac = [](int a, int b) { return std::to_string(a) + "/" + std::to_string(b); };
  log.check(pdiv == total, "p does not divide |Gamma|: " + frac(pdiv, total));
  log.check(cent == total, "(O^{p'}F)^c = F^c and (O^{p'}F)^cr = F^cr: " + frac(cent, total));
  log.check(idem == total, "O^{p'}(O^{p'}(F)) = O^{p'}(F): " + frac(idem, total));
  log.check(hyp == hyp_total, "hyperfocal = S cap O^p(G) for |S| <= 81: " + frac(hyp, hyp_total));
  log.check(alp == alp_total, "Alperin generation for |S| <= 81: " + frac(alp, alp_total));
  for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{{"S3", "S3"}, {"A4", "S3"}})
    for (int p : {2, 3}) {
      auto f1 = fusion_of(x, p), f2 = fusion_of(y, p);
      auto g1 = gamma(f1).order, g2 = gamma(f2).order, g12 = gamma(product(f1, f2)).order;
      log.check(g12 == g1 * g2, std::string(x) + " x " + y + " p=" + std::to_string(p) + ": " + str(g12) + " = " +
                                    str(g1) + " * " + str(g2));
    }
  for (const char* label : {"SL(2,3)", "SL(2,9)"}) {
    auto f = fusion_of(label, 2);
    int z = Z_of_F(f);
    auto gq = gamma(quotient_by_central(f, z)).order, gf = gamma(f).order;
    log.check(f.lattice()[z].order > 1 && gq == gf,
              std::string(label) + " p=2: Gamma(F/Z(F)) = " + str(gq) + ", Gamma(F) = " + str(gf));
  }
}

void tables(Log& log, const std::string& fusion_bin) {
  int orders = 0, orders_total = 0;
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= m; ++k) {
      if (m % k) continue;
      for (int n = 1; n <= 3; ++n)
        for (int l = 1; l <= 2; ++l) {
          ++orders_total;
          MonomialGroup g(m, k, n, l, 13);
          if (g.enumerate().size() == g.formula_order()) ++orders;
          else log.check(false, "G(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(n) + ") order");
        }
    }
  log.check(orders == orders_total, "|G(m,k,n)| = m^n n!/k by enumeration: " + std::to_string(orders) + "/" +
                                        std::to_string(orders_total));
  int ids = 0, ids_total = 0;
  for (int p : {3, 5, 7})
    for (long q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
      for (int n = 1; n <= 6; ++n) {
        if (q % p == 0) continue;
        for (const auto& id : index_identities(p, q, n)) {
          ++ids_total;
          if (id.lhs == id.rhs) ++ids;
          else log.check(false, id.name + " p=" + std::to_string(p) + " q=" + std::to_string(q) + " n=" + std::to_string(n));
        }
      }
  log.check(ids == ids_total, "index valuation identities: " + std::to_string(ids) + "/" + std::to_string(ids_total));
  log.check(find_dual_prime(5, 3) == 2, "find_dual_prime(5, 3) = " + std::to_string(find_dual_prime(5, 3)));
  report::RunOptions ro;
  auto s = report::survey(ro, 1);
  log.check(s.mismatches == 0, "in-process survey: " + std::to_string(s.mismatches) + " mismatches over " +
                                   std::to_string(s.rows.size()) + " rows");
  if (!fusion_bin.empty()) {
    std::string cmd = "\"" + fusion_bin + "\" --no-cache survey > /dev/null";
    int rc = std::system(cmd.c_str());
    log.check(rc == 0, "`fusion survey` exit code " + std::to_string(rc));
  } else {
    log.check(false, "`fusion survey` not run: pass --fusion-bin");
  }
}

void cohomology(Log& log) {
  log.check(h1(module_from_matrices(3, 1, 1, {})).order == 1, "trivial group: H^1 = 0");
  log.check(h1(module_from_matrices(3, 1, 1, {{2}})).order == 1, "C2 inverting C3: H^1 = 0");
  auto c3 = h1(module_from_group(build("C3"), 3, 1, 1, {{1}}));
  log.check(c3.invariants == std::vector<std::uint64_t>{3}, "C3 trivially on C3: H^1 = C3");
  MonomialGroup g(4, 4, 2, 1, 5);
  std::vector<ModMatrix> mats;
  for (const auto& x : g.generators()) mats.push_back(g.matrix(x));
  auto r = h1(module_from_matrices(5, 1, 2, mats));
  log.check(r.order == 1 && r.order * r.b1_order == r.z1_order, "G(4,4,2) on (C5)^2: H^1 = 0");
  std::mt19937_64 rng(99);
  int done = 0, vanish = 0;
  while (done < 50) {
    const int primes[] = {3, 5, 7};
    int p = primes[rng() % 3];
    int rank = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(p - 1, 4)));
    // Monomial matrices with (p-1)-th roots of unity and rank < p have order prime to p.
    std::vector<ModMatrix> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<int> perm(rank);
      for (int i = 0; i < rank; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      ModMatrix m(static_cast<std::size_t>(rank) * rank, 0);
      for (int i = 0; i < rank; ++i) m[perm[i] * rank + i] = 1 + static_cast<std::int64_t>(rng() % (p - 1));
      gens.push_back(std::move(m));
    }
    GModule mod;
    try {
      mod = module_from_matrices(p, 1, rank, gens);
    } catch (const CapError&) {
      continue;
    }
    if (mod.table.size() % p == 0) continue;
    ++done;
    auto h = h1(mod);
    if (h.order == 1 && h.order * h.b1_order == h.z1_order) ++vanish;
  }
  log.check(vanish == 50, "coprime randomized instances with H^1 = 0: " + std::to_string(vanish) + "/50");
}

std::vector<Perm> closure(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& g : gens) {
      Perm h = queue[i] * g;
      if (seen.insert(h).second) queue.push_back(h);
    }
  return {seen.begin(), seen.end()};
}

bool in(const std::vector<Perm>& sorted, const Perm& x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

void permgroup_oracle(Log& log) {
  const char* ambients[] = {"A7", "S6", "PSL(3,2)", "GL(2,3)", "A6", "S5", "PSL(2,8)"};
  std::mt19937_64 rng(2026);
  int counts[6] = {0, 0, 0, 0, 0, 0};
  const char* names[6] = {"order", "membership", "normalizer", "centralizer", "Sylow", "p-core"};
  const int trials = 30;
  for (int t = 0; t < trials; ++t) {
    PermGroup amb = build(ambients[t % 7]);
    const int d = amb.degree();
    auto all = amb.elements();
    std::vector<Perm> hg{amb.random(rng)};
    if (t % 3 != 0) hg.push_back(amb.random(rng));
    PermGroup h(d, hg);
    auto hall = closure(d, hg);
    bool ok = h.order() == hall.size() && h.elements() == hall;
    counts[0] += ok;
    bool mem = true;
    for (int k = 0; k < 40; ++k) {
      Perm x = all[rng() % all.size()];
      mem = mem && h.contains(x) == in(hall, x);
    }
    counts[1] += mem;
    std::vector<Perm> nb, cb;
    for (const Perm& x : all) {
      bool norm = true, cent = true;
      for (const Perm& y : hg) {
        Perm c = y.conj(x);
        norm = norm && in(hall, c);
        cent = cent && c == y;
      }
      if (norm) nb.push_back(x);
      if (cent) cb.push_back(x);
    }
    counts[2] += normalizer(amb, h).elements() == nb;
    counts[3] += centralizer(amb, h).elements() == cb;
    bool syl = true, core = true;
    for (int p : {2, 3, 5, 7, 11}) {
      if (hall.size() % p) continue;
      PermGroup s = sylow(h, p, t);
      auto sall = s.elements();
      std::size_t sz = sall.size();
      while (sz % p == 0) sz /= p;
      syl = syl && s.order() == p_part(hall.size(), p) && sz == 1 &&
            std::all_of(sall.begin(), sall.end(), [&](const Perm& x) { return in(hall, x); });
      // O_p(H): elements of S lying in every H-conjugate of S.
      std::vector<Perm> inter;
      for (const Perm& x : sall) {
        bool every = true;
        for (const Perm& g : hall) every = every && in(sall, x.conj(g));
        if (every) inter.push_back(x);
      }
      core = core && p_core(h, p).elements() == inter;
    }
    counts[4] += syl;
    counts[5] += core;
  }
  for (int i = 0; i < 6; ++i)
    log.check(counts[i] == trials, std::string(names[i]) + ": " + std::to_string(counts[i]) + "/" + std::to_string(trials));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pfusion acceptance suite"};
  std::vector<int> only, expect_fail;
  std::string fusion_bin;
  bool verbose = false;
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--expect-fail", expect_fail, "Criteria whose failure is known and documented");
  app.add_option("--fusion-bin", fusion_bin, "Path of the fusion executable, for the survey exit-code check");
  app.add_flag("-v,--verbose", verbose, "Print every check, not only failures");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<void(Log&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "alternating survey A7..A12 at p = 3", 60, alternating},
      {2, "Mathieu groups", 120, mathieu},
      {3, "Sp6(2) at p = 3 via a weakly closed (C3)^3", 600, classical},
      {4, "PSU4(2) and PSp4(3) at p = 3", 300, defining_char},
      {5, "A6 at p = 2", 10, a6_at_2},
      {6, "saturation of group systems and the abstract non-example", 60, saturation},
      {7, "structural invariants", 600, structural},
      {8, "tables, arithmetic and predictor survey", 30, [&](Log& l) { tables(l, fusion_bin); }},
      {9, "first cohomology", 30, cohomology},
      {10, "permutation group algorithms against enumeration", 60, permgroup_oracle},
  };

  int unexpected = 0, failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Log log;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const Error& e) {
      log.check(false, std::string("exception from ") + e.module() + ": " + e.what());
    } catch (const std::exception& e) {
      log.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) log.check(false, "time limit exceeded");
    bool expected = std::find(expect_fail.begin(), expect_fail.end(), c.id) != expect_fail.end();
    std::ostringstream head;
    head.setf(std::ios::fixed);
    head.precision(2);
    head << (log.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << secs << " s, limit " << c.limit
         << " s)";
    if (!log.ok && expected) head << " [expected failure]";
    if (log.ok && expected) head << " [expected to fail but passed]";
    std::cout << head.str() << '\n';
    for (const auto& l : log.lines)
      if (verbose || !log.ok) std::cout << "    " << l << '\n';
    if (!log.ok) {
      ++failed;
      if (!expected) ++unexpected;
    }
  }
  std::cout << failed << " criteria failed, " << unexpected << " unexpectedly\n";
  return unexpected == 0 ? 0 : 1;
}
