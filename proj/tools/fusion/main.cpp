// fusion: command-line front end for the pfusion library.
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/saturate.hpp"
#include "report.hpp"

using namespace pfusion;
using nlohmann::json;

namespace {

struct Globals {
  std::string catalog;
  std::uint64_t seed = 0;
  std::uint64_t lattice_cap = kDefaultLatticeCap;
  std::uint64_t closure_cap = 1000000;
  bool json = false;
  bool no_cache = false;
  bool timing = false;
  std::string cache_dir;
};

std::string gens_of(const SubgroupLattice& lat, int id) {
  std::string out;
  for (Elem x : lat[id].gens) out += (out.empty() ? "" : ", ") + lat.s().perm(x).str();
  return "<" + out + ">";
}

void print_report_text(const report::Report& r) {
  const auto& g = r.gamma;
  std::cout << r.group << " at p = " << r.p << ": |G| = " << r.group_order << ", |S| = " << r.sylow_order << '\n'
            << "  subgroups " << r.counts.subgroups << ", S-classes " << r.counts.s_classes << ", F-classes "
            << r.counts.f_classes << ", centric " << r.counts.centric << ", centric radical "
            << r.counts.centric_radical << '\n'
            << "  |O_p(F)| = " << r.flags.op_order << ", |Z(F)| = " << r.flags.center_order
            << ", |hyp(F)| = " << r.flags.hyperfocal_order << ", weakly closed " << r.flags.weakly_closed
            << ", strongly closed " << r.flags.strongly_closed << '\n'
            << "  saturated: " << (r.saturation.saturated ? "yes" : "no (" + r.saturation.detail + ")") << '\n';
  std::cout << "  Gamma: order " << g.gamma_order << " (" << g.structure << "), |Aut_F(S)| = " << g.aut_order
            << ", |Aut_F^0(S)| = " << g.aut0_order << '\n'
            << "  simplicity: " << g.simplicity << " (" << g.simplicity_reason << ")\n";
  const auto& pr = g.prediction;
  if (pr.available) {
    std::cout << "  predicted: " << pr.theorem_case;
    if (pr.gamma_order) std::cout << ", |Gamma| = " << *pr.gamma_order;
    if (pr.simple) std::cout << ", " << (*pr.simple ? "simple" : "not simple");
    if (!pr.realized_by.empty()) std::cout << ", O^{p'}(F) realized by " << pr.realized_by;
    std::cout << '\n';
  } else {
    std::cout << "  predicted: n/a (" << pr.note << ")\n";
  }
  std::cout << "  agreement: Gamma " << g.comparison.gamma << ", simplicity " << g.comparison.simple << '\n';
  if (r.weakly_closed) {
    const auto& w = *r.weakly_closed;
    std::cout << "  weakly closed abelian centric A (id " << w.a << ", order " << w.a_order << "): |Aut_F(A)| = "
              << w.aut_order << ", |Aut_{O^{p'}(F)}(A)| = " << w.kernel_order << ", quotient " << w.quotient_order
              << (w.theta_agrees ? " (agrees)" : " (DISAGREES)");
    if (w.lower) std::cout << ", bounds [" << *w.lower << ", " << *w.upper << "]";
    std::cout << '\n';
    if (w.h1) {
      std::cout << "  H^1(Aut_{O^{p'}(F)}(A); A) = ";
      if (w.h1->empty()) {
        std::cout << "0 (rigidity hypothesis holds)";
      } else {
        for (std::size_t i = 0; i < w.h1->size(); ++i) std::cout << (i ? " x " : "") << "Z/" << (*w.h1)[i];
      }
      std::cout << '\n';
    }
  }
  if (r.seconds) std::cout << "  time: " << *r.seconds << " s\n";
}

int saturate_check(const std::string& path, const FusionOptions& fo, bool as_json) {
  std::ifstream in(path);
  if (!in) throw InputError("cli", "cannot read '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  DumpInput d = parse_dump(text.str());
  FusionSystem f = abstract_closure(d.s, d.p, d.seeds, fo);
  SaturationReport rep = is_saturated(f);
  const auto& lat = f.lattice();
  json witnesses = json::array();
  for (int id : rep.witnesses)
    witnesses.push_back({{"id", id}, {"order", lat[id].order}, {"generators", gens_of(lat, id)}});
  json morphism = nullptr;
  if (rep.morphism) {
    json dom = json::array(), img = json::array();
    for (Elem x : lat[rep.morphism->dom].gens) {
      dom.push_back(lat.s().perm(x).str());
      img.push_back(lat.s().perm(iso_apply(lat, *rep.morphism, x)).str());
    }
    morphism = {{"domain", dom}, {"images", img}};
  }
  json j = {{"schema_version", report::kSchemaVersion},
            {"p", d.p},
            {"sylow_order", f.s().order()},
            {"f_classes", f.classes().size()},
            {"saturated", rep.saturated},
            {"axiom", rep.axiom},
            {"witnesses", witnesses},
            {"morphism", morphism},
            {"n_phi", rep.n_phi >= 0 ? json(gens_of(lat, rep.n_phi)) : json(nullptr)},
            {"detail", rep.detail}};
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else if (rep.saturated) {
    std::cout << "saturated (|S| = " << f.s().order() << ", " << f.classes().size() << " F-classes)\n";
  } else {
    std::cout << "not saturated: axiom " << (rep.axiom == 1 ? "I (Sylow)" : "II (extension)") << " fails\n  "
              << rep.detail << '\n';
    for (const auto& w : witnesses) std::cout << "  witness " << w["generators"].get<std::string>() << '\n';
    if (!morphism.is_null()) std::cout << "  morphism " << morphism.dump() << '\n';
    if (rep.n_phi >= 0) std::cout << "  N_phi " << gens_of(lat, rep.n_phi) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion systems of finite permutation groups: saturation, Gamma_{p'}(F) and simplicity"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--catalog", gl.catalog, "Catalog data file overriding the built-in one")->check(CLI::ExistingFile);
  app.add_option("--seed", gl.seed, "Seed for randomized group algorithms");
  app.add_option("--lattice-cap", gl.lattice_cap, "Largest Sylow order whose lattice is built")
      ->check(CLI::Range(1, kLatticeHardCap));
  app.add_option("--closure-cap", gl.closure_cap, "Largest number of isomorphisms a closure may hold");
  app.add_flag("--json", gl.json, "Print JSON instead of text");
  app.add_flag("--no-cache", gl.no_cache, "Neither read nor write the report cache");
  app.add_option("--cache-dir", gl.cache_dir, "Report cache directory");
  app.add_flag("--timing", gl.timing, "Include wall-clock time in reports");

  std::string group, family, dump_path;
  int p = 0, jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int n = 0, eps = 1;
  std::int64_t q = 0;

  auto* info = app.add_subcommand("info", "Full report for F_S(G)");
  info->add_option("group", group, "Group label, e.g. A9, M12, Sp(6,2)")->required();
  info->add_option("-p,--prime", p, "The prime p")->required();
  auto* gam = app.add_subcommand("gamma", "Gamma_{p'}(F) report for F_S(G)");
  gam->add_option("group", group, "Group label")->required();
  gam->add_option("-p,--prime", p, "The prime p")->required();
  auto* sur = app.add_subcommand("survey", "Compare computed Gamma and simplicity with the predictor");
  sur->add_option("-j,--jobs", jobs, "Rows computed in parallel")->check(CLI::PositiveNumber);
  auto* sat = app.add_subcommand("saturate-check", "Decide saturation of an abstract system from a dump file");
  sat->add_option("dump", dump_path, "Dump file")->required()->check(CLI::ExistingFile);
  auto* pre = app.add_subcommand("predict", "Predicted Gamma and simplicity without group computation");
  pre->add_option("family", family, "Group label (A11, PSp(4,5)) or family (A, M11, M12, PSL, PSU, PSp, Omega, POmega, G2)")
      ->required();
  pre->add_option("-p,--prime", p, "The prime p")->required();
  pre->add_option("-n", n, "Degree or dimension parameter");
  pre->add_option("-q", q, "Field order");
  pre->add_option("--eps", eps, "Sign for POmega")->check(CLI::IsMember({-1, 1}));

  CLI11_PARSE(app, argc, argv);

  try {
    report::RunOptions ro;
    ro.fusion.seed = gl.seed;
    ro.fusion.lattice_cap = gl.lattice_cap;
    ro.fusion.closure_cap = gl.closure_cap;
    ro.timing = gl.timing;
    ro.use_cache = !gl.no_cache;
    ro.cache_dir = gl.cache_dir;
    std::optional<Catalog> cat;
    if (!gl.catalog.empty()) {
      cat = Catalog::load(gl.catalog);
      ro.catalog = &*cat;
      ro.catalog_path = gl.catalog;
    }

    if (*info) {
      auto r = report::analyze(group, p, ro);
      if (gl.json)
        std::cout << report::to_json(r).dump(2) << '\n';
      else
        print_report_text(r);
      return 0;
    }
    if (*gam) {
      auto r = report::analyze(group, p, ro);
      if (gl.json) {
        json j = report::to_json(r.gamma, true);
        if (r.seconds) j["seconds"] = *r.seconds;
        std::cout << j.dump(2) << '\n';
      } else {
        const auto& g = r.gamma;
        std::cout << group << " p=" << p << ": |Gamma| = " << g.gamma_order << " (" << g.structure << "), "
                  << g.simplicity << "; predictor " << (g.comparison.match ? "agrees" : "DISAGREES") << '\n';
      }
      return 0;
    }
    if (*sur) {
      auto s = report::survey(ro, jobs);
      if (gl.json) {
        json rows = json::array();
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
          const auto& r = s.rows[i];
          if (!s.errors[i].empty()) {
            rows.push_back({{"group", r.group}, {"p", r.p}, {"error", s.errors[i]}, {"match", false}});
            continue;
          }
          const auto& pr = r.gamma.prediction;
          rows.push_back({{"group", r.group},
                          {"p", r.p},
                          {"sylow_order", r.sylow_order},
                          {"gamma_order", r.gamma.gamma_order},
                          {"predicted_gamma_order", pr.gamma_order ? json(*pr.gamma_order) : json(nullptr)},
                          {"simplicity", r.gamma.simplicity},
                          {"predicted_simple", pr.simple ? json(*pr.simple) : json(nullptr)},
                          {"match", r.gamma.comparison.match}});
        }
        std::cout << json{{"schema_version", report::kSchemaVersion}, {"rows", rows}, {"mismatches", s.mismatches}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << report::survey_table(s);
      }
      return s.mismatches == 0 ? 0 : 1;
    }
    if (*sat) {
      FusionOptions fo = ro.fusion;
      return saturate_check(dump_path, fo, gl.json);
    }
    if (*pre) {
      PredictQuery query;
      if (auto lq = query_for_label(family, p)) {
        query = *lq;
      } else {
        query.family = family;
        query.p = p;
        query.n = n;
        query.q = q;
        query.eps = eps;
      }
      Prediction pr = predict(query);
      json j = report::prediction_json(pr);
      if (gl.json) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << pr.group << " p=" << pr.p << ": " << pr.theorem_case;
        if (pr.gamma_order) std::cout << ", |Gamma| = " << *pr.gamma_order << " (" << pr.gamma_structure << ")";
        if (pr.simple) std::cout << ", " << (*pr.simple ? "simple" : "not simple");
        if (pr.exotic) std::cout << ", O^{p'}(F) exotic";
        if (!pr.realized_by.empty()) std::cout << ", realized by " << pr.realized_by;
        if (!pr.note.empty()) std::cout << "\n  " << pr.note;
        std::cout << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.module() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
