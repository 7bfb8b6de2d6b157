#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "pfusion/classify.hpp"
#include "pfusion/cohomology.hpp"
#include "pfusion/errors.hpp"
#include "pfusion/indexp.hpp"
#include "pfusion/saturate.hpp"

namespace pfusion::report {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string big(std::uint64_t x) { return std::to_string(x); }
std::uint64_t unbig(const json& j) { return std::stoull(j.get<std::string>()); }

template <class T>
json opt(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}
template <class T>
std::optional<T> unopt(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

PredictionSummary summary_from_json(const json& j) {
  PredictionSummary s;
  s.available = j.at("available").get<bool>();
  s.group = j.at("group").get<std::string>();
  s.theorem_case = j.at("theorem_case").get<std::string>();
  s.gamma_order = unopt<std::uint64_t>(j.at("gamma_order"));
  s.gamma_structure = j.at("gamma_structure").get<std::string>();
  s.simple = unopt<bool>(j.at("simple"));
  s.op_simple = j.at("op_simple").get<bool>();
  s.exotic = j.at("exotic").get<bool>();
  s.s_abelian = j.at("s_abelian").get<bool>();
  s.s_normal = j.at("s_normal").get<bool>();
  s.realized_by = j.at("realized_by").get<std::string>();
  s.note = j.at("note").get<std::string>();
  return s;
}

GammaSection gamma_from_json(const json& j) {
  GammaSection g;
  g.group = j.at("group").get<std::string>();
  g.p = j.at("p").get<int>();
  g.gamma_order = j.at("gamma_order").get<std::uint64_t>();
  g.aut_order = unbig(j.at("aut_order"));
  g.aut0_order = unbig(j.at("aut0_order"));
  g.structure = j.at("structure").get<std::string>();
  g.abelian = j.at("abelian").get<bool>();
  g.invariants = j.at("invariants").get<std::vector<std::uint64_t>>();
  g.exponent = j.at("exponent").get<int>();
  for (const auto& x : j.at("generators"))
    g.generators.emplace_back(x.at("perm").get<std::string>(), x.at("label").get<int>());
  g.aut0_generators = j.at("aut0_generators").get<std::vector<std::string>>();
  for (const auto& x : j.at("op_prime_automizers"))
    g.op_prime_automizers.emplace_back(x.at("rep").get<int>(), unbig(x.at("order")));
  g.simplicity = j.at("simplicity").get<std::string>();
  g.simplicity_reason = j.at("simplicity_reason").get<std::string>();
  g.simplicity_evidence = j.at("simplicity_evidence").get<std::vector<int>>();
  g.prediction = summary_from_json(j.at("prediction"));
  const auto& c = j.at("comparison");
  g.comparison.gamma = c.at("gamma").get<std::string>();
  g.comparison.simple = c.at("simple").get<std::string>();
  g.comparison.match = c.at("match").get<bool>();
  return g;
}

// Smallest abelian weakly closed centric subgroup of largest order.
int pick_weakly_closed(const FusionSystem& f) {
  const auto& lat = f.lattice();
  int best = -1;
  for (int a : weakly_closed_centric(f, true))
    if (best < 0 || lat[a].order > lat[best].order) best = a;
  return best;
}

// H^1 of Aut_E(A) on A for elementary abelian A, with the automizer acting on
// nonidentity positions of A converted to matrices on the generator basis.
std::optional<std::vector<std::uint64_t>> h1_on(const FusionSystem& e, int a) {
  const auto& lat = e.lattice();
  const auto& s = lat.s();
  const auto& sub = lat[a];
  const int p = e.p();
  if (!sub.abelian) return std::nullopt;
  for (Elem x : sub.elems)
    if (x != 0 && s.elem_order(x) != p) return std::nullopt;
  PermGroup aut = e.aut(a);
  if (aut.order() > kMaxCohomologyGroup) return std::nullopt;
  const int r = static_cast<int>(sub.gens.size());
  std::uint64_t size = 1;
  for (int i = 0; i < r; ++i) size *= static_cast<std::uint64_t>(p);
  if (size > kMaxCohomologyModule) return std::nullopt;
  std::map<Elem, std::vector<std::int64_t>> coords;
  for (std::uint64_t code = 0; code < size; ++code) {
    std::vector<std::int64_t> c(r);
    Elem x = 0;
    std::uint64_t t = code;
    for (int i = 0; i < r; ++i) {
      c[i] = static_cast<std::int64_t>(t % p);
      t /= p;
      x = s.mul(x, s.pow(sub.gens[i], c[i]));
    }
    coords[x] = c;
  }
  std::vector<ModMatrix> mats;
  for (const Perm& g : aut.generators()) {
    // g acts on the right, so g^-1 gives a left module.
    Perm gi = g.inverse();
    ModMatrix m(static_cast<std::size_t>(r) * r, 0);
    for (int j = 0; j < r; ++j) {
      int pos = lat.local(a, sub.gens[j]) - 1;
      Elem img = sub.elems[gi[pos] + 1];
      const auto& c = coords.at(img);
      for (int i = 0; i < r; ++i) m[i * r + j] = c[i];
    }
    mats.push_back(std::move(m));
  }
  return h1(module_from_group(aut, p, 1, r, mats)).invariants;
}

Comparison compare(const GammaSection& g) {
  Comparison c;
  const auto& pr = g.prediction;
  if (pr.gamma_order) {
    c.gamma = *pr.gamma_order == g.gamma_order ? "match" : "mismatch";
  }
  if (pr.simple) {
    bool ok = g.simplicity == (*pr.simple ? "simple" : "not simple");
    c.simple = ok ? "match" : "mismatch";
  }
  c.match = c.gamma != "mismatch" && c.simple != "mismatch";
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

fs::path cache_file(const RunOptions& opts, const std::string& key) {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return fs::path(opts.cache_dir.empty() ? default_cache_dir() : opts.cache_dir) / name;
}

std::optional<Report> cache_load(const RunOptions& opts, const std::string& key) {
  std::ifstream in(cache_file(opts, key));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return report_from_json(j.at("report"));
  } catch (const std::exception&) {
    return std::nullopt;  // stale or corrupt entries are recomputed
  }
}

void cache_store(const RunOptions& opts, const std::string& key, const Report& r) {
  std::error_code ec;
  fs::path file = cache_file(opts, key);
  fs::create_directories(file.parent_path(), ec);
  if (ec) return;
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << json{{"key", key}, {"report", to_json(r)}}.dump(1) << '\n';
  }
  fs::rename(tmp, file, ec);
}

Report compute(const std::string& label, int p, const RunOptions& opts) {
  Report rep;
  PermGroup g = build(label, opts.catalog);
  FusionSystem f = group_fusion(g, p, opts.fusion);
  const auto& lat = f.lattice();
  rep.group = label;
  rep.p = p;
  rep.group_order = big(g.order());
  rep.sylow_order = lat.s().order();

  ClassifiedLattice cl = classify(f);
  rep.counts.subgroups = lat.size();
  rep.counts.s_classes = static_cast<int>(lat.s_classes().size());
  rep.counts.f_classes = static_cast<int>(f.classes().size());
  rep.counts.centric = static_cast<int>(cl.centric.size());
  rep.counts.centric_radical = static_cast<int>(cl.centric_radical.size());
  for (const auto& fl : cl.flags) {
    rep.flags.fully_normalized += fl.fully_normalized;
    rep.flags.centric += fl.centric;
    rep.flags.radical += fl.radical;
    rep.flags.weakly_closed += fl.weakly_closed;
    rep.flags.strongly_closed += fl.strongly_closed;
    rep.flags.normal += fl.normal_in_F;
    rep.flags.central += fl.central_in_F;
  }
  rep.flags.op_order = lat[cl.op].order;
  rep.flags.center_order = lat[cl.center].order;
  rep.flags.hyperfocal_order = lat[hyperfocal(f)].order;

  PrimeIndexAnalysis an = analyze_index_prime(f, opts.fusion);
  const GammaReport& gr = an.gamma;
  GammaSection& gs = rep.gamma;
  gs.group = label;
  gs.p = p;
  gs.gamma_order = gr.order;
  gs.aut_order = gr.aut_order;
  gs.aut0_order = gr.aut0_order;
  gs.structure = gr.structure;
  gs.abelian = gr.abelian;
  gs.invariants = gr.invariants;
  gs.exponent = gr.exponent;
  for (std::size_t i = 0; i < gr.generators.size(); ++i) gs.generators.emplace_back(gr.generators[i].str(), gr.labels[i]);
  for (const Perm& x : gr.aut0_generators) gs.aut0_generators.push_back(x.str());
  gs.op_prime_automizers = gr.op_prime_automizers;
  SimplicityCertificate cert = simplicity_certificate(f, an);
  gs.simplicity = to_string(cert.verdict);
  gs.simplicity_reason = cert.reason;
  gs.simplicity_evidence = cert.evidence;
  if (auto q = query_for_label(label, p)) {
    try {
      gs.prediction = summarize(predict(*q));
    } catch (const Error& e) {
      gs.prediction.note = e.what();
    }
  } else {
    gs.prediction.note = "no predictor entry for this label";
  }
  gs.comparison = compare(gs);

  SaturationReport sat = is_saturated(f);
  rep.saturation.saturated = sat.saturated;
  rep.saturation.axiom = sat.axiom;
  rep.saturation.witnesses = sat.witnesses;
  rep.saturation.detail = sat.detail;

  if (int a = pick_weakly_closed(f); a >= 0) {
    WeaklyClosedSection w;
    w.a = a;
    w.a_order = lat[a].order;
    ThetaReport th = theta_via_weakly_closed(f, a, opts.fusion);
    w.aut_order = th.aut_order;
    w.kernel_order = th.kernel_order;
    w.quotient_order = th.quotient_order;
    w.theta_agrees = th.quotient_order == gr.order && (th.fast_path || (th.well_defined && th.injective && th.surjective));
    try {
      GammaBounds b = gamma_bounds(f, a, -1, opts.fusion);
      w.lower = b.lower;
      w.upper = b.upper;
    } catch (const PreconditionError&) {
    }
    w.h1 = h1_on(an.op_prime, a);
    rep.weakly_closed = std::move(w);
  }
  return rep;
}

}  // namespace

// ---- JSON ----------------------------------------------------------------------------

json to_json(const PredictionSummary& s) {
  return {{"available", s.available},     {"group", s.group},
          {"theorem_case", s.theorem_case}, {"gamma_order", opt(s.gamma_order)},
          {"gamma_structure", s.gamma_structure}, {"simple", opt(s.simple)},
          {"op_simple", s.op_simple},     {"exotic", s.exotic},
          {"s_abelian", s.s_abelian},     {"s_normal", s.s_normal},
          {"realized_by", s.realized_by}, {"note", s.note}};
}

json to_json(const GammaSection& g, bool standalone) {
  json gens = json::array(), ops = json::array();
  for (const auto& [perm, label] : g.generators) gens.push_back({{"perm", perm}, {"label", label}});
  for (const auto& [rep, order] : g.op_prime_automizers) ops.push_back({{"rep", rep}, {"order", big(order)}});
  json j = {{"group", g.group},
            {"p", g.p},
            {"gamma_order", g.gamma_order},
            {"aut_order", big(g.aut_order)},
            {"aut0_order", big(g.aut0_order)},
            {"structure", g.structure},
            {"abelian", g.abelian},
            {"invariants", g.invariants},
            {"exponent", g.exponent},
            {"generators", gens},
            {"aut0_generators", g.aut0_generators},
            {"op_prime_automizers", ops},
            {"simple", g.simplicity == "inconclusive" ? json(nullptr) : json(g.simplicity == "simple")},
            {"simplicity", g.simplicity},
            {"simplicity_reason", g.simplicity_reason},
            {"simplicity_evidence", g.simplicity_evidence},
            {"prediction", to_json(g.prediction)},
            {"comparison", {{"gamma", g.comparison.gamma}, {"simple", g.comparison.simple}, {"match", g.comparison.match}}}};
  if (standalone) j["schema_version"] = kSchemaVersion;
  return j;
}

json to_json(const Report& r) {
  json j = {{"schema_version", r.schema_version},
            {"group", r.group},
            {"p", r.p},
            {"group_order", r.group_order},
            {"sylow_order", r.sylow_order},
            {"counts",
             {{"subgroups", r.counts.subgroups},
              {"s_classes", r.counts.s_classes},
              {"f_classes", r.counts.f_classes},
              {"centric", r.counts.centric},
              {"centric_radical", r.counts.centric_radical}}},
            {"flags",
             {{"fully_normalized", r.flags.fully_normalized},
              {"centric", r.flags.centric},
              {"radical", r.flags.radical},
              {"weakly_closed", r.flags.weakly_closed},
              {"strongly_closed", r.flags.strongly_closed},
              {"normal", r.flags.normal},
              {"central", r.flags.central},
              {"op_order", r.flags.op_order},
              {"center_order", r.flags.center_order},
              {"hyperfocal_order", r.flags.hyperfocal_order}}},
            {"gamma", to_json(r.gamma, false)},
            {"saturation",
             {{"saturated", r.saturation.saturated},
              {"axiom", r.saturation.axiom},
              {"witnesses", r.saturation.witnesses},
              {"detail", r.saturation.detail}}}};
  if (r.weakly_closed) {
    const auto& w = *r.weakly_closed;
    j["weakly_closed"] = {{"a", w.a},
                          {"a_order", w.a_order},
                          {"aut_order", big(w.aut_order)},
                          {"kernel_order", big(w.kernel_order)},
                          {"quotient_order", w.quotient_order},
                          {"theta_agrees", w.theta_agrees},
                          {"lower", opt(w.lower)},
                          {"upper", opt(w.upper)},
                          {"h1", opt(w.h1)}};
  } else {
    j["weakly_closed"] = nullptr;
  }
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion)
      throw InputError("cli", "unsupported report schema version " + std::to_string(r.schema_version));
    r.group = j.at("group").get<std::string>();
    r.p = j.at("p").get<int>();
    r.group_order = j.at("group_order").get<std::string>();
    r.sylow_order = j.at("sylow_order").get<int>();
    const auto& c = j.at("counts");
    r.counts = {c.at("subgroups").get<int>(), c.at("s_classes").get<int>(), c.at("f_classes").get<int>(),
                c.at("centric").get<int>(), c.at("centric_radical").get<int>()};
    const auto& f = j.at("flags");
    r.flags = {f.at("fully_normalized").get<int>(), f.at("centric").get<int>(),       f.at("radical").get<int>(),
               f.at("weakly_closed").get<int>(),    f.at("strongly_closed").get<int>(), f.at("normal").get<int>(),
               f.at("central").get<int>(),          f.at("op_order").get<int>(),      f.at("center_order").get<int>(),
               f.at("hyperfocal_order").get<int>()};
    r.gamma = gamma_from_json(j.at("gamma"));
    const auto& s = j.at("saturation");
    r.saturation.saturated = s.at("saturated").get<bool>();
    r.saturation.axiom = s.at("axiom").get<int>();
    r.saturation.witnesses = s.at("witnesses").get<std::vector<int>>();
    r.saturation.detail = s.at("detail").get<std::string>();
    if (const auto& w = j.at("weakly_closed"); !w.is_null()) {
      WeaklyClosedSection x;
      x.a = w.at("a").get<int>();
      x.a_order = w.at("a_order").get<int>();
      x.aut_order = unbig(w.at("aut_order"));
      x.kernel_order = unbig(w.at("kernel_order"));
      x.quotient_order = w.at("quotient_order").get<std::uint64_t>();
      x.theta_agrees = w.at("theta_agrees").get<bool>();
      x.lower = unopt<std::uint64_t>(w.at("lower"));
      x.upper = unopt<std::uint64_t>(w.at("upper"));
      x.h1 = unopt<std::vector<std::uint64_t>>(w.at("h1"));
      r.weakly_closed = std::move(x);
    }
    if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw InputError("cli", std::string("malformed report: ") + e.what());
  }
}

PredictionSummary summarize(const Prediction& p) {
  PredictionSummary s;
  s.available = p.theorem_case != "unsupported";
  s.group = p.group;
  s.theorem_case = p.theorem_case;
  s.gamma_order = p.gamma_order;
  s.gamma_structure = p.gamma_structure;
  s.simple = p.simple;
  s.op_simple = p.op_simple;
  s.exotic = p.exotic;
  s.s_abelian = p.s_abelian;
  s.s_normal = p.s_normal;
  s.realized_by = p.realized_by;
  s.note = p.note;
  return s;
}

json prediction_json(const Prediction& p) {
  json j = to_json(summarize(p));
  j["schema_version"] = kSchemaVersion;
  j["p"] = p.p;
  if (p.table) {
    const TableParams& t = *p.table;
    const char* tag[] = {"a", "b", "c", "d"};
    j["table"] = {{"case", tag[static_cast<int>(t.which)]},
                  {"q", t.q},
                  {"n", t.n},
                  {"eps", t.eps},
                  {"m", t.m},
                  {"mu", t.mu},
                  {"theta_sign", t.theta_sign},
                  {"kappa", t.kappa},
                  {"ell", t.ell},
                  {"ell_exp", t.ell_exp},
                  {"exceptional_shape", t.exceptional_shape},
                  {"aut_f_a", t.aut_f_a},
                  {"aut_f_a_order", big(t.aut_f_a_order)},
                  {"aut_op_a", t.aut_op_a},
                  {"aut_op_a_order", big(t.aut_op_a_order)}};
  } else {
    j["table"] = nullptr;
  }
  return j;
}

// ---- analysis and cache ----------------------------------------------------------------

std::string default_cache_dir() {
  if (const char* d = std::getenv("PFUSION_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return (fs::path(d) / "pfusion").string();
  if (const char* d = std::getenv("HOME"); d && *d) return (fs::path(d) / ".cache" / "pfusion").string();
  return (fs::temp_directory_path() / "pfusion-cache").string();
}

std::string cache_key(const std::string& label, int p, const RunOptions& opts) {
  std::ostringstream k;
  k << label << '|' << p << '|' << opts.fusion.seed << '|' << opts.fusion.lattice_cap << '|'
    << opts.fusion.closure_cap << '|' << opts.catalog_path << '|' << kCodeVersion;
  return k.str();
}

Report analyze(const std::string& label, int p, const RunOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  std::optional<Report> rep;
  std::string key = cache_key(label, p, opts);
  if (opts.use_cache) rep = cache_load(opts, key);
  if (!rep) {
    rep = compute(label, p, opts);
    if (opts.use_cache) cache_store(opts, key, *rep);
  }
  rep->seconds.reset();
  if (opts.timing) rep->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return *rep;
}

const std::vector<SurveyRow>& survey_list() {
  static const std::vector<SurveyRow> rows = {
      {"A7", 3},  {"A8", 3},  {"A9", 3},       {"A10", 3},      {"A11", 3},       {"A12", 3},
      {"M11", 2}, {"M12", 2}, {"M12", 3},      {"M11", 3},      {"Sp(6,2)", 3},   {"PSU(4,2)", 3},
      {"PSp(4,3)", 3}, {"A6", 2}};
  return rows;
}

SurveyResult survey(const RunOptions& opts, int jobs) {
  const auto& list = survey_list();
  SurveyResult out;
  out.rows.resize(list.size());
  out.errors.resize(list.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < list.size();) {
      try {
        out.rows[i] = analyze(list[i].group, list[i].p, opts);
      } catch (const Error& e) {
        out.errors[i] = e.module() + ": " + e.what();
      } catch (const std::exception& e) {
        out.errors[i] = e.what();
      }
    }
  };
  jobs = std::clamp(jobs, 1, static_cast<int>(list.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!out.errors[i].empty()) {
      out.rows[i].group = list[i].group;
      out.rows[i].p = list[i].p;
      ++out.mismatches;
    } else if (!out.rows[i].gamma.comparison.match) {
      ++out.mismatches;
    }
  }
  return out;
}

std::string survey_table(const SurveyResult& s) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %2s %5s %7s %9s %-13s %-13s %s\n", "group", "p", "|S|", "|Gamma|", "predicted",
                "simple", "pred. simple", "match");
  os << line;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const Report& r = s.rows[i];
    if (!s.errors[i].empty()) {
      os << r.group << " p=" << r.p << " error: " << s.errors[i] << '\n';
      continue;
    }
    const auto& pr = r.gamma.prediction;
    std::string pg = pr.gamma_order ? std::to_string(*pr.gamma_order) : "-";
    std::string ps = pr.simple ? (*pr.simple ? "simple" : "not simple") : "-";
    std::snprintf(line, sizeof line, "%-10s %2d %5d %7llu %9s %-13s %-13s %s\n", r.group.c_str(), r.p, r.sylow_order,
                  static_cast<unsigned long long>(r.gamma.gamma_order), pg.c_str(), r.gamma.simplicity.c_str(),
                  ps.c_str(), r.gamma.comparison.match ? "yes" : "NO");
    os << line;
  }
  os << s.mismatches << " mismatch" << (s.mismatches == 1 ? "" : "es") << '\n';
  return os.str();
}

}  // namespace pfusion::report
