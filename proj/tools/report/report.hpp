/**
 * @file report.hpp
 * @brief Reports produced by the `fusion` tool and the acceptance suite, their
 *        JSON form, the survey list and the on-disk report cache.
 *
 * Orders that can exceed 2^53 (group orders, automizer orders) are decimal
 * strings in JSON. Everything else is a JSON number or boolean.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pfusion/catalog.hpp"
#include "pfusion/fusion.hpp"
#include "pfusion/tables.hpp"

namespace pfusion::report {

inline constexpr int kSchemaVersion = 1;
// Bumped whenever a computation changes in a way that invalidates cached reports.
inline constexpr const char* kCodeVersion = "0.1.0-1";

struct PredictionSummary {
  bool available = false;
  std::string group;
  std::string theorem_case;
  std::optional<std::uint64_t> gamma_order;
  std::string gamma_structure;
  std::optional<bool> simple;
  bool op_simple = false;
  bool exotic = false;
  bool s_abelian = false;
  bool s_normal = false;
  std::string realized_by;
  std::string note;
  bool operator==(const PredictionSummary&) const = default;
};

struct Comparison {
  std::string gamma = "n/a";   // "match", "mismatch" or "n/a"
  std::string simple = "n/a";
  bool match = true;
  bool operator==(const Comparison&) const = default;
};

struct GammaSection {
  std::string group;
  int p = 0;
  std::uint64_t gamma_order = 1;
  std::uint64_t aut_order = 1;
  std::uint64_t aut0_order = 1;
  std::string structure;
  bool abelian = true;
  std::vector<std::uint64_t> invariants;
  int exponent = 1;
  std::vector<std::pair<std::string, int>> generators;  // Aut_F(S) generator, coset label
  std::vector<std::string> aut0_generators;
  std::vector<std::pair<int, std::uint64_t>> op_prime_automizers;
  std::string simplicity;  // "simple", "not simple" or "inconclusive"
  std::string simplicity_reason;
  std::vector<int> simplicity_evidence;
  PredictionSummary prediction;
  Comparison comparison;
  bool operator==(const GammaSection&) const = default;
};

struct Counts {
  int subgroups = 0;
  int s_classes = 0;
  int f_classes = 0;
  int centric = 0;
  int centric_radical = 0;
  bool operator==(const Counts&) const = default;
};

struct FlagSummary {
  int fully_normalized = 0;
  int centric = 0;
  int radical = 0;
  int weakly_closed = 0;
  int strongly_closed = 0;
  int normal = 0;
  int central = 0;
  int op_order = 1;          // |O_p(F)|
  int center_order = 1;      // |Z(F)|
  int hyperfocal_order = 1;
  bool operator==(const FlagSummary&) const = default;
};

struct SaturationSummary {
  bool saturated = true;
  int axiom = 0;
  std::vector<int> witnesses;
  std::string detail;
  bool operator==(const SaturationSummary&) const = default;
};

// Data attached when an abelian weakly closed centric A exists.
struct WeaklyClosedSection {
  int a = 0;
  int a_order = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t kernel_order = 0;
  std::uint64_t quotient_order = 0;
  bool theta_agrees = false;  // the induced map is a bijection onto Aut_F(A)/kernel
  // Absent when the bounds' precondition fails (X meets Z(S) trivially).
  std::optional<std::uint64_t> lower;
  std::optional<std::uint64_t> upper;
  // H^1(Aut_{O^{p'}(F)}(A); A) when A is elementary abelian and small enough.
  std::optional<std::vector<std::uint64_t>> h1;
  bool operator==(const WeaklyClosedSection&) const = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string group;
  int p = 0;
  std::string group_order;
  int sylow_order = 0;
  Counts counts;
  FlagSummary flags;
  GammaSection gamma;
  SaturationSummary saturation;
  std::optional<WeaklyClosedSection> weakly_closed;
  std::optional<double> seconds;  // only with timing enabled
  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const PredictionSummary& s);
nlohmann::json to_json(const GammaSection& g, bool standalone);
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

PredictionSummary summarize(const Prediction& p);
nlohmann::json prediction_json(const Prediction& p);

struct RunOptions {
  FusionOptions fusion;
  const Catalog* catalog = nullptr;
  std::string catalog_path;  // part of the cache key; empty for the built-in catalog
  bool timing = false;
  bool use_cache = false;
  std::string cache_dir;
};

// Full analysis of F_S(G); the cache is consulted first when enabled.
Report analyze(const std::string& label, int p, const RunOptions& opts);

struct SurveyRow {
  std::string group;
  int p = 0;
};
// Every (group, p) pair the survey and the acceptance suite compute.
const std::vector<SurveyRow>& survey_list();

struct SurveyResult {
  std::vector<Report> rows;
  std::vector<std::string> errors;  // per row; empty when the row computed
  int mismatches = 0;
};
SurveyResult survey(const RunOptions& opts, int jobs);
std::string survey_table(const SurveyResult& s);

std::string default_cache_dir();
std::string cache_key(const std::string& label, int p, const RunOptions& opts);

}  // namespace pfusion::report
