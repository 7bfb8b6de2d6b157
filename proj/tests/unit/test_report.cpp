#include <gtest/gtest.h>

#include <filesystem>

#include "pfusion/errors.hpp"
#include "report.hpp"

using namespace pfusion;
using namespace pfusion::report;

TEST(Report, JsonRoundTrip) {
  RunOptions ro;
  for (auto [label, p] : std::vector<std::pair<const char*, int>>{{"Sp(6,2)", 3}, {"A11", 3}, {"M11", 3}, {"S4", 2}}) {
    Report r = analyze(label, p, ro);
    auto j = to_json(r);
    Report back = report_from_json(j);
    EXPECT_EQ(back, r) << label;
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_TRUE(j.at("group_order").is_string());
    EXPECT_TRUE(j.at("gamma").at("aut_order").is_string());
  }
}

TEST(Report, Sp62SectionRecordsRigidity) {
  Report r = analyze("Sp(6,2)", 3, {});
  ASSERT_TRUE(r.weakly_closed.has_value());
  const auto& w = *r.weakly_closed;
  EXPECT_EQ(w.a_order, 27);
  EXPECT_EQ(w.aut_order, 48u);
  EXPECT_EQ(w.kernel_order, 24u);
  EXPECT_TRUE(w.theta_agrees);
  ASSERT_TRUE(w.h1.has_value());
  EXPECT_TRUE(w.h1->empty());
  EXPECT_EQ(r.gamma.comparison.gamma, "match");
}

TEST(Report, SchemaVersionChecked) {
  auto j = to_json(analyze("S4", 2, {}));
  j["schema_version"] = kSchemaVersion + 1;
  EXPECT_THROW(report_from_json(j), InputError);
}

TEST(Report, CacheReturnsIdenticalReports) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("pfusion-test-cache-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove_all(dir);
  RunOptions ro;
  ro.use_cache = true;
  ro.cache_dir = dir.string();
  Report fresh = analyze("A9", 3, ro);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
  Report cached = analyze("A9", 3, ro);
  EXPECT_EQ(cached, fresh);
  ro.fusion.seed = 3;
  EXPECT_NE(cache_key("A9", 3, ro), cache_key("A9", 3, RunOptions{}));
  fs::remove_all(dir);
}

TEST(Report, SurveyHasNoMismatches) {
  auto s = survey({}, 2);
  EXPECT_EQ(s.mismatches, 0) << survey_table(s);
  ASSERT_EQ(s.rows.size(), survey_list().size());
  for (std::size_t i = 0; i < s.rows.size(); ++i) EXPECT_EQ(s.rows[i].group, survey_list()[i].group);
}
