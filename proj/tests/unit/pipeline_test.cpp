#include <gtest/gtest.h>

#include <fstream>

#include "emolex/ctl/pipeline.hpp"
#include "emolex/util/error.hpp"
#include "test_support.hpp"

namespace emolex::ctl {
namespace {

namespace fs = std::filesystem;

const fs::path kSample = EMOLEX_SAMPLE_DIR;

PipelineConfig sample_config() { return load_pipeline_config(kSample / "pipeline.json"); }

// Every artifact in `a` exists in `b` with identical bytes.
void expect_same_tree(const fs::path& a, const fs::path& b) {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const auto name = entry.path().filename();
    ASSERT_TRUE(fs::exists(b / name)) << name;
    EXPECT_EQ(test::read_file(entry.path()), test::read_file(b / name)) << name;
    ++files;
  }
  EXPECT_GT(files, 10u);
}

TEST(PipelineConfig, ParsesSampleConfig) {
  const auto c = sample_config();
  EXPECT_EQ(c.corpus, kSample / "posts.jsonl");
  EXPECT_EQ(c.keyword, "brexit");
  EXPECT_EQ(c.filter_x, 4);
  EXPECT_TRUE(c.evaluation);
  EXPECT_EQ(c.tasker.cap, 660u);
}

TEST(PipelineConfig, Rejections) {
  EXPECT_THROW(parse_pipeline_config("{"), ConfigError);
  EXPECT_THROW(parse_pipeline_config(R"({"corpus":"a","dictionary":"b","surprise":1})"), ConfigError);
  EXPECT_THROW(parse_pipeline_config(R"({"dictionary":"b"})"), ConfigError);
  EXPECT_THROW(parse_pipeline_config(R"({"corpus":"a","dictionary":"b","filter":{"x":11}})"), ConfigError);
  EXPECT_THROW(parse_pipeline_config(R"({"corpus":"a","dictionary":"b","simulation":{"spammer_rate":0.5}})"),
               ConfigError);
  const auto c = parse_pipeline_config(R"({"corpus":"a","dictionary":"b","filter":{"x":"auto"}})", "/base");
  EXPECT_FALSE(c.filter_x);
  EXPECT_EQ(c.dictionary, fs::path("/base/b"));
  EXPECT_THROW(load_pipeline_config("/nonexistent/pipeline.json"), ConfigError);
}

TEST(PipelineConfig, ApplySeedReachesEveryStage) {
  auto c = sample_config();
  apply_seed(c, 99);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.tasker.seed, 99u);
  EXPECT_EQ(c.simulation.seed, 99u);
  EXPECT_EQ(c.evaluators.seed, 99u);
}

TEST(Pipeline, SampleRunIsByteIdenticalAcrossRuns) {
  test::TempDir a("pipe-a"), b("pipe-b");
  run_pipeline(sample_config(), a.path());
  run_pipeline(sample_config(), b.path());
  for (auto name : {artifacts::lexicon, artifacts::kappa, artifacts::filter_report, artifacts::validity_report,
                    artifacts::intensifier_report}) {
    ASSERT_TRUE(fs::exists(a / std::string(name))) << name;
  }
  expect_same_tree(a.path(), b.path());
  const auto lexicon = test::read_file(a / std::string(artifacts::lexicon));
  EXPECT_EQ(lexicon.substr(0, lexicon.find(',')), "stem");
}

TEST(Pipeline, SuffixRerunReproducesArtifacts) {
  test::TempDir full("pipe-full"), part("pipe-part");
  const auto config = sample_config();
  run_pipeline(config, full.path());
  for (const auto& entry : fs::directory_iterator(full.path())) {
    fs::copy_file(entry.path(), part / entry.path().filename().string());
  }
  for (auto name : {artifacts::filter_report, artifacts::filter_curves, artifacts::lexicon, artifacts::kappa,
                    artifacts::lexicon_stats}) {
    fs::remove(part / std::string(name));
  }
  stage_filter(config, part.path(), config.filter_x);
  stage_lexicon(config, part.path());
  stage_kappa(config, part.path());
  stage_report(config, part.path());
  expect_same_tree(full.path(), part.path());
}

TEST(Pipeline, MissingDictionaryFailsInPreprocess) {
  test::TempDir out("pipe-missing");
  auto config = sample_config();
  config.dictionary = out / "no-such-dictionary.txt";
  try {
    run_pipeline(config, out.path());
    FAIL() << "expected a pipeline error";
  } catch (const PipelineError& e) {
    EXPECT_EQ(e.stage(), "preprocess");
    EXPECT_EQ(e.kind(), ErrorKind::config);
    EXPECT_EQ(std::string(e.what()).rfind("[preprocess]", 0), 0u);
  }
}

TEST(Pipeline, LaterStageWithoutInputsNamesItsStage) {
  test::TempDir out("pipe-empty");
  try {
    stage_lexicon(sample_config(), out.path());
    FAIL();
  } catch (const PipelineError& e) {
    EXPECT_EQ(e.stage(), "lexicon");
  }
}

TEST(Pipeline, EvaluationTasksRoundTrip) {
  const std::vector<evalkit::EvaluationTask> tasks{
      {"g1", "The term group \"a, b\" received annotations as 100.0% joy.", evalkit::EvaluationKind::validity},
      {"g2", "x", evalkit::EvaluationKind::intensifier}};
  std::stringstream s;
  write_evaluation_tasks(s, tasks);
  EXPECT_EQ(read_evaluation_tasks(s), tasks);
}

}  // namespace
}  // namespace emolex::ctl
