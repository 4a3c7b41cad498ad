#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/ctl/simulator.hpp"
#include "emolex/evalkit/records.hpp"
#include "emolex/model/annotation_store.hpp"
#include "emolex/tasker/config.hpp"
#include "emolex/util/error.hpp"

namespace emolex::ctl {

namespace fs = std::filesystem;

/// Pipeline settings. Relative paths in the JSON file resolve against the
/// file's directory.
struct PipelineConfig {
  fs::path corpus;
  std::string keyword = "brexit";
  fs::path dictionary;
  std::optional<fs::path> dyads;
  std::string link_base;  // empty: the default dictionary site
  std::uint64_t seed = 1;
  tasker::TaskerConfig tasker;
  SimProfile simulation;
  std::optional<fs::path> annotations;      // recorded crowd log; replaces the simulation
  std::optional<fs::path> assessment_seed;  // recorded seed labels
  std::optional<int> filter_x;              // empty: use the optimal threshold
  std::size_t min_annotations = 5;
  bool evaluation = false;
  std::size_t per_stratum = 200;
  EvalSimProfile evaluators;
  std::optional<fs::path> evaluations;      // recorded evaluation records
};

/// Throws ConfigError on malformed JSON, unknown keys or bad values.
PipelineConfig parse_pipeline_config(std::string_view json_text, const fs::path& base_dir = {});
PipelineConfig load_pipeline_config(const fs::path& path);

/// One top-level seed drives the tasker, the crowd and the evaluators.
void apply_seed(PipelineConfig& config, std::uint64_t seed);

/// Files written under the output directory.
namespace artifacts {
inline constexpr std::string_view posts = "posts.jsonl";
inline constexpr std::string_view ingest_warnings = "ingest_warnings.csv";
inline constexpr std::string_view terms = "terms.csv";
inline constexpr std::string_view term_groups = "term_groups.csv";
inline constexpr std::string_view zipf = "zipf.csv";
inline constexpr std::string_view assessment_seed = "assessment_seed.jsonl";
inline constexpr std::string_view assessment = "assessment.csv";
inline constexpr std::string_view annotations = "annotations.jsonl";
inline constexpr std::string_view workers = "simulated_workers.csv";
inline constexpr std::string_view filter_curves = "filter_curves.csv";
inline constexpr std::string_view filter_report = "filter_report.csv";
inline constexpr std::string_view lexicon = "lexicon.csv";
inline constexpr std::string_view kappa = "kappa.csv";
inline constexpr std::string_view lexicon_stats = "lexicon_stats.csv";
inline constexpr std::string_view evaluation_tasks = "evaluation_tasks.csv";
inline constexpr std::string_view evaluations = "evaluations.jsonl";
inline constexpr std::string_view validity_report = "validity_report.csv";
inline constexpr std::string_view intensifier_report = "intensifier_report.csv";
}  // namespace artifacts

/// A failure inside a named stage. Keeps the kind of the underlying error.
class PipelineError : public Error {
 public:
  PipelineError(std::string stage, ErrorKind kind, const std::string& what)
      : Error(kind, "[" + stage + "] " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Stages read their inputs from earlier artifacts in `out`, so any suffix of
/// the pipeline can be rerun on its own. Each returns human-readable notes.
using Notes = std::vector<std::string>;
Notes stage_ingest(const PipelineConfig& config, const fs::path& out);
Notes stage_preprocess(const PipelineConfig& config, const fs::path& out);
Notes stage_simulate(const PipelineConfig& config, const fs::path& out);
/// `x` overrides the configured threshold.
Notes stage_filter(const PipelineConfig& config, const fs::path& out, std::optional<int> x = std::nullopt);
Notes stage_lexicon(const PipelineConfig& config, const fs::path& out);
Notes stage_kappa(const PipelineConfig& config, const fs::path& out);
Notes stage_report(const PipelineConfig& config, const fs::path& out);
/// Evaluation runs in three steps: sample tasks, collect judgments
/// (recorded or simulated), then build the reports. `stage_evaluate` runs all three.
Notes stage_eval_sample(const PipelineConfig& config, const fs::path& out);
Notes stage_eval_collect(const PipelineConfig& config, const fs::path& out);
Notes stage_eval_reports(const PipelineConfig& config, const fs::path& out);
Notes stage_evaluate(const PipelineConfig& config, const fs::path& out);

/// CSV {group_id, kind, summary}.
void write_evaluation_tasks(std::ostream& out, std::span<const evalkit::EvaluationTask> tasks);
std::vector<evalkit::EvaluationTask> read_evaluation_tasks(std::istream& in);

/// ingest, preprocess, simulate, filter, lexicon, kappa, report and, when
/// enabled, evaluate. Failures surface as PipelineError.
Notes run_pipeline(const PipelineConfig& config, const fs::path& out);

/// Lexicon CSV for a live snapshot: filters at the configured (or optimal)
/// threshold, then aggregates over `groups`. Used by the server's export endpoint.
std::string build_lexicon_csv(const PipelineConfig& config, const Snapshot& snapshot,
                              std::span<const corpus::TermGroup> groups);

}  // namespace emolex::ctl
