// emolexctl: runs the lexicon pipeline stage by stage or end to end.

#include <atomic>
#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>

#include <CLI11.hpp>

#include "emolex/ctl/pipeline.hpp"
#include "emolex/evalkit/reports.hpp"
#include "emolex/lexicon/lexicon.hpp"
#include "emolex/quality/spam_filter.hpp"
#include "emolex/reliability/fleiss.hpp"
#include "emolex/tasker/http_api.hpp"
#include "emolex/tasker/tasker.hpp"

namespace fs = std::filesystem;
using namespace emolex;

namespace {

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop = true; }

struct Globals {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = "out";
};

ctl::PipelineConfig load_config(const Globals& g) {
  if (g.config.empty()) throw ConfigError("--config is required for this command");
  auto config = ctl::load_pipeline_config(g.config);
  if (g.seed) ctl::apply_seed(config, *g.seed);
  return config;
}

void print(const ctl::Notes& notes) {
  for (const auto& n : notes) std::cout << n << '\n';
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  return in;
}

// filter --snapshot <log> [--x N] --report <csv>
int run_filter(const Globals& g, const std::string& snapshot_path, std::optional<int> x, const std::string& report,
               const std::string& curves_path, std::size_t min_annotations) {
  const fs::path out(g.out);
  const fs::path log = snapshot_path.empty() ? out / ctl::artifacts::annotations : fs::path(snapshot_path);
  const Snapshot snapshot(read_annotation_log(log));
  quality::FilterOptions options;
  options.min_annotations = min_annotations;
  const auto curves = quality::exclusion_curves(snapshot, options);
  const int chosen = x ? *x : quality::optimal_threshold(curves.assessment, curves.acquisition);
  const auto decision = quality::filter_workers(snapshot, chosen, options);

  auto rep = open_output(report.empty() ? out / ctl::artifacts::filter_report : fs::path(report));
  quality::write_filter_report(rep, decision);
  auto cur = open_output(curves_path.empty() ? out / ctl::artifacts::filter_curves : fs::path(curves_path));
  quality::write_curves(cur, curves);
  std::cout << "x=" << chosen << " excluded " << decision.excluded_workers.size() << " of "
            << decision.workers.size() << " workers\n";
  return 0;
}

// kappa --lexicon <csv> --report <csv>
int run_kappa(const Globals& g, const std::string& lexicon_path, const std::string& report) {
  const fs::path out(g.out);
  auto in = open_input(lexicon_path.empty() ? out / ctl::artifacts::lexicon : fs::path(lexicon_path));
  const auto entries = lexicon::read_lexicon_csv(in);
  const auto strata = reliability::kappa_by_stratum(entries);
  auto rep = open_output(report.empty() ? out / ctl::artifacts::kappa : fs::path(report));
  reliability::write_kappa_report(rep, strata);
  for (const auto& n : strata.notices) std::cerr << n << '\n';
  return 0;
}

int run_eval_report(const Globals& g, const std::string& facet, const std::string& records_path,
                    const std::string& report) {
  const fs::path out(g.out);
  std::optional<evalkit::Facet> only;
  if (!facet.empty()) {
    only = evalkit::parse_facet(facet);
    if (!only) throw InvalidArgumentError("unknown facet '" + facet + "'");
  }
  auto lex = open_input(out / ctl::artifacts::lexicon);
  const auto entries = lexicon::read_lexicon_csv(lex);
  const auto records =
      evalkit::read_records(records_path.empty() ? out / ctl::artifacts::evaluations : fs::path(records_path));
  const auto rows = evalkit::validity_report(records, entries, only);
  if (report.empty()) {
    evalkit::write_validity_report(std::cout, rows);
  } else {
    auto rep = open_output(report);
    evalkit::write_validity_report(rep, rows);
  }
  return 0;
}

int run_eval_intensifiers(const Globals& g, const std::string& records_path, const std::string& report) {
  const fs::path out(g.out);
  const auto records =
      evalkit::read_records(records_path.empty() ? out / ctl::artifacts::evaluations : fs::path(records_path));
  const auto rows = evalkit::intensifier_report(records);
  if (report.empty()) {
    evalkit::write_intensifier_report(std::cout, rows);
  } else {
    auto rep = open_output(report);
    evalkit::write_intensifier_report(rep, rows);
  }
  return 0;
}

int run_serve(const Globals& g, const std::string& host, std::optional<int> port, const std::string& static_dir,
              const std::string& log_path) {
  const auto config = load_config(g);
  const fs::path out(g.out);

  auto groups_in = open_input(out / ctl::artifacts::term_groups);
  const auto groups = corpus::read_term_groups(groups_in);
  const auto seed = read_annotation_log(out / ctl::artifacts::assessment_seed);
  auto assessment = tasker::derive_assessment_items(seed, config.tasker.assessment_size);

  std::unordered_set<std::string> known;
  for (const auto& grp : groups) known.insert(grp.id);
  AnnotationStore store(known, log_path.empty() ? out / "live_annotations.jsonl" : fs::path(log_path));
  evalkit::EvaluationLog evaluations(out / "live_evaluations.jsonl");
  tasker::Tasker tasker(config.tasker, groups, std::move(assessment), store, evaluations);
  if (fs::exists(out / ctl::artifacts::evaluation_tasks)) {
    auto tasks_in = open_input(out / ctl::artifacts::evaluation_tasks);
    tasker.set_evaluation_tasks(ctl::read_evaluation_tasks(tasks_in));
  }

  tasker::ApiServer server(
      tasker, [&] { return ctl::build_lexicon_csv(config, *store.snapshot(), groups); },
      static_dir.empty() ? std::nullopt : std::optional<fs::path>(static_dir));
  const int bound = server.start(host, port ? *port : config.tasker.port);
  std::cout << "serving on http://" << host << ':' << bound << std::endl;

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(200));
  server.stop();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emotion lexicon pipeline"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "Pipeline config (JSON)");
  app.add_option("--seed", g.seed, "Override the configured seed");
  app.add_option("--out", g.out, "Artifact directory")->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Filter the corpus by keyword");
  auto* preprocess = app.add_subcommand("preprocess", "Tokenize, validate, stem and group terms");
  auto* simulate = app.add_subcommand("simulate", "Run the synthetic crowd (or load a recorded log)");
  auto* lexicon_cmd = app.add_subcommand("lexicon", "Aggregate retained annotations into the lexicon");
  auto* report = app.add_subcommand("report", "Lexicon statistics");
  auto* run = app.add_subcommand("run", "Whole pipeline");

  auto* filter = app.add_subcommand("filter", "Spam filter over an annotation log");
  std::string snapshot_path, filter_report, curves_path;
  std::optional<int> x;
  std::size_t min_annotations = 5;
  filter->add_option("--snapshot", snapshot_path, "Annotation log (default <out>/annotations.jsonl)");
  filter->add_option("--x", x, "Threshold x in 1..10 (default: optimal)")->check(CLI::Range(1, 10));
  filter->add_option("--report", filter_report, "Report CSV (default <out>/filter_report.csv)");
  filter->add_option("--curves", curves_path, "Curves CSV (default <out>/filter_curves.csv)");
  filter->add_option("--min-annotations", min_annotations, "Per-phase exclusion guard")->capture_default_str();

  auto* kappa = app.add_subcommand("kappa", "Fleiss kappa per annotation-count stratum");
  std::string kappa_lexicon, kappa_report;
  kappa->add_option("--lexicon", kappa_lexicon, "Lexicon CSV (default <out>/lexicon.csv)");
  kappa->add_option("--report", kappa_report, "Report CSV (default <out>/kappa.csv)");

  auto* eval = app.add_subcommand("eval", "Evaluation tasks and reports");
  eval->require_subcommand(1);
  auto* eval_sample = eval->add_subcommand("sample", "Sample validity and intensifier tasks");
  auto* eval_collect = eval->add_subcommand("collect", "Simulate (or load) evaluator judgments");
  auto* eval_report = eval->add_subcommand("report", "Validity report");
  std::string facet, records_path, eval_report_path;
  eval_report->add_option("--facet", facet, "count, percent, subclass or agreement (default: all)")
      ->check(CLI::IsMember({"count", "percent", "subclass", "agreement"}));
  eval_report->add_option("--records", records_path, "Evaluation records (default <out>/evaluations.jsonl)");
  eval_report->add_option("--report", eval_report_path, "Output CSV (default: stdout)");
  auto* eval_intensifiers = eval->add_subcommand("intensifiers", "Intensifier agreement-level report");
  eval_intensifiers->add_option("--records", records_path, "Evaluation records (default <out>/evaluations.jsonl)");
  eval_intensifiers->add_option("--report", eval_report_path, "Output CSV (default: stdout)");

  auto* serve = app.add_subcommand("serve", "Serve tasks over HTTP");
  std::string host = "127.0.0.1", static_dir, log_path;
  std::optional<int> port;
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port, "Default: the configured port");
  serve->add_option("--static", static_dir, "Directory of UI assets");
  serve->add_option("--log", log_path, "Annotation log (default <out>/live_annotations.jsonl)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share the config exit code; --help exits 0
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const fs::path out(g.out);
    if (*ingest) print(ctl::stage_ingest(load_config(g), out));
    if (*preprocess) print(ctl::stage_preprocess(load_config(g), out));
    if (*simulate) print(ctl::stage_simulate(load_config(g), out));
    if (*lexicon_cmd) print(ctl::stage_lexicon(load_config(g), out));
    if (*report) print(ctl::stage_report(load_config(g), out));
    if (*run) print(ctl::run_pipeline(load_config(g), out));
    if (*filter) {
      if (!g.config.empty()) min_annotations = load_config(g).min_annotations;
      return run_filter(g, snapshot_path, x, filter_report, curves_path, min_annotations);
    }
    if (*kappa) return run_kappa(g, kappa_lexicon, kappa_report);
    if (*eval_sample) print(ctl::stage_eval_sample(load_config(g), out));
    if (*eval_collect) print(ctl::stage_eval_collect(load_config(g), out));
    if (*eval_report) return run_eval_report(g, facet, records_path, eval_report_path);
    if (*eval_intensifiers) return run_eval_intensifiers(g, records_path, eval_report_path);
    if (*serve) return run_serve(g, host, port, static_dir, log_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::config ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
