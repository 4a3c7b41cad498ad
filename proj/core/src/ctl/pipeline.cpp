#include "emolex/ctl/pipeline.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emolex/corpus/dictionary.hpp"
#include "emolex/corpus/post.hpp"
#include "emolex/corpus/term_groups.hpp"
#include "emolex/corpus/tokenizer.hpp"
#include "emolex/corpus/zipf.hpp"
#include "emolex/evalkit/reports.hpp"
#include "emolex/evalkit/sampling.hpp"
#include "emolex/lexicon/lexicon.hpp"
#include "emolex/quality/spam_filter.hpp"
#include "emolex/reliability/fleiss.hpp"
#include "emolex/tasker/assessment.hpp"
#include "emolex/util/csv.hpp"

namespace emolex::ctl {

using nlohmann::json;

namespace {

fs::path resolve(const fs::path& base, const std::string& value) {
  const fs::path p(value);
  return p.is_absolute() || base.empty() ? p : base / p;
}

template <typename Fn>
void read_object(const json& j, const std::string& where, Fn&& on_key) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!on_key(key, value)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <typename Fn>
Notes guarded(const std::string& stage, Fn&& body) {
  try {
    return body();
  } catch (const PipelineError&) {
    throw;
  } catch (const Error& e) {
    throw PipelineError(stage, e.kind(), e.what());
  } catch (const std::exception& e) {
    throw PipelineError(stage, ErrorKind::io, e.what());
  }
}

fs::path artifact(const fs::path& out, std::string_view name) { return out / fs::path(std::string(name)); }

template <typename Fn>
void write_artifact(const fs::path& out, std::string_view name, Fn&& writer) {
  fs::create_directories(out);
  const auto path = artifact(out, name);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write '" + path.string() + "'");
  writer(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

std::ifstream open_artifact(const fs::path& out, std::string_view name) {
  const auto path = artifact(out, name);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("missing artifact '" + path.string() + "'; run the earlier stage first");
  return in;
}

std::string_view link_base(const PipelineConfig& config) {
  return config.link_base.empty() ? corpus::kDefaultDictionaryLinkBase : std::string_view(config.link_base);
}

std::vector<corpus::TermGroup> load_groups(const PipelineConfig& config, const fs::path& out) {
  auto in = open_artifact(out, artifacts::term_groups);
  return corpus::read_term_groups(in, link_base(config));
}

std::vector<lexicon::LexiconEntry> load_lexicon(const fs::path& out) {
  auto in = open_artifact(out, artifacts::lexicon);
  return lexicon::read_lexicon_csv(in);
}

lexicon::DyadTable dyad_table(const PipelineConfig& config) {
  return config.dyads ? lexicon::DyadTable::load(*config.dyads) : lexicon::DyadTable::defaults();
}

quality::FilterOptions filter_options(const PipelineConfig& config) {
  quality::FilterOptions o;
  o.min_annotations = config.min_annotations;
  return o;
}

std::vector<Annotation> without(const std::vector<Annotation>& annotations, const std::set<std::string>& excluded) {
  std::vector<Annotation> kept;
  kept.reserve(annotations.size());
  for (const auto& a : annotations) {
    if (!excluded.count(a.worker_id)) kept.push_back(a);
  }
  return kept;
}

}  // namespace

PipelineConfig parse_pipeline_config(std::string_view json_text, const fs::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("pipeline config: ") + e.what());
  }
  PipelineConfig c;
  bool have_corpus = false;
  bool have_dictionary = false;
  try {
    read_object(j, "pipeline config", [&](const std::string& key, const json& v) {
      if (key == "corpus") {
        c.corpus = resolve(base_dir, v.get<std::string>());
        have_corpus = true;
      } else if (key == "keyword") {
        c.keyword = v.get<std::string>();
      } else if (key == "dictionary") {
        c.dictionary = resolve(base_dir, v.get<std::string>());
        have_dictionary = true;
      } else if (key == "dyads") {
        c.dyads = resolve(base_dir, v.get<std::string>());
      } else if (key == "link_base") {
        c.link_base = v.get<std::string>();
      } else if (key == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (key == "tasker") {
        c.tasker = tasker::parse_tasker_config(v.dump());
      } else if (key == "simulation") {
        read_object(v, "simulation", [&](const std::string& k, const json& s) {
          if (k == "honest_count") c.simulation.honest_count = s.get<std::size_t>();
          else if (k == "spammer_count") c.simulation.spammer_count = s.get<std::size_t>();
          else if (k == "honest_max_fraction") c.simulation.honest_max_fraction = s.get<double>();
          else if (k == "spammer_rate") c.simulation.spammer_rate = s.get<double>();
          else if (k == "annotations_per_worker") c.simulation.annotations_per_worker = s.get<std::size_t>();
          else return false;
          return true;
        });
      } else if (key == "annotations") {
        c.annotations = resolve(base_dir, v.get<std::string>());
      } else if (key == "assessment_seed") {
        c.assessment_seed = resolve(base_dir, v.get<std::string>());
      } else if (key == "filter") {
        read_object(v, "filter", [&](const std::string& k, const json& f) {
          if (k == "x") {
            if (f.is_string() && f.get<std::string>() == "auto") c.filter_x.reset();
            else c.filter_x = f.get<int>();
          } else if (k == "min_annotations") {
            c.min_annotations = f.get<std::size_t>();
          } else {
            return false;
          }
          return true;
        });
      } else if (key == "evaluation") {
        read_object(v, "evaluation", [&](const std::string& k, const json& e) {
          if (k == "enabled") c.evaluation = e.get<bool>();
          else if (k == "per_stratum") c.per_stratum = e.get<std::size_t>();
          else if (k == "experts") c.evaluators.experts = e.get<std::size_t>();
          else if (k == "crowd") c.evaluators.crowd = e.get<std::size_t>();
          else if (k == "records") c.evaluations = resolve(base_dir, e.get<std::string>());
          else return false;
          return true;
        });
      } else {
        return false;
      }
      return true;
    });
  } catch (const json::exception& e) {
    throw ConfigError(std::string("pipeline config: ") + e.what());
  }
  if (!have_corpus) throw ConfigError("pipeline config: 'corpus' is required");
  if (!have_dictionary) throw ConfigError("pipeline config: 'dictionary' is required");
  if (c.keyword.empty()) throw ConfigError("pipeline config: 'keyword' must be non-empty");
  if (c.filter_x && (*c.filter_x < quality::kMinX || *c.filter_x > quality::kMaxX)) {
    throw ConfigError("pipeline config: filter.x must lie in [1, 10]");
  }
  if (c.per_stratum == 0) throw ConfigError("pipeline config: evaluation.per_stratum must be positive");
  try {
    validate(c.simulation);
  } catch (const Error& e) {
    throw ConfigError(std::string("pipeline config: simulation: ") + e.what());
  }
  apply_seed(c, c.seed);
  return c;
}

PipelineConfig load_pipeline_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pipeline config '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pipeline_config(buf.str(), path.parent_path());
}

void apply_seed(PipelineConfig& config, std::uint64_t seed) {
  config.seed = seed;
  config.tasker.seed = seed;
  config.simulation.seed = seed;
  config.evaluators.seed = seed;
}

Notes stage_ingest(const PipelineConfig& config, const fs::path& out) {
  return guarded("ingest", [&] {
    const auto result = corpus::ingest_posts(config.corpus, config.keyword);
    write_artifact(out, artifacts::posts, [&](std::ostream& o) { corpus::write_posts(o, result.posts); });
    write_artifact(out, artifacts::ingest_warnings, [&](std::ostream& o) {
      csv::write_row(o, {"line", "message"});
      for (const auto& w : result.warnings) csv::write_row(o, {std::to_string(w.line), w.message});
    });
    return Notes{"ingested " + std::to_string(result.posts.size()) + " posts matching '" + config.keyword + "', " +
                 std::to_string(result.warnings.size()) + " malformed lines skipped"};
  });
}

Notes stage_preprocess(const PipelineConfig& config, const fs::path& out) {
  return guarded("preprocess", [&] {
    const auto dictionary = corpus::Dictionary::load(config.dictionary);
    auto in = open_artifact(out, artifacts::posts);
    std::vector<corpus::Post> posts;
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) posts.push_back(corpus::parse_post(line));
    }
    const auto terms = corpus::count_terms(posts);
    const auto partition = corpus::validate_terms(terms, dictionary);
    const auto groups = corpus::group_by_stem(partition.valid, link_base(config));

    std::map<std::string, const corpus::Term*> ordered;
    for (const auto& t : partition.valid) ordered.emplace(t.surface, &t);
    for (const auto& t : partition.invalid) ordered.emplace(t.surface, &t);
    write_artifact(out, artifacts::terms, [&](std::ostream& o) {
      csv::write_row(o, {"term", "frequency", "valid"});
      for (const auto& [surface, t] : ordered) {
        csv::write_row(o, {surface, std::to_string(t->frequency), t->valid ? "true" : "false"});
      }
    });
    write_artifact(out, artifacts::term_groups, [&](std::ostream& o) { corpus::write_term_groups(o, groups); });

    Notes notes{std::to_string(terms.size()) + " distinct terms, " + std::to_string(partition.valid.size()) +
                " in the dictionary, " + std::to_string(groups.size()) + " term groups"};
    std::vector<std::uint64_t> freqs;
    for (const auto& t : terms) freqs.push_back(t.frequency);
    write_artifact(out, artifacts::zipf, [&](std::ostream& o) {
      csv::write_row(o, {"exponent", "intercept", "r_squared", "terms"});
      if (freqs.size() < 10) return;
      const auto fit = corpus::zipf_fit(freqs);
      csv::write_row(o, {csv::format_real(fit.exponent, 6), csv::format_real(fit.intercept, 6),
                         csv::format_real(fit.r_squared, 6), std::to_string(freqs.size())});
      notes.push_back("zipf exponent " + csv::format_real(fit.exponent, 3));
    });
    return notes;
  });
}

Notes stage_simulate(const PipelineConfig& config, const fs::path& out) {
  return guarded("simulate", [&] {
    const auto groups = load_groups(config, out);
    std::vector<Annotation> seed;
    std::vector<Annotation> annotations;
    std::vector<tasker::AssessmentItem> assessment;
    std::optional<SimResult> sim;
    if (config.annotations) {
      if (!config.assessment_seed) throw ConfigError("a recorded annotation log needs 'assessment_seed' too");
      seed = read_annotation_log(*config.assessment_seed);
      annotations = read_annotation_log(*config.annotations);
      assessment = tasker::derive_assessment_items(seed, config.tasker.assessment_size);
    } else {
      sim = simulate_crowd(config.simulation, groups, config.tasker);
      seed = sim->seed_annotations;
      annotations = sim->annotations;
      assessment = sim->assessment;
    }
    write_artifact(out, artifacts::assessment_seed, [&](std::ostream& o) { write_annotation_log(o, seed); });
    write_artifact(out, artifacts::assessment, [&](std::ostream& o) {
      csv::write_row(o, {"group_id", "dominant_main_class"});
      for (const auto& item : assessment) csv::write_row(o, {item.group_id, std::string(to_string(item.dominant_main_class))});
    });
    write_artifact(out, artifacts::annotations, [&](std::ostream& o) { write_annotation_log(o, annotations); });
    Notes notes{std::to_string(annotations.size()) + " annotations" + (sim ? " simulated" : " loaded")};
    if (sim) {
      write_artifact(out, artifacts::workers, [&](std::ostream& o) {
        csv::write_row(o, {"worker_id", "role", "gate"});
        for (const auto& [id, gate] : sim->gates) {
          csv::write_row(o, {id, sim->spammers.count(id) ? "spammer" : "honest", std::string(to_string(gate))});
        }
      });
      notes.push_back(std::to_string(sim->honest_workers.size()) + " honest workers, " +
                      std::to_string(sim->spammers.size()) + " spammers");
    }
    return notes;
  });
}

Notes stage_filter(const PipelineConfig& config, const fs::path& out, std::optional<int> x) {
  return guarded("filter", [&] {
    auto in = open_artifact(out, artifacts::annotations);
    const Snapshot snapshot(read_annotation_log(in));
    const auto options = filter_options(config);
    const auto curves = quality::exclusion_curves(snapshot, options);
    int chosen = x ? *x : config.filter_x ? *config.filter_x : quality::optimal_threshold(curves.assessment, curves.acquisition);
    if (chosen < quality::kMinX || chosen > quality::kMaxX) throw InvalidArgumentError("x must lie in [1, 10]");
    const auto decision = quality::filter_workers(snapshot, chosen, options);
    write_artifact(out, artifacts::filter_curves, [&](std::ostream& o) { quality::write_curves(o, curves); });
    write_artifact(out, artifacts::filter_report, [&](std::ostream& o) { quality::write_filter_report(o, decision); });
    return Notes{"filter at x=" + std::to_string(chosen) + " excluded " +
                 std::to_string(decision.excluded_workers.size()) + " of " + std::to_string(decision.workers.size()) +
                 " workers"};
  });
}

Notes stage_lexicon(const PipelineConfig& config, const fs::path& out) {
  return guarded("lexicon", [&] {
    const auto groups = load_groups(config, out);
    auto log = open_artifact(out, artifacts::annotations);
    const auto annotations = read_annotation_log(log);
    auto report = open_artifact(out, artifacts::filter_report);
    const auto retained = without(annotations, quality::read_excluded_workers(report));
    const auto result = lexicon::aggregate(retained, groups, dyad_table(config));
    write_artifact(out, artifacts::lexicon, [&](std::ostream& o) { lexicon::write_lexicon_csv(o, result.entries); });
    return Notes{std::to_string(result.entries.size()) + " lexicon entries, " + std::to_string(result.omitted_groups) +
                 " groups without retained annotations"};
  });
}

Notes stage_kappa(const PipelineConfig&, const fs::path& out) {
  return guarded("kappa", [&] {
    const auto entries = load_lexicon(out);
    const auto strata = reliability::kappa_by_stratum(entries);
    write_artifact(out, artifacts::kappa, [&](std::ostream& o) { reliability::write_kappa_report(o, strata); });
    Notes notes = strata.notices;
    for (const auto& [total, items] : strata.outside) {
      notes.push_back(std::to_string(items) + " groups with " + std::to_string(total) +
                      " annotations fall outside the kappa strata");
    }
    return notes;
  });
}

Notes stage_report(const PipelineConfig&, const fs::path& out) {
  return guarded("report", [&] {
    const auto entries = load_lexicon(out);
    std::map<std::string, std::size_t> by_class;
    std::size_t annotations = 0, subclass_agreement = 0, emotional_agreement = 0, combinations = 0, oppositions = 0;
    for (const auto& e : entries) {
      ++by_class[std::string(lexicon::to_string(e.main_class))];
      annotations += e.total;
      if (e.agreement.subclass_agreement) ++subclass_agreement;
      if (e.agreement.emotional_agreement) ++emotional_agreement;
      if (e.dyad) ++(e.dyad->kind == lexicon::DyadKind::opposition ? oppositions : combinations);
    }
    const std::vector<std::pair<std::string, std::size_t>> rows{
        {"groups", entries.size()},
        {"annotations", annotations},
        {"class_emotion", by_class["emotion"]},
        {"class_intensifying", by_class["intensifying"]},
        {"class_none", by_class["none"]},
        {"class_agreement", by_class["agreement"]},
        {"subclass_agreement", subclass_agreement},
        {"emotional_agreement", emotional_agreement},
        {"dyad_combination", combinations},
        {"dyad_opposition", oppositions},
    };
    Notes notes;
    write_artifact(out, artifacts::lexicon_stats, [&](std::ostream& o) {
      csv::write_row(o, {"metric", "value"});
      for (const auto& [metric, value] : rows) {
        csv::write_row(o, {metric, std::to_string(value)});
        notes.push_back(metric + ": " + std::to_string(value));
      }
    });
    return notes;
  });
}

Notes stage_eval_sample(const PipelineConfig& config, const fs::path& out) {
  return guarded("evaluate", [&] {
    const auto entries = load_lexicon(out);
    const auto validity_ids = evalkit::sample_validity_set(entries, config.seed, config.per_stratum);
    const auto intensifier_ids = evalkit::sample_intensifier_set(entries);
    auto tasks = evalkit::make_evaluation_tasks(entries, validity_ids, evalkit::EvaluationKind::validity);
    const auto extra = evalkit::make_evaluation_tasks(entries, intensifier_ids, evalkit::EvaluationKind::intensifier);
    tasks.insert(tasks.end(), extra.begin(), extra.end());
    write_artifact(out, artifacts::evaluation_tasks, [&](std::ostream& o) { write_evaluation_tasks(o, tasks); });
    return Notes{std::to_string(validity_ids.size()) + " validity and " + std::to_string(intensifier_ids.size()) +
                 " intensifier tasks"};
  });
}

Notes stage_eval_collect(const PipelineConfig& config, const fs::path& out) {
  return guarded("evaluate", [&] {
    std::vector<evalkit::EvaluationRecord> records;
    if (config.evaluations) {
      records = evalkit::read_records(*config.evaluations);
    } else {
      const auto entries = load_lexicon(out);
      const auto groups = load_groups(config, out);
      auto in = open_artifact(out, artifacts::evaluation_tasks);
      records = simulate_evaluations(config.evaluators, entries, groups, read_evaluation_tasks(in), config.tasker);
    }
    write_artifact(out, artifacts::evaluations, [&](std::ostream& o) { evalkit::write_records(o, records); });
    return Notes{std::to_string(records.size()) + " evaluation judgments"};
  });
}

Notes stage_eval_reports(const PipelineConfig&, const fs::path& out) {
  return guarded("evaluate", [&] {
    const auto entries = load_lexicon(out);
    auto in = open_artifact(out, artifacts::evaluations);
    const auto records = evalkit::read_records(in);
    const auto validity = evalkit::validity_report(records, entries);
    write_artifact(out, artifacts::validity_report,
                   [&](std::ostream& o) { evalkit::write_validity_report(o, validity); });
    const auto intensifier = evalkit::intensifier_report(records);
    write_artifact(out, artifacts::intensifier_report,
                   [&](std::ostream& o) { evalkit::write_intensifier_report(o, intensifier); });
    return Notes{std::to_string(validity.size()) + " validity rows, " + std::to_string(intensifier.size()) +
                 " intensifier rows"};
  });
}

Notes stage_evaluate(const PipelineConfig& config, const fs::path& out) {
  Notes notes = stage_eval_sample(config, out);
  for (auto&& n : stage_eval_collect(config, out)) notes.push_back(std::move(n));
  for (auto&& n : stage_eval_reports(config, out)) notes.push_back(std::move(n));
  return notes;
}

void write_evaluation_tasks(std::ostream& out, std::span<const evalkit::EvaluationTask> tasks) {
  csv::write_row(out, {"group_id", "kind", "summary"});
  for (const auto& t : tasks) csv::write_row(out, {t.group_id, std::string(to_string(t.kind)), t.summary});
}

std::vector<evalkit::EvaluationTask> read_evaluation_tasks(std::istream& in) {
  std::vector<evalkit::EvaluationTask> tasks;
  bool header = true;
  while (auto row = csv::read_row(in)) {
    if (header) {
      header = false;
      continue;
    }
    if (row->size() != 3) throw InvalidArgumentError("evaluation task rows need 3 fields");
    const auto kind = evalkit::parse_evaluation_kind((*row)[1]);
    if (!kind) throw InvalidArgumentError("unknown evaluation kind '" + (*row)[1] + "'");
    tasks.push_back({(*row)[0], (*row)[2], *kind});
  }
  return tasks;
}

Notes run_pipeline(const PipelineConfig& config, const fs::path& out) {
  Notes notes;
  const auto add = [&](Notes more) { notes.insert(notes.end(), more.begin(), more.end()); };
  add(stage_ingest(config, out));
  add(stage_preprocess(config, out));
  add(stage_simulate(config, out));
  add(stage_filter(config, out));
  add(stage_lexicon(config, out));
  add(stage_kappa(config, out));
  add(stage_report(config, out));
  if (config.evaluation) add(stage_evaluate(config, out));
  return notes;
}

std::string build_lexicon_csv(const PipelineConfig& config, const Snapshot& snapshot,
                              std::span<const corpus::TermGroup> groups) {
  const auto options = filter_options(config);
  std::set<std::string> excluded;
  if (!snapshot.empty()) {
    int x = quality::kMaxX;
    if (config.filter_x) {
      x = *config.filter_x;
    } else {
      try {
        const auto curves = quality::exclusion_curves(snapshot, options);
        x = quality::optimal_threshold(curves.assessment, curves.acquisition);
      } catch (const Error&) {
        // no worker meets the guard yet; fall back to the strictest threshold
      }
    }
    excluded = quality::filter_workers(snapshot, x, options).excluded_workers;
  }
  const auto result = lexicon::aggregate(without(snapshot.annotations(), excluded), groups, dyad_table(config));
  std::ostringstream out;
  lexicon::write_lexicon_csv(out, result.entries);
  return out.str();
}

}  // namespace emolex::ctl
