#include "emolex/ctl/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "emolex/model/annotation_store.hpp"
#include "emolex/tasker/tasker.hpp"
#include "emolex/util/error.hpp"
#include "emolex/util/rng.hpp"
#include "emolex/util/time.hpp"

namespace emolex::ctl {

namespace {

using Weights = std::array<double, kSubclassCount>;
using Mask = std::array<bool, kSubclassCount>;

const Timestamp kSimStart = parse_timestamp("2019-03-01T09:00:00Z");

std::optional<Subclass> draw(std::mt19937_64& rng, const Weights& weights, const Mask& allowed) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kSubclassCount; ++i) {
    if (allowed[i]) sum += weights[i];
  }
  if (sum <= 0.0) return std::nullopt;
  double u = uniform_unit(rng) * sum;
  std::optional<Subclass> last;
  for (std::size_t i = 0; i < kSubclassCount; ++i) {
    if (!allowed[i] || weights[i] <= 0.0) continue;
    last = kAllSubclasses[i];
    if (u < weights[i]) return last;
    u -= weights[i];
  }
  return last;  // rounding residue
}

// Largest count a worker may reach in a phase of `n` answers while keeping
// count / n strictly below `fraction`.
std::uint32_t share_cap(double fraction, std::size_t n) {
  const double bound = std::ceil(fraction * static_cast<double>(n) - 1e-9);
  return bound < 1.0 ? 0 : static_cast<std::uint32_t>(bound) - 1;
}

std::size_t spammer_favoured(double rate, std::size_t n) {
  return static_cast<std::size_t>(std::ceil(rate * static_cast<double>(n) - 1e-9));
}

std::string worker_name(std::size_t index, std::size_t count) {
  std::string digits = std::to_string(index + 1);
  const std::size_t width = std::max<std::size_t>(3, std::to_string(count).size());
  return "w" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

struct SimWorker {
  std::string id;
  bool spammer = false;
  Subclass favoured = Subclass::joy;
  std::vector<bool> deviate;  // spammer acquisition plan
  SubclassCounts assessment_counts{};
  SubclassCounts acquisition_counts{};
  std::mt19937_64 rng;
  bool done = false;
};

}  // namespace

void validate(const SimProfile& p) {
  if (!(p.honest_max_fraction > 0.0 && p.honest_max_fraction <= 0.4)) {
    throw InvalidArgumentError("honest_max_fraction must be in (0, 0.4]");
  }
  if (!(p.spammer_rate >= 0.9 && p.spammer_rate <= 1.0)) {
    throw InvalidArgumentError("spammer_rate must be in [0.9, 1]");
  }
  if (p.annotations_per_worker == 0) throw InvalidArgumentError("annotations_per_worker must be positive");
  if (kSubclassCount * share_cap(p.honest_max_fraction, p.annotations_per_worker) < p.annotations_per_worker) {
    throw InvalidArgumentError("honest_max_fraction too small to spread annotations_per_worker answers");
  }
}

DesignerDistribution designer_distribution(std::string_view group_id, MainClass main_class, std::uint64_t seed) {
  auto rng = seeded_rng(seed, "designer-" + std::string(group_id));
  DesignerDistribution d;
  d.main_class = main_class;
  auto& w = d.weights;
  switch (main_class) {
    case MainClass::emotion: {
      const auto first = uniform_below(rng, kEmotions.size());
      auto second = uniform_below(rng, kEmotions.size() - 1);
      if (second >= first) ++second;
      w.fill(0.2 / 9.0);
      w[slot(kEmotions[first])] = 0.55;
      w[slot(kEmotions[second])] = 0.25;
      d.dominant = kEmotions[first];
      break;
    }
    case MainClass::intensifying: {
      const bool amplifying = uniform_below(rng, 2) == 0;
      d.dominant = amplifying ? Subclass::amplifying : Subclass::weakening;
      w.fill(0.15 / 8.0);
      w[slot(Subclass::amplifying)] = amplifying ? 0.6 : 0.15;
      w[slot(Subclass::weakening)] = amplifying ? 0.15 : 0.6;
      w[slot(Subclass::none)] = 0.1;
      break;
    }
    case MainClass::none:
      d.dominant = Subclass::none;
      w.fill(0.4 / 10.0);
      w[slot(Subclass::none)] = 0.6;
      break;
  }
  return d;
}

SimResult simulate_crowd(const SimProfile& profile, std::span<const corpus::TermGroup> groups,
                         const tasker::TaskerConfig& config) {
  validate(profile);
  if (profile.annotations_per_worker > config.cap) {
    throw InvalidArgumentError("annotations_per_worker exceeds the acquisition cap");
  }
  const std::size_t pool_size = config.assessment_size;
  if (groups.size() < pool_size + profile.annotations_per_worker) {
    throw InvalidArgumentError("simulation needs " + std::to_string(pool_size + profile.annotations_per_worker) +
                               " groups, got " + std::to_string(groups.size()));
  }

  std::vector<std::string> ids;
  ids.reserve(groups.size());
  for (const auto& g : groups) ids.push_back(g.id);
  std::sort(ids.begin(), ids.end());
  auto pick = seeded_rng(profile.seed, "assessment-pool");
  stable_shuffle(ids.begin(), ids.end(), pick);

  // Assessment pool composition: a tenth intensifying, a tenth none, the rest emotion.
  const std::size_t tenth = pool_size / 10;
  std::unordered_map<std::string, DesignerDistribution> designer;
  SimResult result;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    MainClass main = MainClass::emotion;
    if (i < pool_size) {
      if (i < tenth) main = MainClass::intensifying;
      else if (i < 2 * tenth) main = MainClass::none;
    } else {
      auto rng = seeded_rng(profile.seed, "main-" + ids[i]);
      const double u = uniform_unit(rng);
      main = u < 0.55 ? MainClass::emotion : u < 0.65 ? MainClass::intensifying : MainClass::none;
    }
    auto d = designer_distribution(ids[i], main, profile.seed);
    if (i < pool_size) {
      for (int k = 1; k <= 3; ++k) {
        result.seed_annotations.push_back(
            {"seed-" + std::to_string(k), ids[i], d.dominant, Phase::assessment, kSimStart});
      }
    }
    designer.emplace(ids[i], std::move(d));
  }
  std::sort(result.seed_annotations.begin(), result.seed_annotations.end(),
            [](const Annotation& a, const Annotation& b) {
              return std::tie(a.group_id, a.worker_id) < std::tie(b.group_id, b.worker_id);
            });
  result.assessment = tasker::derive_assessment_items(result.seed_annotations, pool_size);

  std::unordered_set<std::string> known(ids.begin(), ids.end());
  AnnotationStore store(known);
  evalkit::EvaluationLog evaluations;
  tasker::Tasker tasker(config, std::vector<corpus::TermGroup>(groups.begin(), groups.end()), result.assessment,
                        store, evaluations, stepping_clock(kSimStart, std::chrono::seconds(7)));

  const std::size_t count = profile.honest_count + profile.spammer_count;
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  auto roles = seeded_rng(profile.seed, "roles");
  stable_shuffle(order.begin(), order.end(), roles);
  std::vector<bool> is_spammer(count, false);
  for (std::size_t i = 0; i < profile.spammer_count; ++i) is_spammer[order[i]] = true;

  const std::size_t n = profile.annotations_per_worker;
  std::vector<SimWorker> workers;
  workers.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SimWorker w;
    w.id = worker_name(i, count);
    w.spammer = is_spammer[i];
    w.rng = seeded_rng(profile.seed, "worker-" + w.id);
    if (w.spammer) {
      w.favoured = kEmotions[uniform_below(w.rng, kEmotions.size())];
      w.deviate.assign(n, false);
      std::fill(w.deviate.begin() + static_cast<long>(spammer_favoured(profile.spammer_rate, n)), w.deviate.end(),
                true);
      stable_shuffle(w.deviate.begin(), w.deviate.end(), w.rng);
      result.spammers.insert(w.id);
    } else {
      result.honest_workers.insert(w.id);
    }
    tasker.register_worker(w.id);
    workers.push_back(std::move(w));
  }

  const auto assessment_cap = share_cap(profile.honest_max_fraction, config.assessment_sample);
  const auto acquisition_cap = share_cap(profile.honest_max_fraction, n);
  std::size_t active = workers.size();
  while (active > 0) {
    for (auto& w : workers) {
      if (w.done) continue;
      const auto next = tasker.next_task(w.id);
      if (!next.task) {
        w.done = true;
        --active;
        continue;
      }
      const auto& task = *next.task;
      const auto& d = designer.at(task.group_id);
      Subclass answer = Subclass::none;
      if (task.kind == tasker::TaskKind::assessment) {
        if (w.spammer) {
          answer = w.favoured;
        } else {
          // Honest workers know the main class; the subclass follows the designer
          // distribution within it, spread so no subclass reaches the share cap.
          Mask in_class{};
          Mask allowed{};
          for (std::size_t j = 0; j < kSubclassCount; ++j) {
            in_class[j] = main_class_of(kAllSubclasses[j]) == d.main_class;
            allowed[j] = in_class[j] && w.assessment_counts[j] < assessment_cap;
          }
          auto pick_sub = draw(w.rng, d.weights, allowed);
          if (!pick_sub) pick_sub = draw(w.rng, d.weights, in_class);
          answer = *pick_sub;
        }
        ++w.assessment_counts[slot(answer)];
      } else {
        const auto index = tasker.status(w.id).acquisition_count;
        Mask allowed{};
        if (w.spammer) {
          allowed.fill(true);
          allowed[slot(w.favoured)] = false;
          answer = w.deviate[index] ? draw(w.rng, d.weights, allowed).value_or(Subclass::none) : w.favoured;
        } else {
          for (std::size_t j = 0; j < kSubclassCount; ++j) allowed[j] = w.acquisition_counts[j] < acquisition_cap;
          auto pick_sub = draw(w.rng, d.weights, allowed);
          if (!pick_sub) {
            // every weighted option is capped: take the least used subclass
            const auto it = std::min_element(w.acquisition_counts.begin(), w.acquisition_counts.end());
            pick_sub = kAllSubclasses[static_cast<std::size_t>(it - w.acquisition_counts.begin())];
          }
          answer = *pick_sub;
        }
        ++w.acquisition_counts[slot(answer)];
      }
      const auto submitted = tasker.submit(w.id, task.group_id, answer);
      if (submitted.kind == tasker::TaskKind::acquisition && submitted.status.acquisition_count >= n) {
        w.done = true;
        --active;
      }
    }
  }

  result.annotations = store.snapshot()->annotations();
  for (const auto& w : workers) result.gates[w.id] = tasker.gate_worker(w.id);
  return result;
}

std::vector<evalkit::EvaluationRecord> simulate_evaluations(const EvalSimProfile& profile,
                                                            std::span<const lexicon::LexiconEntry> entries,
                                                            std::span<const corpus::TermGroup> groups,
                                                            std::vector<evalkit::EvaluationTask> tasks,
                                                            const tasker::TaskerConfig& config) {
  std::unordered_map<std::string_view, const lexicon::LexiconEntry*> by_id;
  for (const auto& e : entries) by_id.emplace(e.group_id, &e);

  std::unordered_set<std::string> known;
  for (const auto& g : groups) known.insert(g.id);
  AnnotationStore store(known);
  evalkit::EvaluationLog log;
  tasker::Tasker tasker(config, std::vector<corpus::TermGroup>(groups.begin(), groups.end()), {}, store, log,
                        stepping_clock(kSimStart, std::chrono::seconds(11)));
  tasker.set_evaluation_tasks(std::move(tasks));

  struct Evaluator {
    std::string id;
    std::mt19937_64 rng;
    bool done = false;
  };
  std::vector<Evaluator> evaluators;
  for (std::size_t i = 0; i < profile.experts + profile.crowd; ++i) {
    const bool expert = i < profile.experts;
    const std::string id = expert ? "expert-" + std::to_string(i + 1) : "crowd-" + std::to_string(i + 1 - profile.experts);
    tasker.register_worker(id, expert ? evalkit::EvaluatorKind::expert : evalkit::EvaluatorKind::crowd);
    evaluators.push_back({id, seeded_rng(profile.seed, "evaluator-" + id)});
  }

  std::size_t active = evaluators.size();
  while (active > 0) {
    for (auto& ev : evaluators) {
      if (ev.done) continue;
      const auto next = tasker.next_evaluation_task(ev.id);
      if (!next.task) {
        ev.done = true;
        --active;
        continue;
      }
      const auto it = by_id.find(next.task->group_id);
      if (it == by_id.end()) throw NotFoundError("no lexicon entry for group '" + next.task->group_id + "'");
      const auto& e = *it->second;
      const double total = static_cast<double>(e.total);
      if (*next.task->evaluation_kind == evalkit::EvaluationKind::validity) {
        const double share = static_cast<double>(e.agreement.max_count()) / total;
        const double raw = 1.0 + 4.0 * share + (uniform_unit(ev.rng) * 2.0 - 1.0);
        const int score = std::clamp(static_cast<int>(std::lround(raw)), 1, 5);
        tasker.submit_evaluation(ev.id, e.group_id, score, std::nullopt);
      } else {
        const double share =
            (e.counts[slot(Subclass::amplifying)] + e.counts[slot(Subclass::weakening)]) / total;
        const bool valid = uniform_unit(ev.rng) < 0.3 + 0.7 * share;
        tasker.submit_evaluation(ev.id, e.group_id, std::nullopt, valid);
      }
    }
  }
  return log.records();
}

}  // namespace emolex::ctl
