#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "emolex/corpus/term_groups.hpp"
#include "emolex/evalkit/records.hpp"
#include "emolex/lexicon/lexicon.hpp"
#include "emolex/model/annotation.hpp"
#include "emolex/tasker/assessment.hpp"
#include "emolex/tasker/config.hpp"

namespace emolex::ctl {

/// Synthetic crowd. Honest workers keep every subclass share strictly below
/// `honest_max_fraction` in each phase; spammers put at least `spammer_rate`
/// of their answers on one emotion in both phases.
struct SimProfile {
  std::size_t honest_count = 160;
  std::size_t spammer_count = 40;
  double honest_max_fraction = 0.4;
  double spammer_rate = 0.95;
  std::size_t annotations_per_worker = 40;  // acquisition answers, at most the cap
  std::uint64_t seed = 1;
};

/// Throws InvalidArgumentError on out-of-range fields.
void validate(const SimProfile& profile);

/// Per-group label distribution the simulated crowd draws from.
struct DesignerDistribution {
  MainClass main_class = MainClass::none;
  Subclass dominant = Subclass::none;
  std::array<double, kSubclassCount> weights{};
};

DesignerDistribution designer_distribution(std::string_view group_id, MainClass main_class, std::uint64_t seed);

struct SimResult {
  std::vector<Annotation> seed_annotations;           // operator labels for the assessment pool
  std::vector<tasker::AssessmentItem> assessment;     // derived from the seed labels
  std::vector<Annotation> annotations;                // crowd log in submission order
  std::map<std::string, GateStatus> gates;
  std::set<std::string> honest_workers;
  std::set<std::string> spammers;
};

/// Runs the crowd through a real Tasker with a stepping clock, round-robin,
/// one task per worker per turn, so the cap and the assessment-first flow
/// apply exactly as they would live.
///
/// The assessment pool is built 80% emotion, 10% intensifying and 10% none,
/// so a spammer answering its favourite emotion throughout passes a 10-item
/// gate at 8/10. Throws InvalidArgumentError when there are too few groups
/// for the assessment pool plus one worker's acquisition quota.
SimResult simulate_crowd(const SimProfile& profile, std::span<const corpus::TermGroup> groups,
                         const tasker::TaskerConfig& config);

struct EvalSimProfile {
  std::size_t experts = 2;
  std::size_t crowd = 4;
  std::uint64_t seed = 1;
};

/// Evaluators work through the Tasker's evaluation queue until it is
/// exhausted. Validity scores grow with the majority share; intensifier
/// judgments are valid with probability rising with the intensifying share.
std::vector<evalkit::EvaluationRecord> simulate_evaluations(const EvalSimProfile& profile,
                                                            std::span<const lexicon::LexiconEntry> entries,
                                                            std::span<const corpus::TermGroup> groups,
                                                            std::vector<evalkit::EvaluationTask> tasks,
                                                            const tasker::TaskerConfig& config);

}  // namespace emolex::ctl
