#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/model/annotation_store.hpp"

namespace emolex::quality {

/// Candidate thresholds are x / 10 for x in [kMinX, kMaxX].
inline constexpr int kMinX = 1;
inline constexpr int kMaxX = 10;

enum class Population { assessment, acquisition };

/// f(x) = 1 - |{w : mu_w < x/10}| / |W| for x = 1..10: the share of the
/// population a threshold of x/10 would flag. Non-increasing in x.
struct ExclusionCurve {
  Population population = Population::assessment;
  std::array<double, kMaxX> points{};
  std::size_t workers = 0;

  double at(int x) const { return points.at(static_cast<std::size_t>(x - kMinX)); }
};

struct FilterOptions {
  /// Workers with fewer annotations than this in a phase are exempt from
  /// exclusion, and left out of that phase's curve (one annotation forces mu = 1).
  std::size_t min_annotations = 5;
};

struct WorkerScore {
  std::string worker_id;
  std::optional<double> mu_assessment;
  std::optional<double> mu_acquisition;
  bool excluded = false;
};

struct FilterDecision {
  int optimal_x = kMinX;
  double threshold = 0.1;
  std::set<std::string> excluded_workers;
  std::size_t retained_annotation_count = 0;
  std::vector<WorkerScore> workers;  // sorted by worker id
};

/// max_j s_j / sum_j s_j. Throws UndefinedValueError on all-zero counts.
double worker_mu(const SubclassCounts& counts);
/// Throws UndefinedValueError when the worker has no annotations in `phase`.
double worker_mu(const Snapshot& snapshot, std::string_view worker_id, Phase phase);

/// Throws InvalidArgumentError on an empty population.
ExclusionCurve exclusion_curve(std::span<const double> mus, Population population);

struct CurvePair {
  ExclusionCurve assessment;
  ExclusionCurve acquisition;
};
CurvePair exclusion_curves(const Snapshot& snapshot, const FilterOptions& options = {});

/// argmin_x |f_a(x) - f_b(x)|, smallest x on ties.
int optimal_threshold(const ExclusionCurve& assessment, const ExclusionCurve& acquisition);

/// Excludes a worker iff mu >= x/10 in both the assessment and the
/// acquisition phase (each phase meeting the minimum-annotation guard).
FilterDecision filter_workers(const Snapshot& snapshot, int x, const FilterOptions& options = {});

/// Annotations of workers not excluded by `decision`.
std::vector<Annotation> retained_annotations(const Snapshot& snapshot, const FilterDecision& decision);

/// CSV {worker_id, mu_assessment, mu_acquisition, excluded}; mu printed with
/// 6 decimals, empty when undefined.
void write_filter_report(std::ostream& out, const FilterDecision& decision);
/// Reads the set of excluded worker ids back from a filter report.
std::set<std::string> read_excluded_workers(std::istream& in);
/// CSV {x, threshold, f_assessment, f_acquisition, abs_difference}.
void write_curves(std::ostream& out, const CurvePair& curves);

}  // namespace emolex::quality
