#include "emolex/quality/spam_filter.hpp"

#include <algorithm>
#include <cmath>

#include "emolex/util/csv.hpp"
#include "emolex/util/error.hpp"

namespace emolex::quality {

namespace {

// max * 10 >= x * total, evaluated exactly in integers
bool at_or_above(const SubclassCounts& counts, int x) {
  const auto sum = total(counts);
  const auto max = *std::max_element(counts.begin(), counts.end());
  return static_cast<std::uint64_t>(max) * 10 >= static_cast<std::uint64_t>(x) * sum;
}

}  // namespace

double worker_mu(const SubclassCounts& counts) {
  const auto sum = total(counts);
  if (sum == 0) throw UndefinedValueError("mu is undefined for a worker without annotations");
  return static_cast<double>(*std::max_element(counts.begin(), counts.end())) / static_cast<double>(sum);
}

double worker_mu(const Snapshot& snapshot, std::string_view worker_id, Phase phase) {
  const auto* profile = snapshot.profile(worker_id);
  if (!profile) throw UndefinedValueError("no annotations for worker '" + std::string(worker_id) + "'");
  return worker_mu(profile->counts_for(phase));
}

ExclusionCurve exclusion_curve(std::span<const double> mus, Population population) {
  if (mus.empty()) throw InvalidArgumentError("exclusion curve over an empty population");
  ExclusionCurve curve;
  curve.population = population;
  curve.workers = mus.size();
  for (int x = kMinX; x <= kMaxX; ++x) {
    const double threshold = x / 10.0;
    const auto below = std::count_if(mus.begin(), mus.end(), [&](double mu) { return mu < threshold; });
    curve.points[static_cast<std::size_t>(x - kMinX)] =
        1.0 - static_cast<double>(below) / static_cast<double>(mus.size());
  }
  return curve;
}

CurvePair exclusion_curves(const Snapshot& snapshot, const FilterOptions& options) {
  std::vector<double> assessment;
  std::vector<double> acquisition;
  for (const auto& [id, profile] : snapshot.profiles()) {
    const auto a = profile.total(Phase::assessment);
    const auto b = profile.total(Phase::acquisition);
    if (a > 0 && a >= options.min_annotations) assessment.push_back(*profile.mu(Phase::assessment));
    if (b > 0 && b >= options.min_annotations) acquisition.push_back(*profile.mu(Phase::acquisition));
  }
  if (assessment.empty() || acquisition.empty()) {
    throw InvalidArgumentError("exclusion curves need workers with annotations in both phases");
  }
  return {exclusion_curve(assessment, Population::assessment),
          exclusion_curve(acquisition, Population::acquisition)};
}

int optimal_threshold(const ExclusionCurve& assessment, const ExclusionCurve& acquisition) {
  int best = kMinX;
  double best_gap = std::fabs(assessment.at(kMinX) - acquisition.at(kMinX));
  for (int x = kMinX + 1; x <= kMaxX; ++x) {
    const double gap = std::fabs(assessment.at(x) - acquisition.at(x));
    if (gap < best_gap) {
      best = x;
      best_gap = gap;
    }
  }
  return best;
}

FilterDecision filter_workers(const Snapshot& snapshot, int x, const FilterOptions& options) {
  if (x < kMinX || x > kMaxX) throw InvalidArgumentError("filter threshold x must lie in [1, 10]");
  FilterDecision decision;
  decision.optimal_x = x;
  decision.threshold = x / 10.0;
  for (const auto& [id, profile] : snapshot.profiles()) {
    WorkerScore score;
    score.worker_id = id;
    score.mu_assessment = profile.mu(Phase::assessment);
    score.mu_acquisition = profile.mu(Phase::acquisition);
    const auto& a = profile.counts_for(Phase::assessment);
    const auto& b = profile.counts_for(Phase::acquisition);
    const bool a_eligible = total(a) > 0 && total(a) >= options.min_annotations;
    const bool b_eligible = total(b) > 0 && total(b) >= options.min_annotations;
    score.excluded = a_eligible && b_eligible && at_or_above(a, x) && at_or_above(b, x);
    if (score.excluded) decision.excluded_workers.insert(id);
    decision.workers.push_back(std::move(score));
  }
  for (const auto& a : snapshot.annotations()) {
    if (!decision.excluded_workers.count(a.worker_id)) ++decision.retained_annotation_count;
  }
  return decision;
}

std::vector<Annotation> retained_annotations(const Snapshot& snapshot, const FilterDecision& decision) {
  std::vector<Annotation> out;
  for (const auto& a : snapshot.annotations()) {
    if (!decision.excluded_workers.count(a.worker_id)) out.push_back(a);
  }
  return out;
}

void write_filter_report(std::ostream& out, const FilterDecision& decision) {
  csv::write_row(out, {"worker_id", "mu_assessment", "mu_acquisition", "excluded"});
  for (const auto& w : decision.workers) {
    csv::write_row(out, {w.worker_id, w.mu_assessment ? csv::format_real(*w.mu_assessment, 6) : "",
                         w.mu_acquisition ? csv::format_real(*w.mu_acquisition, 6) : "",
                         w.excluded ? "true" : "false"});
  }
}

std::set<std::string> read_excluded_workers(std::istream& in) {
  const auto header = csv::read_row(in);
  if (!header || header->size() != 4 || (*header)[0] != "worker_id") {
    throw InvalidArgumentError("filter report: unexpected header");
  }
  std::set<std::string> out;
  while (auto row = csv::read_row(in)) {
    if (row->size() == 1 && row->front().empty()) continue;
    if (row->size() != 4) throw InvalidArgumentError("filter report: expected 4 columns");
    if ((*row)[3] == "true") out.insert((*row)[0]);
  }
  return out;
}

void write_curves(std::ostream& out, const CurvePair& curves) {
  csv::write_row(out, {"x", "threshold", "f_assessment", "f_acquisition", "abs_difference"});
  for (int x = kMinX; x <= kMaxX; ++x) {
    const double fa = curves.assessment.at(x);
    const double fb = curves.acquisition.at(x);
    csv::write_row(out, {std::to_string(x), csv::format_real(x / 10.0, 1), csv::format_real(fa, 6),
                         csv::format_real(fb, 6), csv::format_real(std::fabs(fa - fb), 6)});
  }
}

}  // namespace emolex::quality
