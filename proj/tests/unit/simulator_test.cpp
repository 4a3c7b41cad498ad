#include <gtest/gtest.h>

#include <numeric>

#include "emolex/ctl/simulator.hpp"
#include "emolex/lexicon/lexicon.hpp"
#include "emolex/quality/spam_filter.hpp"
#include "emolex/util/error.hpp"
#include "test_support.hpp"

namespace emolex::ctl {
namespace {

tasker::TaskerConfig sim_config() {
  tasker::TaskerConfig c;
  c.assessment_size = 100;
  c.assessment_sample = 10;
  c.cap = 660;
  c.seed = 9;
  return c;
}

TEST(Designer, WeightsFormADistribution) {
  for (auto c : {MainClass::emotion, MainClass::intensifying, MainClass::none}) {
    const auto d = designer_distribution("g0001", c, 4);
    EXPECT_NEAR(std::accumulate(d.weights.begin(), d.weights.end(), 0.0), 1.0, 1e-12);
    EXPECT_EQ(main_class_of(d.dominant), c);
    EXPECT_EQ(*std::max_element(d.weights.begin(), d.weights.end()), d.weights[slot(d.dominant)]);
  }
}

TEST(SimProfile, Validation) {
  SimProfile p;
  EXPECT_NO_THROW(validate(p));
  p.honest_max_fraction = 0.5;
  EXPECT_THROW(validate(p), InvalidArgumentError);
  p = {};
  p.spammer_rate = 0.8;
  EXPECT_THROW(validate(p), InvalidArgumentError);
  p = {};
  p.annotations_per_worker = 0;
  EXPECT_THROW(validate(p), InvalidArgumentError);
  const auto few = test::synthetic_groups(50);
  EXPECT_THROW(simulate_crowd(SimProfile{}, few, sim_config()), InvalidArgumentError);
}

class Population : public ::testing::Test {
 protected:
  static const SimResult& result() {
    static const SimResult r = simulate_crowd(SimProfile{}, test::synthetic_groups(400), sim_config());
    return r;
  }
};

TEST_F(Population, RolesAndAnnotationCounts) {
  const auto& r = result();
  EXPECT_EQ(r.honest_workers.size(), 160u);
  EXPECT_EQ(r.spammers.size(), 40u);
  EXPECT_EQ(r.gates.size(), 200u);
  EXPECT_EQ(r.assessment.size(), 100u);
  const Snapshot snap(r.annotations, r.gates);
  for (const auto& [id, profile] : snap.profiles()) {
    EXPECT_EQ(profile.gate, GateStatus::pass) << id;
    EXPECT_EQ(profile.total(Phase::assessment), 10u);
    EXPECT_EQ(profile.total(Phase::acquisition), 40u);
  }
}

TEST_F(Population, HonestSharesStayBelowCeiling) {
  const Snapshot snap(result().annotations, result().gates);
  for (const auto& w : result().honest_workers) {
    EXPECT_LT(*snap.profile(w)->mu(Phase::assessment), 0.4) << w;
    EXPECT_LT(*snap.profile(w)->mu(Phase::acquisition), 0.4) << w;
  }
  for (const auto& w : result().spammers) {
    EXPECT_GE(*snap.profile(w)->mu(Phase::assessment), 0.9) << w;
    EXPECT_GE(*snap.profile(w)->mu(Phase::acquisition), 0.9) << w;
  }
}

TEST_F(Population, FilterAtFourExcludesExactlyTheSpammers) {
  const Snapshot snap(result().annotations, result().gates);
  EXPECT_EQ(quality::filter_workers(snap, 4).excluded_workers, result().spammers);
}

TEST(Simulation, NoSpammersNoExclusions) {
  SimProfile p;
  p.spammer_count = 0;
  p.honest_count = 50;
  const auto r = simulate_crowd(p, test::synthetic_groups(300), sim_config());
  EXPECT_TRUE(quality::filter_workers(Snapshot(r.annotations, r.gates), 4).excluded_workers.empty());
}

TEST(Simulation, HighSpammerRateIsHonoured) {
  SimProfile p;
  p.honest_count = 20;
  p.spammer_count = 10;
  p.spammer_rate = 0.99;
  const auto r = simulate_crowd(p, test::synthetic_groups(300), sim_config());
  const Snapshot snap(r.annotations, r.gates);
  for (const auto& w : r.spammers) {
    EXPECT_GE(*snap.profile(w)->mu(Phase::assessment), 0.99);
    EXPECT_GE(*snap.profile(w)->mu(Phase::acquisition), 0.99);
  }
}

TEST(Simulation, SeedDeterminism) {
  SimProfile p;
  p.honest_count = 8;
  p.spammer_count = 2;
  const auto groups = test::synthetic_groups(200);
  const auto a = simulate_crowd(p, groups, sim_config());
  const auto b = simulate_crowd(p, groups, sim_config());
  EXPECT_EQ(a.annotations, b.annotations);
  p.seed = 2;
  EXPECT_NE(simulate_crowd(p, groups, sim_config()).annotations, a.annotations);
}

TEST(Simulation, EvaluationsMeetQuotas) {
  SimProfile p;
  p.honest_count = 30;
  p.spammer_count = 0;
  const auto groups = test::synthetic_groups(200);
  const auto r = simulate_crowd(p, groups, sim_config());
  const auto entries = lexicon::aggregate(r.annotations, groups).entries;
  std::vector<evalkit::EvaluationTask> tasks;
  for (std::size_t i = 0; i < 6; ++i) {
    tasks.push_back({entries[i].group_id, "s", i % 2 ? evalkit::EvaluationKind::validity
                                                     : evalkit::EvaluationKind::intensifier});
  }
  const auto records = simulate_evaluations(EvalSimProfile{}, entries, groups, tasks, sim_config());
  EXPECT_EQ(records.size(), 6u * 6u);
  for (const auto& rec : records) {
    EXPECT_NO_THROW(evalkit::validate(rec));
  }
}

}  // namespace
}  // namespace emolex::ctl
