#include <gtest/gtest.h>

#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "emolex/util/error.hpp"
#include "emolex/util/rng.hpp"
#include "tasker_fixture.hpp"

namespace emolex::tasker {
namespace {

using test::TaskerRig;

// Four threads drive the same workers; each thread also fires stray
// submissions at random groups. The cap and triple uniqueness must hold.
TEST(TaskerConcurrency, CapAndUniquenessUnderContention) {
  auto config = TaskerRig::small_config();
  config.cap = 40;
  TaskerRig rig(90, config);
  const std::vector<std::string> workers{"w1", "w2", "w3", "w4", "w5", "w6"};
  for (const auto& w : workers) rig.tasker->register_worker(w);

  std::atomic<int> accepted{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      auto rng = seeded_rng(static_cast<std::uint64_t>(t), "contention");
      for (int step = 0; step < 600; ++step) {
        const auto& w = workers[uniform_below(rng, workers.size())];
        try {
          if (uniform_below(rng, 5) == 0) {
            rig.tasker->submit(w, rig.groups[uniform_below(rng, rig.groups.size())].id, Subclass::joy);
            ++accepted;
            continue;
          }
          const auto next = rig.tasker->next_task(w);
          if (!next.task) continue;
          const auto c = rig.expected.count(next.task->group_id) ? rig.expected.at(next.task->group_id)
                                                                  : MainClass::emotion;
          rig.tasker->submit(w, next.task->group_id, TaskerRig::right_answer(c));
          ++accepted;
        } catch (const RejectedError&) {
        } catch (const ConflictError&) {
        }
      }
    });
  }
  for (auto& th : threads) th.join();

  const auto snap = rig.store->snapshot();
  EXPECT_EQ(snap->size(), static_cast<std::size_t>(accepted.load()));
  std::set<std::tuple<std::string, std::string, Phase>> triples;
  std::map<std::string, std::size_t> acquisitions;
  for (const auto& a : snap->annotations()) {
    EXPECT_TRUE(triples.emplace(a.worker_id, a.group_id, a.phase).second) << a.worker_id << " " << a.group_id;
    if (a.phase == Phase::acquisition) ++acquisitions[a.worker_id];
  }
  for (const auto& w : workers) {
    EXPECT_LE(acquisitions[w], 40u);
    EXPECT_EQ(rig.tasker->status(w).acquisition_count, acquisitions[w]);
  }
}

TEST(TaskerConcurrency, FullCapWithFourSubmitters) {
  TaskerRig rig(720);
  rig.take_assessment("w", 10);
  std::vector<std::thread> threads;
  std::atomic<int> done{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (;;) {
        const auto next = rig.tasker->next_task("w");
        if (!next.task) return;
        try {
          rig.tasker->submit("w", next.task->group_id, Subclass::none);
          ++done;
        } catch (const RejectedError&) {
        } catch (const ConflictError&) {
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(done.load(), 660);
  EXPECT_EQ(rig.store->profile("w").total(Phase::acquisition), 660u);
}

}  // namespace
}  // namespace emolex::tasker
