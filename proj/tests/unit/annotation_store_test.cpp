#include <gtest/gtest.h>

#include <atomic>
#include <thread>
#include <unordered_set>

#include "emolex/model/annotation_store.hpp"
#include "emolex/util/error.hpp"
#include "test_support.hpp"

namespace emolex {
namespace {

using test::annotation;

TEST(AnnotationStore, RecordsAndDerivesProfiles) {
  AnnotationStore store({"g1", "g2"});
  store.record(annotation("w1", "g1", Subclass::joy));
  store.record(annotation("w1", "g2", Subclass::joy));
  store.record(annotation("w1", "g1", Subclass::fear, Phase::assessment));
  EXPECT_EQ(store.size(), 3u);
  const auto p = store.profile("w1");
  EXPECT_EQ(p.total(Phase::acquisition), 2u);
  EXPECT_DOUBLE_EQ(*p.mu(Phase::acquisition), 1.0);
  EXPECT_TRUE(store.contains("w1", "g1", Phase::assessment));
  EXPECT_FALSE(store.contains("w2", "g1", Phase::assessment));
}

TEST(AnnotationStore, RejectsDuplicatesAndUnknownGroups) {
  AnnotationStore store({"g1"});
  store.record(annotation("w1", "g1", Subclass::joy));
  EXPECT_THROW(store.record(annotation("w1", "g1", Subclass::fear)), ConflictError);
  EXPECT_THROW(store.record(annotation("w1", "nope", Subclass::fear)), NotFoundError);
  EXPECT_EQ(store.size(), 1u);
}

TEST(AnnotationStore, SnapshotIsImmutable) {
  AnnotationStore store({"g1", "g2"});
  store.record(annotation("w1", "g1", Subclass::joy));
  const auto before = store.snapshot();
  store.record(annotation("w1", "g2", Subclass::joy));
  EXPECT_EQ(before->size(), 1u);
  EXPECT_EQ(store.snapshot()->size(), 2u);
  EXPECT_EQ(before->profile("w1")->total(Phase::acquisition), 1u);
}

TEST(AnnotationStore, PersistsAndReplays) {
  test::TempDir dir("store");
  const auto log = dir / "log.jsonl";
  {
    AnnotationStore store({"g1", "g2"}, log);
    store.record(annotation("w1", "g1", Subclass::joy));
    store.record(annotation("w2", "g2", Subclass::anger));
  }
  AnnotationStore again({"g1", "g2"}, log);
  EXPECT_EQ(again.size(), 2u);
  EXPECT_THROW(again.record(annotation("w1", "g1", Subclass::joy)), ConflictError);
  again.record(annotation("w1", "g2", Subclass::joy));
  EXPECT_EQ(read_annotation_log(log).size(), 3u);
}

TEST(AnnotationStore, ProfilesEqualRecomputationFromLog) {
  AnnotationStore store({"g1", "g2", "g3"});
  const char* workers[] = {"a", "b", "c"};
  int k = 0;
  for (const auto* w : workers) {
    for (const auto* g : {"g1", "g2", "g3"}) {
      store.record(annotation(w, g, kAllSubclasses[static_cast<std::size_t>(k++ % 11)]));
    }
  }
  const auto snap = store.snapshot();
  const Snapshot recomputed(snap->annotations());
  EXPECT_EQ(recomputed.profiles().size(), 3u);
  for (const auto& [id, p] : recomputed.profiles()) {
    EXPECT_EQ(p.counts, store.profile(id).counts);
  }
}

TEST(AnnotationStore, ConcurrentWritersNeverDuplicate) {
  std::unordered_set<std::string> groups;
  for (int i = 0; i < 200; ++i) groups.insert("g" + std::to_string(i));
  AnnotationStore store(groups);
  std::atomic<int> accepted{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 200; ++i) {
        try {
          store.record(annotation("shared", "g" + std::to_string(i), Subclass::joy));
          ++accepted;
        } catch (const ConflictError&) {
        }
        (void)store.snapshot();
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(accepted.load(), 200);
  EXPECT_EQ(store.size(), 200u);
}

}  // namespace
}  // namespace emolex
