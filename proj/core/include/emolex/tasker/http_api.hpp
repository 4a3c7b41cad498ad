#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "emolex/tasker/tasker.hpp"

namespace emolex::tasker {

/// JSON-over-HTTP front end of a Tasker.
///
///   POST /api/worker              {worker, kind?}            register (kind: crowd|expert)
///   GET  /api/task?worker=ID[&kind=evaluation]               next task or exhausted
///   POST /api/annotation          {worker, group, subclass}
///   GET  /api/worker/ID/status
///   GET  /api/groups/ID                                      terms + dictionary_link
///   POST /api/evaluation          {worker, group, score | intensifier_valid}
///   GET  /api/lexicon.csv
///   GET  /api/subclasses                                     the 11 options and their main class
///
/// Errors map to 400 (bad input), 404 (unknown worker/group), 409 (already
/// annotated), 422 (no outstanding assignment).
class ApiServer {
 public:
  using LexiconCsv = std::function<std::string()>;

  ApiServer(Tasker& tasker, LexiconCsv lexicon_csv,
            std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds and serves on a background thread. `port == 0` picks a free port.
  /// Returns the bound port; throws IoError when binding fails.
  int start(const std::string& host, int port);
  /// Blocks until stop() is called from elsewhere.
  void wait();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace emolex::tasker
