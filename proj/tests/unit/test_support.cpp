#include "test_support.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace emolex::test {

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("emolex-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::vector<corpus::TermGroup> synthetic_groups(std::size_t n, const std::string& prefix) {
  std::vector<corpus::TermGroup> groups;
  groups.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = std::to_string(i);
    id = prefix + std::string(id.size() < 4 ? 4 - id.size() : 0, '0') + id;
    groups.push_back({id, id, {id}, 1, corpus::dictionary_link(corpus::kDefaultDictionaryLinkBase, id)});
  }
  return groups;
}

Timestamp t0() { return parse_timestamp("2019-03-01T12:00:00Z"); }

Annotation annotation(const std::string& worker, const std::string& group, Subclass s, Phase phase) {
  return {worker, group, s, phase, t0()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace emolex::test
