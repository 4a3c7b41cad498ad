#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/util/time.hpp"

namespace emolex::corpus {

enum class Source { reddit, twitter };

std::string_view to_string(Source source);

/// One crawled social-media post. Engagement keys are restricted per source:
/// reddit carries `upvotes`; twitter carries `retweets` and `favourites`.
struct Post {
  Source source = Source::reddit;
  std::string id;
  std::string text;
  Timestamp timestamp{};
  std::optional<std::string> location;
  std::map<std::string, std::uint64_t> engagement;

  friend bool operator==(const Post&, const Post&) = default;
};

struct IngestWarning {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Post> posts;
  std::vector<IngestWarning> warnings;
};

/// Parses one line-delimited JSON record. Throws InvalidArgumentError on schema violations.
Post parse_post(std::string_view json_line);
std::string serialize_post(const Post& post);

/// Keeps posts whose text contains `keyword` (case-insensitive substring),
/// preserving input order. Malformed records become line-tagged warnings.
IngestResult ingest_posts(std::istream& input, std::string_view keyword);
IngestResult ingest_posts(const std::filesystem::path& path, std::string_view keyword);

void write_posts(std::ostream& out, const std::vector<Post>& posts);

}  // namespace emolex::corpus
