#include "emolex/corpus/post.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

#include "emolex/util/error.hpp"

namespace emolex::corpus {

namespace {

using nlohmann::json;

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
}

bool engagement_key_allowed(Source source, std::string_view key) {
  if (source == Source::reddit) return key == "upvotes";
  return key == "retweets" || key == "favourites";
}

const json& require(const json& record, const char* field) {
  const auto it = record.find(field);
  if (it == record.end()) throw InvalidArgumentError(std::string("missing field '") + field + "'");
  return *it;
}

}  // namespace

std::string_view to_string(Source source) {
  return source == Source::reddit ? "reddit" : "twitter";
}

Post parse_post(std::string_view json_line) {
  json record;
  try {
    record = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw InvalidArgumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw InvalidArgumentError("record is not a JSON object");

  Post post;
  try {
    const auto source = require(record, "source").get<std::string>();
    if (source == "reddit") {
      post.source = Source::reddit;
    } else if (source == "twitter") {
      post.source = Source::twitter;
    } else {
      throw InvalidArgumentError("unknown source '" + source + "'");
    }
    post.id = require(record, "id").get<std::string>();
    if (post.id.empty()) throw InvalidArgumentError("empty id");
    post.text = require(record, "text").get<std::string>();
    if (is_blank(post.text)) throw InvalidArgumentError("empty text");
    post.timestamp = parse_timestamp(require(record, "timestamp").get<std::string>());
    if (const auto it = record.find("location"); it != record.end() && !it->is_null()) {
      post.location = it->get<std::string>();
    }
    const auto& engagement = require(record, "engagement");
    if (!engagement.is_object()) throw InvalidArgumentError("engagement must be an object");
    for (const auto& [key, value] : engagement.items()) {
      if (!engagement_key_allowed(post.source, key)) {
        throw InvalidArgumentError("engagement key '" + key + "' not allowed for " +
                                   std::string(to_string(post.source)));
      }
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw InvalidArgumentError("engagement '" + key + "' must be a non-negative integer");
      }
      post.engagement[key] = value.get<std::uint64_t>();
    }
  } catch (const json::type_error& e) {
    throw InvalidArgumentError(std::string("wrong field type: ") + e.what());
  }
  return post;
}

std::string serialize_post(const Post& post) {
  json record;
  record["source"] = to_string(post.source);
  record["id"] = post.id;
  record["text"] = post.text;
  record["timestamp"] = format_timestamp(post.timestamp);
  if (post.location) record["location"] = *post.location;
  record["engagement"] = json::object();
  for (const auto& [key, value] : post.engagement) record["engagement"][key] = value;
  return record.dump();
}

IngestResult ingest_posts(std::istream& input, std::string_view keyword) {
  if (keyword.empty() || is_blank(keyword)) throw InvalidArgumentError("keyword must be non-empty");
  const std::string needle = lower(keyword);

  IngestResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    try {
      Post post = parse_post(line);
      if (lower(post.text).find(needle) != std::string::npos) {
        result.posts.push_back(std::move(post));
      }
    } catch (const InvalidArgumentError& e) {
      result.warnings.push_back({line_no, e.what()});
    }
  }
  if (input.bad()) throw IoError("read failure while ingesting posts");
  return result;
}

IngestResult ingest_posts(const std::filesystem::path& path, std::string_view keyword) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open post file '" + path.string() + "'");
  return ingest_posts(in, keyword);
}

void write_posts(std::ostream& out, const std::vector<Post>& posts) {
  for (const auto& post : posts) out << serialize_post(post) << '\n';
}

}  // namespace emolex::corpus
