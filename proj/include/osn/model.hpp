#pragma once

#include <optional>
#include <string>

#include "osn/common/time.hpp"
#include "osn/sentiment/score.hpp"

namespace osn {

/// One social-media post as delivered by an ingestion source.
struct Post {
  std::string id;
  std::string text;
  std::string author;
  Timestamp created_at{};
  std::string language = "und";
  std::optional<std::string> country;  // ISO-3166 alpha-2, absent when the post has no geo data

  bool operator==(const Post&) const = default;
};

struct ClassifiedPost {
  Post post;
  sentiment::SentimentScore score;

  bool operator==(const ClassifiedPost&) const = default;
};

}  // namespace osn
