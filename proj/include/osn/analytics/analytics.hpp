#pragma once

#include <chrono>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "osn/model.hpp"

namespace osn::analytics {

struct LabelCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t neutral = 0;

  std::size_t total() const { return positive + negative + neutral; }
  void add(sentiment::Polarity p);
  bool operator==(const LabelCounts&) const = default;
};

struct Distribution {
  LabelCounts counts;
  double positive = 0.0;
  double negative = 0.0;
  double neutral = 0.0;
};

Distribution polarity_distribution(std::span<const ClassifiedPost> posts);

struct TimeBin {
  Timestamp bin_start;
  LabelCounts counts;
  double mean_compound = 0.0;
};

/// Refuses to build more bins than this.
inline constexpr std::size_t kMaxTimeBins = 10'000;

/// Contiguous fixed-width bins from the earliest to the latest post, empty
/// bins included. Throws std::invalid_argument for a non-positive width or a
/// bin count above kMaxTimeBins.
std::vector<TimeBin> timeline(std::span<const ClassifiedPost> posts, std::chrono::seconds bin_width);

/// One hour when the posts span at most two days, otherwise one day.
std::chrono::seconds default_bin_width(std::span<const ClassifiedPost> posts);

struct TermWeight {
  std::string term;
  std::size_t weight = 0;
  bool operator==(const TermWeight&) const = default;
};

using StopwordSet = std::unordered_set<std::string>;

StopwordSet load_stopwords(const std::string& path);

/// Top-k terms by frequency, ties in lexicographic order. URLs and
/// @-mentions are dropped, '#' is stripped from hashtags, tokens shorter
/// than two characters and stopwords are skipped.
std::vector<TermWeight> tag_cloud(std::span<const Post> posts, std::size_t k, const StopwordSet& stopwords);
std::vector<TermWeight> tag_cloud(std::span<const ClassifiedPost> posts, std::size_t k,
                                  const StopwordSet& stopwords);

inline constexpr std::string_view kUnknownCountry = "??";

struct CountrySentiment {
  std::string country;
  LabelCounts counts;
  double mean_compound = 0.0;
};

/// Grouped by country (posts without one under "??"), largest group first.
std::vector<CountrySentiment> geo_summary(std::span<const ClassifiedPost> posts);

inline constexpr std::string_view kCsvHeader =
    "id,created_at,author,lang,country,text,algorithm,compound,label";

/// RFC-4180 CSV with CRLF line endings, one row per post in input order.
void write_csv(std::ostream& out, std::span<const ClassifiedPost> posts);
std::string to_csv(std::span<const ClassifiedPost> posts);

/// RFC-4180 field quoting: quoted when the field holds a comma, quote, CR or LF.
std::string csv_field(std::string_view value);

}  // namespace osn::analytics
