#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osn/common/time.hpp"
#include "osn/sentiment/score.hpp"

namespace osn::ingestion {

enum class TermKind { keyword, hashtag, username };

std::string_view to_string(TermKind k);

/// Normalized search term. Hashtags carry their leading '#', usernames '@'.
struct Term {
  TermKind kind = TermKind::keyword;
  std::string text;

  auto operator<=>(const Term&) const = default;
};

struct Query {
  std::vector<Term> terms;
  std::optional<std::string> language;  // ISO 639-1
  std::optional<Timestamp> time_from;
  std::optional<Timestamp> time_to;
  std::optional<std::string> origin;  // ISO 3166-1 alpha-2
  int max_results = 100;
  sentiment::AlgorithmId algorithm = sentiment::kValenceRule;
  bool clamped = false;  // max_results was lowered to the hard limit

  bool operator==(const Query&) const = default;
};

/// Query fields exactly as the user supplied them.
struct RawQuery {
  std::vector<std::string> terms;
  std::optional<std::string> language;
  std::optional<std::string> time_from;
  std::optional<std::string> time_to;
  std::optional<std::string> origin;
  std::optional<std::string> max_results;
  std::optional<std::string> algorithm;
};

struct QueryLimits {
  int hard_limit = 1000;
  int default_results = 100;
  std::size_t max_terms = 20;
  std::size_t max_term_length = 64;
};

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Trims, lowercases, tags and deduplicates terms (first occurrence wins),
/// validates every filter and clamps max_results to the hard limit.
/// Throws ValidationError naming the offending field.
Query normalize_query(const RawQuery& raw, const QueryLimits& limits = {});

}  // namespace osn::ingestion
