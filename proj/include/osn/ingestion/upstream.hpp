#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osn/ingestion/query.hpp"

namespace osn::ingestion {

inline constexpr int kUpstreamPageMax = 100;
/// The recent-search endpoint rejects max_results below this.
inline constexpr int kUpstreamPageMin = 10;

struct UpstreamRequest {
  std::string path;
  std::vector<std::pair<std::string, std::string>> params;  // in wire order
  int page_size = 0;  // posts wanted from this page

  /// path plus the url-encoded query string.
  std::string target() const;
  const std::string* param(std::string_view name) const;

  bool operator==(const UpstreamRequest&) const = default;
};

/// Upstream search expression: terms OR-ed, hashtags as "#tag", usernames as
/// "from:name", then lang: and place_country: filters.
std::string upstream_query_string(const Query& query);

/// page_size = min(remaining, page_max); the wire max_results is raised to
/// the upstream minimum when smaller.
UpstreamRequest build_upstream_request(const Query& query, const std::optional<std::string>& page_token,
                                       std::optional<int> remaining = std::nullopt,
                                       int page_max = kUpstreamPageMax);

}  // namespace osn::ingestion
