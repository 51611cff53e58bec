#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "osn/analytics/analytics.hpp"
#include "osn/cache/result_cache.hpp"
#include "osn/ingestion/query.hpp"
#include "osn/ingestion/source.hpp"
#include "osn/sentiment/registry.hpp"

namespace osn::gateway {

enum class Widget { summary, timeline, tagcloud, map, posts };

std::string_view to_string(Widget w);
std::optional<Widget> parse_widget(std::string_view s);

struct WidgetOptions {
  std::optional<std::chrono::seconds> bin_width;  // timeline
  std::optional<std::size_t> k;                   // tagcloud
};

inline constexpr std::size_t kDefaultTagCloudSize = 50;
inline constexpr std::size_t kMaxTagCloudSize = 500;

struct ServiceConfig {
  ingestion::QueryLimits limits;
  cache::CacheConfig cache;
  ingestion::FetchOptions fetch;
};

struct SearchResult {
  cache::CacheKey key;
  cache::ResultSet posts;
  bool from_cache = false;
};

/// Orchestrates search -> classify -> cache and shapes the widget payloads.
/// Safe to call from concurrent request handlers.
class AnalysisService {
 public:
  AnalysisService(std::shared_ptr<const sentiment::Registry> registry,
                  std::shared_ptr<const ingestion::PostSource> source, ServiceConfig config,
                  analytics::StopwordSet stopwords, std::function<Instant()> clock = now_instant);

  ingestion::Query normalize(const ingestion::RawQuery& raw) const;

  /// Throws sentiment::UnknownAlgorithm before touching the source.
  SearchResult run_search(const ingestion::Query& query);

  nlohmann::json widget(Widget widget, const ingestion::Query& query, const WidgetOptions& options,
                        SearchResult* result = nullptr);

  std::string export_csv(const ingestion::Query& query, SearchResult* result = nullptr);

  const sentiment::Registry& registry() const { return *registry_; }
  const ServiceConfig& config() const { return config_; }
  cache::CacheStats cache_stats() const { return cache_.stats(); }
  Instant now() const { return clock_(); }

 private:
  std::shared_ptr<const sentiment::Registry> registry_;
  std::shared_ptr<const ingestion::PostSource> source_;
  ServiceConfig config_;
  analytics::StopwordSet stopwords_;
  std::function<Instant()> clock_;
  cache::ResultCache cache_;
};

}  // namespace osn::gateway
