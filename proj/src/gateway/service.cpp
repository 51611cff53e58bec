#include "osn/gateway/service.hpp"

#include <stdexcept>

#include "osn/analytics/json.hpp"
#include "osn/sentiment/batch.hpp"

namespace osn::gateway {

std::string_view to_string(Widget w) {
  switch (w) {
    case Widget::summary: return "summary";
    case Widget::timeline: return "timeline";
    case Widget::tagcloud: return "tagcloud";
    case Widget::map: return "map";
    case Widget::posts: return "posts";
  }
  return "summary";
}

std::optional<Widget> parse_widget(std::string_view s) {
  for (Widget w : {Widget::summary, Widget::timeline, Widget::tagcloud, Widget::map, Widget::posts})
    if (to_string(w) == s) return w;
  return std::nullopt;
}

AnalysisService::AnalysisService(std::shared_ptr<const sentiment::Registry> registry,
                                 std::shared_ptr<const ingestion::PostSource> source, ServiceConfig config,
                                 analytics::StopwordSet stopwords, std::function<Instant()> clock)
    : registry_(std::move(registry)),
      source_(std::move(source)),
      config_(config),
      stopwords_(std::move(stopwords)),
      clock_(std::move(clock)),
      cache_(config.cache) {
  if (!registry_ || !source_) throw std::invalid_argument("service needs a registry and a source");
}

ingestion::Query AnalysisService::normalize(const ingestion::RawQuery& raw) const {
  return ingestion::normalize_query(raw, config_.limits);
}

SearchResult AnalysisService::run_search(const ingestion::Query& query) {
  const sentiment::Analyzer& analyzer = registry_->get(query.algorithm);
  SearchResult result;
  result.key = cache::cache_key(query, query.algorithm);
  if (auto hit = cache_.get(result.key, clock_())) {
    result.posts = std::move(*hit);
    result.from_cache = true;
    return result;
  }
  const auto posts = ingestion::fetch_posts(query, *source_, config_.fetch);
  result.posts = std::make_shared<const std::vector<ClassifiedPost>>(sentiment::analyze_batch(analyzer, posts));
  cache_.put(result.key, result.posts, clock_());
  return result;
}

nlohmann::json AnalysisService::widget(Widget widget, const ingestion::Query& query,
                                       const WidgetOptions& options, SearchResult* out) {
  if (options.k && (*options.k < 1 || *options.k > kMaxTagCloudSize))
    throw std::invalid_argument("k must be between 1 and " + std::to_string(kMaxTagCloudSize));
  if (options.bin_width && options.bin_width->count() <= 0)
    throw std::invalid_argument("bin_width must be positive");

  SearchResult result = run_search(query);
  const std::span<const ClassifiedPost> posts(*result.posts);

  nlohmann::json j = {{"widget", to_string(widget)},
                      {"query_digest", result.key.digest},
                      {"algorithm", query.algorithm.str()},
                      {"clamped", query.clamped},
                      {"total", posts.size()}};
  switch (widget) {
    case Widget::summary:
      j["distribution"] = analytics::polarity_distribution(posts);
      break;
    case Widget::timeline: {
      const auto width = options.bin_width.value_or(analytics::default_bin_width(posts));
      j["bin_width_s"] = width.count();
      j["bins"] = analytics::timeline(posts, width);
      break;
    }
    case Widget::tagcloud: {
      const auto k = options.k.value_or(kDefaultTagCloudSize);
      j["k"] = k;
      j["terms"] = analytics::tag_cloud(posts, k, stopwords_);
      break;
    }
    case Widget::map:
      j["countries"] = analytics::geo_summary(posts);
      break;
    case Widget::posts:
      j["posts"] = *result.posts;
      break;
  }
  if (out) *out = std::move(result);
  return j;
}

std::string AnalysisService::export_csv(const ingestion::Query& query, SearchResult* out) {
  SearchResult result = run_search(query);
  std::string body = analytics::to_csv(*result.posts);
  if (out) *out = std::move(result);
  return body;
}

}  // namespace osn::gateway
