#include "osn/cache/result_cache.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "osn/common/digest.hpp"
#include "osn/common/text.hpp"

namespace osn::cache {

std::string canonical_query(const ingestion::Query& query, const sentiment::AlgorithmId& algorithm) {
  std::vector<std::string> terms;
  terms.reserve(query.terms.size());
  for (const auto& t : query.terms)
    terms.push_back(std::string(ingestion::to_string(t.kind)) + ":" + text::to_lower_ascii(t.text));
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

  auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  auto opt_time = [](const std::optional<Timestamp>& t) {
    return t ? nlohmann::json(format_iso8601(*t)) : nlohmann::json(nullptr);
  };
  // An array fixes the field order independently of the JSON library.
  const nlohmann::json canonical = nlohmann::json::array({
      nlohmann::json::array({"algorithm", algorithm.str()}),
      nlohmann::json::array({"terms", terms}),
      nlohmann::json::array({"lang", opt(query.language)}),
      nlohmann::json::array({"from", opt_time(query.time_from)}),
      nlohmann::json::array({"to", opt_time(query.time_to)}),
      nlohmann::json::array({"origin", opt(query.origin)}),
      nlohmann::json::array({"max_results", query.max_results}),
  });
  return canonical.dump();
}

CacheKey cache_key(const ingestion::Query& query, const sentiment::AlgorithmId& algorithm) {
  return {sha256_hex(canonical_query(query, algorithm))};
}

ResultCache::ResultCache(CacheConfig config) : config_(config) {}

std::optional<ResultSet> ResultCache::get(const CacheKey& key, Instant now) {
  std::lock_guard lock(mu_);
  auto it = entries_.find(key.digest);
  if (it == entries_.end()) {
    ++stats_.misses;
    return std::nullopt;
  }
  if (now >= it->second.stored_at + config_.ttl) {
    order_.erase(it->second.order);
    entries_.erase(it);
    ++stats_.misses;
    return std::nullopt;
  }
  ++stats_.hits;
  return it->second.value;
}

void ResultCache::put(const CacheKey& key, ResultSet value, Instant now) {
  std::lock_guard lock(mu_);
  if (config_.capacity == 0) return;
  if (auto it = entries_.find(key.digest); it != entries_.end()) {
    order_.erase(it->second.order);
    entries_.erase(it);
  }
  while (entries_.size() >= config_.capacity) {
    entries_.erase(order_.front());
    order_.pop_front();
    ++stats_.evictions;
  }
  order_.push_back(key.digest);
  entries_.emplace(key.digest, Entry{std::move(value), now, std::prev(order_.end())});
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

CacheStats ResultCache::stats() const {
  std::lock_guard lock(mu_);
  CacheStats s = stats_;
  s.entries = entries_.size();
  return s;
}

}  // namespace osn::cache
