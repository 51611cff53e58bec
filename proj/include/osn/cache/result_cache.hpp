#pragma once

#include <chrono>
#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "osn/common/time.hpp"
#include "osn/ingestion/query.hpp"
#include "osn/model.hpp"

namespace osn::cache {

struct CacheKey {
  std::string digest;  // 64 hex chars

  bool operator==(const CacheKey&) const = default;
};

/// Field-ordered, lowercase, term-sorted serialization of a query. The clamp
/// flag is left out.
std::string canonical_query(const ingestion::Query& query, const sentiment::AlgorithmId& algorithm);

/// SHA-256 of canonical_query().
CacheKey cache_key(const ingestion::Query& query, const sentiment::AlgorithmId& algorithm);

using ResultSet = std::shared_ptr<const std::vector<ClassifiedPost>>;

struct CacheConfig {
  std::chrono::milliseconds ttl{std::chrono::seconds{60}};
  std::size_t capacity = 1024;
};

struct CacheStats {
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t evictions = 0;
  std::size_t entries = 0;
};

/// TTL-bounded result store. An entry stored at t is served while now < t + ttl.
/// When full, the entry stored longest ago is evicted. Thread-safe.
class ResultCache {
 public:
  explicit ResultCache(CacheConfig config = {});

  std::optional<ResultSet> get(const CacheKey& key, Instant now);
  void put(const CacheKey& key, ResultSet value, Instant now);

  std::size_t size() const;
  CacheStats stats() const;
  const CacheConfig& config() const { return config_; }

 private:
  struct Entry {
    ResultSet value;
    Instant stored_at;
    std::list<std::string>::iterator order;
  };

  CacheConfig config_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, Entry> entries_;
  std::list<std::string> order_;  // oldest store first
  CacheStats stats_;
};

}  // namespace osn::cache
