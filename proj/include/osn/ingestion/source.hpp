#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osn/ingestion/query.hpp"
#include "osn/ingestion/rate_limiter.hpp"
#include "osn/ingestion/upstream.hpp"
#include "osn/model.hpp"

namespace osn::ingestion {

class IngestionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upstream rejected our credentials (401/403).
class UpstreamAuthError : public IngestionError {
 public:
  using IngestionError::IngestionError;
};

/// Upstream or local rate limit hit.
class RateLimitedError : public IngestionError {
 public:
  RateLimitedError(const std::string& what, std::chrono::seconds retry_after)
      : IngestionError(what), retry_after_(retry_after) {}
  std::chrono::seconds retry_after() const { return retry_after_; }

 private:
  std::chrono::seconds retry_after_;
};

/// Network failure that persisted through every retry.
class TransientError : public IngestionError {
 public:
  using IngestionError::IngestionError;
};

/// Unexpected upstream status or malformed payload.
class UpstreamError : public IngestionError {
 public:
  using IngestionError::IngestionError;
};

/// Local source unusable (missing or corrupt corpus file).
class SourceError : public IngestionError {
 public:
  using IngestionError::IngestionError;
};

struct Page {
  std::vector<Post> posts;
  std::optional<std::string> next_token;
};

/// One search in progress against a source.
class PostCursor {
 public:
  virtual ~PostCursor() = default;
  virtual Page next(const UpstreamRequest& request) = 0;
};

class PostSource {
 public:
  virtual ~PostSource() = default;
  virtual std::unique_ptr<PostCursor> open(const Query& query) const = 0;
};

/// Replays a JSON-lines corpus file. The parsed file is kept in memory and
/// reloaded when its size or modification time changes.
class OfflineCorpusSource final : public PostSource {
 public:
  explicit OfflineCorpusSource(std::filesystem::path path);

  std::unique_ptr<PostCursor> open(const Query& query) const override;

  std::size_t read_count() const { return reads_.load(); }  // open() calls
  std::size_t parse_count() const { return parses_.load(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::shared_ptr<const std::vector<Post>> snapshot() const;

  std::filesystem::path path_;
  mutable std::atomic<std::size_t> reads_{0};
  mutable std::atomic<std::size_t> parses_{0};
  mutable std::mutex mu_;
  mutable std::shared_ptr<const std::vector<Post>> posts_;
  mutable std::filesystem::file_time_type mtime_{};
  mutable std::uintmax_t size_ = 0;
};

/// Parses one corpus line. Throws SourceError.
Post parse_corpus_line(std::string_view line, std::size_t line_number = 0);
std::string corpus_line(const Post& post);

std::vector<Post> load_corpus(const std::filesystem::path& path);

struct LiveUpstreamConfig {
  std::string base_url;  // scheme://host[:port]
  std::string bearer_token;
  std::chrono::milliseconds timeout{10'000};
  std::vector<std::chrono::milliseconds> retry_backoff{std::chrono::milliseconds{250},
                                                       std::chrono::milliseconds{1000}};
  std::function<void(std::chrono::milliseconds)> sleep;  // defaults to this_thread::sleep_for
  std::function<Instant()> clock;                        // defaults to now_instant
};

/// Twitter-compatible recent-search client.
class LiveUpstreamSource final : public PostSource {
 public:
  LiveUpstreamSource(LiveUpstreamConfig config, std::shared_ptr<RateLimiter> limiter);

  std::unique_ptr<PostCursor> open(const Query& query) const override;

  std::size_t request_count() const { return requests_.load(); }

 private:
  friend class LiveCursor;
  Page fetch_page(const UpstreamRequest& request) const;

  LiveUpstreamConfig config_;
  std::shared_ptr<RateLimiter> limiter_;
  mutable std::atomic<std::size_t> requests_{0};
};

/// Maps a recent-search response body to posts. Throws UpstreamError.
Page parse_upstream_page(std::string_view body);

/// True iff the post passes the term filter (any term matches) and every
/// language, time and origin filter present in the query.
bool replay_match(const Post& post, const Query& query);

/// Newest first; ties broken by id so the order is total.
bool newer_first(const Post& a, const Post& b);

struct FetchOptions {
  int page_max = kUpstreamPageMax;
  int max_pages = 1000;
};

/// Pages through `source` until max_results posts are collected or the source
/// is exhausted. Result is newest first, ids unique, every post matching.
std::vector<Post> fetch_posts(const Query& query, const PostSource& source, const FetchOptions& options = {});

}  // namespace osn::ingestion
