#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "osn/common/time.hpp"

namespace osn::gateway {

inline constexpr std::string_view kAnonymous = "anonymous";

/// One handled request. Never carries post text or credentials.
struct AuditRecord {
  Instant timestamp{};
  std::string token_id{kAnonymous};
  std::string method = "GET";
  std::string endpoint;
  std::string query_digest;
  std::size_t result_count = 0;
  int status = 0;
  std::int64_t latency_ms = 0;
};

nlohmann::json to_json(const AuditRecord& r);

class AuditSink {
 public:
  virtual ~AuditSink() = default;
  /// May throw; AuditLog absorbs the failure.
  virtual void append(const AuditRecord& record) = 0;
};

/// JSON lines, flushed per record.
class FileAuditSink final : public AuditSink {
 public:
  explicit FileAuditSink(std::filesystem::path path);
  void append(const AuditRecord& record) override;

 private:
  std::filesystem::path path_;
  std::mutex mu_;
  std::ofstream out_;
};

class MemoryAuditSink final : public AuditSink {
 public:
  void append(const AuditRecord& record) override;
  std::vector<AuditRecord> records() const;
  std::vector<std::string> lines() const;  // serialized form, as a file sink would write it
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::vector<AuditRecord> records_;
};

/// Appends to a sink; a failing sink increments a counter instead of failing
/// the request.
class AuditLog {
 public:
  explicit AuditLog(std::shared_ptr<AuditSink> sink) : sink_(std::move(sink)) {}

  void record(const AuditRecord& r) noexcept;

  std::size_t written() const { return written_.load(); }
  std::size_t failures() const { return failures_.load(); }

 private:
  std::shared_ptr<AuditSink> sink_;
  std::atomic<std::size_t> written_{0};
  std::atomic<std::size_t> failures_{0};
};

}  // namespace osn::gateway
