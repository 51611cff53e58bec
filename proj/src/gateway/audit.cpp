#include "osn/gateway/audit.hpp"

namespace osn::gateway {

nlohmann::json to_json(const AuditRecord& r) {
  return {{"ts", format_iso8601(r.timestamp)},
          {"token_id", r.token_id},
          {"method", r.method},
          {"endpoint", r.endpoint},
          {"query_digest", r.query_digest},
          {"result_count", r.result_count},
          {"status", r.status},
          {"latency_ms", r.latency_ms}};
}

FileAuditSink::FileAuditSink(std::filesystem::path path) : path_(std::move(path)) {
  out_.open(path_, std::ios::app);
}

void FileAuditSink::append(const AuditRecord& record) {
  const std::string line = to_json(record).dump() + "\n";
  std::lock_guard lock(mu_);
  if (!out_.is_open()) {
    out_.clear();
    out_.open(path_, std::ios::app);
  }
  if (!out_) throw std::runtime_error("audit log unavailable: " + path_.string());
  out_ << line;
  out_.flush();
  if (!out_) {
    out_.close();
    throw std::runtime_error("audit write failed: " + path_.string());
  }
}

void MemoryAuditSink::append(const AuditRecord& record) {
  std::lock_guard lock(mu_);
  records_.push_back(record);
}

std::vector<AuditRecord> MemoryAuditSink::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

std::vector<std::string> MemoryAuditSink::lines() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(to_json(r).dump());
  return out;
}

std::size_t MemoryAuditSink::size() const {
  std::lock_guard lock(mu_);
  return records_.size();
}

void AuditLog::record(const AuditRecord& r) noexcept {
  try {
    if (!sink_) throw std::runtime_error("no audit sink");
    sink_->append(r);
    ++written_;
  } catch (...) {
    ++failures_;
  }
}

}  // namespace osn::gateway
