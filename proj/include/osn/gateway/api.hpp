#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "osn/gateway/audit.hpp"
#include "osn/gateway/cidr.hpp"
#include "osn/gateway/service.hpp"
#include "osn/gateway/tokens.hpp"

namespace osn::gateway {

inline constexpr std::string_view kApiPrefix = "/api/v1";
inline constexpr std::string_view kDescriptionPath = "/api/v1/openapi.json";

/// Transport-independent view of an HTTP request.
struct ApiRequest {
  std::string method = "GET";
  std::string path;
  std::multimap<std::string, std::string> params;
  std::map<std::string, std::string> headers;  // lowercase names
  std::string remote_addr = "127.0.0.1";

  std::optional<std::string> header(const std::string& lower_name) const;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;

  std::optional<std::string> header(std::string_view name) const;
};

/// Error body: {"code", "message", "detail"?}.
nlohmann::json error_body(std::string_view code, std::string_view message,
                          const nlohmann::json& detail = nullptr);

struct EndpointSpec {
  std::string path;
  std::optional<Scope> scope;  // nullopt = unauthenticated
  std::string summary;
  std::vector<std::string> params;
  std::vector<int> statuses;
  std::string produces = "application/json";
};

/// Every endpoint the gateway serves, in a fixed order.
const std::vector<EndpointSpec>& endpoints();

/// OpenAPI 3 document describing endpoints(), parameters, error codes and
/// the registered algorithms.
nlohmann::json describe_api(const sentiment::Registry& registry);

/// Authentication, network policy, routing, error mapping and auditing in
/// front of an AnalysisService. Exactly one audit record per handle() call,
/// written before handle() returns.
class Gateway {
 public:
  Gateway(std::shared_ptr<AnalysisService> service, TokenStore tokens, std::shared_ptr<AuditLog> audit,
          NetworkPolicy network = {});

  ApiResponse handle(const ApiRequest& request);

  AnalysisService& service() { return *service_; }
  const AuditLog& audit_log() const { return *audit_; }

 private:
  struct Context;
  ApiResponse dispatch(const ApiRequest& request, Context& ctx);

  std::shared_ptr<AnalysisService> service_;
  TokenStore tokens_;
  std::shared_ptr<AuditLog> audit_;
  NetworkPolicy network_;
  std::string description_;
};

}  // namespace osn::gateway
