#include "osn/gateway/api.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <set>

#include "osn/common/text.hpp"
#include "osn/ingestion/source.hpp"

namespace osn::gateway {

using nlohmann::json;

namespace {

const std::vector<std::string> kQueryParams = {"q", "lang", "from", "to", "origin", "max_results", "algorithm"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> extra) {
  base.insert(base.end(), extra);
  return base;
}

/// A request failure that maps directly onto an error response.
struct ApiError {
  ApiError(int s, std::string c, std::string m, json d = nullptr,
           std::optional<std::chrono::seconds> retry = std::nullopt)
      : status(s), code(std::move(c)), message(std::move(m)), detail(std::move(d)), retry_after(retry) {}

  int status;
  std::string code;
  std::string message;
  json detail;
  std::optional<std::chrono::seconds> retry_after;
};

ApiResponse json_response(int status, const json& body) {
  ApiResponse r;
  r.status = status;
  r.body = body.dump();
  return r;
}

ApiResponse error_response(const ApiError& e) {
  ApiResponse r = json_response(e.status, error_body(e.code, e.message, e.detail));
  if (e.status == 401) r.headers.emplace_back("WWW-Authenticate", "Bearer");
  if (e.retry_after) r.headers.emplace_back("Retry-After", std::to_string(e.retry_after->count()));
  return r;
}

std::optional<std::string> single(const ApiRequest& req, const std::string& name) {
  const auto [lo, hi] = req.params.equal_range(name);
  if (lo == hi) return std::nullopt;
  if (std::next(lo) != hi) throw ApiError{400, "invalid_parameter", "parameter '" + name + "' given more than once"};
  return lo->second;
}

long long parse_positive(const std::string& name, const std::string& value) {
  long long n = 0;
  const auto s = text::trim(value);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || n <= 0)
    throw ApiError{400, "invalid_parameter", "'" + name + "' must be a positive integer", {{"field", name}}};
  return n;
}

ingestion::RawQuery raw_query(const ApiRequest& req) {
  ingestion::RawQuery raw;
  const auto [lo, hi] = req.params.equal_range("q");
  for (auto it = lo; it != hi; ++it) raw.terms.push_back(it->second);
  raw.language = single(req, "lang");
  raw.time_from = single(req, "from");
  raw.time_to = single(req, "to");
  raw.origin = single(req, "origin");
  raw.max_results = single(req, "max_results");
  raw.algorithm = single(req, "algorithm");
  return raw;
}

std::string widget_path(Widget w) { return fmt::format("{}/analysis/{}", kApiPrefix, to_string(w)); }

}  // namespace

std::optional<std::string> ApiRequest::header(const std::string& lower_name) const {
  auto it = headers.find(lower_name);
  if (it == headers.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> ApiResponse::header(std::string_view name) const {
  for (const auto& [k, v] : headers)
    if (text::to_lower_ascii(k) == text::to_lower_ascii(name)) return v;
  return std::nullopt;
}

json error_body(std::string_view code, std::string_view message, const json& detail) {
  json j = {{"code", code}, {"message", message}};
  if (!detail.is_null()) j["detail"] = detail;
  return j;
}

const std::vector<EndpointSpec>& endpoints() {
  static const std::vector<EndpointSpec> kEndpoints = [] {
    const std::vector<int> search_codes = {200, 400, 401, 403, 429, 502};
    std::vector<EndpointSpec> e;
    e.push_back({std::string(kApiPrefix) + "/health", std::nullopt, "Liveness probe", {}, {200}});
    e.push_back({std::string(kDescriptionPath), std::nullopt, "This API description", {}, {200}});
    e.push_back({std::string(kApiPrefix) + "/algorithms", Scope::search, "Registered sentiment algorithms", {},
                 {200, 401, 403}});
    e.push_back({widget_path(Widget::summary), Scope::search, "Polarity distribution (pie chart)", kQueryParams,
                 search_codes});
    e.push_back({widget_path(Widget::timeline), Scope::search, "Binned polarity over time (line chart)",
                 with(kQueryParams, {"bin_width"}), search_codes});
    e.push_back({widget_path(Widget::tagcloud), Scope::search, "Most frequent terms (tag cloud)",
                 with(kQueryParams, {"k"}), search_codes});
    e.push_back({widget_path(Widget::map), Scope::search, "Per-country sentiment (map)", kQueryParams,
                 search_codes});
    e.push_back({widget_path(Widget::posts), Scope::search, "Classified posts, newest first (raw table)",
                 kQueryParams, search_codes});
    e.push_back({std::string(kApiPrefix) + "/analysis/export.csv", Scope::export_csv,
                 "Classified posts as CSV download", kQueryParams, search_codes, "text/csv"});
    e.push_back({std::string(kApiPrefix) + "/admin/stats", Scope::admin, "Cache and audit counters", {},
                 {200, 401, 403}});
    return e;
  }();
  return kEndpoints;
}

json describe_api(const sentiment::Registry& registry) {
  json algorithms = json::array();
  json algorithm_docs = json::array();
  for (const auto& a : registry.list()) {
    algorithms.push_back(a.id.str());
    algorithm_docs.push_back({{"id", a.id.str()}, {"description", a.description}});
  }

  const std::map<std::string, json> param_docs = {
      {"q", {{"name", "q"}, {"in", "query"}, {"required", true},
             {"description", "Search term, repeatable. '#tag' = hashtag, '@name' = username, else keyword"},
             {"schema", {{"type", "array"}, {"items", {{"type", "string"}}}}}, {"explode", true}}},
      {"lang", {{"name", "lang"}, {"in", "query"}, {"description", "ISO 639-1 language code"},
                {"schema", {{"type", "string"}, {"pattern", "^[a-zA-Z]{2}$"}}}}},
      {"from", {{"name", "from"}, {"in", "query"}, {"description", "Earliest creation time, ISO-8601, inclusive"},
                {"schema", {{"type", "string"}, {"format", "date-time"}}}}},
      {"to", {{"name", "to"}, {"in", "query"}, {"description", "Latest creation time, ISO-8601, exclusive"},
              {"schema", {{"type", "string"}, {"format", "date-time"}}}}},
      {"origin", {{"name", "origin"}, {"in", "query"}, {"description", "ISO 3166-1 alpha-2 country of the post"},
                  {"schema", {{"type", "string"}, {"pattern", "^[a-zA-Z]{2}$"}}}}},
      {"max_results", {{"name", "max_results"}, {"in", "query"},
                       {"description", "Posts to fetch; values above the hard limit are clamped"},
                       {"schema", {{"type", "integer"}, {"minimum", 1}}}}},
      {"algorithm", {{"name", "algorithm"}, {"in", "query"}, {"description", "Sentiment algorithm"},
                     {"schema", {{"type", "string"}, {"enum", algorithms}}}}},
      {"bin_width", {{"name", "bin_width"}, {"in", "query"}, {"description", "Timeline bin width in seconds"},
                     {"schema", {{"type", "integer"}, {"minimum", 1}}}}},
      {"k", {{"name", "k"}, {"in", "query"}, {"description", "Number of tag cloud terms"},
             {"schema", {{"type", "integer"}, {"minimum", 1}, {"maximum", kMaxTagCloudSize}}}}},
  };
  const std::map<int, std::string> status_docs = {
      {200, "OK"},
      {400, "invalid_query | unknown_algorithm | unknown_parameter | invalid_parameter"},
      {401, "unauthorized"},
      {403, "forbidden | network_forbidden"},
      {429, "rate_limited (Retry-After header set)"},
      {502, "upstream_auth | upstream_unavailable | upstream_error | source_error"},
  };

  json paths = json::object();
  for (const auto& e : endpoints()) {
    json op = {{"summary", e.summary}, {"operationId", e.path}};
    json params = json::array();
    for (const auto& p : e.params) params.push_back(param_docs.at(p));
    op["parameters"] = params;
    json responses = json::object();
    for (int s : e.statuses) {
      json r = {{"description", status_docs.at(s)}};
      if (s == 200)
        r["content"] = {{e.produces, json::object()}};
      else
        r["content"] = {{"application/json", {{"schema", {{"$ref", "#/components/schemas/Error"}}}}}};
      responses[std::to_string(s)] = r;
    }
    op["responses"] = responses;
    if (e.scope) {
      op["security"] = json::array({{{"bearer", json::array()}}});
      op["x-required-scope"] = to_string(*e.scope);
    } else {
      op["security"] = json::array();
    }
    paths[e.path] = {{"get", op}};
  }

  return {
      {"openapi", "3.0.3"},
      {"info", {{"title", "OSN sentiment analysis API"}, {"version", "1.0.0"}}},
      {"paths", paths},
      {"x-algorithms", algorithm_docs},
      {"components",
       {{"securitySchemes",
         {{"bearer", {{"type", "http"}, {"scheme", "bearer"}, {"bearerFormat", "<token_id>.<secret>"}}}}},
        {"schemas",
         {{"Error",
           {{"type", "object"},
            {"required", {"code", "message"}},
            {"properties",
             {{"code", {{"type", "string"}}}, {"message", {{"type", "string"}}}, {"detail", {{"type", "object"}}}}}}}}}}},
  };
}

struct Gateway::Context {
  std::string token_id{kAnonymous};
  std::string query_digest;
  std::size_t result_count = 0;
};

Gateway::Gateway(std::shared_ptr<AnalysisService> service, TokenStore tokens, std::shared_ptr<AuditLog> audit,
                 NetworkPolicy network)
    : service_(std::move(service)),
      tokens_(std::move(tokens)),
      audit_(std::move(audit)),
      network_(std::move(network)),
      description_(describe_api(service_->registry()).dump(2)) {}

ApiResponse Gateway::handle(const ApiRequest& request) {
  const auto started = std::chrono::steady_clock::now();
  Context ctx;
  ApiResponse response;
  try {
    response = dispatch(request, ctx);
  } catch (const ApiError& e) {
    response = error_response(e);
  } catch (const std::exception&) {
    response = error_response({500, "internal_error", "internal error"});
  }

  AuditRecord rec;
  rec.timestamp = service_->now();
  rec.token_id = ctx.token_id;
  rec.method = request.method;
  rec.endpoint = request.path;
  rec.query_digest = ctx.query_digest;
  rec.result_count = ctx.result_count;
  rec.status = response.status;
  rec.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
                       .count();
  audit_->record(rec);
  return response;
}

ApiResponse Gateway::dispatch(const ApiRequest& req, Context& ctx) {
  if (!network_.allows(req.remote_addr))
    throw ApiError{403, "network_forbidden", "requests are only accepted from the configured networks"};

  const auto& eps = endpoints();
  auto ep = std::find_if(eps.begin(), eps.end(), [&](const EndpointSpec& e) { return e.path == req.path; });
  if (ep == eps.end()) throw ApiError{404, "not_found", "no such endpoint"};
  if (req.method != "GET") throw ApiError{405, "method_not_allowed", "only GET is supported"};

  if (ep->scope) {
    try {
      ctx.token_id = tokens_.authorize(req.header("authorization"), *ep->scope).token_id;
    } catch (const AuthError& e) {
      // A 403 comes from a valid token, so the caller is known.
      if (e.status() == 403) ctx.token_id = tokens_.authenticate(req.header("authorization")).token_id;
      throw ApiError{e.status(), e.code(), e.what()};
    }
  }

  for (const auto& [name, value] : req.params)
    if (std::find(ep->params.begin(), ep->params.end(), name) == ep->params.end())
      throw ApiError{400, "unknown_parameter", "unknown parameter '" + name + "'", {{"field", name}}};

  const std::string& path = ep->path;
  if (path == fmt::format("{}/health", kApiPrefix)) return json_response(200, {{"status", "ok"}});
  if (path == kDescriptionPath) {
    ApiResponse r;
    r.body = description_;
    return r;
  }
  if (path == fmt::format("{}/algorithms", kApiPrefix)) {
    json list = json::array();
    for (const auto& a : service_->registry().list())
      list.push_back({{"id", a.id.str()}, {"description", a.description}});
    ctx.result_count = list.size();
    return json_response(200, {{"algorithms", list}});
  }
  if (path == fmt::format("{}/admin/stats", kApiPrefix)) {
    const auto s = service_->cache_stats();
    return json_response(200, {{"cache", {{"hits", s.hits}, {"misses", s.misses}, {"evictions", s.evictions},
                                          {"entries", s.entries}}},
                               {"audit", {{"written", audit_->written()}, {"failures", audit_->failures()}}}});
  }

  // Search-backed endpoints: validate everything before any source access.
  ingestion::Query query;
  WidgetOptions options;
  try {
    query = service_->normalize(raw_query(req));
  } catch (const ingestion::ValidationError& e) {
    throw ApiError{400, "invalid_query", e.what(), {{"field", e.field()}}};
  }
  if (!service_->registry().contains(query.algorithm))
    throw ApiError{400, "unknown_algorithm", "unknown algorithm '" + query.algorithm.str() + "'",
                   {{"field", "algorithm"}}};
  if (auto bw = single(req, "bin_width")) options.bin_width = std::chrono::seconds{parse_positive("bin_width", *bw)};
  if (auto k = single(req, "k")) {
    const auto n = parse_positive("k", *k);
    if (n > static_cast<long long>(kMaxTagCloudSize))
      throw ApiError{400, "invalid_parameter", fmt::format("'k' must not exceed {}", kMaxTagCloudSize),
                     {{"field", "k"}}};
    options.k = static_cast<std::size_t>(n);
  }

  try {
    SearchResult result;
    if (path.ends_with("/export.csv")) {
      ApiResponse r;
      r.body = service_->export_csv(query, &result);
      r.content_type = "text/csv; charset=utf-8";
      r.headers.emplace_back("Content-Disposition",
                             fmt::format("attachment; filename=\"osn-export-{}-{}.csv\"",
                                         result.key.digest.substr(0, 12), format_compact_date(service_->now())));
      r.headers.emplace_back("X-Query-Digest", result.key.digest);
      ctx.query_digest = result.key.digest;
      ctx.result_count = result.posts->size();
      return r;
    }
    const auto widget = parse_widget(path.substr(path.rfind('/') + 1));
    json payload = service_->widget(*widget, query, options, &result);
    ctx.query_digest = result.key.digest;
    ctx.result_count = result.posts->size();
    ApiResponse r = json_response(200, payload);
    r.headers.emplace_back("X-Query-Digest", result.key.digest);
    return r;
  } catch (const ingestion::RateLimitedError& e) {
    throw ApiError{429, "rate_limited", e.what(), nullptr, e.retry_after()};
  } catch (const ingestion::UpstreamAuthError& e) {
    throw ApiError{502, "upstream_auth", e.what()};
  } catch (const ingestion::TransientError& e) {
    throw ApiError{502, "upstream_unavailable", e.what()};
  } catch (const ingestion::SourceError&) {
    throw ApiError{502, "source_error", "post source unavailable"};
  } catch (const ingestion::IngestionError& e) {
    throw ApiError{502, "upstream_error", e.what()};
  } catch (const sentiment::UnknownAlgorithm& e) {
    throw ApiError{400, "unknown_algorithm", e.what(), {{"field", "algorithm"}}};
  } catch (const std::invalid_argument& e) {
    throw ApiError{400, "invalid_parameter", e.what()};
  }
}

}  // namespace osn::gateway
