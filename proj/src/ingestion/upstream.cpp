#include "osn/ingestion/upstream.hpp"

#include <algorithm>

#include "osn/common/time.hpp"

namespace osn::ingestion {

namespace {

std::string url_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if ((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '-' ||
        c == '_' || c == '.' || c == '~') {
      out.push_back(ch);
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

std::string render_term(const Term& t) {
  switch (t.kind) {
    case TermKind::hashtag: return t.text;
    case TermKind::username: return "from:" + t.text.substr(1);
    case TermKind::keyword:
      if (t.text.find(' ') != std::string::npos) return "\"" + t.text + "\"";
      return t.text;
  }
  return t.text;
}

}  // namespace

std::string UpstreamRequest::target() const {
  std::string out = path;
  char sep = '?';
  for (const auto& [k, v] : params) {
    out.push_back(sep);
    out += url_encode(k);
    out.push_back('=');
    out += url_encode(v);
    sep = '&';
  }
  return out;
}

const std::string* UpstreamRequest::param(std::string_view name) const {
  for (const auto& [k, v] : params)
    if (k == name) return &v;
  return nullptr;
}

std::string upstream_query_string(const Query& query) {
  std::string terms;
  for (std::size_t i = 0; i < query.terms.size(); ++i) {
    if (i) terms += " OR ";
    terms += render_term(query.terms[i]);
  }
  std::string out = query.terms.size() > 1 ? "(" + terms + ")" : terms;
  if (query.language) out += " lang:" + *query.language;
  if (query.origin) out += " place_country:" + *query.origin;
  return out;
}

UpstreamRequest build_upstream_request(const Query& query, const std::optional<std::string>& page_token,
                                       std::optional<int> remaining, int page_max) {
  UpstreamRequest r;
  r.path = "/2/tweets/search/recent";
  r.page_size = std::max(1, std::min(remaining.value_or(query.max_results), page_max));
  r.params.emplace_back("query", upstream_query_string(query));
  r.params.emplace_back("max_results", std::to_string(std::max(r.page_size, kUpstreamPageMin)));
  if (query.time_from) r.params.emplace_back("start_time", format_iso8601(*query.time_from));
  if (query.time_to) r.params.emplace_back("end_time", format_iso8601(*query.time_to));
  if (page_token) r.params.emplace_back("next_token", *page_token);
  r.params.emplace_back("tweet.fields", "author_id,created_at,lang,geo");
  r.params.emplace_back("expansions", "author_id,geo.place_id");
  r.params.emplace_back("user.fields", "username");
  r.params.emplace_back("place.fields", "country_code");
  return r;
}

}  // namespace osn::ingestion
