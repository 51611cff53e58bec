#include "osn/ingestion/source.hpp"

#include <fmt/format.h>
#include <httplib.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "osn/common/text.hpp"

namespace osn::ingestion {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Matching

namespace {

std::vector<std::string> match_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto raw : text::split_whitespace(text)) {
    auto t = text::to_lower_ascii(text::strip_punct(raw));
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

bool keyword_matches(const std::vector<std::string>& tokens, std::string_view keyword) {
  const auto words = match_tokens(keyword);
  if (words.empty() || words.size() > tokens.size()) return false;
  for (std::size_t i = 0; i + words.size() <= tokens.size(); ++i)
    if (std::equal(words.begin(), words.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i)))
      return true;
  return false;
}

bool hashtag_present(std::string_view text, std::string_view tag) {
  for (auto raw : text::split_whitespace(text)) {
    const auto t = text::strip_punct(raw, "#");
    if (t.size() == tag.size() && text::to_lower_ascii(t) == tag) return true;
  }
  return false;
}

}  // namespace

bool replay_match(const Post& post, const Query& query) {
  if (query.language && post.language != *query.language) return false;
  if (query.origin && post.country != query.origin) return false;
  if (query.time_from && post.created_at < *query.time_from) return false;
  if (query.time_to && post.created_at >= *query.time_to) return false;

  std::optional<std::vector<std::string>> tokens;
  for (const Term& term : query.terms) {
    switch (term.kind) {
      case TermKind::keyword:
        if (!tokens) tokens = match_tokens(post.text);
        if (keyword_matches(*tokens, term.text)) return true;
        break;
      case TermKind::hashtag:
        if (hashtag_present(post.text, term.text)) return true;
        break;
      case TermKind::username:
        if (text::to_lower_ascii(post.author) == std::string_view(term.text).substr(1)) return true;
        break;
    }
  }
  return false;
}

bool newer_first(const Post& a, const Post& b) {
  if (a.created_at != b.created_at) return a.created_at > b.created_at;
  return a.id < b.id;
}

// ---------------------------------------------------------------------------
// Offline corpus

Post parse_corpus_line(std::string_view line, std::size_t line_number) {
  auto fail = [&](const std::string& why) {
    return SourceError(fmt::format("corpus line {}: {}", line_number, why));
  };
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw fail(e.what());
  }
  if (!j.is_object()) throw fail("not a JSON object");
  auto str = [&](const char* key, bool required) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) {
      if (required) throw fail(fmt::format("missing field '{}'", key));
      return std::nullopt;
    }
    if (!it->is_string()) throw fail(fmt::format("field '{}' must be a string", key));
    return it->get<std::string>();
  };
  Post p;
  p.id = *str("id", true);
  if (p.id.empty()) throw fail("empty id");
  p.text = *str("text", true);
  p.author = str("author", false).value_or("");
  const auto created = *str("created_at", true);
  const auto ts = parse_iso8601(created);
  if (!ts) throw fail("unparseable created_at '" + created + "'");
  p.created_at = *ts;
  p.language = str("lang", false).value_or("und");
  if (p.language.empty()) p.language = "und";
  if (auto c = str("country", false); c && !c->empty()) p.country = text::to_upper_ascii(*c);
  return p;
}

std::string corpus_line(const Post& post) {
  json j = {{"id", post.id},
            {"text", post.text},
            {"author", post.author},
            {"created_at", format_iso8601(post.created_at)},
            {"lang", post.language}};
  if (post.country) j["country"] = *post.country;
  return j.dump();
}

std::vector<Post> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SourceError("cannot open corpus file " + path.string());
  std::vector<Post> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (text::trim(line).empty()) continue;
    out.push_back(parse_corpus_line(line, number));
  }
  return out;
}

namespace {

// Scans the newest-first snapshot lazily; the token is the scan position.
class OfflineCursor final : public PostCursor {
 public:
  OfflineCursor(std::shared_ptr<const std::vector<Post>> posts, Query query)
      : posts_(std::move(posts)), query_(std::move(query)) {}

  Page next(const UpstreamRequest& request) override {
    const auto& all = *posts_;
    std::size_t pos = 0;
    if (const auto* token = request.param("next_token")) {
      const auto [ptr, ec] = std::from_chars(token->data(), token->data() + token->size(), pos);
      if (ec != std::errc() || ptr != token->data() + token->size() || pos > all.size())
        throw UpstreamError("invalid pagination token");
    }
    Page page;
    const auto want = static_cast<std::size_t>(std::max(request.page_size, 1));
    for (; pos < all.size() && page.posts.size() < want; ++pos)
      if (replay_match(all[pos], query_)) page.posts.push_back(all[pos]);
    if (pos < all.size()) page.next_token = std::to_string(pos);
    return page;
  }

 private:
  std::shared_ptr<const std::vector<Post>> posts_;
  Query query_;
};

}  // namespace

OfflineCorpusSource::OfflineCorpusSource(std::filesystem::path path) : path_(std::move(path)) {}

std::shared_ptr<const std::vector<Post>> OfflineCorpusSource::snapshot() const {
  std::error_code ec;
  const auto mtime = std::filesystem::last_write_time(path_, ec);
  const auto size = ec ? 0 : std::filesystem::file_size(path_, ec);
  std::lock_guard lock(mu_);
  if (ec || !posts_ || mtime != mtime_ || size != size_) {
    auto posts = load_corpus(path_);
    std::stable_sort(posts.begin(), posts.end(), newer_first);
    posts_ = std::make_shared<const std::vector<Post>>(std::move(posts));
    ++parses_;
    mtime_ = mtime;
    size_ = size;
  }
  return posts_;
}

std::unique_ptr<PostCursor> OfflineCorpusSource::open(const Query& query) const {
  ++reads_;
  return std::make_unique<OfflineCursor>(snapshot(), query);
}

// ---------------------------------------------------------------------------
// Live upstream

Page parse_upstream_page(std::string_view body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw UpstreamError(std::string("malformed upstream response: ") + e.what());
  }
  if (!j.is_object()) throw UpstreamError("upstream response is not an object");

  std::unordered_map<std::string, std::string> users, places;
  if (auto inc = j.find("includes"); inc != j.end() && inc->is_object()) {
    for (const auto& u : inc->value("users", json::array()))
      if (u.contains("id") && u.contains("username"))
        users[u["id"].get<std::string>()] = u["username"].get<std::string>();
    for (const auto& p : inc->value("places", json::array()))
      if (p.contains("id") && p.contains("country_code") && p["country_code"].is_string())
        places[p["id"].get<std::string>()] = p["country_code"].get<std::string>();
  }

  Page page;
  try {
    for (const auto& t : j.value("data", json::array())) {
      Post p;
      p.id = t.at("id").get<std::string>();
      p.text = t.at("text").get<std::string>();
      const auto author_id = t.value("author_id", std::string{});
      auto u = users.find(author_id);
      p.author = u != users.end() ? u->second : author_id;
      const auto created = t.at("created_at").get<std::string>();
      const auto ts = parse_iso8601(created);
      if (!ts) throw UpstreamError("unparseable created_at '" + created + "'");
      p.created_at = *ts;
      p.language = t.value("lang", std::string("und"));
      if (auto geo = t.find("geo"); geo != t.end() && geo->is_object() && geo->contains("place_id")) {
        if (auto pl = places.find((*geo)["place_id"].get<std::string>()); pl != places.end())
          p.country = text::to_upper_ascii(pl->second);
      }
      page.posts.push_back(std::move(p));
    }
    if (auto meta = j.find("meta"); meta != j.end() && meta->contains("next_token"))
      page.next_token = (*meta)["next_token"].get<std::string>();
  } catch (const json::exception& e) {
    throw UpstreamError(std::string("unexpected upstream payload: ") + e.what());
  }
  return page;
}

class LiveCursor final : public PostCursor {
 public:
  explicit LiveCursor(const LiveUpstreamSource& source) : source_(source) {}
  Page next(const UpstreamRequest& request) override { return source_.fetch_page(request); }

 private:
  const LiveUpstreamSource& source_;
};

LiveUpstreamSource::LiveUpstreamSource(LiveUpstreamConfig config, std::shared_ptr<RateLimiter> limiter)
    : config_(std::move(config)), limiter_(std::move(limiter)) {
  if (!config_.sleep) config_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  if (!config_.clock) config_.clock = now_instant;
}

std::unique_ptr<PostCursor> LiveUpstreamSource::open(const Query&) const {
  return std::make_unique<LiveCursor>(*this);
}

namespace {

std::chrono::seconds retry_after_from(const httplib::Result& res, Instant now) {
  auto as_int = [](const std::string& v) -> std::optional<long long> {
    long long n = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc() || ptr != v.data() + v.size()) return std::nullopt;
    return n;
  };
  if (res->has_header("retry-after"))
    if (auto n = as_int(res->get_header_value("retry-after")); n && *n >= 0) return std::chrono::seconds{*n};
  if (res->has_header("x-rate-limit-reset"))
    if (auto n = as_int(res->get_header_value("x-rate-limit-reset"))) {
      const auto secs = *n - std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
      return std::chrono::seconds{std::max<long long>(secs, 1)};
    }
  return std::chrono::seconds{60};
}

}  // namespace

Page LiveUpstreamSource::fetch_page(const UpstreamRequest& request) const {
  if (limiter_) {
    const auto permit = limiter_->acquire(config_.clock());
    if (!permit)
      throw RateLimitedError("upstream request budget exhausted",
                             std::chrono::ceil<std::chrono::seconds>(permit.retry_after));
  }

  httplib::Client client(config_.base_url);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  const httplib::Headers headers = {{"Authorization", "Bearer " + config_.bearer_token}};

  for (std::size_t attempt = 0;; ++attempt) {
    ++requests_;
    auto res = client.Get(request.target(), headers);
    if (!res) {
      if (attempt < config_.retry_backoff.size()) {
        config_.sleep(config_.retry_backoff[attempt]);
        continue;
      }
      throw TransientError("upstream unreachable: " + httplib::to_string(res.error()));
    }
    if (res->status == 401 || res->status == 403)
      throw UpstreamAuthError(fmt::format("upstream rejected credentials ({})", res->status));
    if (res->status == 429)
      throw RateLimitedError("upstream rate limit reached", retry_after_from(res, config_.clock()));
    if (res->status != 200) throw UpstreamError(fmt::format("upstream returned status {}", res->status));
    return parse_upstream_page(res->body);
  }
}

// ---------------------------------------------------------------------------

std::vector<Post> fetch_posts(const Query& query, const PostSource& source, const FetchOptions& options) {
  std::vector<Post> out;
  std::unordered_set<std::string> seen;
  const auto limit = static_cast<std::size_t>(std::max(query.max_results, 0));
  if (limit == 0) return out;

  auto cursor = source.open(query);
  std::optional<std::string> token;
  for (int page_no = 0; page_no < options.max_pages && out.size() < limit; ++page_no) {
    const int remaining = static_cast<int>(limit - out.size());
    const UpstreamRequest req = build_upstream_request(query, token, remaining, options.page_max);
    Page page = cursor->next(req);
    for (auto& p : page.posts) {
      if (out.size() == limit) break;
      if (!replay_match(p, query) || !seen.insert(p.id).second) continue;
      out.push_back(std::move(p));
    }
    if (!page.next_token || page.posts.empty()) break;
    token = std::move(page.next_token);
  }
  std::stable_sort(out.begin(), out.end(), newer_first);
  return out;
}

}  // namespace osn::ingestion
