#include "osn/ingestion/query.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>

#include "osn/common/text.hpp"
#include "osn/ingestion/iso_codes.hpp"

namespace osn::ingestion {

namespace {

bool is_word_char(char c) { return text::is_ascii_alnum(c) || c == '_'; }

Term tag_term(std::string_view raw, const QueryLimits& limits) {
  const auto trimmed = text::trim(raw);
  if (trimmed.empty()) throw ValidationError("terms", "empty search term");
  if (text::utf8_length(trimmed) > limits.max_term_length)
    throw ValidationError("terms", fmt::format("term longer than {} characters", limits.max_term_length));
  if (!text::is_valid_utf8(trimmed)) throw ValidationError("terms", "term is not valid UTF-8");
  for (char c : trimmed)
    if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F)
      throw ValidationError("terms", "term contains control characters");

  Term term;
  term.text = text::to_lower_ascii(trimmed);
  if (trimmed.front() == '#' || trimmed.front() == '@') {
    term.kind = trimmed.front() == '#' ? TermKind::hashtag : TermKind::username;
    const std::string_view body = std::string_view(term.text).substr(1);
    const std::size_t max_body = term.kind == TermKind::username ? 15 : limits.max_term_length;
    if (body.empty() || body.size() > max_body || !std::all_of(body.begin(), body.end(), is_word_char))
      throw ValidationError("terms", fmt::format("malformed {} '{}'", to_string(term.kind), trimmed));
  } else {
    term.kind = TermKind::keyword;
    if (term.text.find('"') != std::string::npos)
      throw ValidationError("terms", "keywords may not contain quotes");
  }
  return term;
}

std::optional<Timestamp> parse_time(const std::optional<std::string>& raw, const char* field) {
  if (!raw) return std::nullopt;
  const auto trimmed = text::trim(*raw);
  if (trimmed.empty()) return std::nullopt;
  auto t = parse_iso8601(trimmed);
  if (!t) throw ValidationError(field, fmt::format("'{}' is not an ISO-8601 timestamp", trimmed));
  return t;
}

}  // namespace

std::string_view to_string(TermKind k) {
  switch (k) {
    case TermKind::keyword: return "keyword";
    case TermKind::hashtag: return "hashtag";
    case TermKind::username: return "username";
  }
  return "keyword";
}

Query normalize_query(const RawQuery& raw, const QueryLimits& limits) {
  Query q;

  for (const auto& r : raw.terms) {
    Term t = tag_term(r, limits);
    if (std::find(q.terms.begin(), q.terms.end(), t) == q.terms.end()) q.terms.push_back(std::move(t));
  }
  if (q.terms.empty()) throw ValidationError("terms", "at least one search term is required");
  if (q.terms.size() > limits.max_terms)
    throw ValidationError("terms", fmt::format("at most {} terms allowed", limits.max_terms));

  if (raw.language && !text::trim(*raw.language).empty()) {
    auto lang = text::to_lower_ascii(text::trim(*raw.language));
    if (!is_language_code(lang))
      throw ValidationError("lang", fmt::format("unknown language code '{}'", lang));
    q.language = std::move(lang);
  }
  if (raw.origin && !text::trim(*raw.origin).empty()) {
    auto origin = text::to_upper_ascii(text::trim(*raw.origin));
    if (!is_country_code(origin))
      throw ValidationError("origin", fmt::format("unknown country code '{}'", origin));
    q.origin = std::move(origin);
  }

  q.time_from = parse_time(raw.time_from, "from");
  q.time_to = parse_time(raw.time_to, "to");
  if (q.time_from && q.time_to && *q.time_from > *q.time_to)
    throw ValidationError("from", "time range is inverted");

  q.max_results = limits.default_results;
  if (raw.max_results && !text::trim(*raw.max_results).empty()) {
    const auto s = text::trim(*raw.max_results);
    long long n = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc::result_out_of_range && ptr == s.data() + s.size() && s.front() != '-') {
      n = limits.hard_limit + 1LL;
    } else if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ValidationError("max_results", fmt::format("'{}' is not an integer", s));
    }
    if (n < 1) throw ValidationError("max_results", "max_results must be positive");
    if (n > limits.hard_limit) {
      q.max_results = limits.hard_limit;
      q.clamped = true;
    } else {
      q.max_results = static_cast<int>(n);
    }
  }
  q.max_results = std::min(q.max_results, limits.hard_limit);

  if (raw.algorithm && !text::trim(*raw.algorithm).empty())
    q.algorithm = sentiment::AlgorithmId(std::string(text::trim(*raw.algorithm)));

  return q;
}

}  // namespace osn::ingestion
