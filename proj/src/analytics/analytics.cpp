#include "osn/analytics/analytics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "osn/common/text.hpp"

namespace osn::analytics {

void LabelCounts::add(sentiment::Polarity p) {
  switch (p) {
    case sentiment::Polarity::positive: ++positive; break;
    case sentiment::Polarity::negative: ++negative; break;
    case sentiment::Polarity::neutral: ++neutral; break;
  }
}

Distribution polarity_distribution(std::span<const ClassifiedPost> posts) {
  Distribution d;
  for (const auto& p : posts) d.counts.add(p.score.label);
  if (const auto total = d.counts.total(); total > 0) {
    const auto n = static_cast<double>(total);
    d.positive = static_cast<double>(d.counts.positive) / n;
    d.negative = static_cast<double>(d.counts.negative) / n;
    d.neutral = static_cast<double>(d.counts.neutral) / n;
  }
  return d;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<TimeBin> timeline(std::span<const ClassifiedPost> posts, std::chrono::seconds bin_width) {
  const std::int64_t width = bin_width.count();
  if (width <= 0) throw std::invalid_argument("bin width must be positive");
  if (posts.empty()) return {};

  auto index_of = [&](const ClassifiedPost& p) {
    return floor_div(p.post.created_at.time_since_epoch().count(), width);
  };
  std::int64_t lo = index_of(posts.front()), hi = lo;
  for (const auto& p : posts) {
    lo = std::min(lo, index_of(p));
    hi = std::max(hi, index_of(p));
  }
  const auto bins = static_cast<std::uint64_t>(hi - lo) + 1;
  if (bins > kMaxTimeBins)
    throw std::invalid_argument(fmt::format("timeline would need {} bins (limit {})", bins, kMaxTimeBins));

  std::vector<TimeBin> out(bins);
  std::vector<double> sums(bins, 0.0);
  for (std::size_t i = 0; i < bins; ++i)
    out[i].bin_start = Timestamp{std::chrono::seconds{(lo + static_cast<std::int64_t>(i)) * width}};
  for (const auto& p : posts) {
    const auto i = static_cast<std::size_t>(index_of(p) - lo);
    out[i].counts.add(p.score.label);
    sums[i] += p.score.compound;
  }
  for (std::size_t i = 0; i < bins; ++i)
    if (const auto n = out[i].counts.total())
      out[i].mean_compound = std::clamp(sums[i] / static_cast<double>(n), -1.0, 1.0);
  return out;
}

std::chrono::seconds default_bin_width(std::span<const ClassifiedPost> posts) {
  using namespace std::chrono;
  if (posts.empty()) return hours{1};
  auto [lo, hi] = std::minmax_element(posts.begin(), posts.end(), [](const auto& a, const auto& b) {
    return a.post.created_at < b.post.created_at;
  });
  return hi->post.created_at - lo->post.created_at <= hours{48} ? seconds{hours{1}} : seconds{hours{24}};
}

StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stopword file " + path);
  StopwordSet out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.insert(text::to_lower_ascii(t));
  }
  return out;
}

namespace {

void count_terms(std::string_view body, const StopwordSet& stopwords,
                 std::unordered_map<std::string, std::size_t>& counts) {
  for (auto raw : text::split_whitespace(body)) {
    const auto lowered = text::to_lower_ascii(raw);
    if (lowered.starts_with("http://") || lowered.starts_with("https://") || lowered.starts_with("www.") ||
        lowered.find("://") != std::string::npos)
      continue;
    const auto head = text::strip_punct(lowered, "@#");
    if (head.empty() || head.front() == '@') continue;
    auto term = std::string(text::strip_punct(head));
    if (text::utf8_length(term) < 2 || stopwords.count(term)) continue;
    ++counts[std::move(term)];
  }
}

std::vector<TermWeight> top_k(std::unordered_map<std::string, std::size_t>& counts, std::size_t k) {
  std::vector<TermWeight> all;
  all.reserve(counts.size());
  for (auto& [term, n] : counts) all.push_back({term, n});
  auto order = [](const TermWeight& a, const TermWeight& b) {
    return a.weight != b.weight ? a.weight > b.weight : a.term < b.term;
  };
  const std::size_t keep = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(), order);
  all.resize(keep);
  return all;
}

}  // namespace

std::vector<TermWeight> tag_cloud(std::span<const Post> posts, std::size_t k, const StopwordSet& stopwords) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& p : posts) count_terms(p.text, stopwords, counts);
  return top_k(counts, k);
}

std::vector<TermWeight> tag_cloud(std::span<const ClassifiedPost> posts, std::size_t k,
                                  const StopwordSet& stopwords) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& p : posts) count_terms(p.post.text, stopwords, counts);
  return top_k(counts, k);
}

std::vector<CountrySentiment> geo_summary(std::span<const ClassifiedPost> posts) {
  std::map<std::string, std::pair<LabelCounts, double>> groups;
  for (const auto& p : posts) {
    auto& [counts, sum] = groups[p.post.country.value_or(std::string(kUnknownCountry))];
    counts.add(p.score.label);
    sum += p.score.compound;
  }
  std::vector<CountrySentiment> out;
  out.reserve(groups.size());
  for (auto& [country, g] : groups) {
    const auto n = g.first.total();
    out.push_back({country, g.first, n ? std::clamp(g.second / static_cast<double>(n), -1.0, 1.0) : 0.0});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.counts.total() > b.counts.total(); });
  return out;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_csv(std::ostream& out, std::span<const ClassifiedPost> posts) {
  out << kCsvHeader << "\r\n";
  for (const auto& cp : posts) {
    const auto& p = cp.post;
    out << csv_field(p.id) << ',' << format_iso8601(p.created_at) << ',' << csv_field(p.author) << ','
        << csv_field(p.language) << ',' << csv_field(p.country.value_or("")) << ',' << csv_field(p.text)
        << ',' << csv_field(cp.score.algorithm.str()) << ',' << fmt::format("{:.4f}", cp.score.compound)
        << ',' << sentiment::to_string(cp.score.label) << "\r\n";
  }
}

std::string to_csv(std::span<const ClassifiedPost> posts) {
  std::ostringstream os;
  write_csv(os, posts);
  return os.str();
}

}  // namespace osn::analytics
