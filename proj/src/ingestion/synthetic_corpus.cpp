#include "osn/ingestion/synthetic_corpus.hpp"

#include <array>
#include <random>
#include <string>
#include <string_view>

namespace osn::ingestion {

namespace {

constexpr std::array<std::string_view, 10> kTopics = {
    "energy", "#energy", "solar", "wind", "#renewables", "electricity prices", "power grid",
    "#climate", "nuclear", "battery storage"};
constexpr std::array<std::string_view, 12> kOpeners = {
    "I think", "Honestly", "Today", "Wow", "Breaking:", "So", "Not sure but", "Apparently",
    "LOL", "Remember:", "Again", "Finally"};
constexpr std::array<std::string_view, 16> kOpinions = {
    "is great", "is not good", "looks really bad", "is amazing!", "is terrible",
    "is fine I guess", "makes me happy", "is a disaster!!", "feels hopeful", "is NOT cheap",
    "is very expensive", "is okay", "is the best", "sucks", "is boring but useful", "is wonderful"};
constexpr std::array<std::string_view, 8> kTails = {
    "", " https://t.co/abc123", " @grid_watch", " #energy", " :)", " :(", " right now", " this week"};
constexpr std::array<std::string_view, 6> kLangs = {"en", "en", "en", "no", "de", "sv"};
constexpr std::array<std::string_view, 8> kCountries = {"NO", "SE", "DE", "US", "GB", "FR", "DK", "NO"};
constexpr std::array<std::string_view, 8> kAuthors = {
    "alice", "bob", "carol", "dave", "erin", "frank", "grid_watch", "solarfan"};

}  // namespace

std::vector<Post> make_synthetic_corpus(const SyntheticCorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  auto pick = [&](const auto& arr) { return arr[rng() % arr.size()]; };
  const auto span = static_cast<std::uint64_t>(std::max<std::int64_t>(options.span.count(), 1));

  std::vector<Post> out;
  out.reserve(options.posts);
  for (std::size_t i = 0; i < options.posts; ++i) {
    Post p;
    p.id = std::to_string(1'000'000'000ULL + i);
    p.text = std::string(pick(kOpeners)) + " " + std::string(pick(kTopics)) + " " +
             std::string(pick(kOpinions)) + std::string(pick(kTails));
    p.author = std::string(pick(kAuthors));
    p.created_at = options.start + std::chrono::seconds{static_cast<std::int64_t>(rng() % span)};
    p.language = std::string(pick(kLangs));
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < options.geo_fraction) p.country = std::string(pick(kCountries));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace osn::ingestion
