#include "osn/sentiment/batch.hpp"

#include <exception>

namespace osn::sentiment {

namespace {
constexpr std::ptrdiff_t kParallelThreshold = 256;
}

std::vector<ClassifiedPost> analyze_batch_serial(const Analyzer& analyzer, std::span<const Post> posts) {
  std::vector<ClassifiedPost> out;
  out.reserve(posts.size());
  for (const Post& p : posts) out.push_back({p, analyzer.score(p.text)});
  return out;
}

std::vector<ClassifiedPost> analyze_batch(const Analyzer& analyzer, std::span<const Post> posts) {
  const auto n = static_cast<std::ptrdiff_t>(posts.size());
  std::vector<SentimentScore> scores(posts.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      scores[i] = analyzer.score(posts[i].text);
    } catch (...) {
#pragma omp critical(osn_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ClassifiedPost> out;
  out.reserve(posts.size());
  for (std::size_t i = 0; i < posts.size(); ++i) out.push_back({posts[i], std::move(scores[i])});
  return out;
}

std::vector<ClassifiedPost> analyze_batch(const Registry& registry, const AlgorithmId& engine,
                                          std::span<const Post> posts) {
  return analyze_batch(registry.get(engine), posts);
}

}  // namespace osn::sentiment
