#pragma once

#include <cstdint>
#include <vector>

#include "osn/model.hpp"

namespace osn::ingestion {

struct SyntheticCorpusOptions {
  std::size_t posts = 5000;
  std::uint64_t seed = 42;
  Timestamp start = Timestamp{std::chrono::seconds{1'650'000'000}};
  std::chrono::seconds span{std::chrono::hours{72}};
  double geo_fraction = 0.6;  // share of posts carrying a country
};

/// Deterministic demo/test corpus of energy-themed posts.
std::vector<Post> make_synthetic_corpus(const SyntheticCorpusOptions& options = {});

}  // namespace osn::ingestion
