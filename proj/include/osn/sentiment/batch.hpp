#pragma once

#include <span>
#include <vector>

#include "osn/model.hpp"
#include "osn/sentiment/registry.hpp"

namespace osn::sentiment {

/// Scores every post; output order matches input order. Runs the loop with
/// OpenMP once the batch is large enough to amortize the team start-up.
std::vector<ClassifiedPost> analyze_batch(const Analyzer& analyzer, std::span<const Post> posts);

/// Throws UnknownAlgorithm when `engine` is not registered.
std::vector<ClassifiedPost> analyze_batch(const Registry& registry, const AlgorithmId& engine,
                                          std::span<const Post> posts);

/// Single-threaded reference for analyze_batch.
std::vector<ClassifiedPost> analyze_batch_serial(const Analyzer& analyzer, std::span<const Post> posts);

}  // namespace osn::sentiment
