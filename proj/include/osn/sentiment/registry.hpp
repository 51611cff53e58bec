#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "osn/sentiment/lexicon.hpp"
#include "osn/sentiment/score.hpp"

namespace osn::sentiment {

/// A document-level polarity classifier. Implementations must be safe to call
/// from several threads at once.
class Analyzer {
 public:
  virtual ~Analyzer() = default;
  virtual const AlgorithmId& id() const = 0;
  virtual std::string_view description() const = 0;
  virtual SentimentScore score(std::string_view text) const = 0;
};

/// Adapts one of the built-in lexicon engines to the Analyzer interface.
class LexiconAnalyzer final : public Analyzer {
 public:
  LexiconAnalyzer(AlgorithmId id, std::shared_ptr<const Lexicon> lexicon, std::string description,
                  Thresholds thresholds = {});

  const AlgorithmId& id() const override { return id_; }
  std::string_view description() const override { return description_; }
  SentimentScore score(std::string_view text) const override;

  const Lexicon& lexicon() const { return *lexicon_; }

 private:
  AlgorithmId id_;
  std::shared_ptr<const Lexicon> lexicon_;
  std::string description_;
  Thresholds thresholds_;
};

struct AlgorithmInfo {
  AlgorithmId id;
  std::string description;
};

/// Engines in registration order.
class Registry {
 public:
  /// Throws std::invalid_argument on a duplicate id.
  void add(std::shared_ptr<const Analyzer> analyzer);

  const Analyzer* find(const AlgorithmId& id) const;
  /// Throws UnknownAlgorithm.
  const Analyzer& get(const AlgorithmId& id) const;
  bool contains(const AlgorithmId& id) const { return find(id) != nullptr; }

  std::vector<AlgorithmInfo> list() const;
  std::size_t size() const { return analyzers_.size(); }

 private:
  std::vector<std::shared_ptr<const Analyzer>> analyzers_;
};

/// Registers valence-rule and pattern-average using the lexicons under `lexicon_dir`.
Registry make_default_registry(const std::filesystem::path& lexicon_dir, Thresholds thresholds = {});

}  // namespace osn::sentiment
