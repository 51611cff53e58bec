#include "osn/sentiment/registry.hpp"

#include <algorithm>

#include "osn/sentiment/engines.hpp"

namespace osn::sentiment {

LexiconAnalyzer::LexiconAnalyzer(AlgorithmId id, std::shared_ptr<const Lexicon> lexicon,
                                 std::string description, Thresholds thresholds)
    : id_(std::move(id)),
      lexicon_(std::move(lexicon)),
      description_(std::move(description)),
      thresholds_(thresholds) {
  // Fail at construction rather than on the first request.
  (void)valence_range(id_);
  (void)classify(0.0, thresholds_);
}

SentimentScore LexiconAnalyzer::score(std::string_view text) const {
  return score_text(id_, *lexicon_, text, thresholds_);
}

void Registry::add(std::shared_ptr<const Analyzer> analyzer) {
  if (!analyzer) throw std::invalid_argument("null analyzer");
  if (contains(analyzer->id())) throw std::invalid_argument("duplicate algorithm: " + analyzer->id().str());
  analyzers_.push_back(std::move(analyzer));
}

const Analyzer* Registry::find(const AlgorithmId& id) const {
  auto it = std::find_if(analyzers_.begin(), analyzers_.end(),
                         [&](const auto& a) { return a->id() == id; });
  return it == analyzers_.end() ? nullptr : it->get();
}

const Analyzer& Registry::get(const AlgorithmId& id) const {
  if (const Analyzer* a = find(id)) return *a;
  throw UnknownAlgorithm(id);
}

std::vector<AlgorithmInfo> Registry::list() const {
  std::vector<AlgorithmInfo> out;
  out.reserve(analyzers_.size());
  for (const auto& a : analyzers_) out.push_back({a->id(), std::string(a->description())});
  return out;
}

Registry make_default_registry(const std::filesystem::path& lexicon_dir, Thresholds thresholds) {
  Registry r;
  r.add(std::make_shared<LexiconAnalyzer>(
      kValenceRule, std::make_shared<const Lexicon>(load_lexicon_dir(lexicon_dir, kValenceRule)),
      "Valence-aware rule engine: summed token valences with caps, booster, negation, "
      "'but' and exclamation rules, normalized to [-1, 1]",
      thresholds));
  r.add(std::make_shared<LexiconAnalyzer>(
      kPatternAverage, std::make_shared<const Lexicon>(load_lexicon_dir(lexicon_dir, kPatternAverage)),
      "Pattern-average engine: mean polarity of matched lexicon words, negation halves and flips",
      thresholds));
  return r;
}

}  // namespace osn::sentiment
