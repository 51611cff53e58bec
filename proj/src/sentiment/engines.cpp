#include "osn/sentiment/engines.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "osn/common/text.hpp"
#include "osn/sentiment/tokenize.hpp"

namespace osn::sentiment {

namespace valence_rule {

// Rule order per token: caps emphasis, boosters (nearest first), negators
// (nearest first). Then the "but" reweighting, the sum in token order, the
// exclamation boost and finally s / sqrt(s^2 + alpha).
double compound(const Lexicon& lexicon, std::string_view text) {
  const std::vector<std::string> tokens = tokenize_valence(text);
  if (tokens.empty()) return 0.0;

  std::vector<std::string> lower;
  lower.reserve(tokens.size());
  std::size_t caps = 0;
  for (const auto& t : tokens) {
    lower.push_back(text::to_lower_ascii(t));
    if (text::is_all_caps(t)) ++caps;
  }
  const bool caps_differential = caps > 0 && caps < tokens.size();

  std::vector<double> sentiments(tokens.size(), 0.0);
  bool any_hit = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    // Modifier words carry no valence of their own.
    if (lexicon.booster(lower[i]) || lexicon.is_negator(lower[i])) continue;
    const auto found = lexicon.valence(lower[i]);
    if (!found) continue;
    any_hit = true;
    double v = *found;

    if (caps_differential && text::is_all_caps(tokens[i])) {
      if (v > 0) v += kCapsEmphasis;
      else if (v < 0) v -= kCapsEmphasis;
    }
    for (std::size_t d = 1; d <= kWindow && d <= i; ++d) {
      if (const auto inc = lexicon.booster(lower[i - d])) {
        const double scaled = *inc * kBoosterDistanceScale[d - 1];
        if (v > 0) v += scaled;
        else if (v < 0) v -= scaled;
      }
    }
    for (std::size_t d = 1; d <= kWindow && d <= i; ++d)
      if (lexicon.is_negator(lower[i - d])) v *= kNegationScalar;

    sentiments[i] = v;
  }
  if (!any_hit) return 0.0;

  if (auto but = std::find(lower.begin(), lower.end(), "but"); but != lower.end()) {
    const auto b = static_cast<std::size_t>(but - lower.begin());
    for (std::size_t i = 0; i < sentiments.size(); ++i) {
      if (i < b) sentiments[i] *= kButBefore;
      else if (i > b) sentiments[i] *= kButAfter;
    }
  }

  double sum = 0.0;
  for (double s : sentiments) sum += s;

  const int bangs = static_cast<int>(std::min<std::ptrdiff_t>(std::count(text.begin(), text.end(), '!'),
                                                              kMaxExclamations));
  const double boost = kExclamationBoost * bangs;
  if (sum > 0) sum += boost;
  else if (sum < 0) sum -= boost;

  const double c = sum / std::sqrt(sum * sum + kNormalizationAlpha);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace valence_rule

namespace pattern_average {

double compound(const Lexicon& lexicon, std::string_view text) {
  const std::vector<std::string> tokens = tokenize_plain(text);
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (lexicon.is_negator(tokens[i])) continue;
    const auto found = lexicon.valence(tokens[i]);
    if (!found) continue;
    double p = *found;
    if (i > 0 && lexicon.is_negator(tokens[i - 1])) p *= kNegationScalar;
    sum += p;
    ++hits;
  }
  if (hits == 0) return 0.0;
  return std::clamp(sum / static_cast<double>(hits), -1.0, 1.0);
}

}  // namespace pattern_average

SentimentScore score_text(const AlgorithmId& engine, const Lexicon& lexicon, std::string_view text,
                          const Thresholds& thresholds) {
  SentimentScore out;
  out.algorithm = engine;
  const std::string_view body = truncate_text(text, kMaxTextLength, out.truncated);
  if (engine == kValenceRule) {
    out.compound = valence_rule::compound(lexicon, body);
  } else if (engine == kPatternAverage) {
    out.compound = pattern_average::compound(lexicon, body);
  } else {
    throw UnknownAlgorithm(engine);
  }
  out.label = classify(out.compound, thresholds);
  return out;
}

}  // namespace osn::sentiment
