#pragma once

#include <cstddef>
#include <string_view>

#include "osn/sentiment/lexicon.hpp"
#include "osn/sentiment/score.hpp"

namespace osn::sentiment {

inline constexpr std::size_t kMaxTextLength = 10'000;  // code points

namespace valence_rule {
inline constexpr double kCapsEmphasis = 0.733;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kBoosterDistanceScale[3] = {1.0, 0.95, 0.90};
inline constexpr std::size_t kWindow = 3;
inline constexpr double kButBefore = 0.5;
inline constexpr double kButAfter = 1.5;
inline constexpr double kExclamationBoost = 0.292;
inline constexpr int kMaxExclamations = 4;
inline constexpr double kNormalizationAlpha = 15.0;

double compound(const Lexicon& lexicon, std::string_view text);
}  // namespace valence_rule

namespace pattern_average {
inline constexpr double kNegationScalar = -0.5;

double compound(const Lexicon& lexicon, std::string_view text);
}  // namespace pattern_average

/// Scores `text` with the named engine. Deterministic and reentrant.
/// Throws UnknownAlgorithm for engines other than the two built-in ones.
SentimentScore score_text(const AlgorithmId& engine, const Lexicon& lexicon, std::string_view text,
                          const Thresholds& thresholds = {});

}  // namespace osn::sentiment
